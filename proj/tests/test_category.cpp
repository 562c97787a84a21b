#include "addcat/category.hpp"

#include <random>

#include "addcat/builders.hpp"
#include "doctest.h"

using namespace addcat;

namespace {

// resize every composition table to the right shape, filled with zeros
void zero_tables(AddCat& c) {
    int n = c.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                c.comp_table_mut(x, y, z) =
                    IntMatrix(c.hom(x, z).num_generators(),
                              c.hom(y, z).num_generators() * c.hom(x, y).num_generators());
}

GroupElement rand_elem(const FpAbGroup& g, std::mt19937_64& rng) {
    GroupElement e(g.num_generators());
    std::uniform_int_distribution<long> d(-10, 10);
    for (Int& x : e) x = d(rng);
    return g.reduce(e);
}

}  // namespace

TEST_CASE("one-object category of Z/4 validates") {
    AddCat c = ring_category(ring_cyclic(4));
    CHECK(c.hom(0, 0) == FpAbGroup::cyclic(4));
    CHECK(validate_category(c).ok);
    // 3 * 3 = 9 = 1
    GroupElement p = c.compose_elems(0, 0, 0, {Int(3)}, {Int(3)});
    CHECK(p == GroupElement{Int(1)});
}

TEST_CASE("broken associativity is reported with a witness") {
    // (Z/2)^3 with unit e and a*a = b, a*b = b*a = e, b*b = 0:
    // (a*a)*b = 0 but a*(a*b) = a
    AddCat c = AddCat::with_shape({"x"});
    c.hom_mut(0, 0) = FpAbGroup::from_cyclic_orders({2, 2, 2});
    IntMatrix t(3, 9);
    auto set = [&](int p, int q, int i) { t.at(i, p * 3 + q) = 1; };
    for (int k = 0; k < 3; ++k) {
        set(0, k, k);  // e * x = x
        set(k, 0, k);  // x * e = x
    }
    set(1, 1, 2);  // a * a = b
    set(1, 2, 0);  // a * b = e
    set(2, 1, 0);  // b * a = e
    c.comp_table_mut(0, 0, 0) = t;
    c.identities[0] = {1, 0, 0};
    ValidationReport rep = validate_category(c);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.issues.empty());
    CHECK(rep.issues[0].axiom == "associativity");
    CHECK(rep.issues[0].detail.find("witness") != std::string::npos);
}

TEST_CASE("composition table incompatible with generator orders is rejected") {
    // hom(x,y) = Z/2 composed into hom(x,z) = Z/4 by the identity coefficient:
    // 2 * gen maps to 2 != 0, so the table is not well defined
    AddCat c = AddCat::with_shape({"x", "y", "z"});
    for (int o = 0; o < 3; ++o) {
        c.hom_mut(o, o) = FpAbGroup::free_of_rank(1);
        c.identities[o] = {1};
    }
    c.hom_mut(0, 1) = FpAbGroup::cyclic(2);
    c.hom_mut(1, 2) = FpAbGroup::free_of_rank(1);
    c.hom_mut(0, 2) = FpAbGroup::cyclic(4);
    zero_tables(c);
    for (int o = 0; o < 3; ++o) c.comp_table_mut(o, o, o).at(0, 0) = 1;
    c.comp_table_mut(0, 1, 2).at(0, 0) = 1;
    ValidationReport rep = validate_category(c);
    CHECK_FALSE(rep.ok);
    CHECK(rep.issues[0].axiom == "bilinearity");
}

TEST_CASE("two-object category {Z/4, Z/2} validates and composes correctly") {
    AddCat c = cyclic_groups_category({4, 2});
    REQUIRE(validate_category(c).ok);
    CHECK(c.hom(0, 0) == FpAbGroup::cyclic(4));
    CHECK(c.hom(0, 1) == FpAbGroup::cyclic(2));  // reduction, mult by 1
    CHECK(c.hom(1, 0) == FpAbGroup::cyclic(2));  // mult by 2
    CHECK(c.hom(1, 1) == FpAbGroup::cyclic(2));
    // Z/2 -> Z/4 -> Z/2 is mult by 2 = 0 on Z/2
    CHECK(c.compose_elems(1, 0, 1, {Int(1)}, {Int(1)}) == GroupElement{Int(0)});
    // Z/4 -> Z/2 -> Z/4 is mult by 2
    CHECK(c.compose_elems(0, 1, 0, {Int(1)}, {Int(1)}) == GroupElement{Int(2)});
    // exhaustive oracle: every hom element is mult by k*mu; compose multipliers
    std::vector<long> ord{4, 2};
    std::vector<std::vector<long>> mu{{1, 1}, {2, 1}};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                for (long kf = 0; kf < c.hom(x, y).order().get_si(); ++kf)
                    for (long kg = 0; kg < c.hom(y, z).order().get_si(); ++kg) {
                        GroupElement comp =
                            c.compose_elems(x, y, z, {Int(kg)}, {Int(kf)});
                        long lhs = (kg * mu[y][z] * kf * mu[x][y]) % ord[z];
                        long rhs = (comp[0].get_si() * mu[x][z]) % ord[z];
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("composition is bilinear") {
    AddCat c = cyclic_groups_category({4, 2, 6, 0});
    REQUIRE(validate_category(c).ok);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> obj(0, 3);
    for (int iter = 0; iter < 200; ++iter) {
        int x = obj(rng), y = obj(rng), z = obj(rng);
        GroupElement f1 = rand_elem(c.hom(x, y), rng), f2 = rand_elem(c.hom(x, y), rng);
        GroupElement g = rand_elem(c.hom(y, z), rng);
        const FpAbGroup& out = c.hom(x, z);
        GroupElement a = c.compose_elems(x, y, z, g, elem_add(c.hom(x, y), f1, f2));
        GroupElement b = elem_add(out, c.compose_elems(x, y, z, g, f1),
                                  c.compose_elems(x, y, z, g, f2));
        CHECK(a == b);
        GroupElement g2 = rand_elem(c.hom(y, z), rng);
        GroupElement a2 = c.compose_elems(x, y, z, elem_add(c.hom(y, z), g, g2), f1);
        GroupElement b2 = elem_add(out, c.compose_elems(x, y, z, g, f1),
                                   c.compose_elems(x, y, z, g2, f1));
        CHECK(a2 == b2);
    }
}

TEST_CASE("biproduct structure maps") {
    AddCat c = cyclic_groups_category({4, 2});
    BiproductData b = direct_sum(c, {{0}, {1}, {0}});
    REQUIRE(b.sum == MatObject{0, 1, 0});
    MatMorphism acc = zero_mat(c, b.sum, b.sum);
    for (size_t i = 0; i < 3; ++i) {
        acc = add_mat(c, acc, compose(c, b.injections[i], b.projections[i]));
        for (size_t j = 0; j < 3; ++j) {
            MatMorphism pij = compose(c, b.projections[i], b.injections[j]);
            if (i == j)
                CHECK(mat_equal(c, pij, identity_mat(c, {b.sum[i]})));
            else
                CHECK(mat_is_zero(c, pij));
        }
    }
    CHECK(mat_equal(c, acc, identity_mat(c, b.sum)));
}

TEST_CASE("matrix morphisms over Z/2 multiply like F2 matrices") {
    AddCat c = cyclic_groups_category({2});
    MatObject v{0, 0};
    FlatHom fh = flat_hom(c, v, v);
    REQUIRE(fh.dim() == 4);
    // all 16 pairs of 2x2 F2 matrices
    for (int ma = 0; ma < 16; ++ma)
        for (int mb = 0; mb < 16; ++mb) {
            std::vector<Int> ca(4), cb(4);
            for (int k = 0; k < 4; ++k) {
                ca[k] = (ma >> k) & 1;
                cb[k] = (mb >> k) & 1;
            }
            MatMorphism a = unflatten(c, fh, ca), b = unflatten(c, fh, cb);
            MatMorphism ab = compose(c, a, b);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Int want = (a.at(i, 0)[0] * b.at(0, j)[0] + a.at(i, 1)[0] * b.at(1, j)[0]) % 2;
                    CHECK(ab.at(i, j)[0] == want);
                }
        }
}

TEST_CASE("isomorphism decision by linear solve") {
    AddCat c = ring_category(ring_cyclic(4));
    MatObject o{0};
    CHECK_FALSE(is_isomorphism(c, elem_mat(c, 0, 0, {Int(2)})).is_iso);
    IsoResult r = is_isomorphism(c, elem_mat(c, 0, 0, {Int(3)}));
    REQUIRE(r.is_iso);
    CHECK(r.inverse->at(0, 0) == GroupElement{Int(3)});

    AddCat f2 = cyclic_groups_category({2});
    FlatHom fh = flat_hom(f2, {0, 0}, {0, 0});
    CHECK(is_isomorphism(f2, unflatten(f2, fh, {0, 1, 1, 0})).is_iso);   // swap
    CHECK(is_isomorphism(f2, unflatten(f2, fh, {1, 1, 0, 1})).is_iso);   // shear
    CHECK_FALSE(is_isomorphism(f2, unflatten(f2, fh, {1, 1, 1, 1})).is_iso);
    // a non-square shape is never invertible
    CHECK_FALSE(is_isomorphism(f2, zero_mat(f2, {0}, {0, 0})).is_iso);
}

TEST_CASE("retract search") {
    AddCat c = cyclic_groups_category({4, 2});
    // Z/2 is not a retract of Z/4
    RetractSearchResult r1 = find_retraction(c, {0}, {1}, nullptr, 10000);
    CHECK_FALSE(r1.found);
    CHECK_FALSE(r1.capped);
    // Z/2 is a retract of Z/2 + Z/4
    RetractSearchResult r2 = find_retraction(c, {1, 0}, {1}, nullptr, 10000);
    REQUIRE(r2.found);
    CHECK(mat_equal(c, compose(c, r2.r, r2.s), identity_mat(c, {1})));
}

TEST_CASE("object isomorphism test") {
    AddCat c = cyclic_groups_category({2, 2, 4}, {"A", "B", "C"});
    CHECK(objects_isomorphic(c, 0, 1, 10000));
    CHECK_FALSE(objects_isomorphic(c, 0, 2, 10000));
    CHECK_FALSE(objects_isomorphic(c, 2, 1, 10000));
    CHECK(objects_isomorphic(c, 2, 2, 10000));
}

TEST_CASE("functor validation") {
    AddCat z4 = ring_category(ring_cyclic(4));
    AddCat z2 = ring_category(ring_cyclic(2));
    CHECK(validate_functor(identity_functor(z4)).ok);
    AddFunctor red = ring_functor(z4, z2, cyclic_reduction_matrix());
    CHECK(validate_functor(red).ok);
    // mult-by-2 does not preserve the identity
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    AddFunctor bad = ring_functor(z4, z4, two);
    ValidationReport rep = validate_functor(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.issues[0].axiom == "unit");
    // composition of functors
    AddFunctor idid = compose_functors(identity_functor(z2), red);
    CHECK(validate_functor(idid).ok);
}

TEST_CASE("ring builders produce associative unital rings") {
    for (const Ring& r : {ring_cyclic(4), ring_f4(), ring_product(ring_cyclic(2), ring_cyclic(3)),
                          ring_truncated_poly(ring_cyclic(2), 2),
                          ring_truncated_poly(ring_cyclic(4), 3),
                          ring_upper_triangular(ring_cyclic(2), 2)}) {
        CAPTURE(r.name);
        CHECK(validate_category(ring_category(r)).ok);
    }
    CHECK(ring_product(ring_cyclic(2), ring_cyclic(3)).add == FpAbGroup::cyclic(6));
    CHECK(ring_f4().add.order() == 4);
    CHECK(ring_truncated_poly(ring_cyclic(2), 2).add.order() == 4);
    CHECK(ring_upper_triangular(ring_cyclic(2), 2).add.order() == 8);
    // F4 is a field: w * w * w ... every nonzero element invertible
    AddCat f4 = ring_category(ring_f4());
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(is_isomorphism(f4, elem_mat(f4, 0, 0, {Int(a), Int(b)})).is_iso);
        }
}

TEST_CASE("truncated polynomial augmentation is a functor") {
    Ring base = ring_cyclic(2);
    AddCat rx = ring_category(ring_truncated_poly(base, 2));
    AddCat r = ring_category(base);
    AddFunctor aug = ring_functor(rx, r, truncated_poly_augmentation(base, 2));
    CHECK(validate_functor(aug).ok);
    CHECK(aug.hom_map(0, 0).is_surjective());
}

TEST_CASE("mat object enumeration") {
    AddCat c = cyclic_groups_category({2, 3});
    auto objs = enumerate_mat_objects(c, 1, 2);
    // size 1: {0},{1}; size 2: {0,0},{0,1},{1,1}
    REQUIRE(objs.size() == 5);
    CHECK(objs[0] == MatObject{0});
    CHECK(objs[2] == MatObject{0, 0});
    CHECK(objs[3] == MatObject{0, 1});
    CHECK(objs[4] == MatObject{1, 1});
}
