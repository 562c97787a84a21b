#include "addcat/sqzero.hpp"

#include <random>

#include "addcat/builders.hpp"
#include "doctest.h"

using namespace addcat;

TEST_CASE("dual numbers over Z follow the composition law") {
    AddCat a = ring_category(ring_cyclic(0));
    Bimodule m = hom_bimodule(a);
    REQUIRE(validate_bimodule(m).ok);
    SquareZeroCat s = build_square_zero(a, m);
    CHECK(s.cat.hom(0, 0) == FpAbGroup::free_of_rank(2));

    auto comp = sqzero_compose(a, m, 0, 0, 0, {{Int(2)}, {Int(3)}}, {{Int(5)}, {Int(7)}});
    CHECK(comp.first == GroupElement{Int(10)});
    CHECK(comp.second == GroupElement{Int(29)});

    // the same through the built category's composition
    GroupElement g = s.pair_elem(0, 0, {Int(2)}, {Int(3)});
    GroupElement f = s.pair_elem(0, 0, {Int(5)}, {Int(7)});
    auto [cf, cm] = s.split_elem(0, 0, s.cat.compose_elems(0, 0, 0, g, f));
    CHECK(cf == GroupElement{Int(10)});
    CHECK(cm == GroupElement{Int(29)});

    // (0, m) o (0, m') = 0 and (f, 0) o (g, 0) = (fg, 0)
    auto z = sqzero_compose(a, m, 0, 0, 0, {{Int(0)}, {Int(3)}}, {{Int(0)}, {Int(7)}});
    CHECK(z.first == GroupElement{Int(0)});
    CHECK(z.second == GroupElement{Int(0)});
    auto fg = sqzero_compose(a, m, 0, 0, 0, {{Int(2)}, {Int(0)}}, {{Int(5)}, {Int(0)}});
    CHECK(fg.first == GroupElement{Int(10)});
    CHECK(fg.second == GroupElement{Int(0)});
}

TEST_CASE("square-zero composition is associative on random triples") {
    AddCat a = ring_category(ring_cyclic(0));
    Bimodule m = hom_bimodule(a);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        std::pair<GroupElement, GroupElement> u{{Int(d(rng))}, {Int(d(rng))}};
        std::pair<GroupElement, GroupElement> v{{Int(d(rng))}, {Int(d(rng))}};
        std::pair<GroupElement, GroupElement> w{{Int(d(rng))}, {Int(d(rng))}};
        auto l = sqzero_compose(a, m, 0, 0, 0, sqzero_compose(a, m, 0, 0, 0, u, v), w);
        auto r = sqzero_compose(a, m, 0, 0, 0, u, sqzero_compose(a, m, 0, 0, 0, v, w));
        CHECK(l == r);
    }
}

TEST_CASE("zero bimodule reproduces the base category") {
    AddCat a = ring_category(ring_cyclic(4));
    SquareZeroCat s = build_square_zero(a, zero_bimodule(a));
    CHECK(s.cat.hom(0, 0) == a.hom(0, 0));
    NilpotenceCertificate c = verify_square_zero_nilpotent(s, 16);
    CHECK(c.status == NilpotenceCertificate::Status::Nilpotent);
    CHECK(c.exponent == 1);
}

TEST_CASE("Z/2 square-zero extension has End of order 4 with (1,1)^2 = (1,0)") {
    AddCat a = ring_category(ring_cyclic(2));
    SquareZeroCat s = build_square_zero(a, hom_bimodule(a));
    CHECK(s.cat.hom(0, 0).order() == 4);
    GroupElement e = s.pair_elem(0, 0, {Int(1)}, {Int(1)});
    auto [f, m] = s.split_elem(0, 0, s.cat.compose_elems(0, 0, 0, e, e));
    CHECK(f == GroupElement{Int(1)});
    CHECK(m == GroupElement{Int(0)});
}

TEST_CASE("projection and section functors") {
    AddCat a = cyclic_groups_category({4, 2});
    SquareZeroCat s = build_square_zero(a, hom_bimodule(a));
    REQUIRE(validate_category(s.cat).ok);
    AddFunctor p = s.projection_functor();
    AddFunctor i = s.section_functor();
    CHECK(validate_functor(p).ok);
    CHECK(validate_functor(i).ok);
    AddFunctor pi = compose_functors(p, i);
    AddFunctor id = identity_functor(a);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(pi.hom_map(x, y).equal(id.hom_map(x, y)));
}

TEST_CASE("kernel ideal of the projection is the bimodule") {
    AddCat a = cyclic_groups_category({4, 2});
    Bimodule m = hom_bimodule(a);
    SquareZeroCat s = build_square_zero(a, m);
    AddFunctor p = s.projection_functor();
    Ideal i = kernel_ideal(p);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            auto [sub, incl] = subgroup_from_generators(s.cat.hom(x, y), i.at(x, y));
            CHECK(sub == m.at(x, y));
            // every (0, mm) is in the ideal
            auto elems = enumerate_elements(m.at(x, y), 1000);
            REQUIRE(elems.has_value());
            for (const GroupElement& mm : *elems)
                CHECK(i.contains(x, y, s.pair_elem(x, y, a.hom(x, y).zero(), mm)));
        }
    CHECK(ideal_power(i, 2).is_zero());
}

TEST_CASE("square-zero extensions are nilpotent with exponent at most 2") {
    // dual numbers over Z/4: kernel is M != 0 with vanishing square
    AddCat z4 = ring_category(ring_cyclic(4));
    SquareZeroCat s1 = build_square_zero(z4, hom_bimodule(z4));
    NilpotenceCertificate c1 = verify_square_zero_nilpotent(s1, 16);
    CHECK(c1.status == NilpotenceCertificate::Status::Nilpotent);
    CHECK(c1.exponent == 2);

    // over Z: the kernel is free but still squares to zero
    AddCat z = ring_category(ring_cyclic(0));
    SquareZeroCat s2 = build_square_zero(z, hom_bimodule(z));
    NilpotenceCertificate c2 = verify_square_zero_nilpotent(s2, 16);
    CHECK(c2.status == NilpotenceCertificate::Status::Nilpotent);
    CHECK(c2.exponent == 2);

    // a multi-object instance
    AddCat c = cyclic_groups_category({4, 2});
    SquareZeroCat s3 = build_square_zero(c, hom_bimodule(c));
    NilpotenceCertificate c3 = verify_square_zero_nilpotent(s3, 16);
    CHECK(c3.status == NilpotenceCertificate::Status::Nilpotent);
    CHECK(c3.exponent <= 2);

    NilpotentExtensionReport full = check_nilpotent_extension(s3.projection_functor(), 16, 100000);
    CHECK(full.is_nilpotent_extension());
}

TEST_CASE("invalid bimodule is rejected") {
    AddCat a = ring_category(ring_cyclic(4));
    Bimodule m = hom_bimodule(a);
    // corrupt the left action: identity no longer acts as identity
    m.left_action[0].at(0, 0) = 2;
    ValidationReport rep = validate_bimodule(m);
    CHECK_FALSE(rep.ok);
    CHECK_THROWS(build_square_zero(a, m));
}
