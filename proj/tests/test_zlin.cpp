#include "addcat/zlin.hpp"

#include <random>

#include "doctest.h"

using namespace addcat;

namespace {

IntMatrix make(int r, int c, std::initializer_list<long> xs) {
    IntMatrix m(r, c);
    auto it = xs.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
    return m;
}

void check_snf_contract(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    CHECK(s.u.mul(m).mul(s.v) == s.d);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    CHECK(s.u.mul(s.u_inv) == IntMatrix::identity(m.rows));
    CHECK(s.v.mul(s.v_inv) == IntMatrix::identity(m.cols));
    // diagonal, divisibility chain, nonnegative
    for (int i = 0; i < s.d.rows; ++i)
        for (int j = 0; j < s.d.cols; ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    std::vector<Int> diag = s.diag();
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        else
            CHECK(diag[i + 1] == 0);
    }
}

}  // namespace

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
    IntMatrix m = make(2, 2, {2, 0, 0, 3});
    SnfResult s = smith_normal_form(m);
    CHECK(s.diag() == std::vector<Int>{1, 6});
    check_snf_contract(m);
}

TEST_CASE("snf fixed points") {
    CHECK(smith_normal_form(make(1, 1, {0})).diag() == std::vector<Int>{0});
    CHECK(smith_normal_form(make(1, 1, {4})).diag() == std::vector<Int>{4});
}

TEST_CASE("snf fuzz over random small matrices") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> dim(0, 5), entry(-100, 100);
    for (int iter = 0; iter < 300; ++iter) {
        int r = dim(rng) + 1, c = dim(rng) + 1;
        IntMatrix m(r, c);
        for (Int& x : m.a) x = entry(rng);
        check_snf_contract(m);
    }
}

TEST_CASE("solve_integer and kernel") {
    IntMatrix m = make(2, 3, {1, 2, 3, 0, 2, 4});
    auto x = solve_integer(m, {6, 4});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == std::vector<Int>{6, 4});
    CHECK_FALSE(solve_integer(make(1, 1, {2}), {3}).has_value());
    IntMatrix k = integer_kernel(m);
    for (int j = 0; j < k.cols; ++j) {
        auto img = m.apply(k.col(j));
        for (const Int& v : img) CHECK(v == 0);
    }
    CHECK(k.cols == 1);  // rank 2 in Z^3
}

TEST_CASE("canonical group forms") {
    CHECK(FpAbGroup::from_cyclic_orders({2, 3}) == FpAbGroup::cyclic(6));
    CHECK(FpAbGroup::from_cyclic_orders({1, 1}) == FpAbGroup::trivial());
    CHECK(FpAbGroup::from_cyclic_orders({4, 2}) == FpAbGroup::from_cyclic_orders({2, 4}));
    CHECK(FpAbGroup::from_cyclic_orders({0, 2}).free_rank() == 1);
    FpAbGroup g = FpAbGroup::from_cyclic_orders({2, 4});
    CHECK(g.factors == std::vector<Int>{2, 4});
    CHECK(g.order() == 8);
    CHECK(g.to_string() == "Z/2 + Z/4");
}

TEST_CASE("cokernel presentations") {
    // Z --2--> Z has cokernel Z/2
    AbHom two{FpAbGroup::free_of_rank(1), FpAbGroup::free_of_rank(1), make(1, 1, {2})};
    auto [q, proj] = cokernel_presentation(two);
    CHECK(q == FpAbGroup::cyclic(2));
    CHECK(proj.is_surjective());
    // 0 -> Z gives Z back
    AbHom z = AbHom::zero(FpAbGroup::trivial(), FpAbGroup::free_of_rank(1));
    CHECK(cokernel_presentation(z).first == FpAbGroup::free_of_rank(1));
    // coker of diag(2,3) : Z^2 -> Z^2 is Z/6 (CRT oracle: Z/2 + Z/3)
    AbHom d23{FpAbGroup::free_of_rank(2), FpAbGroup::free_of_rank(2), make(2, 2, {2, 0, 0, 3})};
    CHECK(cokernel_presentation(d23).first == FpAbGroup::cyclic(6));
    CHECK(cokernel_presentation(d23).first ==
          FpAbGroup::from_cyclic_orders({2, 3}));
}

TEST_CASE("cokernel projection kernel equals image") {
    AbHom two{FpAbGroup::free_of_rank(1), FpAbGroup::cyclic(8), make(1, 1, {2})};
    auto [q, proj] = two.cokernel();
    CHECK(q == FpAbGroup::cyclic(2));
    // projection kills exactly the image {0,2,4,6}
    for (long v = 0; v < 8; ++v) {
        GroupElement e{Int(v)};
        bool killed = q.is_zero_elem(proj.apply(e));
        CHECK(killed == (v % 2 == 0));
    }
}

TEST_CASE("subgroup from generators") {
    FpAbGroup z4 = FpAbGroup::cyclic(4);
    auto [s1, i1] = subgroup_from_generators(z4, {{Int(2)}});
    CHECK(s1 == FpAbGroup::cyclic(2));
    CHECK(i1.is_injective());

    FpAbGroup z2f = FpAbGroup::free_of_rank(2);
    auto [s2, i2] = subgroup_from_generators(z2f, {{Int(2), Int(0)}, {Int(0), Int(2)}});
    CHECK(s2 == FpAbGroup::free_of_rank(2));
    // index 4: enumerate cosets of the image lattice inside Z^2 via the quotient
    auto [q, proj] = i2.cokernel();
    CHECK(q.order() == 4);

    auto [s3, i3] = subgroup_from_generators(z4, {});
    CHECK(s3.is_trivial());
}

TEST_CASE("subgroup membership") {
    FpAbGroup g = FpAbGroup::from_cyclic_orders({4, 8});
    std::vector<GroupElement> gens{{Int(2), Int(2)}};
    CHECK(subgroup_contains(g, gens, {Int(2), Int(2)}));
    CHECK(subgroup_contains(g, gens, {Int(0), Int(4)}));  // 2*(2,2) = (0,4)
    CHECK_FALSE(subgroup_contains(g, gens, {Int(1), Int(0)}));
}

TEST_CASE("order multiplicativity for subgroup and quotient") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 11);
    std::vector<std::vector<Int>> shapes{{2}, {4}, {8}, {2, 2}, {2, 4}, {3}, {9}, {6}, {2, 2, 2},
                                         {12}, {3, 3}, {16}};
    for (int iter = 0; iter < 40; ++iter) {
        FpAbGroup g = FpAbGroup::from_cyclic_orders(shapes[pick(rng)]);
        auto all = enumerate_elements(g, 100000);
        REQUIRE(all.has_value());
        std::uniform_int_distribution<size_t> e(0, all->size() - 1);
        std::vector<GroupElement> gens{(*all)[e(rng)], (*all)[e(rng)]};
        auto [sub, incl] = subgroup_from_generators(g, gens);
        auto [quot, proj] = incl.cokernel();
        CHECK(sub.order() * quot.order() == g.order());
    }
}

TEST_CASE("tensor products") {
    FpAbGroup g = FpAbGroup::from_cyclic_orders({2, 4});
    CHECK(group_tensor(FpAbGroup::free_of_rank(1), g).group == g);
    CHECK(group_tensor(FpAbGroup::cyclic(4), FpAbGroup::cyclic(6)).group == FpAbGroup::cyclic(2));
    CHECK(group_tensor(FpAbGroup::cyclic(2), FpAbGroup::cyclic(3)).group == FpAbGroup::trivial());
}

TEST_CASE("tensor pairing is bilinear and matches exhaustive cyclic oracle") {
    // For cyclic Z/a x Z/b the pairing (x,y) -> xy mod gcd classifies all
    // bilinear maps; check our pairing agrees up to the canonical iso.
    FpAbGroup a = FpAbGroup::cyclic(4), b = FpAbGroup::cyclic(6);
    TensorResult t = group_tensor(a, b);
    REQUIRE(t.group == FpAbGroup::cyclic(2));
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 6; ++y) {
            GroupElement p = tensor_pair(t, a, b, {Int(x)}, {Int(y)});
            Int expected = Int(x * y) % 2;
            CHECK(p[0] == expected);
        }
}

TEST_CASE("abhom kernel cokernel inverse") {
    // reduction Z/4 -> Z/2
    AbHom red{FpAbGroup::cyclic(4), FpAbGroup::cyclic(2), make(1, 1, {1})};
    CHECK(red.valid());
    CHECK(red.is_surjective());
    auto [k, incl] = red.kernel();
    CHECK(k == FpAbGroup::cyclic(2));
    CHECK(incl.apply({Int(1)}) == GroupElement{Int(2)});

    // multiplication by 3 on Z/4 is invertible
    AbHom m3{FpAbGroup::cyclic(4), FpAbGroup::cyclic(4), make(1, 1, {3})};
    auto inv = m3.inverse();
    REQUIRE(inv.has_value());
    CHECK(inv->mat.at(0, 0) % 4 == 3);
    // multiplication by 2 is not
    AbHom m2{FpAbGroup::cyclic(4), FpAbGroup::cyclic(4), make(1, 1, {2})};
    CHECK_FALSE(m2.inverse().has_value());
}

TEST_CASE("canonicality under generator reordering") {
    std::mt19937_64 rng(99);
    std::vector<Int> orders{2, 8, 3, 0, 4};
    for (int iter = 0; iter < 20; ++iter) {
        std::shuffle(orders.begin(), orders.end(), rng);
        FpAbGroup g = FpAbGroup::from_cyclic_orders(orders);
        CHECK(g.factors == std::vector<Int>{2, 4, 24, 0});
    }
}

TEST_CASE("direct sum coordinate maps") {
    auto ds = direct_sum_groups({FpAbGroup::cyclic(2), FpAbGroup::cyclic(3)});
    CHECK(ds.group == FpAbGroup::cyclic(6));
    // roundtrip: to_group . from_group = id on the canonical group
    IntMatrix rt = ds.to_group.mul(ds.from_group);
    for (int i = 0; i < ds.group.num_generators(); ++i) {
        GroupElement c = ds.group.reduce(rt.col(i));
        for (int j = 0; j < ds.group.num_generators(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
    }
}
