// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// if any of them fails.

#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "addcat/complexes.hpp"
#include "addcat/kzero.hpp"
#include "addcat/sqzero.hpp"

using namespace addcat;

namespace {

constexpr long CAP = 200000;

int failures = 0;

void run(const std::string& name, bool (*fn)()) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
    }
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << dt << " ms)" << std::endl;
    if (!ok) ++failures;
}

std::vector<Int> random_orders(std::mt19937& rng, int max_objects) {
    static const std::vector<long> pool{2, 3, 4, 6, 8, 9, 12, 16, 32, 64};
    int n = 1 + static_cast<int>(rng() % max_objects);
    std::vector<Int> orders;
    for (int i = 0; i < n; ++i) orders.push_back(pool[rng() % pool.size()]);
    return orders;
}

// 1: the cokernel-formula quotient equals the brute-force quotient by the
// subgroup of enumerated factoring morphisms
bool quotient_oracle() {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        AddCat c = cyclic_groups_category(random_orders(rng, 3));
        int n = c.num_objects();
        std::vector<std::vector<int>> kills;
        for (int b = 0; b < n; ++b) kills.push_back({b});
        if (n > 1) kills.push_back({0, 1});
        for (const std::vector<int>& bs : kills) {
            QuotientResult q = quotient_category(c, bs);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    std::set<GroupElement> through;
                    for (int b : bs) {
                        auto fs = enumerate_elements(c.hom(x, b), CAP);
                        auto gs = enumerate_elements(c.hom(b, y), CAP);
                        if (!fs || !gs) return false;
                        for (const auto& f : *fs)
                            for (const auto& g : *gs)
                                through.insert(c.compose_elems(x, b, y, g, f));
                    }
                    std::vector<GroupElement> gens(through.begin(), through.end());
                    auto [sub, incl] = subgroup_from_generators(c.hom(x, y), gens);
                    auto [coker, proj] = incl.cokernel();
                    if (q.cat.hom(x, y) != coker) return false;
                }
        }
    }
    return true;
}

// 2: nilpotent surjections of finite rings do not change K0, and both sides
// agree with the radical oracle
bool k0_nilinvariance() {
    struct Instance {
        Ring src, dst;
        IntMatrix mat;
    };
    std::vector<Instance> instances;
    // cyclic reductions Z/p^a -> Z/p^b
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int a = 2; ; ++a) {
            long pa = 1;
            for (int i = 0; i < a; ++i) pa *= p;
            if (pa > 256) break;
            long pb = p;
            for (int b = 1; b < a; ++b, pb *= p)
                instances.push_back({ring_cyclic(pa), ring_cyclic(pb), cyclic_reduction_matrix()});
        }
    }
    // truncated polynomial augmentations base[x]/(x^k) -> base
    std::vector<Ring> bases{ring_cyclic(2),  ring_cyclic(3), ring_cyclic(4), ring_cyclic(5),
                            ring_cyclic(6),  ring_cyclic(8), ring_cyclic(9), ring_cyclic(16),
                            ring_f4(),       ring_product(ring_cyclic(2), ring_cyclic(2)),
                            ring_product(ring_cyclic(2), ring_cyclic(4)),
                            ring_upper_triangular(ring_cyclic(2), 2)};
    for (const Ring& b : bases)
        for (int k = 2; k <= 3; ++k) {
            Int total = b.add.order();
            for (int i = 1; i < k; ++i) total *= b.add.order();
            if (total > 256) continue;
            instances.push_back(
                {ring_truncated_poly(b, k), b, truncated_poly_augmentation(b, k)});
        }
    if (instances.size() < 50) return false;
    bool saw_exp3 = false;
    for (const Instance& inst : instances) {
        AddCat src = ring_category(inst.src);
        AddCat dst = ring_category(inst.dst);
        AddFunctor f = ring_functor(src, dst, inst.mat);
        K0Verdict v = k0_nilinvariance_check(f, 16, CAP);
        if (!v.ok) return false;
        if (inst.src.add.order() == 8 && inst.dst.add.order() == 2) saw_exp3 = true;
        K0Result es = k0_enumeration(src, CAP);
        K0Result ed = k0_enumeration(dst, CAP);
        if (es.group != k0_radical_oracle(inst.src, CAP).group) return false;
        if (ed.group != k0_radical_oracle(inst.dst, CAP).group) return false;
    }
    return saw_exp3;
}

// 3: square-zero composition law, splitting, kernel, nilpotence exponent
bool square_zero_laws() {
    std::vector<AddCat> bases;
    for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 16L}) bases.push_back(ring_category(ring_cyclic(n)));
    bases.push_back(ring_category(ring_f4()));
    bases.push_back(ring_category(ring_product(ring_cyclic(2), ring_cyclic(2))));
    bases.push_back(ring_category(ring_truncated_poly(ring_cyclic(2), 2)));
    bases.push_back(ring_category(ring_upper_triangular(ring_cyclic(2), 2)));
    bases.push_back(cyclic_groups_category({4, 2}));
    for (const AddCat& a : bases) {
        for (int use_zero = 0; use_zero < 2; ++use_zero) {
            Bimodule m = use_zero ? zero_bimodule(a) : hom_bimodule(a);
            if (!validate_bimodule(m).ok) return false;
            SquareZeroCat s = build_square_zero(a, m);
            if (!validate_category(s.cat).ok) return false;  // units + generator associativity
            // the composition law on every pair of endomorphisms
            int n = a.num_objects();
            for (int x = 0; x < n; ++x) {
                auto elems = enumerate_elements(s.cat.hom(x, x), 4096);
                if (!elems) return false;
                for (const auto& g : *elems)
                    for (const auto& f : *elems) {
                        auto [gf, gm] = s.split_elem(x, x, g);
                        auto [ff, fm] = s.split_elem(x, x, f);
                        auto law = sqzero_compose(a, m, x, x, x, {gf, gm}, {ff, fm});
                        auto cat = s.split_elem(x, x, s.cat.compose_elems(x, x, x, g, f));
                        if (law != cat) return false;
                    }
            }
            AddFunctor p = s.projection_functor();
            AddFunctor i = s.section_functor();
            AddFunctor pi = compose_functors(p, i);
            AddFunctor id = identity_functor(a);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (!pi.hom_map(x, y).equal(id.hom_map(x, y))) return false;
            Ideal k = kernel_ideal(p);
            bool m_zero = true;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    auto [sub, incl] = subgroup_from_generators(s.cat.hom(x, y), k.at(x, y));
                    if (sub != m.at(x, y)) return false;
                    if (!m.at(x, y).is_trivial()) m_zero = false;
                }
            NilpotenceCertificate cert = verify_square_zero_nilpotent(s, 16);
            if (cert.status != NilpotenceCertificate::Status::Nilpotent) return false;
            if (cert.exponent > 2) return false;
            if (!m_zero && cert.exponent != 2) return false;
            if (m_zero && cert.exponent != 1) return false;
        }
    }
    return true;
}

// 4: weight-structure axioms for bounded complexes over sample categories
bool weight_axioms() {
    std::vector<AddCat> bases;
    for (long n : {2L, 3L, 4L, 8L, 9L, 16L}) bases.push_back(ring_category(ring_cyclic(n)));
    bases.push_back(ring_category(ring_f4()));
    bases.push_back(cyclic_groups_category({4, 2}));
    bases.push_back(cyclic_groups_category({9, 3}));
    bases.push_back(cyclic_groups_category({8, 2, 4}));
    std::mt19937 rng(7);
    int total = 0;
    for (const AddCat& a : bases) {
        std::vector<BoundedComplex> samples;
        for (int x = 0; x < a.num_objects(); ++x) {
            samples.push_back(object_complex(a, {x}, 0));
            samples.push_back(object_complex(a, {x}, 1));
        }
        while (static_cast<int>(samples.size()) < 21) {
            int x = static_cast<int>(rng() % a.num_objects());
            int y = static_cast<int>(rng() % a.num_objects());
            int deg = static_cast<int>(rng() % 3) - 1;
            const FpAbGroup& h = a.hom(x, y);
            GroupElement e = h.zero();
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<long>(rng() % h.factors[i].get_ui());
            ChainMap f{deg, {elem_mat(a, x, y, h.reduce(e))}};
            samples.push_back(
                cone(object_complex(a, {x}, deg), object_complex(a, {y}, deg), f));
        }
        total += static_cast<int>(samples.size());
        if (!check_weight_axioms(a, samples, WeightWindow{}).ok) return false;
    }
    return total >= 200;
}

// 5: bounded envelopes are idempotent complete and stable under repetition
bool karoubi_complete() {
    std::vector<AddCat> fixtures;
    for (long n : {4L, 6L}) fixtures.push_back(ring_category(ring_cyclic(n)));
    fixtures.push_back(ring_category(ring_f4()));
    fixtures.push_back(ring_category(ring_product(ring_cyclic(2), ring_cyclic(2))));
    fixtures.push_back(ring_category(ring_truncated_poly(ring_cyclic(2), 2)));
    fixtures.push_back(cyclic_groups_category({4, 2}));
    fixtures.push_back(cyclic_groups_category({9, 3}));
    for (const AddCat& c : fixtures) {
        Envelope env = karoubi_envelope(c, 2, CAP);
        if (env.capped) return false;
        for (int o = 0; o < env.cat.num_objects(); ++o) {
            auto elems = enumerate_elements(env.cat.hom(o, o), CAP);
            if (!elems) return false;
            for (const auto& e : *elems) {
                MatMorphism em = elem_mat(env.cat, o, o, e);
                if (!is_idempotent(env.cat, em)) continue;
                SplitReport sr = split_idempotent(env.cat, Idempotent{{o}, em}, 2, CAP);
                if (!sr.split) return false;
            }
        }
        Envelope env2 = karoubi_envelope(env.cat, 1, CAP);
        if (env2.capped) return false;
        if (env2.cat.num_objects() != env.cat.num_objects()) return false;
    }
    return true;
}

// 6: K0(B) -> K0(A) -> K0(A/B) -> 0 is right exact
bool k0_right_exact() {
    K0Verdict fixture = k0_localization_check({1}, cyclic_groups_category({4, 2}), CAP);
    if (!fixture.ok) return false;
    if (fixture.detail.find("Z -> Z^2 -> Z -> 0") == std::string::npos) return false;
    std::mt19937 rng(23);
    int count = 0;
    while (count < 20) {
        AddCat a = cyclic_groups_category(random_orders(rng, 3));
        for (int b = 0; b < a.num_objects(); ++b, ++count)
            if (!k0_localization_check({b}, a, CAP).ok) return false;
    }
    return true;
}

// 7: on verified nilpotent extensions, morphisms with invertible image get a
// two-sided inverse from the geometric series
bool conservativity() {
    std::vector<std::pair<AddCat, AddCat>> ring_pairs;
    ring_pairs.emplace_back(ring_category(ring_cyclic(4)), ring_category(ring_cyclic(2)));
    ring_pairs.emplace_back(ring_category(ring_cyclic(8)), ring_category(ring_cyclic(2)));

    auto check_functor = [](const AddFunctor& f) {
        NilpotentExtensionReport rep = check_nilpotent_extension(f, 16, CAP);
        if (!rep.is_nilpotent_extension()) return false;
        const AddCat& s = *f.source;
        const AddCat& t = *f.target;
        for (int x = 0; x < s.num_objects(); ++x)
            for (int y = 0; y < s.num_objects(); ++y) {
                auto elems = enumerate_elements(s.hom(x, y), CAP);
                if (!elems) return false;
                for (const auto& e : *elems) {
                    MatMorphism u = elem_mat(s, x, y, e);
                    MatMorphism fu = f.apply_mat(u);
                    if (!is_isomorphism(t, fu).is_iso) continue;
                    auto inv = conservative_inverse(f, u, rep.certificate.exponent);
                    if (!inv) return false;
                    if (!mat_equal(s, compose(s, *inv, u), identity_mat(s, u.source)))
                        return false;
                    if (!mat_equal(s, compose(s, u, *inv), identity_mat(s, u.target)))
                        return false;
                }
            }
        return true;
    };

    for (const auto& [src, dst] : ring_pairs)
        if (!check_functor(ring_functor(src, dst, cyclic_reduction_matrix()))) return false;
    std::vector<AddCat> sq_bases;
    sq_bases.push_back(ring_category(ring_cyclic(4)));
    sq_bases.push_back(cyclic_groups_category({4, 2}));
    for (const AddCat& base : sq_bases) {
        SquareZeroCat s = build_square_zero(base, hom_bimodule(base));
        if (!check_functor(s.projection_functor())) return false;
    }
    return true;
}

// 8: Smith normal form fuzzing
bool snf_fuzz() {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> entry(-100, 100);
    for (int iter = 0; iter < 1000; ++iter) {
        int r = 1 + static_cast<int>(rng() % 6);
        int cdim = 1 + static_cast<int>(rng() % 6);
        IntMatrix m(r, cdim);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cdim; ++j) m.at(i, j) = entry(rng);
        SnfResult s = smith_normal_form(m);
        if (s.u.mul(m).mul(s.v) != s.d) return false;
        Int du = det(s.u), dv = det(s.v);
        if (du != 1 && du != -1) return false;
        if (dv != 1 && dv != -1) return false;
        std::vector<Int> diag = s.diag();
        for (size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0) return false;
            if (i > 0 && diag[i - 1] != 0 && diag[i] % diag[i - 1] != 0) return false;
            if (i > 0 && diag[i - 1] == 0 && diag[i] != 0) return false;
        }
        for (int i = 0; i < s.d.rows; ++i)
            for (int j = 0; j < s.d.cols; ++j)
                if (i != j && s.d.at(i, j) != 0) return false;
    }
    return true;
}

}  // namespace

int main() {
    run("quotient formula matches brute-force factoring subgroup", quotient_oracle);
    run("K0 is invariant under nilpotent ring surjections, both routes", k0_nilinvariance);
    run("square-zero extensions: law, splitting, kernel, exponent", square_zero_laws);
    run("weight-structure axioms for bounded complexes", weight_axioms);
    run("bounded Karoubi envelopes are idempotent complete", karoubi_complete);
    run("K0 localization sequence is right exact", k0_right_exact);
    run("nilpotent extensions are conservative via geometric series", conservativity);
    run("Smith normal form fuzzing", snf_fuzz);
    return failures == 0 ? 0 : 1;
}
