#include "addcat/sqzero.hpp"

#include <stdexcept>

namespace addcat {

namespace {

GroupElement bilinear_apply(const IntMatrix& table, const FpAbGroup& out, int ncols_right,
                            const GroupElement& a, const GroupElement& b) {
    GroupElement r(out.num_generators());
    for (size_t p = 0; p < a.size(); ++p) {
        if (a[p] == 0) continue;
        for (size_t q = 0; q < b.size(); ++q) {
            if (b[q] == 0) continue;
            Int c = a[p] * b[q];
            int col = static_cast<int>(p) * ncols_right + static_cast<int>(q);
            for (int i = 0; i < table.rows; ++i) r[i] += c * table.at(i, col);
        }
    }
    return out.reduce(r);
}

}  // namespace

GroupElement Bimodule::act_left(int x, int y, int y2, const GroupElement& g,
                                const GroupElement& m) const {
    int n = base->num_objects();
    return bilinear_apply(left_action[(x * n + y) * n + y2], at(x, y2),
                          at(x, y).num_generators(), g, m);
}

GroupElement Bimodule::act_right(int x2, int x, int y, const GroupElement& m,
                                 const GroupElement& f) const {
    int n = base->num_objects();
    return bilinear_apply(right_action[(x2 * n + x) * n + y], at(x2, y),
                          base->hom(x2, x).num_generators(), m, f);
}

ValidationReport validate_bimodule(const Bimodule& m) {
    ValidationReport rep;
    const AddCat& c = *m.base;
    int n = c.num_objects();
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({axiom, detail});
    };
    auto gen = [](int k, int size) {
        GroupElement e(size);
        e[k] = 1;
        return e;
    };
    // order compatibility of the action tables
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int y2 = 0; y2 < n; ++y2) {
                const FpAbGroup& h = c.hom(y, y2);
                const FpAbGroup& mv = m.at(x, y);
                const FpAbGroup& out = m.at(x, y2);
                for (int p = 0; p < h.num_generators(); ++p)
                    for (int q = 0; q < mv.num_generators(); ++q) {
                        GroupElement v = m.act_left(x, y, y2, gen(p, h.num_generators()),
                                                    gen(q, mv.num_generators()));
                        for (const Int& d : {h.factors[p], mv.factors[q]})
                            if (d != 0 && !out.is_zero_elem(elem_scale(out, d, v)))
                                fail("bilinearity", "left action violates generator orders");
                    }
            }
    for (int x2 = 0; x2 < n; ++x2)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const FpAbGroup& h = c.hom(x2, x);
                const FpAbGroup& mv = m.at(x, y);
                const FpAbGroup& out = m.at(x2, y);
                for (int p = 0; p < mv.num_generators(); ++p)
                    for (int q = 0; q < h.num_generators(); ++q) {
                        GroupElement v = m.act_right(x2, x, y, gen(p, mv.num_generators()),
                                                     gen(q, h.num_generators()));
                        for (const Int& d : {mv.factors[p], h.factors[q]})
                            if (d != 0 && !out.is_zero_elem(elem_scale(out, d, v)))
                                fail("bilinearity", "right action violates generator orders");
                    }
            }
    if (!rep.ok) return rep;
    // unitality
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FpAbGroup& mv = m.at(x, y);
            for (int q = 0; q < mv.num_generators(); ++q) {
                GroupElement e = gen(q, mv.num_generators());
                if (m.act_left(x, y, y, c.identity(y), e) != e)
                    fail("unit", "left action of the identity is not the identity");
                if (m.act_right(x, x, y, e, c.identity(x)) != e)
                    fail("unit", "right action of the identity is not the identity");
            }
        }
    // associativity of each action and the commuting law, on generators
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int y2 = 0; y2 < n; ++y2)
                for (int y3 = 0; y3 < n; ++y3) {
                    const FpAbGroup& h1 = c.hom(y, y2);
                    const FpAbGroup& h2 = c.hom(y2, y3);
                    const FpAbGroup& mv = m.at(x, y);
                    for (int a = 0; a < h2.num_generators(); ++a)
                        for (int b = 0; b < h1.num_generators(); ++b)
                            for (int q = 0; q < mv.num_generators(); ++q) {
                                GroupElement g2 = gen(a, h2.num_generators());
                                GroupElement g1 = gen(b, h1.num_generators());
                                GroupElement mm = gen(q, mv.num_generators());
                                GroupElement lhs = m.act_left(
                                    x, y2, y3, g2, m.act_left(x, y, y2, g1, mm));
                                GroupElement rhs = m.act_left(
                                    x, y, y3, c.compose_elems(y, y2, y3, g2, g1), mm);
                                if (lhs != rhs)
                                    fail("associativity", "left action is not associative");
                            }
                }
    for (int x3 = 0; x3 < n; ++x3)
        for (int x2 = 0; x2 < n; ++x2)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const FpAbGroup& h1 = c.hom(x3, x2);
                    const FpAbGroup& h2 = c.hom(x2, x);
                    const FpAbGroup& mv = m.at(x, y);
                    for (int a = 0; a < h2.num_generators(); ++a)
                        for (int b = 0; b < h1.num_generators(); ++b)
                            for (int q = 0; q < mv.num_generators(); ++q) {
                                GroupElement f2 = gen(a, h2.num_generators());
                                GroupElement f1 = gen(b, h1.num_generators());
                                GroupElement mm = gen(q, mv.num_generators());
                                GroupElement lhs = m.act_right(
                                    x3, x2, y, m.act_right(x2, x, y, mm, f2), f1);
                                GroupElement rhs = m.act_right(
                                    x3, x, y, mm, c.compose_elems(x3, x2, x, f2, f1));
                                if (lhs != rhs)
                                    fail("associativity", "right action is not associative");
                            }
                }
    for (int x2 = 0; x2 < n; ++x2)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int y2 = 0; y2 < n; ++y2) {
                    const FpAbGroup& hl = c.hom(y, y2);
                    const FpAbGroup& hr = c.hom(x2, x);
                    const FpAbGroup& mv = m.at(x, y);
                    for (int a = 0; a < hl.num_generators(); ++a)
                        for (int b = 0; b < hr.num_generators(); ++b)
                            for (int q = 0; q < mv.num_generators(); ++q) {
                                GroupElement g = gen(a, hl.num_generators());
                                GroupElement f = gen(b, hr.num_generators());
                                GroupElement mm = gen(q, mv.num_generators());
                                GroupElement lhs = m.act_right(
                                    x2, x, y2, m.act_left(x, y, y2, g, mm), f);
                                GroupElement rhs = m.act_left(
                                    x2, y, y2, g, m.act_right(x2, x, y, mm, f));
                                if (lhs != rhs)
                                    fail("associativity", "left and right actions do not commute");
                            }
                }
    rep.ok = rep.issues.empty();
    return rep;
}

Bimodule zero_bimodule(const AddCat& a) {
    int n = a.num_objects();
    Bimodule m;
    m.base = &a;
    m.value.assign(static_cast<size_t>(n) * n, FpAbGroup::trivial());
    m.left_action.assign(static_cast<size_t>(n) * n * n, IntMatrix());
    m.right_action.assign(static_cast<size_t>(n) * n * n, IntMatrix());
    return m;
}

Bimodule hom_bimodule(const AddCat& a) {
    Bimodule m;
    m.base = &a;
    m.value = a.homs;
    m.left_action = a.comps;
    m.right_action = a.comps;
    return m;
}

GroupElement SquareZeroCat::pair_elem(int x, int y, const GroupElement& f,
                                      const GroupElement& m) const {
    const DirectSumResult& ds = sums[x * base->num_objects() + y];
    GroupElement raw = f;
    raw.insert(raw.end(), m.begin(), m.end());
    return ds.group.reduce(ds.to_group.apply(raw));
}

std::pair<GroupElement, GroupElement> SquareZeroCat::split_elem(int x, int y,
                                                               const GroupElement& e) const {
    int n = base->num_objects();
    const DirectSumResult& ds = sums[x * n + y];
    std::vector<Int> raw = ds.from_group.apply(e);
    int na = base->hom(x, y).num_generators();
    GroupElement f(raw.begin(), raw.begin() + na);
    GroupElement m(raw.begin() + na, raw.end());
    return {base->hom(x, y).reduce(f), mod_value[x * n + y].reduce(m)};
}

AddFunctor SquareZeroCat::projection_functor() const {
    AddFunctor p;
    p.source = &cat;
    p.target = base;
    int n = base->num_objects();
    for (int i = 0; i < n; ++i) p.object_map.push_back(i);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const DirectSumResult& ds = sums[x * n + y];
            int na = base->hom(x, y).num_generators();
            IntMatrix top(na, ds.from_group.cols);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < ds.from_group.cols; ++j) top.at(i, j) = ds.from_group.at(i, j);
            p.hom_maps.push_back(AbHom{cat.hom(x, y), base->hom(x, y), top});
        }
    return p;
}

AddFunctor SquareZeroCat::section_functor() const {
    AddFunctor s;
    s.source = base;
    s.target = &cat;
    int n = base->num_objects();
    for (int i = 0; i < n; ++i) s.object_map.push_back(i);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const DirectSumResult& ds = sums[x * n + y];
            int na = base->hom(x, y).num_generators();
            IntMatrix mat(ds.group.num_generators(), na);
            for (int j = 0; j < na; ++j) {
                std::vector<Int> raw(ds.to_group.cols);
                raw[j] = 1;
                GroupElement img = ds.group.reduce(ds.to_group.apply(raw));
                for (int i = 0; i < mat.rows; ++i) mat.at(i, j) = img[i];
            }
            s.hom_maps.push_back(AbHom{base->hom(x, y), cat.hom(x, y), mat});
        }
    return s;
}

std::pair<GroupElement, GroupElement> sqzero_compose(
    const AddCat& a, const Bimodule& m, int x, int y, int z,
    const std::pair<GroupElement, GroupElement>& g,
    const std::pair<GroupElement, GroupElement>& f) {
    GroupElement f_part = a.compose_elems(x, y, z, g.first, f.first);
    GroupElement m_part = elem_add(m.at(x, z), m.act_left(x, y, z, g.first, f.second),
                                   m.act_right(x, y, z, g.second, f.first));
    return {f_part, m_part};
}

SquareZeroCat build_square_zero(const AddCat& a, const Bimodule& m) {
    ValidationReport mrep = validate_bimodule(m);
    if (!mrep.ok)
        throw std::invalid_argument("build_square_zero: invalid bimodule: " + mrep.summary());
    int n = a.num_objects();
    SquareZeroCat s;
    s.base = &a;
    s.mod_value = m.value;
    s.cat = AddCat::with_shape(a.objects);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            s.sums.push_back(direct_sum_groups({a.hom(x, y), m.at(x, y)}));
            s.cat.hom_mut(x, y) = s.sums.back().group;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int rows = s.cat.hom(x, z).num_generators();
                int nij = s.cat.hom(x, y).num_generators();
                int njk = s.cat.hom(y, z).num_generators();
                IntMatrix t(rows, njk * nij);
                for (int p = 0; p < njk; ++p)
                    for (int q = 0; q < nij; ++q) {
                        GroupElement gp(njk), fq(nij);
                        gp[p] = 1;
                        fq[q] = 1;
                        auto g = s.split_elem(y, z, gp);
                        auto f = s.split_elem(x, y, fq);
                        auto comp = sqzero_compose(a, m, x, y, z, g, f);
                        GroupElement img = s.pair_elem(x, z, comp.first, comp.second);
                        for (int r = 0; r < rows; ++r) t.at(r, p * nij + q) = img[r];
                    }
                s.cat.comp_table_mut(x, y, z) = t;
            }
    for (int x = 0; x < n; ++x)
        s.cat.identities[x] = s.pair_elem(x, x, a.identity(x), m.at(x, x).zero());
    ValidationReport rep = validate_category(s.cat);
    if (!rep.ok)
        throw std::logic_error("build_square_zero: invalid composition: " + rep.summary());
    return s;
}

NilpotenceCertificate verify_square_zero_nilpotent(const SquareZeroCat& s, int max_exponent) {
    AddFunctor p = s.projection_functor();
    return ideal_nilpotence(kernel_ideal(p), max_exponent);
}

}  // namespace addcat
