#include "addcat/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace addcat {

MatMorphism BoundedComplex::diff(int n) const {
    if (n > lo && n <= hi) return diffs[n - lo - 1];
    return zero_mat(*cat, term(n), term(n - 1));
}

std::pair<int, int> BoundedComplex::support() const {
    int a = lo, b = hi;
    while (a <= b && term(a).empty()) ++a;
    while (b >= a && term(b).empty()) --b;
    if (a > b) return {0, -1};
    return {a, b};
}

BoundedComplex make_complex(const AddCat& c, int lo, std::vector<MatObject> terms,
                            std::vector<MatMorphism> diffs) {
    BoundedComplex x;
    x.cat = &c;
    x.lo = lo;
    x.hi = lo + static_cast<int>(terms.size()) - 1;
    x.terms = std::move(terms);
    x.diffs = std::move(diffs);
    if (x.diffs.size() + 1 != x.terms.size() && !(x.terms.empty() && x.diffs.empty()))
        throw std::invalid_argument("make_complex: need one differential per adjacent pair");
    for (int n = x.lo + 1; n <= x.hi; ++n) {
        const MatMorphism& d = x.diffs[n - x.lo - 1];
        if (d.source != x.terms[n - x.lo] || d.target != x.terms[n - x.lo - 1])
            throw std::invalid_argument("make_complex: differential shape mismatch");
    }
    return x;
}

BoundedComplex zero_complex(const AddCat& c) {
    BoundedComplex x;
    x.cat = &c;
    return x;
}

BoundedComplex object_complex(const AddCat& c, const MatObject& x, int degree) {
    return make_complex(c, degree, {x}, {});
}

bool validate_complex(const BoundedComplex& x) {
    for (int n = x.lo + 1; n <= x.hi + 1; ++n)
        if (!mat_is_zero(*x.cat, compose(*x.cat, x.diff(n - 1), x.diff(n)))) return false;
    return true;
}

BoundedComplex shift_complex(const BoundedComplex& x, int k) {
    BoundedComplex y = x;
    y.lo += k;
    y.hi += k;
    if (k % 2 != 0)
        for (MatMorphism& d : y.diffs) d = negate_mat(*x.cat, d);
    return y;
}

BoundedComplex sum_complexes(const BoundedComplex& x, const BoundedComplex& y) {
    const AddCat& c = *x.cat;
    if (x.hi < x.lo) return y;
    if (y.hi < y.lo) return x;
    int lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
    std::vector<MatObject> terms;
    std::vector<MatMorphism> diffs;
    for (int n = lo; n <= hi; ++n) {
        MatObject t = x.term(n);
        MatObject ty = y.term(n);
        t.insert(t.end(), ty.begin(), ty.end());
        terms.push_back(t);
    }
    for (int n = lo + 1; n <= hi; ++n) {
        MatMorphism d = zero_mat(c, terms[n - lo], terms[n - lo - 1]);
        MatMorphism dx = x.diff(n), dy = y.diff(n);
        int ro = static_cast<int>(x.term(n - 1).size());
        int co = static_cast<int>(x.term(n).size());
        for (size_t i = 0; i < dx.target.size(); ++i)
            for (size_t j = 0; j < dx.source.size(); ++j)
                d.at(static_cast<int>(i), static_cast<int>(j)) = dx.at(static_cast<int>(i),
                                                                       static_cast<int>(j));
        for (size_t i = 0; i < dy.target.size(); ++i)
            for (size_t j = 0; j < dy.source.size(); ++j)
                d.at(ro + static_cast<int>(i), co + static_cast<int>(j)) =
                    dy.at(static_cast<int>(i), static_cast<int>(j));
        diffs.push_back(d);
    }
    return make_complex(c, lo, std::move(terms), std::move(diffs));
}

MatMorphism chain_component(const ChainMap& f, const BoundedComplex& x, const BoundedComplex& y,
                            int n) {
    int idx = n - f.lo;
    if (idx >= 0 && idx < static_cast<int>(f.comps.size())) {
        const MatMorphism& m = f.comps[idx];
        if (m.source == x.term(n) && m.target == y.term(n)) return m;
    }
    return zero_mat(*x.cat, x.term(n), y.term(n));
}

bool is_chain_map(const BoundedComplex& x, const BoundedComplex& y, const ChainMap& f) {
    const AddCat& c = *x.cat;
    int lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
    for (int n = lo; n <= hi + 1; ++n) {
        MatMorphism a = compose(c, y.diff(n), chain_component(f, x, y, n));
        MatMorphism b = compose(c, chain_component(f, x, y, n - 1), x.diff(n));
        if (!mat_equal(c, a, b)) return false;
    }
    return true;
}

ChainMap identity_chain_map(const BoundedComplex& x) {
    ChainMap f;
    f.lo = x.lo;
    for (int n = x.lo; n <= x.hi; ++n) f.comps.push_back(identity_mat(*x.cat, x.term(n)));
    return f;
}

BoundedComplex cone(const BoundedComplex& x, const BoundedComplex& y, const ChainMap& f) {
    const AddCat& c = *x.cat;
    int lo = std::min(x.lo + 1, y.lo), hi = std::max(x.hi + 1, y.hi);
    if (x.hi < x.lo) {
        lo = y.lo;
        hi = y.hi;
    }
    if (y.hi < y.lo && x.hi >= x.lo) {
        lo = x.lo + 1;
        hi = x.hi + 1;
    }
    std::vector<MatObject> terms;
    std::vector<MatMorphism> diffs;
    for (int n = lo; n <= hi; ++n) {
        MatObject t = x.term(n - 1);
        MatObject ty = y.term(n);
        t.insert(t.end(), ty.begin(), ty.end());
        terms.push_back(t);
    }
    for (int n = lo + 1; n <= hi; ++n) {
        MatMorphism d = zero_mat(c, terms[n - lo], terms[n - lo - 1]);
        MatMorphism a = negate_mat(c, x.diff(n - 1));             // x_{n-1} -> x_{n-2}
        MatMorphism b = chain_component(f, x, y, n - 1);          // x_{n-1} -> y_{n-1}
        MatMorphism e = y.diff(n);                                // y_n -> y_{n-1}
        int ro = static_cast<int>(x.term(n - 2).size());
        int co = static_cast<int>(x.term(n - 1).size());
        for (size_t i = 0; i < a.target.size(); ++i)
            for (size_t j = 0; j < a.source.size(); ++j)
                d.at(static_cast<int>(i), static_cast<int>(j)) =
                    a.at(static_cast<int>(i), static_cast<int>(j));
        for (size_t i = 0; i < b.target.size(); ++i)
            for (size_t j = 0; j < b.source.size(); ++j)
                d.at(ro + static_cast<int>(i), static_cast<int>(j)) =
                    b.at(static_cast<int>(i), static_cast<int>(j));
        for (size_t i = 0; i < e.target.size(); ++i)
            for (size_t j = 0; j < e.source.size(); ++j)
                d.at(ro + static_cast<int>(i), co + static_cast<int>(j)) =
                    e.at(static_cast<int>(i), static_cast<int>(j));
        diffs.push_back(d);
    }
    return make_complex(c, lo, std::move(terms), std::move(diffs));
}

FpAbGroup kb_hom(const BoundedComplex& x, const BoundedComplex& y) {
    const AddCat& c = *x.cat;
    int lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
    if (x.hi < x.lo || y.hi < y.lo) return FpAbGroup::trivial();
    // C0_n = Hom(x_n, y_n), C1_n = Hom(x_n, y_{n-1}), H_n = Hom(x_n, y_{n+1})
    std::vector<FlatHom> f0, f1, fh;
    std::vector<int> o0(hi - lo + 3, 0), o1(hi - lo + 3, 0), oh(hi - lo + 3, 0);
    int d0 = 0, d1 = 0, dh = 0;
    for (int n = lo; n <= hi + 1; ++n) {
        f0.push_back(flat_hom(c, x.term(n), y.term(n)));
        f1.push_back(flat_hom(c, x.term(n), y.term(n - 1)));
        fh.push_back(flat_hom(c, x.term(n), y.term(n + 1)));
        o0[n - lo] = d0;
        o1[n - lo] = d1;
        oh[n - lo] = dh;
        d0 += f0.back().dim();
        d1 += f1.back().dim();
        dh += fh.back().dim();
    }
    std::vector<Int> orders0, orders1;
    for (const FlatHom& f : f0) orders0.insert(orders0.end(), f.orders.begin(), f.orders.end());
    for (const FlatHom& f : f1) orders1.insert(orders1.end(), f.orders.begin(), f.orders.end());
    auto put = [](IntMatrix& m, const IntMatrix& blk, int r, int cidx, int sign) {
        for (int i = 0; i < blk.rows; ++i)
            for (int j = 0; j < blk.cols; ++j) m.at(r + i, cidx + j) += sign * blk.at(i, j);
    };
    IntMatrix delta(d1, d0);
    for (int n = lo; n <= hi + 1; ++n) {
        int k = n - lo;
        if (f1[k].dim() == 0) continue;
        if (f0[k].dim() > 0)
            put(delta, left_compose_matrix(c, y.diff(n), x.term(n)), o1[k], o0[k], 1);
        if (n - 1 >= lo && f0[k - 1].dim() > 0)
            put(delta, right_compose_matrix(c, x.diff(n), y.term(n - 1)), o1[k], o0[k - 1], -1);
    }
    IntMatrix sigma(d0, dh);
    for (int n = lo; n <= hi + 1; ++n) {
        int k = n - lo;
        if (f0[k].dim() == 0) continue;
        if (fh[k].dim() > 0)
            put(sigma, left_compose_matrix(c, y.diff(n + 1), x.term(n)), o0[k], oh[k], 1);
        if (n - 1 >= lo && fh[k - 1].dim() > 0)
            put(sigma, right_compose_matrix(c, x.diff(n), y.term(n)), o0[k], oh[k - 1], 1);
    }
    IntMatrix cycles = kernel_mod(delta, orders1);
    IntMatrix rel = kernel_mod(cycles, orders0);
    std::vector<std::vector<Int>> extra;
    FpAbGroup raw0;
    raw0.factors = orders0;
    for (int j = 0; j < sigma.cols; ++j) {
        std::vector<Int> b = raw0.reduce(sigma.col(j));
        auto t = solve_mod(cycles, orders0, b);
        if (!t) throw std::logic_error("kb_hom: boundary is not a cycle");
        extra.push_back(*t);
    }
    IntMatrix rels(cycles.cols, rel.cols + static_cast<int>(extra.size()));
    for (int i = 0; i < cycles.cols; ++i)
        for (int j = 0; j < rel.cols; ++j) rels.at(i, j) = rel.at(i, j);
    for (size_t j = 0; j < extra.size(); ++j)
        for (int i = 0; i < cycles.cols; ++i)
            rels.at(i, rel.cols + static_cast<int>(j)) = extra[j][i];
    return present(cycles.cols, rels).group;
}

Truncation stupid_truncation(const BoundedComplex& x, int k) {
    const AddCat& c = *x.cat;
    Truncation t;
    if (x.hi < x.lo || k >= x.hi) {
        t.low = x;
        t.high = zero_complex(c);
    } else if (k < x.lo) {
        t.low = zero_complex(c);
        t.high = x;
    } else {
        std::vector<MatObject> lt(x.terms.begin(), x.terms.begin() + (k - x.lo + 1));
        std::vector<MatMorphism> ld(x.diffs.begin(), x.diffs.begin() + (k - x.lo));
        t.low = make_complex(c, x.lo, std::move(lt), std::move(ld));
        std::vector<MatObject> ht(x.terms.begin() + (k - x.lo + 1), x.terms.end());
        std::vector<MatMorphism> hd(x.diffs.begin() + (k - x.lo + 1), x.diffs.end());
        t.high = make_complex(c, k + 1, std::move(ht), std::move(hd));
    }
    t.incl.lo = t.low.lo;
    for (int n = t.low.lo; n <= t.low.hi; ++n)
        t.incl.comps.push_back(identity_mat(c, t.low.term(n)));
    t.split_r = t.incl;
    t.proj.lo = t.high.lo;
    for (int n = t.high.lo; n <= t.high.hi; ++n)
        t.proj.comps.push_back(identity_mat(c, t.high.term(n)));
    t.split_s = t.proj;
    return t;
}

ValidationReport check_weight_axioms(const AddCat& c, const std::vector<BoundedComplex>& samples,
                                     const WeightWindow& w) {
    ValidationReport rep;
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({axiom, detail});
    };
    auto in_ge = [&](const BoundedComplex& z, int k) {
        auto s = z.support();
        return s.second < s.first || s.first >= w.w_ge_min + k;
    };
    auto in_le = [&](const BoundedComplex& z, int k) {
        auto s = z.support();
        return s.second < s.first || s.second <= w.w_le_max + k;
    };
    auto describe = [](const BoundedComplex& z) {
        auto s = z.support();
        std::ostringstream os;
        os << "complex supported in [" << s.first << "," << s.second << "]";
        return os.str();
    };
    for (const BoundedComplex& z : samples) {
        if (!validate_complex(z)) fail("complex", "differential does not square to zero");
        // shift closure of the declared classes
        if (in_ge(z, 0) && !in_ge(shift_complex(z, 1), 0))
            fail("shift-closure", describe(z) + " leaves C_{w>=0} under [1]");
        if (in_le(z, 0) && !in_le(shift_complex(z, -1), 0))
            fail("shift-closure", describe(z) + " leaves C_{w<=0} under [-1]");
    }
    // orthogonality: maps from C_{w<=0} to C_{w>=1} vanish in the homotopy category
    for (const BoundedComplex& a : samples) {
        if (!in_le(a, 0)) continue;
        for (const BoundedComplex& b : samples)
            for (const BoundedComplex& b1 : {b, shift_complex(b, 1)}) {
                if (!in_ge(b1, 1)) continue;
                FpAbGroup h = kb_hom(a, b1);
                if (!h.is_trivial())
                    fail("orthogonality", "kb_hom(" + describe(a) + ", " + describe(b1) +
                                              ") = " + h.to_string() + ", expected 0");
            }
    }
    // truncation triangles
    for (const BoundedComplex& z : samples) {
        auto s = z.support();
        for (int k = s.first - 1; k <= s.second + 1; ++k) {
            Truncation t = stupid_truncation(z, k);
            if (!validate_complex(t.low) || !validate_complex(t.high))
                fail("truncation", "truncation pieces are not complexes");
            if (!in_le(t.low, k) || !in_ge(t.high, k + 1))
                fail("truncation", "truncation pieces miss the declared windows at k");
            if (!is_chain_map(t.low, z, t.incl) || !is_chain_map(z, t.high, t.proj))
                fail("truncation", "truncation maps are not chain maps");
            for (int n = z.lo; n <= z.hi; ++n) {
                MatMorphism lhs = add_mat(
                    c,
                    compose(c, chain_component(t.incl, t.low, z, n),
                            chain_component(t.split_r, z, t.low, n)),
                    compose(c, chain_component(t.split_s, t.high, z, n),
                            chain_component(t.proj, z, t.high, n)));
                if (!mat_equal(c, lhs, identity_mat(c, z.term(n))))
                    fail("truncation", "degreewise splitting fails at degree " +
                                           std::to_string(n));
            }
        }
    }
    // the heart is negatively self-orthogonal
    for (const BoundedComplex& a : samples) {
        auto sa = a.support();
        if (!(sa.second < sa.first || (sa.first == 0 && sa.second == 0))) continue;
        for (const BoundedComplex& b : samples) {
            auto sb = b.support();
            if (!(sb.second < sb.first || (sb.first == 0 && sb.second == 0))) continue;
            for (int n = 1; n <= 2; ++n) {
                FpAbGroup h = kb_hom(a, shift_complex(b, n));
                if (!h.is_trivial())
                    fail("heart-orthogonality",
                         "kb_hom into a positive shift of a heart object is nonzero");
            }
        }
    }
    rep.ok = rep.issues.empty();
    return rep;
}

namespace {

MatObject drop_index(const MatObject& x, int k) {
    MatObject y = x;
    y.erase(y.begin() + k);
    return y;
}

}  // namespace

BoundedComplex weight_complex(const BoundedComplex& x) {
    const AddCat& c = *x.cat;
    BoundedComplex z = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = z.lo + 1; n <= z.hi && !changed; ++n) {
            MatMorphism d = z.diff(n);
            for (size_t i = 0; i < d.target.size() && !changed; ++i)
                for (size_t j = 0; j < d.source.size() && !changed; ++j) {
                    MatMorphism entry = elem_mat(c, d.source[j], d.target[i],
                                                 d.at(static_cast<int>(i), static_cast<int>(j)));
                    IsoResult iso = is_isomorphism(c, entry);
                    if (!iso.is_iso) continue;
                    const GroupElement uinv = iso.inverse->at(0, 0);
                    int src_obj = d.source[j], dst_obj = d.target[i];
                    // cancel the contractible summand src_obj -> dst_obj
                    std::vector<MatObject> terms;
                    std::vector<MatMorphism> diffs;
                    for (int m = z.lo; m <= z.hi; ++m) {
                        MatObject t = z.term(m);
                        if (m == n) t = drop_index(t, static_cast<int>(j));
                        if (m == n - 1) t = drop_index(t, static_cast<int>(i));
                        terms.push_back(t);
                    }
                    for (int m = z.lo + 1; m <= z.hi; ++m) {
                        MatMorphism dm = z.diff(m);
                        MatMorphism nd = zero_mat(c, terms[m - z.lo], terms[m - z.lo - 1]);
                        for (size_t a = 0; a < nd.target.size(); ++a)
                            for (size_t b = 0; b < nd.source.size(); ++b) {
                                size_t oa = a, ob = b;
                                if (m == n && ob >= j) ++ob;
                                if (m == n + 1 && oa >= j) ++oa;
                                if (m == n - 1 && ob >= i) ++ob;
                                if (m == n && oa >= i) ++oa;
                                GroupElement v = dm.at(static_cast<int>(oa), static_cast<int>(ob));
                                if (m == n) {
                                    // v - d(oa, j) uinv d(i, ob)
                                    GroupElement inner = c.compose_elems(
                                        d.source[ob], dst_obj, src_obj, uinv,
                                        dm.at(static_cast<int>(i), static_cast<int>(ob)));
                                    GroupElement corr = c.compose_elems(
                                        d.source[ob], src_obj, d.target[oa],
                                        dm.at(static_cast<int>(oa), static_cast<int>(j)), inner);
                                    const FpAbGroup& out = c.hom(d.source[ob], d.target[oa]);
                                    v = elem_sub(out, v, corr);
                                }
                                nd.at(static_cast<int>(a), static_cast<int>(b)) = v;
                            }
                        diffs.push_back(nd);
                    }
                    z = make_complex(c, z.lo, std::move(terms), std::move(diffs));
                    if (!validate_complex(z))
                        throw std::logic_error("weight_complex: cancellation broke d^2 = 0");
                    changed = true;
                }
        }
    }
    // trim empty outer degrees
    auto s = z.support();
    if (s.second < s.first) return zero_complex(c);
    std::vector<MatObject> terms(z.terms.begin() + (s.first - z.lo),
                                 z.terms.begin() + (s.second - z.lo + 1));
    std::vector<MatMorphism> diffs(z.diffs.begin() + (s.first - z.lo),
                                   z.diffs.begin() + (s.second - z.lo));
    return make_complex(c, s.first, std::move(terms), std::move(diffs));
}

BoundedComplex apply_functor_complex(const AddFunctor& f, const BoundedComplex& x) {
    std::vector<MatObject> terms;
    std::vector<MatMorphism> diffs;
    for (int n = x.lo; n <= x.hi; ++n) terms.push_back(f.apply_obj(x.term(n)));
    for (int n = x.lo + 1; n <= x.hi; ++n) diffs.push_back(f.apply_mat(x.diff(n)));
    return make_complex(*f.target, x.lo, std::move(terms), std::move(diffs));
}

}  // namespace addcat
