#include "addcat/ideals.hpp"

#include <sstream>
#include <stdexcept>

#include "addcat/karoubi.hpp"

namespace addcat {

namespace {

// replace each generator list by a basis of the subgroup it generates
void normalize(Ideal& i) {
    const AddCat& c = *i.cat;
    int n = c.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto& g = i.gens[x * n + y];
            auto [sub, incl] = subgroup_from_generators(c.hom(x, y), g);
            g.clear();
            for (int k = 0; k < sub.num_generators(); ++k)
                g.push_back(c.hom(x, y).reduce(incl.mat.col(k)));
        }
}

std::vector<std::vector<GroupElement>> empty_gens(const AddCat& c) {
    return std::vector<std::vector<GroupElement>>(
        static_cast<size_t>(c.num_objects()) * c.num_objects());
}

}  // namespace

bool Ideal::is_zero() const {
    for (const auto& g : gens)
        for (const auto& e : g) {
            bool z = true;
            for (const Int& v : e)
                if (v != 0) z = false;
            if (!z) return false;
        }
    return true;
}

bool Ideal::contains(int x, int y, const GroupElement& e) const {
    return subgroup_contains(cat->hom(x, y), at(x, y), e);
}

int Ideal::free_rank() const {
    int n = cat->num_objects();
    int r = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            r += subgroup_from_generators(cat->hom(x, y), at(x, y)).first.free_rank();
    return r;
}

Ideal ideal_from_generators(const AddCat& c, std::vector<std::vector<GroupElement>> gens) {
    Ideal i;
    i.cat = &c;
    i.gens = std::move(gens);
    normalize(i);
    int n = c.num_objects();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (const GroupElement& e : std::vector<GroupElement>(i.at(x, y))) {
                    for (int z = 0; z < n; ++z) {
                        const FpAbGroup& post = c.hom(y, z);
                        for (int p = 0; p < post.num_generators(); ++p) {
                            GroupElement g(post.num_generators());
                            g[p] = 1;
                            GroupElement w = c.compose_elems(x, y, z, g, e);
                            if (!i.contains(x, z, w)) {
                                i.gens[x * n + z].push_back(w);
                                changed = true;
                            }
                        }
                        const FpAbGroup& pre = c.hom(z, x);
                        for (int p = 0; p < pre.num_generators(); ++p) {
                            GroupElement g(pre.num_generators());
                            g[p] = 1;
                            GroupElement w = c.compose_elems(z, x, y, e, g);
                            if (!i.contains(z, y, w)) {
                                i.gens[z * n + y].push_back(w);
                                changed = true;
                            }
                        }
                    }
                }
        if (changed) normalize(i);
    }
    return i;
}

Ideal kernel_ideal(const AddFunctor& f) {
    const AddCat& c = *f.source;
    Ideal i;
    i.cat = &c;
    i.gens = empty_gens(c);
    int n = c.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [sub, incl] = f.hom_map(x, y).kernel();
            for (int k = 0; k < sub.num_generators(); ++k)
                i.gens[x * n + y].push_back(c.hom(x, y).reduce(incl.mat.col(k)));
        }
    if (!ideal_is_two_sided(i))
        throw std::logic_error("kernel_ideal: kernel subgroups are not two-sided");
    return i;
}

bool ideal_is_two_sided(const Ideal& i) {
    const AddCat& c = *i.cat;
    int n = c.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (const GroupElement& e : i.at(x, y))
                for (int z = 0; z < n; ++z) {
                    const FpAbGroup& post = c.hom(y, z);
                    for (int p = 0; p < post.num_generators(); ++p) {
                        GroupElement g(post.num_generators());
                        g[p] = 1;
                        if (!i.contains(x, z, c.compose_elems(x, y, z, g, e))) return false;
                    }
                    const FpAbGroup& pre = c.hom(z, x);
                    for (int p = 0; p < pre.num_generators(); ++p) {
                        GroupElement g(pre.num_generators());
                        g[p] = 1;
                        if (!i.contains(z, y, c.compose_elems(z, x, y, e, g))) return false;
                    }
                }
    return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
    int n = a.cat->num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (const GroupElement& e : a.at(x, y))
                if (!b.contains(x, y, e)) return false;
            for (const GroupElement& e : b.at(x, y))
                if (!a.contains(x, y, e)) return false;
        }
    return true;
}

namespace {

Ideal ideal_multiply(const Ideal& left, const Ideal& right) {
    const AddCat& c = *left.cat;
    int n = c.num_objects();
    Ideal out;
    out.cat = &c;
    out.gens = empty_gens(c);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            for (int y = 0; y < n; ++y)
                for (const GroupElement& f : right.at(x, y))
                    for (const GroupElement& g : left.at(y, z))
                        out.gens[x * n + z].push_back(c.compose_elems(x, y, z, g, f));
    normalize(out);
    return out;
}

}  // namespace

Ideal ideal_power(const Ideal& i, int n) {
    if (n < 1) throw std::invalid_argument("ideal_power: n must be positive");
    Ideal p = i;
    normalize(p);
    for (int k = 1; k < n; ++k) p = ideal_multiply(p, i);
    return p;
}

NilpotenceCertificate ideal_nilpotence(const Ideal& i, int max_exponent) {
    NilpotenceCertificate cert;
    Ideal p = ideal_power(i, 1);
    for (int k = 1; k <= max_exponent; ++k) {
        if (p.is_zero()) {
            cert.status = NilpotenceCertificate::Status::Nilpotent;
            cert.exponent = k;
            std::ostringstream os;
            os << "the " << k << "-fold product ideal vanishes";
            cert.reason = os.str();
            return cert;
        }
        Ideal next = ideal_multiply(p, i);
        int rp = p.free_rank(), rn = next.free_rank();
        if (rn == rp && rp > 0) {
            cert.status = NilpotenceCertificate::Status::NotNilpotent;
            std::ostringstream os;
            os << "free rank " << rp << " persists from power " << k << " to " << k + 1
               << ", so no power vanishes";
            cert.reason = os.str();
            return cert;
        }
        if (ideals_equal(next, p)) {
            cert.status = NilpotenceCertificate::Status::NotNilpotent;
            std::ostringstream os;
            os << "powers stabilize at a nonzero ideal from power " << k << " on";
            cert.reason = os.str();
            return cert;
        }
        p = next;
    }
    cert.status = NilpotenceCertificate::Status::Inconclusive;
    std::ostringstream os;
    os << "no power up to " << max_exponent << " vanishes or stabilizes";
    cert.reason = os.str();
    return cert;
}

AddFunctor QuotientResult::projection_functor() const {
    AddFunctor f;
    f.source = base;
    f.target = &cat;
    for (int i = 0; i < base->num_objects(); ++i) f.object_map.push_back(i);
    f.hom_maps = proj;
    return f;
}

QuotientResult quotient_category(const AddCat& a, const std::vector<int>& b_objects) {
    int n = a.num_objects();
    QuotientResult q;
    q.base = &a;
    q.cat = AddCat::with_shape(a.objects);
    q.proj.resize(static_cast<size_t>(n) * n, AbHom::zero(FpAbGroup::trivial(), FpAbGroup::trivial()));
    q.lift.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FpAbGroup& g = a.hom(x, y);
            int m = g.num_generators();
            std::vector<std::vector<Int>> cols;
            for (int i = 0; i < m; ++i)
                if (g.factors[i] != 0) {
                    std::vector<Int> col(m);
                    col[i] = g.factors[i];
                    cols.push_back(col);
                }
            for (int z : b_objects) {
                const FpAbGroup& hz = a.hom(x, z);
                const FpAbGroup& zh = a.hom(z, y);
                for (int p = 0; p < zh.num_generators(); ++p)
                    for (int qi = 0; qi < hz.num_generators(); ++qi) {
                        GroupElement gp(zh.num_generators()), fq(hz.num_generators());
                        gp[p] = 1;
                        fq[qi] = 1;
                        cols.push_back(a.compose_elems(x, z, y, gp, fq));
                    }
            }
            IntMatrix rel(m, static_cast<int>(cols.size()));
            for (size_t j = 0; j < cols.size(); ++j)
                for (int i = 0; i < m; ++i) rel.at(i, static_cast<int>(j)) = cols[j][i];
            Presentation p = present(m, rel);
            q.cat.hom_mut(x, y) = p.group;
            q.proj[x * n + y] = AbHom{g, p.group, p.to_group};
            q.lift[x * n + y] = p.from_group;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int rows = q.cat.hom(x, z).num_generators();
                int nij = q.cat.hom(x, y).num_generators();
                int njk = q.cat.hom(y, z).num_generators();
                IntMatrix t(rows, njk * nij);
                for (int p = 0; p < njk; ++p)
                    for (int qi = 0; qi < nij; ++qi) {
                        GroupElement gp(njk), fq(nij);
                        gp[p] = 1;
                        fq[qi] = 1;
                        GroupElement lg = a.hom(y, z).reduce(q.lift[y * n + z].apply(gp));
                        GroupElement lf = a.hom(x, y).reduce(q.lift[x * n + y].apply(fq));
                        GroupElement comp =
                            q.proj[x * n + z].apply(a.compose_elems(x, y, z, lg, lf));
                        for (int r = 0; r < rows; ++r) t.at(r, p * nij + qi) = comp[r];
                    }
                q.cat.comp_table_mut(x, y, z) = t;
            }
    for (int x = 0; x < n; ++x)
        q.cat.identities[x] = q.proj[x * n + x].apply(a.identity(x));
    ValidationReport rep = validate_category(q.cat);
    if (!rep.ok)
        throw std::logic_error("quotient_category: induced composition invalid: " + rep.summary());
    return q;
}

namespace {

std::vector<int> iso_class_reps(const AddCat& c, long cap, bool* capped) {
    std::vector<int> reps;
    for (int o = 0; o < c.num_objects(); ++o) {
        bool found = false;
        for (int r : reps)
            if (objects_isomorphic(c, r, o, cap, capped)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(o);
    }
    return reps;
}

}  // namespace

NilpotentExtensionReport check_nilpotent_extension(const AddFunctor& f, int max_exponent,
                                                   long cap) {
    NilpotentExtensionReport rep;
    const AddCat& s = *f.source;
    const AddCat& t = *f.target;
    rep.hom_surjective = true;
    for (int x = 0; x < s.num_objects() && rep.hom_surjective; ++x)
        for (int y = 0; y < s.num_objects(); ++y)
            if (!f.hom_map(x, y).is_surjective()) {
                rep.hom_surjective = false;
                rep.detail = "hom map (" + s.objects[x] + "," + s.objects[y] + ") not surjective";
                break;
            }
    bool capped = false;
    rep.essentially_surjective = true;
    for (int o = 0; o < t.num_objects(); ++o) {
        bool hit = false;
        for (int x = 0; x < s.num_objects() && !hit; ++x)
            hit = objects_isomorphic(t, f.object_map[x], o, cap, &capped);
        if (!hit) {
            rep.essentially_surjective = false;
            if (rep.detail.empty()) rep.detail = "object " + t.objects[o] + " not hit up to iso";
        }
    }
    // injectivity on isomorphism classes on top of essential surjectivity
    std::vector<int> src_reps = iso_class_reps(s, cap, &capped);
    bool injective = true;
    for (size_t i = 0; i < src_reps.size() && injective; ++i)
        for (size_t j = i + 1; j < src_reps.size(); ++j)
            if (objects_isomorphic(t, f.object_map[src_reps[i]], f.object_map[src_reps[j]], cap,
                                   &capped)) {
                injective = false;
                break;
            }
    rep.bijective_on_classes = injective && rep.essentially_surjective;
    rep.capped = capped;
    rep.certificate = ideal_nilpotence(kernel_ideal(f), max_exponent);
    return rep;
}

ExactSequenceReport check_exact_sequence(const std::vector<int>& b_objects, const AddCat& a,
                                         const AddFunctor& g, int bound, long cap) {
    ExactSequenceReport rep;
    const AddCat& t = *g.target;
    for (int z : b_objects) {
        GroupElement img = g.apply_elem(z, z, a.identity(z));
        int fz = g.object_map[z];
        if (!t.hom(fz, fz).is_zero_elem(img)) {
            rep.detail = "functor does not kill subcategory object " + a.objects[z];
            return rep;
        }
    }
    QuotientResult q = quotient_category(a, b_objects);
    AddFunctor h;
    h.source = &q.cat;
    h.target = g.target;
    h.object_map = g.object_map;
    int n = a.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            IntMatrix mat = g.hom_map(x, y).mat.mul(q.lift[x * n + y]);
            h.hom_maps.push_back(AbHom{q.cat.hom(x, y),
                                       t.hom(g.object_map[x], g.object_map[y]), mat});
        }
    ValidationReport v = validate_functor(h);
    if (!v.ok) {
        rep.detail = "induced functor on the quotient is not well defined: " + v.summary();
        return rep;
    }
    EquivalenceReport eq = equivalence_up_to_idempotents(h, bound, cap);
    rep.exact = eq.equivalent;
    rep.capped = eq.capped;
    rep.detail = eq.detail;
    return rep;
}

std::optional<MatMorphism> conservative_inverse(const AddFunctor& f, const MatMorphism& u,
                                                int exponent) {
    const AddCat& s = *f.source;
    const AddCat& t = *f.target;
    MatMorphism fu = f.apply_mat(u);
    IsoResult iso = is_isomorphism(t, fu);
    if (!iso.is_iso) return std::nullopt;
    const MatMorphism& w = *iso.inverse;
    // entrywise lift of the inverse along the surjective hom maps
    MatMorphism h = zero_mat(s, u.target, u.source);
    for (size_t i = 0; i < u.source.size(); ++i)
        for (size_t j = 0; j < u.target.size(); ++j) {
            auto pre = f.hom_map(u.target[j], u.source[i]).preimage(w.at(static_cast<int>(i),
                                                                        static_cast<int>(j)));
            if (!pre) return std::nullopt;
            h.at(static_cast<int>(i), static_cast<int>(j)) = *pre;
        }
    MatMorphism d = sub_mat(s, identity_mat(s, u.source), compose(s, h, u));
    MatMorphism acc = identity_mat(s, u.source);
    MatMorphism pow = identity_mat(s, u.source);
    for (int k = 1; k < exponent; ++k) {
        pow = compose(s, pow, d);
        acc = add_mat(s, acc, pow);
    }
    MatMorphism v = compose(s, acc, h);
    if (!mat_equal(s, compose(s, v, u), identity_mat(s, u.source))) return std::nullopt;
    if (!mat_equal(s, compose(s, u, v), identity_mat(s, u.target))) return std::nullopt;
    return v;
}

}  // namespace addcat
