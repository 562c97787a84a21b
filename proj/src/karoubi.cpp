#include "addcat/karoubi.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace addcat {

namespace {

// matrix of g -> post o g o pre on flat coordinates,
// Hom(pre.source, post.source) -> Hom(pre.source, post.target)
IntMatrix sandwich_matrix(const AddCat& c, const MatMorphism& post, const MatMorphism& pre) {
    IntMatrix l = left_compose_matrix(c, post, pre.source);
    IntMatrix r = right_compose_matrix(c, pre, post.source);
    return l.mul(r);
}

// lattice of g in Hom(x, y) with f o g o e = g
IntMatrix invariant_hom_lattice(const AddCat& c, const MatMorphism& e, const MatMorphism& f) {
    FlatHom fh = flat_hom(c, e.source, f.source);
    IntMatrix m = sandwich_matrix(c, f, e);
    for (int i = 0; i < fh.dim(); ++i) m.at(i, i) -= 1;
    return kernel_mod(m, fh.orders);
}

// elements of the corner e o Hom o e, i.e. all u with e u e = u
std::optional<std::vector<MatMorphism>> corner_elements(const AddCat& c, const Idempotent& e,
                                                        long cap) {
    FlatHom fh = flat_hom(c, e.carrier, e.carrier);
    IntMatrix lat = invariant_hom_lattice(c, e.endo, e.endo);
    auto us = enumerate_lattice_subgroup(fh.orders, lat, cap);
    if (!us) return std::nullopt;
    std::vector<MatMorphism> out;
    out.reserve(us->size());
    for (const auto& u : *us) out.push_back(unflatten(c, fh, u));
    return out;
}

// primitive pieces of an idempotent via repeated corner splitting; false when
// some corner enumeration hit the cap
bool split_primitive(const AddCat& c, const Idempotent& e, long cap,
                     std::vector<MatMorphism>& out) {
    if (mat_is_zero(c, e.endo)) return true;
    auto corner = corner_elements(c, e, cap);
    if (!corner) return false;
    for (const MatMorphism& v : *corner) {
        if (mat_is_zero(c, v) || mat_equal(c, v, e.endo)) continue;
        if (!mat_equal(c, compose(c, v, v), v)) continue;
        if (!split_primitive(c, Idempotent{e.carrier, v}, cap, out)) return false;
        return split_primitive(c, Idempotent{e.carrier, sub_mat(c, e.endo, v)}, cap, out);
    }
    out.push_back(e.endo);
    return true;
}

}  // namespace

bool is_idempotent(const AddCat& c, const MatMorphism& e) {
    if (e.source != e.target) return false;
    return mat_equal(c, compose(c, e, e), e);
}

SplitReport split_idempotent(const AddCat& c, const Idempotent& e, int size_bound, long cap) {
    SplitReport rep;
    for (const MatObject& y : enumerate_mat_objects(c, 0, size_bound)) {
        RetractSearchResult r = find_retraction(c, e.carrier, y, &e.endo, cap);
        if (r.found) {
            rep.split = true;
            rep.capped = false;
            rep.y = y;
            rep.r = r.r;
            rep.s = r.s;
            return rep;
        }
        rep.capped = rep.capped || r.capped;
    }
    return rep;
}

IdemIsoResult idempotents_isomorphic(const AddCat& c, const Idempotent& e, const Idempotent& f,
                                     long cap) {
    IdemIsoResult res;
    const MatObject& x = e.carrier;
    const MatObject& y = f.carrier;
    FlatHom fu = flat_hom(c, x, y);
    FlatHom fv = flat_hom(c, y, x);
    FlatHom fex = flat_hom(c, x, x);
    FlatHom fey = flat_hom(c, y, y);
    IntMatrix lattice = invariant_hom_lattice(c, e.endo, f.endo);
    auto us = enumerate_lattice_subgroup(fu.orders, lattice, cap);
    if (!us) {
        res.capped = true;
        return res;
    }
    // v with e v f = v, v u = e, u v = f
    IntMatrix a1 = sandwich_matrix(c, e.endo, f.endo);
    for (int i = 0; i < fv.dim(); ++i) a1.at(i, i) -= 1;
    for (const auto& ucoords : *us) {
        MatMorphism u = unflatten(c, fu, ucoords);
        IntMatrix a2 = right_compose_matrix(c, u, x);  // v -> v o u
        IntMatrix a3 = left_compose_matrix(c, u, y);   // v -> u o v
        IntMatrix sys = a1.vstack(a2).vstack(a3);
        std::vector<Int> orders = fv.orders;
        orders.insert(orders.end(), fex.orders.begin(), fex.orders.end());
        orders.insert(orders.end(), fey.orders.begin(), fey.orders.end());
        std::vector<Int> b(fv.orders.size());
        std::vector<Int> be = flatten(c, fex, e.endo);
        std::vector<Int> bf = flatten(c, fey, f.endo);
        b.insert(b.end(), be.begin(), be.end());
        b.insert(b.end(), bf.begin(), bf.end());
        auto sol = solve_mod(sys, orders, b);
        if (sol) {
            res.isomorphic = true;
            res.u = u;
            res.v = unflatten(c, fv, *sol);
            return res;
        }
    }
    return res;
}

MatMorphism Envelope::lift(int i, int j, const GroupElement& u) const {
    int n = cat.num_objects();
    const IntMatrix& g = hom_gens[i * n + j];
    const Presentation& p = hom_pres[i * n + j];
    FlatHom fh = flat_hom(*base, objects[i].carrier, objects[j].carrier);
    std::vector<Int> raw = g.apply(p.from_group.apply(u));
    FpAbGroup amb;
    amb.factors = fh.orders;
    return unflatten(*base, fh, amb.reduce(raw));
}

GroupElement Envelope::project(int i, int j, const MatMorphism& m) const {
    int n = cat.num_objects();
    const IntMatrix& g = hom_gens[i * n + j];
    const Presentation& p = hom_pres[i * n + j];
    FlatHom fh = flat_hom(*base, objects[i].carrier, objects[j].carrier);
    auto t = solve_mod(g, fh.orders, flatten(*base, fh, m));
    if (!t) throw std::logic_error("project: morphism not in the envelope hom subgroup");
    return p.group.reduce(p.to_group.apply(*t));
}

AddFunctor Envelope::embedding_functor() const {
    AddFunctor f;
    f.source = base;
    f.target = &cat;
    int n = base->num_objects();
    for (int i = 0; i < n; ++i) f.object_map.push_back(i);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FpAbGroup& src = base->hom(x, y);
            const FpAbGroup& dst = cat.hom(x, y);
            IntMatrix m(dst.num_generators(), src.num_generators());
            for (int k = 0; k < src.num_generators(); ++k) {
                GroupElement g(src.num_generators());
                g[k] = 1;
                GroupElement img = project(x, y, elem_mat(*base, x, y, g));
                for (int i = 0; i < dst.num_generators(); ++i) m.at(i, k) = img[i];
            }
            f.hom_maps.push_back(AbHom{src, dst, m});
        }
    return f;
}

Envelope karoubi_envelope(const AddCat& c, int bound, long cap) {
    for (const FpAbGroup& g : c.homs)
        if (!g.is_finite()) throw std::invalid_argument("karoubi_envelope: hom-groups must be finite");
    Envelope env;
    env.base = &c;
    int nb = c.num_objects();
    for (int x = 0; x < nb; ++x)
        env.objects.push_back(Idempotent{{x}, identity_mat(c, {x})});
    std::vector<std::string> labels = c.objects;

    // dedup by Krull-Schmidt signature: finite hom-groups make every
    // endomorphism ring semiperfect, so idempotents are isomorphic exactly
    // when their multisets of primitive pieces match
    std::vector<Idempotent> prim_reps;
    bool sig_ok = true;
    std::set<std::vector<int>> known_sigs;
    auto signature = [&](const Idempotent& cand) -> std::optional<std::vector<int>> {
        std::vector<MatMorphism> pieces;
        if (!split_primitive(c, cand, cap, pieces)) return std::nullopt;
        std::vector<int> sig;
        for (const MatMorphism& p : pieces) {
            Idempotent pi{cand.carrier, p};
            int k = -1;
            for (size_t t = 0; t < prim_reps.size() && k < 0; ++t) {
                IdemIsoResult r = idempotents_isomorphic(c, pi, prim_reps[t], cap);
                if (r.capped) return std::nullopt;
                if (r.isomorphic) k = static_cast<int>(t);
            }
            if (k < 0) {
                prim_reps.push_back(pi);
                k = static_cast<int>(prim_reps.size()) - 1;
            }
            sig.push_back(k);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    for (const Idempotent& o : env.objects) {
        auto s = signature(o);
        if (!s) {
            sig_ok = false;
            break;
        }
        known_sigs.insert(*s);
    }

    for (const MatObject& carrier : enumerate_mat_objects(c, 1, bound)) {
        FlatHom fh = flat_hom(c, carrier, carrier);
        auto elems = enumerate_orders(fh.orders, cap);
        if (!elems) {
            env.capped = true;
            continue;
        }
        for (const auto& coords : *elems) {
            MatMorphism e = unflatten(c, fh, coords);
            if (mat_is_zero(c, e) || !is_idempotent(c, e)) continue;
            Idempotent cand{carrier, e};
            bool known = false;
            if (sig_ok) {
                auto s = signature(cand);
                if (s) {
                    known = !known_sigs.insert(*s).second;
                } else {
                    sig_ok = false;
                    env.capped = true;
                }
            }
            if (!sig_ok) {
                for (const Idempotent& o : env.objects) {
                    IdemIsoResult iso = idempotents_isomorphic(c, o, cand, cap);
                    env.capped = env.capped || iso.capped;
                    if (iso.isomorphic) {
                        known = true;
                        break;
                    }
                }
            }
            if (known) continue;
            env.objects.push_back(cand);
            std::ostringstream lab;
            lab << mat_object_label(c, carrier) << "{";
            for (size_t k = 0; k < coords.size(); ++k) {
                if (k) lab << ",";
                lab << coords[k].get_str();
            }
            lab << "}";
            labels.push_back(lab.str());
        }
    }
    int n = static_cast<int>(env.objects.size());
    env.cat = AddCat::with_shape(labels);
    env.hom_gens.resize(static_cast<size_t>(n) * n);
    env.hom_pres.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FlatHom fh = flat_hom(c, env.objects[i].carrier, env.objects[j].carrier);
            IntMatrix g = invariant_hom_lattice(c, env.objects[i].endo, env.objects[j].endo);
            Presentation p = present(g.cols, kernel_mod(g, fh.orders));
            env.hom_gens[i * n + j] = g;
            env.hom_pres[i * n + j] = p;
            env.cat.hom_mut(i, j) = p.group;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int rows = env.cat.hom(i, k).num_generators();
                int nij = env.cat.hom(i, j).num_generators();
                int njk = env.cat.hom(j, k).num_generators();
                IntMatrix t(rows, njk * nij);
                for (int p = 0; p < njk; ++p)
                    for (int q = 0; q < nij; ++q) {
                        GroupElement gp(njk), fq(nij);
                        gp[p] = 1;
                        fq[q] = 1;
                        MatMorphism comp =
                            compose(c, env.lift(j, k, gp), env.lift(i, j, fq));
                        GroupElement img = env.project(i, k, comp);
                        for (int r = 0; r < rows; ++r) t.at(r, p * nij + q) = img[r];
                    }
                env.cat.comp_table_mut(i, j, k) = t;
            }
    for (int i = 0; i < n; ++i)
        env.cat.identities[i] = env.project(i, i, env.objects[i].endo);
    return env;
}

EquivalenceReport equivalence_up_to_idempotents(const AddFunctor& f, int bound, long cap) {
    EquivalenceReport rep;
    const AddCat& s = *f.source;
    const AddCat& t = *f.target;
    for (int x = 0; x < s.num_objects(); ++x)
        for (int y = 0; y < s.num_objects(); ++y)
            if (!f.hom_map(x, y).inverse()) {
                rep.detail = "hom map (" + s.objects[x] + "," + s.objects[y] + ") is not bijective";
                return rep;
            }
    for (int o = 0; o < t.num_objects(); ++o) {
        bool found = false;
        for (const MatObject& m : enumerate_mat_objects(s, 1, bound)) {
            RetractSearchResult r = find_retraction(t, f.apply_obj(m), {o}, nullptr, cap);
            rep.capped = rep.capped || r.capped;
            if (r.found) {
                found = true;
                break;
            }
        }
        if (!found) {
            rep.detail = "object " + t.objects[o] +
                         " is not a retract of any image object within the size bound";
            return rep;
        }
    }
    rep.equivalent = true;
    rep.capped = false;
    rep.detail = "equivalence up to idempotent completion within bound";
    return rep;
}

}  // namespace addcat
