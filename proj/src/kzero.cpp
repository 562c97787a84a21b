#include "addcat/kzero.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace addcat {

namespace {

std::optional<std::vector<MatMorphism>> enumerate_end(const AddCat& c, const MatObject& x,
                                                      long cap) {
    FlatHom fh = flat_hom(c, x, x);
    auto raw = enumerate_orders(fh.orders, cap);
    if (!raw) return std::nullopt;
    std::vector<MatMorphism> out;
    out.reserve(raw->size());
    for (const auto& v : *raw) out.push_back(unflatten(c, fh, v));
    return out;
}

// Peel off a proper sub-idempotent v <= e (v = ev = ve) whenever one exists.
// The corner ring of each piece is a strictly smaller subgroup, so this
// terminates with primitive pieces.
void split_rec(const AddCat& c, const std::vector<MatMorphism>& elems, const MatMorphism& e,
               std::vector<MatMorphism>& out) {
    if (mat_is_zero(c, e)) return;
    for (const MatMorphism& v : elems) {
        if (mat_is_zero(c, v) || mat_equal(c, v, e)) continue;
        if (!mat_equal(c, compose(c, v, v), v)) continue;
        if (!mat_equal(c, compose(c, e, v), v)) continue;
        if (!mat_equal(c, compose(c, v, e), v)) continue;
        split_rec(c, elems, v, out);
        split_rec(c, elems, sub_mat(c, e, v), out);
        return;
    }
    out.push_back(e);
}

std::vector<Idempotent> primitive_pieces(const AddCat& c, const Idempotent& e, long cap,
                                         bool& capped) {
    auto elems = enumerate_end(c, e.carrier, cap);
    if (!elems) {
        capped = true;
        if (mat_is_zero(c, e.endo)) return {};
        return {e};
    }
    std::vector<MatMorphism> mats;
    split_rec(c, *elems, e.endo, mats);
    std::vector<Idempotent> out;
    out.reserve(mats.size());
    for (MatMorphism& m : mats) out.push_back(Idempotent{e.carrier, std::move(m)});
    return out;
}

bool is_identity_idem(const AddCat& c, const Idempotent& e) {
    return mat_equal(c, e.endo, identity_mat(c, e.carrier));
}

bool same_class(const AddCat& c, const Idempotent& p, const Idempotent& q, long cap,
                bool& capped) {
    if (p.carrier == q.carrier && mat_equal(c, p.endo, q.endo)) return true;
    if (p.carrier.size() == 1 && q.carrier.size() == 1 && is_identity_idem(c, p) &&
        is_identity_idem(c, q)) {
        bool cc = false;
        bool iso = objects_isomorphic(c, p.carrier[0], q.carrier[0], cap, &cc);
        if (cc) capped = true;
        return iso;
    }
    IdemIsoResult r = idempotents_isomorphic(c, p, q, cap);
    if (r.capped) capped = true;
    return r.isomorphic;
}

int classify(const AddCat& c, std::vector<Idempotent>& classes, const Idempotent& p, long cap,
             bool& capped) {
    for (size_t k = 0; k < classes.size(); ++k)
        if (same_class(c, p, classes[k], cap, capped)) return static_cast<int>(k);
    classes.push_back(p);
    return static_cast<int>(classes.size()) - 1;
}

bool all_homs_finite(const AddCat& a) {
    for (const FpAbGroup& g : a.homs)
        if (!g.is_finite()) return false;
    return true;
}

}  // namespace

EndRing endomorphism_ring(const AddCat& a) {
    EndRing er;
    er.carrier.resize(a.num_objects());
    std::iota(er.carrier.begin(), er.carrier.end(), 0);
    FlatHom fh = flat_hom(a, er.carrier, er.carrier);
    er.pres = present(fh.dim(), IntMatrix::diagonal(fh.orders));

    Ring r;
    r.name = "End(" + mat_object_label(a, er.carrier) + ")";
    r.add = er.pres.group;
    int g = r.add.num_generators();
    std::vector<MatMorphism> gens;
    gens.reserve(g);
    for (int p = 0; p < g; ++p) gens.push_back(unflatten(a, fh, er.pres.from_group.col(p)));
    r.mul = IntMatrix(g, g * g);
    for (int p = 0; p < g; ++p)
        for (int q = 0; q < g; ++q) {
            GroupElement pr =
                r.add.reduce(er.pres.to_group.apply(flatten(a, fh, compose(a, gens[p], gens[q]))));
            for (int i = 0; i < g; ++i) r.mul.at(i, p * g + q) = pr[i];
        }
    r.one = r.add.reduce(er.pres.to_group.apply(flatten(a, fh, identity_mat(a, er.carrier))));
    er.ring = std::move(r);
    return er;
}

K0Result k0_enumeration(const AddCat& a, long cap) {
    K0Result res;
    int n = a.num_objects();
    bool capped = false;
    if (!all_homs_finite(a)) {
        // infinite hom-groups: no exhaustive idempotent search; classify the
        // objects themselves and flag the result as incomplete
        for (int x = 0; x < n; ++x) {
            if (a.hom(x, x).is_zero_elem(a.identity(x))) continue;
            Idempotent e{{x}, identity_mat(a, {x})};
            bool fresh = true;
            for (const Idempotent& rep : res.reps)
                if (same_class(a, e, rep, cap, capped)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                res.reps.push_back(std::move(e));
                res.labels.push_back(a.objects[x]);
            }
        }
        res.group = FpAbGroup::free_of_rank(static_cast<int>(res.reps.size()));
        res.complete = false;
        return res;
    }
    std::vector<Idempotent> classes;
    for (int x = 0; x < n; ++x) {
        Idempotent idx{{x}, identity_mat(a, {x})};
        for (const Idempotent& p : primitive_pieces(a, idx, cap, capped))
            classify(a, classes, p, cap, capped);
    }
    for (size_t k = 0; k < classes.size(); ++k) {
        std::string lbl = mat_object_label(a, classes[k].carrier);
        if (!is_identity_idem(a, classes[k])) lbl += "#" + std::to_string(k);
        res.labels.push_back(lbl);
    }
    res.group = FpAbGroup::free_of_rank(static_cast<int>(classes.size()));
    res.reps = std::move(classes);
    res.complete = !capped;
    return res;
}

K0Result k0_radical_oracle(const Ring& r, long cap) {
    if (!r.add.is_finite()) throw std::invalid_argument("radical oracle needs a finite ring");
    auto elems_opt = enumerate_elements(r.add, cap);
    if (!elems_opt) throw std::invalid_argument("ring too large for the radical oracle");
    const std::vector<GroupElement>& elems = *elems_opt;
    int n = static_cast<int>(elems.size());
    std::map<GroupElement, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;

    std::vector<char> unit(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.times(elems[i], elems[j]) == r.one && r.times(elems[j], elems[i]) == r.one) {
                unit[i] = 1;
                break;
            }

    // x is quasi-regular iff 1 - yx is a unit for every y; those x form the
    // Jacobson radical
    std::vector<GroupElement> rad;
    for (int i = 0; i < n; ++i) {
        bool in = true;
        for (int j = 0; j < n && in; ++j) {
            GroupElement z = elem_sub(r.add, r.one, r.times(elems[j], elems[i]));
            if (!unit[index.at(z)]) in = false;
        }
        if (in) rad.push_back(elems[i]);
    }

    auto [jsub, jincl] = subgroup_from_generators(r.add, rad);
    auto [quot, proj] = jincl.cokernel();
    auto qelems_opt = enumerate_elements(quot, cap);
    if (!qelems_opt) throw std::logic_error("semisimple quotient failed to enumerate");
    const std::vector<GroupElement>& qelems = *qelems_opt;
    std::vector<GroupElement> lifts;
    lifts.reserve(qelems.size());
    for (const GroupElement& u : qelems) {
        auto pre = proj.preimage(u);
        if (!pre) throw std::logic_error("quotient projection not surjective");
        lifts.push_back(*pre);
    }
    auto qmul = [&](int i, int j) { return proj.apply(r.times(lifts[i], lifts[j])); };

    // central idempotents of the semisimple quotient form {0,1}^k over the
    // k simple blocks
    int m = static_cast<int>(qelems.size());
    long count = 0;
    for (int i = 0; i < m; ++i) {
        bool central = true;
        for (int j = 0; j < m && central; ++j)
            if (qmul(i, j) != qmul(j, i)) central = false;
        if (central && qmul(i, i) == qelems[i]) ++count;
    }
    int k = 0;
    while ((1L << k) < count) ++k;
    if ((1L << k) != count)
        throw std::logic_error("central idempotent count is not a power of two");

    K0Result res;
    res.group = FpAbGroup::free_of_rank(k);
    for (int i = 0; i < k; ++i) res.labels.push_back("block" + std::to_string(i));
    res.complete = true;
    return res;
}

AbHom k0_induced_map(const AddFunctor& f, const K0Result& src, const K0Result& dst, long cap) {
    const AddCat& b = *f.target;
    AbHom h;
    h.source = src.group;
    h.target = dst.group;
    h.mat = IntMatrix(static_cast<int>(dst.reps.size()), static_cast<int>(src.reps.size()));
    for (size_t j = 0; j < src.reps.size(); ++j) {
        Idempotent img{f.apply_obj(src.reps[j].carrier), f.apply_mat(src.reps[j].endo)};
        bool capped = false;
        for (const Idempotent& p : primitive_pieces(b, img, cap, capped)) {
            int k = -1;
            for (size_t t = 0; t < dst.reps.size() && k < 0; ++t)
                if (same_class(b, p, dst.reps[t], cap, capped)) k = static_cast<int>(t);
            if (k < 0)
                throw std::runtime_error("image of class " + src.labels[j] +
                                         " matches no class of the target");
            h.mat.at(k, static_cast<int>(j)) += 1;
        }
    }
    return h;
}

K0Verdict k0_nilinvariance_check(const AddFunctor& f, int max_exponent, long cap) {
    K0Verdict v;
    NilpotentExtensionReport rep = check_nilpotent_extension(f, max_exponent, cap);
    v.capped = rep.capped;
    if (!rep.is_nilpotent_extension()) {
        v.detail = "not a verified nilpotent extension: " + rep.detail;
        return v;
    }
    K0Result src = k0_enumeration(*f.source, cap);
    K0Result dst = k0_enumeration(*f.target, cap);
    if (!src.complete || !dst.complete) v.capped = true;
    AbHom h = k0_induced_map(f, src, dst, cap);
    std::ostringstream os;
    os << "K0 " << src.group.to_string() << " -> " << dst.group.to_string();
    if (!h.inverse()) {
        v.detail = os.str() + " is not an isomorphism";
        return v;
    }
    v.ok = true;
    v.detail = os.str() + " is an isomorphism";
    return v;
}

K0Verdict k0_localization_check(const std::vector<int>& b_objects, const AddCat& a, long cap) {
    K0Verdict v;
    AddCat b = full_subcategory(a, b_objects);
    QuotientResult q = quotient_category(a, b_objects);
    AddFunctor incl = inclusion_functor(b, a, b_objects);
    AddFunctor proj = q.projection_functor();

    K0Result kb = k0_enumeration(b, cap);
    K0Result ka = k0_enumeration(a, cap);
    K0Result kq = k0_enumeration(q.cat, cap);
    if (!kb.complete || !ka.complete || !kq.complete) v.capped = true;
    AbHom alpha = k0_induced_map(incl, kb, ka, cap);
    AbHom beta = k0_induced_map(proj, ka, kq, cap);

    std::ostringstream os;
    os << kb.group.to_string() << " -> " << ka.group.to_string() << " -> "
       << kq.group.to_string() << " -> 0";

    AbHom comp = beta.compose(alpha);
    for (int j = 0; j < comp.mat.cols; ++j)
        if (!comp.target.is_zero_elem(comp.target.reduce(comp.mat.col(j)))) {
            v.detail = os.str() + ": composite is nonzero";
            return v;
        }
    if (!beta.is_surjective()) {
        v.detail = os.str() + ": quotient map is not surjective on K0";
        return v;
    }
    auto [ker, kincl] = beta.kernel();
    for (int j = 0; j < ker.num_generators(); ++j)
        if (!solve_integer(alpha.mat, kincl.mat.col(j))) {
            v.detail = os.str() + ": kernel not covered by the subcategory classes";
            return v;
        }
    v.ok = true;
    v.detail = os.str() + " is right exact";
    return v;
}

}  // namespace addcat
