#include "addcat/category.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace addcat {

GroupElement AddCat::compose_elems(int x, int y, int z, const GroupElement& g,
                                   const GroupElement& f) const {
    const IntMatrix& t = comp_table(x, y, z);
    const FpAbGroup& out = hom(x, z);
    int nf = hom(x, y).num_generators();
    GroupElement r(out.num_generators());
    for (size_t p = 0; p < g.size(); ++p) {
        if (g[p] == 0) continue;
        for (size_t q = 0; q < f.size(); ++q) {
            if (f[q] == 0) continue;
            Int c = g[p] * f[q];
            int col = static_cast<int>(p) * nf + static_cast<int>(q);
            for (int i = 0; i < t.rows; ++i)
                if (t.at(i, col) != 0) r[i] += c * t.at(i, col);
        }
    }
    return out.reduce(r);
}

int AddCat::object_index(const std::string& label) const {
    for (int i = 0; i < num_objects(); ++i)
        if (objects[i] == label) return i;
    return -1;
}

AddCat AddCat::with_shape(std::vector<std::string> objs) {
    AddCat c;
    c.objects = std::move(objs);
    int n = c.num_objects();
    c.homs.assign(static_cast<size_t>(n) * n, FpAbGroup::trivial());
    c.comps.assign(static_cast<size_t>(n) * n * n, IntMatrix());
    c.identities.assign(n, GroupElement{});
    return c;
}

std::string ValidationReport::summary() const {
    if (ok) return "pass";
    std::ostringstream os;
    os << "fail:";
    for (const auto& i : issues) os << " [" << i.axiom << "] " << i.detail << ";";
    return os.str();
}

namespace {

std::string elem_str(const GroupElement& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace

ValidationReport validate_category(const AddCat& c) {
    ValidationReport rep;
    int n = c.num_objects();
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({axiom, detail});
    };
    // shape and element invariants
    for (int x = 0; x < n && rep.ok; ++x) {
        if (static_cast<int>(c.identity(x).size()) != c.hom(x, x).num_generators())
            fail("shape", "identity of " + c.objects[x] + " has wrong coordinate count");
    }
    // composition tables must respect the tensor relations (well-definedness)
    for (int x = 0; x < n && rep.ok; ++x)
        for (int y = 0; y < n && rep.ok; ++y)
            for (int z = 0; z < n && rep.ok; ++z) {
                const IntMatrix& t = c.comp_table(x, y, z);
                const FpAbGroup &gyz = c.hom(y, z), &gxy = c.hom(x, y), &gxz = c.hom(x, z);
                int want_cols = gyz.num_generators() * gxy.num_generators();
                if (t.cols != want_cols || (want_cols > 0 && t.rows != gxz.num_generators())) {
                    fail("shape", "comp table (" + c.objects[x] + "," + c.objects[y] + "," +
                                      c.objects[z] + ") has wrong dimensions");
                    continue;
                }
                for (int p = 0; p < gyz.num_generators(); ++p)
                    for (int q = 0; q < gxy.num_generators(); ++q) {
                        int col = p * gxy.num_generators() + q;
                        GroupElement v = gxz.reduce(t.col(col));
                        for (const Int& d : {gyz.factors[p], gxy.factors[q]}) {
                            if (d == 0) continue;
                            if (!gxz.is_zero_elem(elem_scale(gxz, d, v)))
                                fail("bilinearity",
                                     "composite of generators (" + std::to_string(p) + "," +
                                         std::to_string(q) + ") at (" + c.objects[x] + "," +
                                         c.objects[y] + "," + c.objects[z] +
                                         ") violates the generator relations");
                        }
                    }
            }
    if (!rep.ok) return rep;
    // unit axioms on generators
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FpAbGroup& g = c.hom(x, y);
            for (int p = 0; p < g.num_generators(); ++p) {
                GroupElement e(g.num_generators());
                e[p] = 1;
                GroupElement l = c.compose_elems(x, y, y, c.identity(y), e);
                GroupElement r = c.compose_elems(x, x, y, e, c.identity(x));
                if (!g.is_zero_elem(elem_sub(g, l, e)))
                    rep.issues.push_back({"unit", "id_" + c.objects[y] + " . gen" +
                                                      std::to_string(p) + " != gen in hom(" +
                                                      c.objects[x] + "," + c.objects[y] + ")"});
                if (!g.is_zero_elem(elem_sub(g, r, e)))
                    rep.issues.push_back({"unit", "gen" + std::to_string(p) + " . id_" +
                                                      c.objects[x] + " != gen in hom(" +
                                                      c.objects[x] + "," + c.objects[y] + ")"});
            }
        }
    // associativity on generator triples
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const FpAbGroup& gyz = c.hom(y, z);
                    const FpAbGroup& gxy = c.hom(x, y);
                    const FpAbGroup& gwx = c.hom(w, x);
                    const FpAbGroup& out = c.hom(w, z);
                    for (int p = 0; p < gyz.num_generators(); ++p)
                        for (int q = 0; q < gxy.num_generators(); ++q)
                            for (int r = 0; r < gwx.num_generators(); ++r) {
                                GroupElement h(gyz.num_generators()), m(gxy.num_generators()),
                                    f(gwx.num_generators());
                                h[p] = 1;
                                m[q] = 1;
                                f[r] = 1;
                                GroupElement a = c.compose_elems(
                                    w, x, z, c.compose_elems(x, y, z, h, m), f);
                                GroupElement b = c.compose_elems(
                                    w, y, z, h, c.compose_elems(w, x, y, m, f));
                                if (!out.is_zero_elem(elem_sub(out, a, b))) {
                                    rep.issues.push_back(
                                        {"associativity",
                                         "witness triple gens (" + std::to_string(p) + "," +
                                             std::to_string(q) + "," + std::to_string(r) +
                                             ") at objects (" + c.objects[w] + "," + c.objects[x] +
                                             "," + c.objects[y] + "," + c.objects[z] + "): " +
                                             elem_str(a) + " vs " + elem_str(b)});
                                    rep.ok = false;
                                    return rep;
                                }
                            }
                }
    rep.ok = rep.issues.empty();
    return rep;
}

std::string mat_object_label(const AddCat& c, const MatObject& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) os << "+";
        os << c.objects[x[i]];
    }
    return os.str();
}

MatMorphism identity_mat(const AddCat& c, const MatObject& x) {
    MatMorphism m = zero_mat(c, x, x);
    for (size_t i = 0; i < x.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = c.identity(x[i]);
    return m;
}

MatMorphism zero_mat(const AddCat& c, const MatObject& x, const MatObject& y) {
    MatMorphism m;
    m.source = x;
    m.target = y;
    m.entries.resize(x.size() * y.size());
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                c.hom(x[j], y[i]).zero();
    return m;
}

MatMorphism compose(const AddCat& c, const MatMorphism& g, const MatMorphism& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: dimension mismatch");
    MatMorphism r = zero_mat(c, f.source, g.target);
    for (size_t i = 0; i < g.target.size(); ++i)
        for (size_t k = 0; k < f.source.size(); ++k) {
            const FpAbGroup& out = c.hom(f.source[k], g.target[i]);
            GroupElement acc = out.zero();
            for (size_t j = 0; j < f.target.size(); ++j) {
                GroupElement t = c.compose_elems(f.source[k], f.target[j], g.target[i],
                                                 g.at(static_cast<int>(i), static_cast<int>(j)),
                                                 f.at(static_cast<int>(j), static_cast<int>(k)));
                acc = elem_add(out, acc, t);
            }
            r.at(static_cast<int>(i), static_cast<int>(k)) = acc;
        }
    return r;
}

MatMorphism add_mat(const AddCat& c, const MatMorphism& f, const MatMorphism& g) {
    MatMorphism r = f;
    for (size_t i = 0; i < f.target.size(); ++i)
        for (size_t j = 0; j < f.source.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) =
                elem_add(c.hom(f.source[j], f.target[i]), f.at(static_cast<int>(i), static_cast<int>(j)),
                         g.at(static_cast<int>(i), static_cast<int>(j)));
    return r;
}

MatMorphism sub_mat(const AddCat& c, const MatMorphism& f, const MatMorphism& g) {
    return add_mat(c, f, negate_mat(c, g));
}

MatMorphism negate_mat(const AddCat& c, const MatMorphism& f) {
    MatMorphism r = f;
    for (size_t i = 0; i < f.target.size(); ++i)
        for (size_t j = 0; j < f.source.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) =
                elem_neg(c.hom(f.source[j], f.target[i]), f.at(static_cast<int>(i), static_cast<int>(j)));
    return r;
}

bool mat_equal(const AddCat& c, const MatMorphism& f, const MatMorphism& g) {
    if (f.source != g.source || f.target != g.target) return false;
    return mat_is_zero(c, sub_mat(c, f, g));
}

bool mat_is_zero(const AddCat& c, const MatMorphism& f) {
    for (size_t i = 0; i < f.target.size(); ++i)
        for (size_t j = 0; j < f.source.size(); ++j)
            if (!c.hom(f.source[j], f.target[i])
                     .is_zero_elem(f.at(static_cast<int>(i), static_cast<int>(j))))
                return false;
    return true;
}

MatMorphism elem_mat(const AddCat& c, int x, int y, const GroupElement& e) {
    MatMorphism m;
    m.source = {x};
    m.target = {y};
    m.entries = {c.hom(x, y).reduce(e)};
    return m;
}

BiproductData direct_sum(const AddCat& c, const std::vector<MatObject>& parts) {
    BiproductData b;
    for (const MatObject& p : parts) b.sum.insert(b.sum.end(), p.begin(), p.end());
    size_t off = 0;
    for (const MatObject& p : parts) {
        MatMorphism inj = zero_mat(c, p, b.sum);
        MatMorphism proj = zero_mat(c, b.sum, p);
        for (size_t i = 0; i < p.size(); ++i) {
            inj.at(static_cast<int>(off + i), static_cast<int>(i)) = c.identity(p[i]);
            proj.at(static_cast<int>(i), static_cast<int>(off + i)) = c.identity(p[i]);
        }
        b.injections.push_back(inj);
        b.projections.push_back(proj);
        off += p.size();
    }
    return b;
}

FlatHom flat_hom(const AddCat& c, const MatObject& x, const MatObject& y) {
    FlatHom fh;
    fh.src = x;
    fh.dst = y;
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) {
            const FpAbGroup& g = c.hom(x[j], y[i]);
            for (int k = 0; k < g.num_generators(); ++k) {
                fh.orders.push_back(g.factors[k]);
                fh.basis.push_back({static_cast<int>(i), static_cast<int>(j), k});
            }
        }
    return fh;
}

std::vector<Int> flatten(const AddCat& c, const FlatHom& fh, const MatMorphism& m) {
    (void)c;
    std::vector<Int> out(fh.orders.size());
    for (size_t k = 0; k < fh.basis.size(); ++k) {
        auto [i, j, g] = fh.basis[k];
        out[k] = m.at(i, j)[g];
    }
    return out;
}

MatMorphism unflatten(const AddCat& c, const FlatHom& fh, const std::vector<Int>& coords) {
    MatMorphism m = zero_mat(c, fh.src, fh.dst);
    for (size_t k = 0; k < fh.basis.size(); ++k) {
        auto [i, j, g] = fh.basis[k];
        m.at(i, j)[g] = coords[k];
    }
    for (size_t i = 0; i < fh.dst.size(); ++i)
        for (size_t j = 0; j < fh.src.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                c.hom(fh.src[j], fh.dst[i]).reduce(m.at(static_cast<int>(i), static_cast<int>(j)));
    return m;
}

IntMatrix left_compose_matrix(const AddCat& c, const MatMorphism& a, const MatObject& x) {
    FlatHom from = flat_hom(c, x, a.source);
    FlatHom to = flat_hom(c, x, a.target);
    IntMatrix m(to.dim(), from.dim());
    for (int k = 0; k < from.dim(); ++k) {
        std::vector<Int> e(from.dim());
        e[k] = 1;
        MatMorphism b = unflatten(c, from, e);
        std::vector<Int> img = flatten(c, to, compose(c, a, b));
        for (int i = 0; i < to.dim(); ++i) m.at(i, k) = img[i];
    }
    return m;
}

IntMatrix right_compose_matrix(const AddCat& c, const MatMorphism& b, const MatObject& z) {
    FlatHom from = flat_hom(c, b.target, z);
    FlatHom to = flat_hom(c, b.source, z);
    IntMatrix m(to.dim(), from.dim());
    for (int k = 0; k < from.dim(); ++k) {
        std::vector<Int> e(from.dim());
        e[k] = 1;
        MatMorphism a = unflatten(c, from, e);
        std::vector<Int> img = flatten(c, to, compose(c, a, b));
        for (int i = 0; i < to.dim(); ++i) m.at(i, k) = img[i];
    }
    return m;
}

IsoResult is_isomorphism(const AddCat& c, const MatMorphism& f) {
    // unknown g in Hom(target, source); equations f.g = id and g.f = id
    FlatHom gh = flat_hom(c, f.target, f.source);
    FlatHom endt = flat_hom(c, f.target, f.target);
    FlatHom ends = flat_hom(c, f.source, f.source);
    IntMatrix l = left_compose_matrix(c, f, f.target);   // g -> f.g in End(target)
    IntMatrix r = right_compose_matrix(c, f, f.source);  // g -> g.f in End(source)
    IntMatrix sys = l.vstack(r);
    std::vector<Int> orders = endt.orders;
    orders.insert(orders.end(), ends.orders.begin(), ends.orders.end());
    std::vector<Int> b = flatten(c, endt, identity_mat(c, f.target));
    std::vector<Int> b2 = flatten(c, ends, identity_mat(c, f.source));
    b.insert(b.end(), b2.begin(), b2.end());
    auto sol = solve_mod(sys, orders, b);
    if (!sol) return IsoResult{};
    return IsoResult{true, unflatten(c, gh, *sol)};
}

MatObject AddFunctor::apply_obj(const MatObject& o) const {
    MatObject r;
    r.reserve(o.size());
    for (int x : o) r.push_back(object_map[x]);
    return r;
}

MatMorphism AddFunctor::apply_mat(const MatMorphism& m) const {
    MatMorphism r = zero_mat(*target, apply_obj(m.source), apply_obj(m.target));
    for (size_t i = 0; i < m.target.size(); ++i)
        for (size_t j = 0; j < m.source.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) =
                apply_elem(m.source[j], m.target[i], m.at(static_cast<int>(i), static_cast<int>(j)));
    return r;
}

AddFunctor identity_functor(const AddCat& c) {
    AddFunctor f;
    f.source = &c;
    f.target = &c;
    int n = c.num_objects();
    f.object_map.resize(n);
    for (int i = 0; i < n; ++i) f.object_map[i] = i;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) f.hom_maps.push_back(AbHom::identity(c.hom(x, y)));
    return f;
}

ValidationReport validate_functor(const AddFunctor& f) {
    ValidationReport rep;
    const AddCat& s = *f.source;
    const AddCat& t = *f.target;
    int n = s.num_objects();
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({axiom, detail});
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const AbHom& h = f.hom_map(x, y);
            if (h.source != s.hom(x, y) || h.target != t.hom(f.object_map[x], f.object_map[y]) ||
                !h.valid()) {
                fail("shape", "hom map (" + s.objects[x] + "," + s.objects[y] + ") invalid");
                return rep;
            }
        }
    for (int x = 0; x < n; ++x) {
        GroupElement img = f.apply_elem(x, x, s.identity(x));
        int fx = f.object_map[x];
        if (!t.hom(fx, fx).is_zero_elem(elem_sub(t.hom(fx, fx), img, t.identity(fx))))
            fail("unit", "identity of " + s.objects[x] + " is not preserved");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const FpAbGroup& gyz = s.hom(y, z);
                const FpAbGroup& gxy = s.hom(x, y);
                for (int p = 0; p < gyz.num_generators(); ++p)
                    for (int q = 0; q < gxy.num_generators(); ++q) {
                        GroupElement g(gyz.num_generators()), h(gxy.num_generators());
                        g[p] = 1;
                        h[q] = 1;
                        GroupElement a = f.apply_elem(x, z, s.compose_elems(x, y, z, g, h));
                        GroupElement b = t.compose_elems(f.object_map[x], f.object_map[y],
                                                         f.object_map[z], f.apply_elem(y, z, g),
                                                         f.apply_elem(x, y, h));
                        const FpAbGroup& out = t.hom(f.object_map[x], f.object_map[z]);
                        if (!out.is_zero_elem(elem_sub(out, a, b)))
                            fail("functoriality", "composite of gens (" + std::to_string(p) + "," +
                                                      std::to_string(q) + ") at (" + s.objects[x] +
                                                      "," + s.objects[y] + "," + s.objects[z] +
                                                      ") not preserved");
                    }
            }
    rep.ok = rep.issues.empty();
    return rep;
}

AddFunctor compose_functors(const AddFunctor& outer, const AddFunctor& inner) {
    if (inner.target != outer.source)
        throw std::invalid_argument("compose_functors: source/target mismatch");
    AddFunctor f;
    f.source = inner.source;
    f.target = outer.target;
    int n = inner.source->num_objects();
    for (int x = 0; x < n; ++x) f.object_map.push_back(outer.object_map[inner.object_map[x]]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            f.hom_maps.push_back(outer.hom_map(inner.object_map[x], inner.object_map[y])
                                     .compose(inner.hom_map(x, y)));
    return f;
}

std::vector<MatObject> enumerate_mat_objects(const AddCat& c, int min_size, int max_size) {
    std::vector<MatObject> out;
    int n = c.num_objects();
    for (int size = min_size; size <= max_size; ++size) {
        // nondecreasing index tuples of the given length
        MatObject cur(size, 0);
        if (size == 0) {
            out.push_back(cur);
            continue;
        }
        if (n == 0) continue;
        for (;;) {
            out.push_back(cur);
            int i = size - 1;
            while (i >= 0 && cur[i] == n - 1) --i;
            if (i < 0) break;
            int v = cur[i] + 1;
            for (int j = i; j < size; ++j) cur[j] = v;
        }
    }
    return out;
}

std::optional<std::vector<std::vector<Int>>> enumerate_lattice_subgroup(
    const std::vector<Int>& orders, const IntMatrix& lattice, long cap) {
    int n = static_cast<int>(orders.size());
    std::vector<GroupElement> gens;
    FpAbGroup ambient;  // raw (possibly non-canonical) shape: reuse reduce via factors
    ambient.factors = orders;
    for (int j = 0; j < lattice.cols; ++j) gens.push_back(ambient.reduce(lattice.col(j)));
    // present the subgroup abstractly, then enumerate and push forward
    IntMatrix gm(n, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j)
        for (int i = 0; i < n; ++i) gm.at(i, static_cast<int>(j)) = gens[j][i];
    IntMatrix rel = kernel_mod(gm, orders);
    Presentation p = present(static_cast<int>(gens.size()), rel);
    auto elems = enumerate_elements(p.group, cap);
    if (!elems) return std::nullopt;
    std::vector<std::vector<Int>> out;
    out.reserve(elems->size());
    for (const GroupElement& e : *elems) {
        std::vector<Int> z = p.from_group.apply(e);
        out.push_back(ambient.reduce(gm.apply(z)));
    }
    // deduplicate (distinct abstract elements map to distinct ambient ones,
    // but keep this robust)
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RetractSearchResult find_retraction(const AddCat& c, const MatObject& x, const MatObject& y,
                                    const MatMorphism* e, long cap) {
    RetractSearchResult res;
    FlatHom fs = flat_hom(c, y, x);  // s : y -> x
    FlatHom fr = flat_hom(c, x, y);  // r : x -> y
    FlatHom endx = flat_hom(c, x, x);
    FlatHom endy = flat_hom(c, y, y);
    // candidate sections: all of Hom(y,x), or the subgroup killed by (e.s - s)
    IntMatrix lattice;
    if (e) {
        IntMatrix le = left_compose_matrix(c, *e, y);  // s -> e.s
        for (int i = 0; i < fs.dim(); ++i) le.at(i, i) -= 1;
        lattice = kernel_mod(le, fs.orders);
    } else {
        lattice = IntMatrix::identity(fs.dim());
    }
    auto sections = enumerate_lattice_subgroup(fs.orders, lattice, cap);
    if (!sections) {
        // infinite candidate subgroup: try lattice combinations of bounded
        // height; absence is then not certified
        res.capped = true;
        const int height = 2;
        int k = lattice.cols;
        double total = 1;
        for (int i = 0; i < k; ++i) total *= 2 * height + 1;
        if (total > static_cast<double>(cap)) return res;
        sections.emplace();
        std::vector<Int> t(k, -height);
        FpAbGroup raw;
        raw.factors = fs.orders;
        for (;;) {
            sections->push_back(raw.reduce(lattice.apply(t)));
            int i = 0;
            while (i < k && t[i] == height) t[i++] = -height;
            if (i == k) break;
            t[i] += 1;
        }
        std::sort(sections->begin(), sections->end());
        sections->erase(std::unique(sections->begin(), sections->end()), sections->end());
    }
    for (const auto& scoords : *sections) {
        MatMorphism s = unflatten(c, fs, scoords);
        // solve for r: r.s = id_y, and s.r = e when e is present
        IntMatrix rs = right_compose_matrix(c, s, y);  // r -> r.s in End(y)
        IntMatrix sys = rs;
        std::vector<Int> orders = endy.orders;
        std::vector<Int> b = flatten(c, endy, identity_mat(c, y));
        if (e) {
            IntMatrix sr = left_compose_matrix(c, s, x);  // r -> s.r in End(x)
            sys = sys.vstack(sr);
            orders.insert(orders.end(), endx.orders.begin(), endx.orders.end());
            std::vector<Int> be = flatten(c, endx, *e);
            b.insert(b.end(), be.begin(), be.end());
        }
        auto sol = solve_mod(sys, orders, b);
        if (sol) {
            res.found = true;
            res.capped = false;
            res.s = s;
            res.r = unflatten(c, fr, *sol);
            return res;
        }
    }
    return res;
}

bool objects_isomorphic(const AddCat& c, int x, int y, long cap, bool* capped) {
    if (capped) *capped = false;
    if (x == y) return true;
    MatObject mx{x}, my{y};
    MatMorphism idx = identity_mat(c, mx);
    RetractSearchResult r = find_retraction(c, mx, my, &idx, cap);
    if (r.found) return true;
    if (r.capped && capped) *capped = true;
    return false;
}

}  // namespace addcat
