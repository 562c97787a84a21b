#include "addcat/zlin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace addcat {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    int n = static_cast<int>(d.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols)
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    std::vector<Int> r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * x[j];
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows != o.rows && cols != 0 && o.cols != 0)
        throw std::invalid_argument("hstack: row mismatch");
    int r = std::max(rows, o.rows);
    IntMatrix m(r, cols + o.cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows; ++i)
        for (int j = 0; j < o.cols; ++j) m.at(i, cols + j) = o.at(i, j);
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols != o.cols && rows != 0 && o.rows != 0)
        throw std::invalid_argument("vstack: col mismatch");
    int c = std::max(cols, o.cols);
    IntMatrix m(rows + o.rows, c);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows; ++i)
        for (int j = 0; j < o.cols; ++j) m.at(rows + i, j) = o.at(i, j);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

std::vector<Int> IntMatrix::col(int j) const {
    std::vector<Int> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

std::vector<Int> SnfResult::diag() const {
    int n = std::min(d.rows, d.cols);
    std::vector<Int> r(n);
    for (int i = 0; i < n; ++i) r[i] = d.at(i, i);
    return r;
}

int SnfResult::rank() const {
    int r = 0;
    for (const Int& x : diag())
        if (x != 0) ++r;
    return r;
}

namespace {

struct SnfWork {
    IntMatrix d, u, v, ui, vi;

    // rows (t,i) <- [[x,y],[z,w]] . rows (t,i), with xw - yz = 1
    void row_pair(int t, int i, const Int& x, const Int& y, const Int& z, const Int& w) {
        for (int j = 0; j < d.cols; ++j) {
            Int a = d.at(t, j), b = d.at(i, j);
            d.at(t, j) = x * a + y * b;
            d.at(i, j) = z * a + w * b;
        }
        for (int j = 0; j < u.cols; ++j) {
            Int a = u.at(t, j), b = u.at(i, j);
            u.at(t, j) = x * a + y * b;
            u.at(i, j) = z * a + w * b;
        }
        for (int k = 0; k < ui.rows; ++k) {
            Int a = ui.at(k, t), b = ui.at(k, i);
            ui.at(k, t) = w * a - z * b;
            ui.at(k, i) = -y * a + x * b;
        }
    }
    // cols (t,j) <- cols (t,j) . [[x,z],[y,w]]^T form: new C_t = x C_t + y C_j,
    // new C_j = z C_t + w C_j, with xw - yz = 1
    void col_pair(int t, int j, const Int& x, const Int& y, const Int& z, const Int& w) {
        for (int i = 0; i < d.rows; ++i) {
            Int a = d.at(i, t), b = d.at(i, j);
            d.at(i, t) = x * a + y * b;
            d.at(i, j) = z * a + w * b;
        }
        for (int i = 0; i < v.rows; ++i) {
            Int a = v.at(i, t), b = v.at(i, j);
            v.at(i, t) = x * a + y * b;
            v.at(i, j) = z * a + w * b;
        }
        for (int k = 0; k < vi.cols; ++k) {
            Int a = vi.at(t, k), b = vi.at(j, k);
            vi.at(t, k) = w * a - z * b;
            vi.at(j, k) = -y * a + x * b;
        }
    }
    void row_swap(int i, int t) {
        if (i == t) return;
        row_pair(t, i, 0, 1, -1, 0);
    }
    void col_swap(int j, int t) {
        if (j == t) return;
        col_pair(t, j, 0, 1, -1, 0);
    }
    void row_negate(int i) {
        for (int j = 0; j < d.cols; ++j) d.at(i, j) = -d.at(i, j);
        for (int j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
        for (int k = 0; k < ui.rows; ++k) ui.at(k, i) = -ui.at(k, i);
    }

    // zero d(i,t) using an extended-gcd combination of rows t and i
    void clear_row_entry(int t, int i) {
        Int a = d.at(t, t), b = d.at(i, t);
        if (b == 0) return;
        if (a != 0 && b % a == 0) {
            Int q = b / a;
            row_pair(t, i, 1, 0, -q, 1);
            return;
        }
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        row_pair(t, i, x, y, -b / g, a / g);
    }
    void clear_col_entry(int t, int j) {
        Int a = d.at(t, t), b = d.at(t, j);
        if (b == 0) return;
        if (a != 0 && b % a == 0) {
            Int q = b / a;
            col_pair(t, j, 1, 0, -q, 1);
            return;
        }
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        col_pair(t, j, x, y, -b / g, a / g);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols),
              IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
    int lim = std::min(m.rows, m.cols);
    for (int t = 0; t < lim; ++t) {
        for (;;) {
            // move the minimal nonzero entry of the submatrix to the pivot
            int pi = -1, pj = -1;
            for (int i = t; i < m.rows; ++i)
                for (int j = t; j < m.cols; ++j) {
                    const Int& x = w.d.at(i, j);
                    if (x == 0) continue;
                    if (pi < 0 || cmp(abs(x), abs(w.d.at(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // submatrix is zero
            w.row_swap(pi, t);
            w.col_swap(pj, t);
            for (int i = t + 1; i < m.rows; ++i) w.clear_row_entry(t, i);
            for (int j = t + 1; j < m.cols; ++j) w.clear_col_entry(t, j);
            // column clearing may have re-dirtied the column
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i)
                if (w.d.at(i, t) != 0) clean = false;
            for (int j = t + 1; j < m.cols; ++j)
                if (w.d.at(t, j) != 0) clean = false;
            if (!clean) continue;
            // divisibility chain: pivot must divide the rest
            int bi = -1;
            for (int i = t + 1; i < m.rows && bi < 0; ++i)
                for (int j = t + 1; j < m.cols; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            w.row_pair(t, bi, 1, 1, 0, 1);  // R_t += R_bi, then redo
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }
done:
    return SnfResult{w.u, w.d, w.v, w.ui, w.vi};
}

Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    if (m.rows == 0) return 1;
    // fraction-free Gaussian elimination (Bareiss)
    IntMatrix a = m;
    int n = m.rows;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SnfResult s = smith_normal_form(m);
    std::vector<Int> y = s.u.apply(b);
    std::vector<Int> diag = s.diag();
    std::vector<Int> w(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        Int d = (i < static_cast<int>(diag.size())) ? diag[i] : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            if (i < m.cols) w[i] = y[i] / d;
        }
    }
    return s.v.apply(w);
}

IntMatrix integer_kernel(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    std::vector<Int> diag = s.diag();
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols; ++j) {
        Int d = (j < static_cast<int>(diag.size())) ? diag[j] : Int(0);
        if (d == 0) free_cols.push_back(j);
    }
    IntMatrix k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t c = 0; c < free_cols.size(); ++c)
        for (int i = 0; i < m.cols; ++i) k.at(i, static_cast<int>(c)) = s.v.at(i, free_cols[c]);
    return k;
}

namespace {

// [m | relation columns of the target]
IntMatrix with_target_relations(const IntMatrix& m, const std::vector<Int>& target_orders) {
    if (static_cast<int>(target_orders.size()) != m.rows)
        throw std::invalid_argument("target_orders size mismatch");
    int extra = 0;
    for (const Int& d : target_orders)
        if (d != 0) ++extra;
    IntMatrix r(m.rows, m.cols + extra);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
    int c = m.cols;
    for (int i = 0; i < m.rows; ++i)
        if (target_orders[i] != 0) r.at(i, c++) = target_orders[i];
    return r;
}

}  // namespace

std::optional<std::vector<Int>> solve_mod(const IntMatrix& m, const std::vector<Int>& target_orders,
                                          const std::vector<Int>& b) {
    IntMatrix ext = with_target_relations(m, target_orders);
    auto sol = solve_integer(ext, b);
    if (!sol) return std::nullopt;
    sol->resize(m.cols);
    return sol;
}

IntMatrix kernel_mod(const IntMatrix& m, const std::vector<Int>& target_orders) {
    IntMatrix ext = with_target_relations(m, target_orders);
    IntMatrix k = integer_kernel(ext);
    IntMatrix r(m.cols, k.cols);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < k.cols; ++j) r.at(i, j) = k.at(i, j);
    return r;
}

FpAbGroup FpAbGroup::cyclic(const Int& n) { return from_cyclic_orders({n}); }

FpAbGroup FpAbGroup::free_of_rank(int r) {
    FpAbGroup g;
    g.factors.assign(r, 0);
    return g;
}

FpAbGroup FpAbGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    for (const Int& d : orders)
        if (d < 0) throw std::invalid_argument("negative cyclic order");
    return present(static_cast<int>(orders.size()), IntMatrix::diagonal(orders)).group;
}

bool FpAbGroup::is_finite() const {
    for (const Int& d : factors)
        if (d == 0) return false;
    return true;
}

Int FpAbGroup::order() const {
    Int o = 1;
    for (const Int& d : factors) {
        if (d == 0) return 0;
        o *= d;
    }
    return o;
}

int FpAbGroup::free_rank() const {
    int r = 0;
    for (const Int& d : factors)
        if (d == 0) ++r;
    return r;
}

std::vector<Int> FpAbGroup::reduce(std::vector<Int> coords) const {
    if (coords.size() != factors.size())
        throw std::invalid_argument("reduce: coordinate size mismatch");
    for (size_t i = 0; i < coords.size(); ++i) {
        if (factors[i] != 0) {
            coords[i] %= factors[i];
            if (coords[i] < 0) coords[i] += factors[i];
        }
    }
    return coords;
}

bool FpAbGroup::is_zero_elem(const std::vector<Int>& coords) const {
    std::vector<Int> r = reduce(coords);
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

std::string FpAbGroup::to_string() const {
    if (factors.empty()) return "0";
    std::ostringstream os;
    int free = 0;
    bool first = true;
    for (const Int& d : factors) {
        if (d == 0) {
            ++free;
            continue;
        }
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (free > 0) {
        if (!first) os << " + ";
        os << "Z";
        if (free > 1) os << "^" << free;
    }
    return os.str();
}

GroupElement elem_add(const FpAbGroup& g, const GroupElement& x, const GroupElement& y) {
    GroupElement r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return g.reduce(r);
}

GroupElement elem_sub(const FpAbGroup& g, const GroupElement& x, const GroupElement& y) {
    GroupElement r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return g.reduce(r);
}

GroupElement elem_neg(const FpAbGroup& g, const GroupElement& x) {
    GroupElement r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return g.reduce(r);
}

GroupElement elem_scale(const FpAbGroup& g, const Int& k, const GroupElement& x) {
    GroupElement r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = k * x[i];
    return g.reduce(r);
}

std::optional<std::vector<std::vector<Int>>> enumerate_orders(const std::vector<Int>& orders,
                                                              long cap) {
    Int total = 1;
    for (const Int& d : orders) {
        if (d == 0) return std::nullopt;
        total *= d;
        if (cmp(total, cap) > 0) return std::nullopt;
    }
    std::vector<std::vector<Int>> out;
    out.reserve(total.get_ui());
    std::vector<Int> cur(orders.size());
    for (;;) {
        out.push_back(cur);
        size_t i = 0;
        while (i < orders.size()) {
            cur[i] += 1;
            if (cur[i] < orders[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == orders.size()) break;
    }
    return out;
}

std::optional<std::vector<GroupElement>> enumerate_elements(const FpAbGroup& g, long cap) {
    return enumerate_orders(g.factors, cap);
}

Presentation present(int n_gens, const IntMatrix& relations) {
    IntMatrix rel = relations;
    if (rel.rows == 0 && rel.cols == 0) rel = IntMatrix(n_gens, 0);
    if (rel.rows != n_gens) throw std::invalid_argument("present: relation rows != generators");
    SnfResult s = smith_normal_form(rel);
    std::vector<Int> diag = s.diag();
    std::vector<int> kept;
    std::vector<Int> kept_factors;
    for (int i = 0; i < n_gens; ++i) {
        Int d = (i < static_cast<int>(diag.size())) ? diag[i] : Int(0);
        if (d == 1) continue;
        kept.push_back(i);
        kept_factors.push_back(d);
    }
    // SNF yields nonzero factors in divisibility order followed by zeros;
    // trailing generators beyond the diagonal are free and already last.
    Presentation p;
    p.group.factors = kept_factors;
    p.to_group = IntMatrix(static_cast<int>(kept.size()), n_gens);
    p.from_group = IntMatrix(n_gens, static_cast<int>(kept.size()));
    for (size_t k = 0; k < kept.size(); ++k) {
        for (int j = 0; j < n_gens; ++j) {
            Int e = s.u.at(kept[k], j);
            if (kept_factors[k] != 0) {
                e %= kept_factors[k];
                if (e < 0) e += kept_factors[k];
            }
            p.to_group.at(static_cast<int>(k), j) = e;
            p.from_group.at(j, static_cast<int>(k)) = s.u_inv.at(j, kept[k]);
        }
    }
    return p;
}

AbHom AbHom::identity(const FpAbGroup& g) {
    return AbHom{g, g, IntMatrix::identity(g.num_generators())};
}

AbHom AbHom::zero(const FpAbGroup& s, const FpAbGroup& t) {
    return AbHom{s, t, IntMatrix(t.num_generators(), s.num_generators())};
}

bool AbHom::valid() const {
    if (mat.rows != target.num_generators() || mat.cols != source.num_generators()) return false;
    for (int j = 0; j < mat.cols; ++j) {
        const Int& d = source.factors[j];
        if (d == 0) continue;
        GroupElement c(mat.rows);
        for (int i = 0; i < mat.rows; ++i) c[i] = d * mat.at(i, j);
        if (!target.is_zero_elem(c)) return false;
    }
    return true;
}

GroupElement AbHom::apply(const GroupElement& x) const { return target.reduce(mat.apply(x)); }

AbHom AbHom::compose(const AbHom& inner) const {
    if (inner.target != source) throw std::invalid_argument("AbHom::compose: mismatch");
    return AbHom{inner.source, target, mat.mul(inner.mat)};
}

AbHom AbHom::add(const AbHom& o) const {
    AbHom r = *this;
    for (size_t i = 0; i < r.mat.a.size(); ++i) r.mat.a[i] += o.mat.a[i];
    return r;
}

AbHom AbHom::negate() const {
    AbHom r = *this;
    for (Int& x : r.mat.a) x = -x;
    return r;
}

std::optional<GroupElement> AbHom::preimage(const GroupElement& y) const {
    // solve mat x = y modulo target relations, with x free modulo source
    // relations (any integral solution reduces to a valid source element)
    auto sol = solve_mod(mat, target.factors, y);
    if (!sol) return std::nullopt;
    return source.reduce(*sol);
}

std::pair<FpAbGroup, AbHom> AbHom::kernel() const {
    IntMatrix lat = kernel_mod(mat, target.factors);
    // include the source relations: they always map to zero
    std::vector<GroupElement> gens;
    for (int j = 0; j < lat.cols; ++j) gens.push_back(source.reduce(lat.col(j)));
    return subgroup_from_generators(source, gens);
}

std::pair<FpAbGroup, AbHom> AbHom::cokernel() const {
    int n = target.num_generators();
    IntMatrix rel = mat.hstack(IntMatrix::diagonal(target.factors));
    if (mat.cols == 0) rel = IntMatrix::diagonal(target.factors);
    if (rel.rows == 0) rel = IntMatrix(n, 0);
    Presentation p = present(n, rel);
    return {p.group, AbHom{target, p.group, p.to_group}};
}

bool AbHom::is_surjective() const { return cokernel().first.is_trivial(); }

bool AbHom::is_injective() const { return kernel().first.is_trivial(); }

std::optional<AbHom> AbHom::inverse() const {
    // an inverse hom exists iff every target generator has a preimage and the
    // resulting candidate is a two-sided inverse
    AbHom inv{target, source, IntMatrix(source.num_generators(), target.num_generators())};
    for (int j = 0; j < target.num_generators(); ++j) {
        GroupElement e(target.num_generators());
        e[j] = 1;
        auto pre = preimage(e);
        if (!pre) return std::nullopt;
        for (int i = 0; i < source.num_generators(); ++i) inv.mat.at(i, j) = (*pre)[i];
    }
    if (!inv.valid()) return std::nullopt;
    if (!inv.compose(*this).equal(AbHom::identity(source))) return std::nullopt;
    if (!compose(inv).equal(AbHom::identity(target))) return std::nullopt;
    return inv;
}

bool AbHom::equal(const AbHom& o) const {
    if (source != o.source || target != o.target) return false;
    for (int j = 0; j < mat.cols; ++j) {
        GroupElement d(mat.rows);
        for (int i = 0; i < mat.rows; ++i) d[i] = mat.at(i, j) - o.mat.at(i, j);
        if (!target.is_zero_elem(d)) return false;
    }
    return true;
}

std::pair<FpAbGroup, AbHom> cokernel_presentation(const AbHom& m) { return m.cokernel(); }

std::pair<FpAbGroup, AbHom> subgroup_from_generators(const FpAbGroup& g,
                                                     const std::vector<GroupElement>& gens) {
    int m = static_cast<int>(gens.size());
    int n = g.num_generators();
    IntMatrix gm(n, m);
    for (int j = 0; j < m; ++j) {
        if (static_cast<int>(gens[j].size()) != n)
            throw std::invalid_argument("subgroup generator has wrong size");
        for (int i = 0; i < n; ++i) gm.at(i, j) = gens[j][i];
    }
    // relations among the generators: combinations mapping to zero in g
    IntMatrix rel = kernel_mod(gm, g.factors);
    Presentation p = present(m, rel);
    // inclusion: lift each subgroup generator to Z^m, push through gm
    IntMatrix incl = gm.mul(p.from_group);
    AbHom inc{p.group, g, incl};
    for (int j = 0; j < incl.cols; ++j) {
        GroupElement c = g.reduce(incl.col(j));
        for (int i = 0; i < incl.rows; ++i) inc.mat.at(i, j) = c[i];
    }
    return {p.group, inc};
}

bool subgroup_contains(const FpAbGroup& g, const std::vector<GroupElement>& gens,
                       const GroupElement& x) {
    int m = static_cast<int>(gens.size());
    int n = g.num_generators();
    IntMatrix gm(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) gm.at(i, j) = gens[j][i];
    return solve_mod(gm, g.factors, x).has_value();
}

TensorResult group_tensor(const FpAbGroup& a, const FpAbGroup& b) {
    int na = a.num_generators(), nb = b.num_generators();
    std::vector<Int> orders;
    orders.reserve(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) orders.push_back(gcd(a.factors[i], b.factors[j]));
    Presentation p = present(static_cast<int>(orders.size()), IntMatrix::diagonal(orders));
    return TensorResult{p.group, p.to_group};
}

GroupElement tensor_pair(const TensorResult& t, const FpAbGroup& a, const FpAbGroup& b,
                         const GroupElement& x, const GroupElement& y) {
    int na = a.num_generators(), nb = b.num_generators();
    std::vector<Int> pair(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) pair[static_cast<size_t>(i) * nb + j] = x[i] * y[j];
    return t.group.reduce(t.pair_to_group.apply(pair));
}

DirectSumResult direct_sum_groups(const std::vector<FpAbGroup>& parts) {
    std::vector<Int> orders;
    for (const FpAbGroup& g : parts)
        for (const Int& d : g.factors) orders.push_back(d);
    Presentation p = present(static_cast<int>(orders.size()), IntMatrix::diagonal(orders));
    return DirectSumResult{p.group, p.to_group, p.from_group};
}

}  // namespace addcat
