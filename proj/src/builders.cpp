#include "addcat/builders.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace addcat {

namespace {

// Hom(Z/a, Z/b) is cyclic of the returned order, generated by multiplication
// by the returned multiplier. Order 0 means infinite cyclic; order 1 trivial.
std::pair<Int, Int> cyclic_hom(const Int& a, const Int& b) {
    if (a == 0) return {b, 1};
    if (b == 0) return {1, 0};
    Int g = gcd(a, b);
    return {g, b / g};
}

}  // namespace

AddCat cyclic_groups_category(const std::vector<Int>& orders,
                              const std::vector<std::string>& labels) {
    int n = static_cast<int>(orders.size());
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        if (i < static_cast<int>(labels.size())) {
            names.push_back(labels[i]);
        } else {
            names.push_back(orders[i] == 0 ? "Z" : "Z/" + orders[i].get_str());
        }
    }
    AddCat c = AddCat::with_shape(names);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            c.hom_mut(x, y) = FpAbGroup::cyclic(cyclic_hom(orders[x], orders[y]).first);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int rows = c.hom(x, z).num_generators();
                int cols = c.hom(y, z).num_generators() * c.hom(x, y).num_generators();
                IntMatrix t(rows, cols);
                if (rows == 1 && cols == 1) {
                    auto [oc, mc] = cyclic_hom(orders[x], orders[z]);
                    Int prod = cyclic_hom(orders[y], orders[z]).second *
                               cyclic_hom(orders[x], orders[y]).second;
                    if (oc > 0) prod %= orders[z];
                    // the composite is a well-defined map, so mc divides prod
                    t.at(0, 0) = prod / mc;
                    if (oc > 0) t.at(0, 0) %= oc;
                }
                c.comp_table_mut(x, y, z) = t;
            }
    for (int x = 0; x < n; ++x) {
        GroupElement id(c.hom(x, x).num_generators());
        if (!id.empty()) id[0] = 1;
        c.identities[x] = id;
    }
    return c;
}

GroupElement Ring::times(const GroupElement& x, const GroupElement& y) const {
    int n = add.num_generators();
    GroupElement r(n);
    for (int p = 0; p < n; ++p) {
        if (x[p] == 0) continue;
        for (int q = 0; q < n; ++q) {
            if (y[q] == 0) continue;
            Int c = x[p] * y[q];
            for (int i = 0; i < n; ++i) r[i] += c * mul.at(i, p * n + q);
        }
    }
    return add.reduce(r);
}

Ring ring_cyclic(const Int& n) {
    Ring r;
    r.name = n == 0 ? "Z" : "Z/" + n.get_str();
    r.add = FpAbGroup::cyclic(n);
    int m = r.add.num_generators();
    r.mul = IntMatrix(m, m * m);
    r.one = GroupElement(m);
    if (m == 1) {
        r.mul.at(0, 0) = 1;
        r.one[0] = 1;
    }
    return r;
}

Ring ring_f4() {
    Ring r;
    r.name = "F4";
    r.add = FpAbGroup::from_cyclic_orders({2, 2});
    r.mul = IntMatrix(2, 4);
    // generators 1 and w with w^2 = 1 + w
    r.mul.at(0, 0) = 1;            // 1 * 1
    r.mul.at(1, 1) = 1;            // 1 * w
    r.mul.at(1, 2) = 1;            // w * 1
    r.mul.at(0, 3) = 1;            // w * w
    r.mul.at(1, 3) = 1;
    r.one = {1, 0};
    return r;
}

namespace {

// Ring structure on a direct sum of copies of component groups, given the
// raw blockwise multiplication. Canonicalizes coordinates through the sum.
Ring ring_from_blocks(std::string name, const std::vector<FpAbGroup>& blocks,
                      const std::function<GroupElement(const std::vector<GroupElement>&,
                                                       const std::vector<GroupElement>&)>& rawmul,
                      const GroupElement& raw_one) {
    DirectSumResult ds = direct_sum_groups(blocks);
    int n = ds.group.num_generators();
    int raw_dim = 0;
    for (const FpAbGroup& b : blocks) raw_dim += b.num_generators();
    auto split = [&](const std::vector<Int>& raw) {
        std::vector<GroupElement> parts;
        int off = 0;
        for (const FpAbGroup& b : blocks) {
            GroupElement p(raw.begin() + off, raw.begin() + off + b.num_generators());
            parts.push_back(b.reduce(p));
            off += b.num_generators();
        }
        return parts;
    };
    Ring r;
    r.name = std::move(name);
    r.add = ds.group;
    r.mul = IntMatrix(n, n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            GroupElement xp = ds.group.zero(), xq = ds.group.zero();
            xp[p] = 1;
            xq[q] = 1;
            GroupElement raw =
                rawmul(split(ds.from_group.apply(xp)), split(ds.from_group.apply(xq)));
            GroupElement img = ds.group.reduce(ds.to_group.apply(raw));
            for (int i = 0; i < n; ++i) r.mul.at(i, p * n + q) = img[i];
        }
    (void)raw_dim;
    r.one = ds.group.reduce(ds.to_group.apply(raw_one));
    return r;
}

GroupElement concat_raw(const std::vector<GroupElement>& parts) {
    GroupElement out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

Ring ring_product(const Ring& a, const Ring& b) {
    auto rawmul = [&a, &b](const std::vector<GroupElement>& x, const std::vector<GroupElement>& y) {
        return concat_raw({a.times(x[0], y[0]), b.times(x[1], y[1])});
    };
    GroupElement one = concat_raw({a.one, b.one});
    return ring_from_blocks(a.name + "x" + b.name, {a.add, b.add}, rawmul, one);
}

Ring ring_truncated_poly(const Ring& base, int k) {
    if (k < 1) throw std::invalid_argument("ring_truncated_poly: k must be positive");
    std::vector<FpAbGroup> blocks(k, base.add);
    auto rawmul = [&base, k](const std::vector<GroupElement>& x,
                             const std::vector<GroupElement>& y) {
        std::vector<GroupElement> out(k, base.add.zero());
        for (int i = 0; i < k; ++i)
            for (int j = 0; i + j < k; ++j)
                out[i + j] = elem_add(base.add, out[i + j], base.times(x[i], y[j]));
        return concat_raw(out);
    };
    std::vector<GroupElement> one(k, base.add.zero());
    one[0] = base.one;
    std::ostringstream nm;
    nm << base.name << "[x]/(x^" << k << ")";
    return ring_from_blocks(nm.str(), blocks, rawmul, concat_raw(one));
}

Ring ring_upper_triangular(const Ring& base, int n) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pos.emplace_back(i, j);
    int m = static_cast<int>(pos.size());
    std::vector<FpAbGroup> blocks(m, base.add);
    auto rawmul = [&base, &pos, m](const std::vector<GroupElement>& x,
                                   const std::vector<GroupElement>& y) {
        std::vector<GroupElement> out(m, base.add.zero());
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                if (pos[a].second != pos[b].first) continue;
                for (int c = 0; c < m; ++c)
                    if (pos[c] == std::make_pair(pos[a].first, pos[b].second))
                        out[c] = elem_add(base.add, out[c], base.times(x[a], y[b]));
            }
        return concat_raw(out);
    };
    std::vector<GroupElement> one(m, base.add.zero());
    for (int a = 0; a < m; ++a)
        if (pos[a].first == pos[a].second) one[a] = base.one;
    std::ostringstream nm;
    nm << "UT" << n << "(" << base.name << ")";
    return ring_from_blocks(nm.str(), blocks, rawmul, concat_raw(one));
}

AddCat ring_category(const Ring& r) {
    AddCat c = AddCat::with_shape({r.name});
    c.hom_mut(0, 0) = r.add;
    c.comp_table_mut(0, 0, 0) = r.mul;
    c.identities[0] = r.one;
    return c;
}

AddCat full_subcategory(const AddCat& a, const std::vector<int>& objs) {
    std::vector<std::string> labels;
    for (int o : objs) labels.push_back(a.objects[o]);
    AddCat c = AddCat::with_shape(std::move(labels));
    int m = c.num_objects();
    for (int x = 0; x < m; ++x) {
        c.identities[x] = a.identity(objs[x]);
        for (int y = 0; y < m; ++y) {
            c.hom_mut(x, y) = a.hom(objs[x], objs[y]);
            for (int z = 0; z < m; ++z)
                c.comp_table_mut(x, y, z) = a.comp_table(objs[x], objs[y], objs[z]);
        }
    }
    return c;
}

AddFunctor inclusion_functor(const AddCat& sub, const AddCat& a, const std::vector<int>& objs) {
    AddFunctor f;
    f.source = &sub;
    f.target = &a;
    f.object_map = objs;
    int m = sub.num_objects();
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            f.hom_maps.push_back(AbHom{sub.hom(x, y), a.hom(objs[x], objs[y]),
                                       IntMatrix::identity(sub.hom(x, y).num_generators())});
    return f;
}

AddFunctor ring_functor(const AddCat& src, const AddCat& dst, const IntMatrix& mat) {
    AddFunctor f;
    f.source = &src;
    f.target = &dst;
    f.object_map = {0};
    f.hom_maps = {AbHom{src.hom(0, 0), dst.hom(0, 0), mat}};
    return f;
}

IntMatrix cyclic_reduction_matrix() {
    IntMatrix m(1, 1);
    m.at(0, 0) = 1;
    return m;
}

IntMatrix truncated_poly_augmentation(const Ring& base, int k) {
    DirectSumResult ds = direct_sum_groups(std::vector<FpAbGroup>(k, base.add));
    int nb = base.add.num_generators();
    IntMatrix pr(nb, nb * k);
    for (int i = 0; i < nb; ++i) pr.at(i, i) = 1;
    return pr.mul(ds.from_group);
}

}  // namespace addcat
