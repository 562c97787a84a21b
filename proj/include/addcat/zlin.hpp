#ifndef ADDCAT_ZLIN_HPP
#define ADDCAT_ZLIN_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace addcat {

using Int = mpz_class;

/// Dense integer matrix, row-major, arbitrary precision.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    IntMatrix mul(const IntMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;
    IntMatrix hstack(const IntMatrix& o) const;
    IntMatrix vstack(const IntMatrix& o) const;
    IntMatrix transpose() const;
    std::vector<Int> col(int j) const;
    bool is_zero() const;

    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// u * m * v = d with u, v unimodular and d diagonal with a divisibility chain.
struct SnfResult {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    std::vector<Int> diag() const;
    int rank() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

Int det(const IntMatrix& m);

/// Solve m x = b over the integers; nullopt if no solution.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

/// Basis of the integer kernel lattice of m, as columns.
IntMatrix integer_kernel(const IntMatrix& m);

/// Solve m x = b modulo the subgroup spanned by order_i * e_i on the target
/// (order 0 means the coordinate is free, i.e. contributes no relation).
std::optional<std::vector<Int>> solve_mod(const IntMatrix& m,
                                          const std::vector<Int>& target_orders,
                                          const std::vector<Int>& b);

/// Generators (columns) of the lattice of x with m x = 0 modulo target_orders.
IntMatrix kernel_mod(const IntMatrix& m, const std::vector<Int>& target_orders);

/// Finitely generated abelian group in canonical invariant-factor form.
/// Nonzero factors d satisfy d > 1 and d_i | d_{i+1}; zero factors (free Z
/// summands) come last. Equality of factor lists is group isomorphism.
struct FpAbGroup {
    std::vector<Int> factors;

    static FpAbGroup trivial() { return FpAbGroup{}; }
    static FpAbGroup cyclic(const Int& n);
    static FpAbGroup free_of_rank(int r);
    /// Canonicalize an arbitrary list of cyclic orders (0 = infinite).
    static FpAbGroup from_cyclic_orders(const std::vector<Int>& orders);

    int num_generators() const { return static_cast<int>(factors.size()); }
    bool is_trivial() const { return factors.empty(); }
    bool is_finite() const;
    Int order() const;  // 0 if infinite
    int free_rank() const;

    std::vector<Int> reduce(std::vector<Int> coords) const;
    std::vector<Int> zero() const { return std::vector<Int>(factors.size()); }
    bool is_zero_elem(const std::vector<Int>& coords) const;

    std::string to_string() const;

    bool operator==(const FpAbGroup& o) const { return factors == o.factors; }
    bool operator!=(const FpAbGroup& o) const { return !(*this == o); }
};

using GroupElement = std::vector<Int>;

GroupElement elem_add(const FpAbGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement elem_sub(const FpAbGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement elem_neg(const FpAbGroup& g, const GroupElement& x);
GroupElement elem_scale(const FpAbGroup& g, const Int& k, const GroupElement& x);

/// Enumerate every element of a finite group; nullopt if infinite or more
/// than cap elements.
std::optional<std::vector<GroupElement>> enumerate_elements(const FpAbGroup& g, long cap);

/// Same, on a raw list of cyclic orders.
std::optional<std::vector<std::vector<Int>>> enumerate_orders(const std::vector<Int>& orders, long cap);

/// Presentation of Z^n modulo the column span of a relation matrix.
/// to_group maps old coordinates to group coordinates; from_group lifts
/// group generators back to old coordinates.
struct Presentation {
    FpAbGroup group;
    IntMatrix to_group;    // num_generators x n
    IntMatrix from_group;  // n x num_generators
};

Presentation present(int n_gens, const IntMatrix& relations);

/// Homomorphism of finitely generated abelian groups: columns of mat are the
/// images of source generators in target coordinates.
struct AbHom {
    FpAbGroup source, target;
    IntMatrix mat;

    static AbHom identity(const FpAbGroup& g);
    static AbHom zero(const FpAbGroup& s, const FpAbGroup& t);

    bool valid() const;
    GroupElement apply(const GroupElement& x) const;
    AbHom compose(const AbHom& inner) const;  // this o inner
    AbHom add(const AbHom& o) const;
    AbHom negate() const;

    std::optional<GroupElement> preimage(const GroupElement& y) const;
    std::pair<FpAbGroup, AbHom> kernel() const;    // (sub, inclusion)
    std::pair<FpAbGroup, AbHom> cokernel() const;  // (quot, projection)
    bool is_surjective() const;
    bool is_injective() const;
    std::optional<AbHom> inverse() const;

    bool equal(const AbHom& o) const;
};

std::pair<FpAbGroup, AbHom> cokernel_presentation(const AbHom& m);

/// Subgroup generated by the given elements, with injective inclusion.
std::pair<FpAbGroup, AbHom> subgroup_from_generators(const FpAbGroup& g,
                                                     const std::vector<GroupElement>& gens);

/// Membership of x in the subgroup generated by gens.
bool subgroup_contains(const FpAbGroup& g, const std::vector<GroupElement>& gens,
                       const GroupElement& x);

/// Tensor product over Z. pair_to_group maps the (i,j) pair basis
/// (index i * b.num_generators() + j) to group coordinates.
struct TensorResult {
    FpAbGroup group;
    IntMatrix pair_to_group;
};

TensorResult group_tensor(const FpAbGroup& a, const FpAbGroup& b);
GroupElement tensor_pair(const TensorResult& t, const FpAbGroup& a, const FpAbGroup& b,
                         const GroupElement& x, const GroupElement& y);

/// Direct sum with coordinate maps between the concatenated raw coordinates
/// and the canonical form.
struct DirectSumResult {
    FpAbGroup group;
    IntMatrix to_group;    // canonical coords from concatenated coords
    IntMatrix from_group;  // concatenated coords from canonical coords
};

DirectSumResult direct_sum_groups(const std::vector<FpAbGroup>& parts);

}  // namespace addcat

#endif
