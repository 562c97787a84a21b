#ifndef ADDCAT_BUILDERS_HPP
#define ADDCAT_BUILDERS_HPP

#include <string>
#include <vector>

#include "addcat/category.hpp"

namespace addcat {

/// Full subcategory of abelian groups on the listed cyclic groups
/// (order 0 means the infinite cyclic group). Hom(Z/a, Z/b) is cyclic,
/// generated by multiplication by b/gcd(a,b).
AddCat cyclic_groups_category(const std::vector<Int>& orders,
                              const std::vector<std::string>& labels = {});

/// Unital ring on a finitely generated additive group. mul maps the
/// generator pair (p,q), at column p * num_generators + q, to the
/// coordinates of gen_p * gen_q.
struct Ring {
    std::string name;
    FpAbGroup add;
    IntMatrix mul;
    GroupElement one;

    GroupElement times(const GroupElement& x, const GroupElement& y) const;
};

Ring ring_cyclic(const Int& n);                       // Z/n, or Z when n = 0
Ring ring_f4();                                       // field with four elements
Ring ring_product(const Ring& a, const Ring& b);
Ring ring_truncated_poly(const Ring& base, int k);    // base[x]/(x^k)
Ring ring_upper_triangular(const Ring& base, int n);  // upper triangular n x n

/// One-object additive category with End = the ring.
AddCat ring_category(const Ring& r);

/// Full subcategory on the listed object indices.
AddCat full_subcategory(const AddCat& a, const std::vector<int>& objs);

/// Inclusion of a full subcategory built by full_subcategory(a, objs).
AddFunctor inclusion_functor(const AddCat& sub, const AddCat& a, const std::vector<int>& objs);

/// Functor between one-object ring categories induced by an additive map
/// given on generators (columns of mat). The caller is responsible for the
/// map being multiplicative; validate_functor checks it.
AddFunctor ring_functor(const AddCat& src, const AddCat& dst, const IntMatrix& mat);

/// Ring map reducing Z/n to Z/m (m | n) as a one-object functor datum.
IntMatrix cyclic_reduction_matrix();

/// Quotient map base[x]/(x^k) -> base killing x, on canonical coordinates.
IntMatrix truncated_poly_augmentation(const Ring& base, int k);

}  // namespace addcat

#endif
