#ifndef ADDCAT_IDEALS_HPP
#define ADDCAT_IDEALS_HPP

#include <string>
#include <vector>

#include "addcat/category.hpp"

namespace addcat {

/// Two-sided ideal: a subgroup of every hom-group, closed under pre- and
/// post-composition, given by generators.
struct Ideal {
    const AddCat* cat = nullptr;
    std::vector<std::vector<GroupElement>> gens;  // pair index x * n + y

    const std::vector<GroupElement>& at(int x, int y) const {
        return gens[x * cat->num_objects() + y];
    }
    bool is_zero() const;
    bool contains(int x, int y, const GroupElement& e) const;
    /// total free rank of the per-pair subgroups
    int free_rank() const;
};

/// Smallest two-sided ideal containing the given elements.
Ideal ideal_from_generators(const AddCat& c, std::vector<std::vector<GroupElement>> gens);

/// Per-pair kernels of the hom maps of a functor; two-sided automatically.
Ideal kernel_ideal(const AddFunctor& f);

bool ideal_is_two_sided(const Ideal& i);
bool ideals_equal(const Ideal& a, const Ideal& b);

/// Subgroup generated by all n-fold composites of ideal elements.
Ideal ideal_power(const Ideal& i, int n);

struct NilpotenceCertificate {
    enum class Status { Nilpotent, NotNilpotent, Inconclusive };
    Status status = Status::Inconclusive;
    int exponent = 0;  // minimal n with I^n = 0, when nilpotent
    std::string reason;
};

NilpotenceCertificate ideal_nilpotence(const Ideal& i, int max_exponent);

/// Quotient by the morphisms factoring through a full subcategory:
/// hom(x,y) modulo the subgroup generated by composites through objects of b.
struct QuotientResult {
    AddCat cat;  // same objects as the base
    const AddCat* base = nullptr;
    std::vector<AbHom> proj;       // pair index, base hom -> quotient hom
    std::vector<IntMatrix> lift;   // section of proj on coordinates

    AddFunctor projection_functor() const;
};

QuotientResult quotient_category(const AddCat& a, const std::vector<int>& b_objects);

struct NilpotentExtensionReport {
    bool hom_surjective = false;       // every hom map surjective
    bool essentially_surjective = false;
    bool bijective_on_classes = false;
    NilpotenceCertificate certificate;
    bool capped = false;
    std::string detail;

    bool is_nilpotent_extension() const {
        return hom_surjective && essentially_surjective &&
               certificate.status == NilpotenceCertificate::Status::Nilpotent;
    }
};

NilpotentExtensionReport check_nilpotent_extension(const AddFunctor& f, int max_exponent,
                                                   long cap);

struct ExactSequenceReport {
    bool exact = false;
    bool capped = false;
    std::string detail;
};

/// b -> a -> c is exact when g kills b and the induced functor a/b -> c is an
/// equivalence up to idempotent completion.
ExactSequenceReport check_exact_sequence(const std::vector<int>& b_objects, const AddCat& a,
                                         const AddFunctor& g, int bound, long cap);

/// For a nilpotent extension f with kernel exponent n and u with f(u)
/// invertible, build the inverse of u by the geometric series
/// sum_{k<n} (id - h u)^k applied to the lifted inverse h.
std::optional<MatMorphism> conservative_inverse(const AddFunctor& f, const MatMorphism& u,
                                                int exponent);

}  // namespace addcat

#endif
