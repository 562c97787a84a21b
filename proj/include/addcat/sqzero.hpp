#ifndef ADDCAT_SQZERO_HPP
#define ADDCAT_SQZERO_HPP

#include <utility>
#include <vector>

#include "addcat/ideals.hpp"

namespace addcat {

/// Bimodule over an additive category: an abelian group M(x,y) per pair with
/// bilinear actions hom(y,y') x M(x,y) -> M(x,y') and
/// M(x,y) x hom(x',x) -> M(x',y), given on generators.
struct Bimodule {
    const AddCat* base = nullptr;
    std::vector<FpAbGroup> value;        // pair index x * n + y
    std::vector<IntMatrix> left_action;  // index (x * n + y) * n + y2, column p * ngenM + q
    std::vector<IntMatrix> right_action; // index (x2 * n + x) * n + y, column p * ngenHom + q

    const FpAbGroup& at(int x, int y) const { return value[x * base->num_objects() + y]; }
    GroupElement act_left(int x, int y, int y2, const GroupElement& g,
                          const GroupElement& m) const;
    GroupElement act_right(int x2, int x, int y, const GroupElement& m,
                           const GroupElement& f) const;
};

ValidationReport validate_bimodule(const Bimodule& m);

Bimodule zero_bimodule(const AddCat& a);

/// The hom-groups of the category as a bimodule over itself, acting by
/// composition on both sides. For a one-object ring category this is the
/// regular bimodule.
Bimodule hom_bimodule(const AddCat& a);

/// Square-zero extension A + M: same objects, hom(x,y) = hom_A(x,y) + M(x,y),
/// composition (f2,m2) o (f1,m1) = (f2 f1, f2.m1 + m2.f1).
struct SquareZeroCat {
    AddCat cat;
    const AddCat* base = nullptr;
    std::vector<FpAbGroup> mod_value;      // copy of the bimodule values
    std::vector<DirectSumResult> sums;     // coordinates: [hom_A | M] <-> canonical

    GroupElement pair_elem(int x, int y, const GroupElement& f, const GroupElement& m) const;
    std::pair<GroupElement, GroupElement> split_elem(int x, int y, const GroupElement& e) const;

    AddFunctor projection_functor() const;  // kills M
    AddFunctor section_functor() const;     // f -> (f, 0)
};

SquareZeroCat build_square_zero(const AddCat& a, const Bimodule& m);

/// The composition law on explicit pairs.
std::pair<GroupElement, GroupElement> sqzero_compose(
    const AddCat& a, const Bimodule& m, int x, int y, int z,
    const std::pair<GroupElement, GroupElement>& g,
    const std::pair<GroupElement, GroupElement>& f);

/// The projection is a nilpotent extension with exponent at most 2.
NilpotenceCertificate verify_square_zero_nilpotent(const SquareZeroCat& s, int max_exponent);

}  // namespace addcat

#endif
