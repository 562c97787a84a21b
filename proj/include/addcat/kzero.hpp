#ifndef ADDCAT_KZERO_HPP
#define ADDCAT_KZERO_HPP

#include <string>
#include <vector>

#include "addcat/builders.hpp"
#include "addcat/ideals.hpp"
#include "addcat/karoubi.hpp"

namespace addcat {

/// End(sum of all objects) as a ring, with the coordinate data needed to
/// move between ring elements and endomorphism matrices.
struct EndRing {
    Ring ring;
    MatObject carrier;       // all base objects in order
    Presentation pres;       // ring coords <-> flat endomorphism coords
};

EndRing endomorphism_ring(const AddCat& a);

/// Free abelian group on stable isomorphism classes of summands.
struct K0Result {
    FpAbGroup group;  // Z^(number of classes)
    std::vector<Idempotent> reps;
    std::vector<std::string> labels;
    bool complete = true;
};

/// Split every object into primitive idempotent summands and classify them
/// up to isomorphism. For finite hom-groups single-object carriers suffice
/// (finite endomorphism rings are semiperfect); with infinite hom-groups the
/// result falls back to object classes and is marked incomplete.
K0Result k0_enumeration(const AddCat& a, long cap);

/// Independent computation for a finite ring: Jacobson radical by
/// quasi-regularity, semisimple quotient, simple blocks counted through the
/// idempotents of the center.
K0Result k0_radical_oracle(const Ring& r, long cap);

/// [e] -> [f(e)] on class representatives, extended additively.
AbHom k0_induced_map(const AddFunctor& f, const K0Result& src, const K0Result& dst, long cap);

struct K0Verdict {
    bool ok = false;
    bool capped = false;
    std::string detail;
};

/// For a verified nilpotent extension the induced K0 map is an isomorphism.
K0Verdict k0_nilinvariance_check(const AddFunctor& f, int max_exponent, long cap);

/// K0(B) -> K0(A) -> K0(A/B) -> 0 is exact.
K0Verdict k0_localization_check(const std::vector<int>& b_objects, const AddCat& a, long cap);

}  // namespace addcat

#endif
