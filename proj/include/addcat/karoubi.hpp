#ifndef ADDCAT_KAROUBI_HPP
#define ADDCAT_KAROUBI_HPP

#include <string>
#include <vector>

#include "addcat/category.hpp"

namespace addcat {

struct Idempotent {
    MatObject carrier;
    MatMorphism endo;
};

bool is_idempotent(const AddCat& c, const MatMorphism& e);

struct SplitReport {
    bool split = false;
    bool capped = false;  // some carrier search was cut off; absence not certified
    MatObject y;
    MatMorphism r, s;  // s o r = e, r o s = id_y
};

/// Search carriers of size <= size_bound for a splitting of e.
SplitReport split_idempotent(const AddCat& c, const Idempotent& e, int size_bound, long cap);

/// Isomorphism of idempotents: u, v with f u e = u, e v f = v, v u = e, u v = f.
struct IdemIsoResult {
    bool isomorphic = false;
    bool capped = false;
    MatMorphism u, v;  // u : carrier(e) -> carrier(f)
};

IdemIsoResult idempotents_isomorphic(const AddCat& c, const Idempotent& e, const Idempotent& f,
                                     long cap);

/// Bounded Karoubi envelope: objects are the base objects (as identity
/// idempotents) plus one representative per isomorphism class of nonzero
/// idempotents on carriers of size <= bound.
struct Envelope {
    AddCat cat;
    std::vector<Idempotent> objects;
    const AddCat* base = nullptr;
    bool capped = false;

    // hom((e_i, x_i), (e_j, x_j)) as a subgroup of the ambient mat-hom group
    std::vector<IntMatrix> hom_gens;        // pair index i * n + j, ambient coords
    std::vector<Presentation> hom_pres;

    MatMorphism lift(int i, int j, const GroupElement& u) const;
    GroupElement project(int i, int j, const MatMorphism& m) const;

    /// Fully faithful inclusion of the base category.
    AddFunctor embedding_functor() const;
};

Envelope karoubi_envelope(const AddCat& c, int bound, long cap);

struct EquivalenceReport {
    bool equivalent = false;
    bool capped = false;
    std::string detail;
};

/// f is an equivalence up to idempotent completion: fully faithful, and every
/// target object is a retract of the image of some source object of size
/// <= bound.
EquivalenceReport equivalence_up_to_idempotents(const AddFunctor& f, int bound, long cap);

}  // namespace addcat

#endif
