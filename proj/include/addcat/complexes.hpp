#ifndef ADDCAT_COMPLEXES_HPP
#define ADDCAT_COMPLEXES_HPP

#include <vector>

#include "addcat/category.hpp"

namespace addcat {

/// Bounded chain complex in homological grading: the differential d_n lowers
/// degree, X_n -> X_{n-1}. Terms outside [lo, hi] are the empty biproduct.
struct BoundedComplex {
    const AddCat* cat = nullptr;
    int lo = 0, hi = -1;  // empty complex when hi < lo
    std::vector<MatObject> terms;      // terms[n - lo]
    std::vector<MatMorphism> diffs;    // diffs[n - lo - 1] is d_n, for lo < n <= hi

    bool in_range(int n) const { return n >= lo && n <= hi; }
    MatObject term(int n) const { return in_range(n) ? terms[n - lo] : MatObject{}; }
    MatMorphism diff(int n) const;  // X_n -> X_{n-1}, zero outside

    /// smallest degree interval containing all nonempty terms; {0,-1} if none
    std::pair<int, int> support() const;
};

BoundedComplex make_complex(const AddCat& c, int lo, std::vector<MatObject> terms,
                            std::vector<MatMorphism> diffs);
BoundedComplex zero_complex(const AddCat& c);
/// one object placed in a single degree
BoundedComplex object_complex(const AddCat& c, const MatObject& x, int degree);

bool validate_complex(const BoundedComplex& x);

/// x[k]: degree n term is x_{n-k}; the differential picks up the sign (-1)^k.
BoundedComplex shift_complex(const BoundedComplex& x, int k);
BoundedComplex sum_complexes(const BoundedComplex& x, const BoundedComplex& y);

/// Degreewise morphism data; components for degrees [lo, lo + comps.size()).
struct ChainMap {
    int lo = 0;
    std::vector<MatMorphism> comps;
};

MatMorphism chain_component(const ChainMap& f, const BoundedComplex& x, const BoundedComplex& y,
                            int n);
bool is_chain_map(const BoundedComplex& x, const BoundedComplex& y, const ChainMap& f);
ChainMap identity_chain_map(const BoundedComplex& x);

/// cone(f)_n = x_{n-1} + y_n with d(a, b) = (-d_x a, f a + d_y b).
BoundedComplex cone(const BoundedComplex& x, const BoundedComplex& y, const ChainMap& f);

/// Chain maps modulo null-homotopic ones: Hom_{K^b}(x, y) at the pi0 level.
FpAbGroup kb_hom(const BoundedComplex& x, const BoundedComplex& y);

/// Degreewise split short exact sequence low -> x -> high with low the
/// degrees <= k and high the degrees >= k+1.
struct Truncation {
    BoundedComplex low, high;
    ChainMap incl;     // low -> x
    ChainMap proj;     // x -> high
    ChainMap split_r;  // x -> low, split_r o incl = id
    ChainMap split_s;  // high -> x, proj o split_s = id
};

Truncation stupid_truncation(const BoundedComplex& x, int k);

/// Degree-support weight window: C_{w>=0} is support >= w_ge_min and
/// C_{w<=0} is support <= w_le_max. The standard window is {0, 0}.
struct WeightWindow {
    int w_ge_min = 0;
    int w_le_max = 0;
};

ValidationReport check_weight_axioms(const AddCat& c, const std::vector<BoundedComplex>& samples,
                                     const WeightWindow& w);

/// Minimal model: repeatedly cancel invertible differential entries. Over a
/// discrete base this is the weight complex in canonical form.
BoundedComplex weight_complex(const BoundedComplex& x);

/// Apply an additive functor degreewise.
BoundedComplex apply_functor_complex(const AddFunctor& f, const BoundedComplex& x);

}  // namespace addcat

#endif
