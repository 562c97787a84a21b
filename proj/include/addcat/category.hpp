#ifndef ADDCAT_CATEGORY_HPP
#define ADDCAT_CATEGORY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "addcat/zlin.hpp"

namespace addcat {

/// Presentation of a small additive category: finitely many objects, a
/// finitely generated abelian hom-group per ordered pair, and bilinear
/// composition stored on generator pairs.
struct AddCat {
    std::vector<std::string> objects;
    std::vector<FpAbGroup> homs;     // index src * n + dst
    std::vector<IntMatrix> comps;    // index (x,y,z): hom(y,z) x hom(x,y) -> hom(x,z)
    std::vector<GroupElement> identities;

    int num_objects() const { return static_cast<int>(objects.size()); }
    int pair_index(int x, int y) const { return x * num_objects() + y; }
    const FpAbGroup& hom(int x, int y) const { return homs[pair_index(x, y)]; }
    FpAbGroup& hom_mut(int x, int y) { return homs[pair_index(x, y)]; }
    int triple_index(int x, int y, int z) const {
        int n = num_objects();
        return (x * n + y) * n + z;
    }
    /// Table for hom(y,z) x hom(x,y) -> hom(x,z); column index p * ngen(x,y) + q
    /// is the composite of generator p of hom(y,z) with generator q of hom(x,y).
    const IntMatrix& comp_table(int x, int y, int z) const { return comps[triple_index(x, y, z)]; }
    IntMatrix& comp_table_mut(int x, int y, int z) { return comps[triple_index(x, y, z)]; }

    GroupElement compose_elems(int x, int y, int z, const GroupElement& g,
                               const GroupElement& f) const;
    const GroupElement& identity(int x) const { return identities[x]; }
    int object_index(const std::string& label) const;  // -1 if absent

    static AddCat with_shape(std::vector<std::string> objects);
};

struct ValidationIssue {
    std::string axiom;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    std::string summary() const;
};

ValidationReport validate_category(const AddCat& c);

/// Formal finite biproduct of base objects.
using MatObject = std::vector<int>;

std::string mat_object_label(const AddCat& c, const MatObject& x);

/// Matrix of group elements; entry (i,j) lies in hom(source[j], target[i]).
struct MatMorphism {
    MatObject source, target;
    std::vector<GroupElement> entries;

    GroupElement& at(int i, int j) { return entries[static_cast<size_t>(i) * source.size() + j]; }
    const GroupElement& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * source.size() + j];
    }
};

MatMorphism identity_mat(const AddCat& c, const MatObject& x);
MatMorphism zero_mat(const AddCat& c, const MatObject& x, const MatObject& y);
MatMorphism compose(const AddCat& c, const MatMorphism& g, const MatMorphism& f);
MatMorphism add_mat(const AddCat& c, const MatMorphism& f, const MatMorphism& g);
MatMorphism sub_mat(const AddCat& c, const MatMorphism& f, const MatMorphism& g);
MatMorphism negate_mat(const AddCat& c, const MatMorphism& f);
bool mat_equal(const AddCat& c, const MatMorphism& f, const MatMorphism& g);
bool mat_is_zero(const AddCat& c, const MatMorphism& f);
/// single generator-combination morphism between two base objects
MatMorphism elem_mat(const AddCat& c, int x, int y, const GroupElement& e);

/// Biproduct with its structural injections and projections.
struct BiproductData {
    MatObject sum;
    std::vector<MatMorphism> injections;   // one per summand block
    std::vector<MatMorphism> projections;
};

BiproductData direct_sum(const AddCat& c, const std::vector<MatObject>& parts);

/// Coordinates for the abelian group of all MatMorphisms x -> y, as the
/// concatenation of the entry hom-group coordinates.
struct FlatHom {
    MatObject src, dst;
    std::vector<Int> orders;
    // basis[k] = (row, col, generator) of the k-th coordinate
    std::vector<std::array<int, 3>> basis;

    int dim() const { return static_cast<int>(orders.size()); }
};

FlatHom flat_hom(const AddCat& c, const MatObject& x, const MatObject& y);
std::vector<Int> flatten(const AddCat& c, const FlatHom& fh, const MatMorphism& m);
MatMorphism unflatten(const AddCat& c, const FlatHom& fh, const std::vector<Int>& coords);

/// Matrix of (a o -): Hom(x, a.source) -> Hom(x, a.target) on flat coordinates.
IntMatrix left_compose_matrix(const AddCat& c, const MatMorphism& a, const MatObject& x);
/// Matrix of (- o b): Hom(b.target, z) -> Hom(b.source, z) on flat coordinates.
IntMatrix right_compose_matrix(const AddCat& c, const MatMorphism& b, const MatObject& z);

struct IsoResult {
    bool is_iso = false;
    std::optional<MatMorphism> inverse;
};

/// Decide invertibility by solving the two linear systems f o g = id and
/// g o f = id exactly; a solution to both is a two-sided inverse.
IsoResult is_isomorphism(const AddCat& c, const MatMorphism& f);

/// Additive functor presented on generators.
struct AddFunctor {
    const AddCat* source = nullptr;
    const AddCat* target = nullptr;
    std::vector<int> object_map;
    std::vector<AbHom> hom_maps;  // index x * n + y

    const AbHom& hom_map(int x, int y) const { return hom_maps[x * source->num_objects() + y]; }
    GroupElement apply_elem(int x, int y, const GroupElement& e) const {
        return hom_map(x, y).apply(e);
    }
    MatObject apply_obj(const MatObject& o) const;
    MatMorphism apply_mat(const MatMorphism& m) const;
};

AddFunctor identity_functor(const AddCat& c);
ValidationReport validate_functor(const AddFunctor& f);
AddFunctor compose_functors(const AddFunctor& outer, const AddFunctor& inner);

/// All multisets (as sorted index vectors) of objects with the given total
/// size bounds, ordered by size then lexicographically.
std::vector<MatObject> enumerate_mat_objects(const AddCat& c, int min_size, int max_size);

/// Elements of the subgroup of the flat module spanned by the given lattice
/// columns; nullopt if infinite or larger than cap.
std::optional<std::vector<std::vector<Int>>> enumerate_lattice_subgroup(
    const std::vector<Int>& orders, const IntMatrix& lattice, long cap);

/// Search for r: x -> y, s: y -> x with r o s = id_y (and s o r = e when e is
/// given), by enumerating s in its linear-constraint subgroup and solving the
/// remaining linear system for r.
struct RetractSearchResult {
    bool found = false;
    MatMorphism r, s;
    bool capped = false;  // enumeration hit the cap; absence is not certified
};

RetractSearchResult find_retraction(const AddCat& c, const MatObject& x, const MatObject& y,
                                    const MatMorphism* section_constraint, long cap);

/// Existence of a mutual inverse pair between two base objects.
bool objects_isomorphic(const AddCat& c, int x, int y, long cap, bool* capped = nullptr);

}  // namespace addcat

#endif
