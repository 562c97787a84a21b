#ifndef ADDCAT_IO_HPP
#define ADDCAT_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "addcat/category.hpp"
#include "addcat/sqzero.hpp"

namespace addcat {

/// Parse failure with the offending line (1-based; 0 when not line-specific).
struct ParseError : std::runtime_error {
    int line;
    ParseError(int l, const std::string& msg)
        : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + msg : msg), line(l) {}
};

/// Contents of a presentation file: named categories plus optional functor,
/// bimodule and subcategory blocks referring to them by name. Functors and
/// bimodules point into the category vector; move, do not copy.
struct PresentationFile {
    std::vector<std::string> cat_names;
    std::vector<AddCat> cats;

    struct FunctorBlock {
        std::string name;
        int src = -1, dst = -1;
        AddFunctor f;
    };
    std::vector<FunctorBlock> functors;

    struct BimoduleBlock {
        std::string name;
        int cat = -1;
        Bimodule m;
    };
    std::vector<BimoduleBlock> bimodules;

    struct SubcatBlock {
        std::string name;
        int cat = -1;
        std::vector<int> objects;
    };
    std::vector<SubcatBlock> subcats;

    int category_index(const std::string& name) const;
    int functor_index(const std::string& name) const;
    int bimodule_index(const std::string& name) const;
    int subcat_index(const std::string& name) const;
};

PresentationFile parse_presentation(std::istream& in);
PresentationFile parse_presentation_file(const std::string& path);

/// Canonical text form; parse(serialize(pf)) reproduces pf and serializing
/// again is byte-identical.
std::string serialize_presentation(const PresentationFile& pf);

}  // namespace addcat

#endif
