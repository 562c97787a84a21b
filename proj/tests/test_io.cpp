#include "addcat/io.hpp"

#include <fstream>
#include <sstream>

#include "addcat/builders.hpp"
#include "addcat/ideals.hpp"
#include "doctest.h"

using namespace addcat;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(SAMPLES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PresentationFile parse_str(const std::string& text) {
    std::istringstream is(text);
    return parse_presentation(is);
}

}  // namespace

TEST_CASE("canonical sample files round-trip byte-identically") {
    for (const char* name : {"z4z2.acat", "nilred.acat", "z8z2.acat", "dual.acat", "three.acat"}) {
        std::string text = slurp(name);
        PresentationFile pf = parse_str(text);
        CHECK(serialize_presentation(pf) == text);
    }
}

TEST_CASE("the two-object sample parses into a valid category") {
    PresentationFile pf = parse_str(slurp("z4z2.acat"));
    REQUIRE(pf.cats.size() == 1);
    const AddCat& a = pf.cats[0];
    CHECK(a.num_objects() == 2);
    CHECK(a.hom(0, 0) == FpAbGroup::cyclic(4));
    CHECK(a.hom(0, 1) == FpAbGroup::cyclic(2));
    CHECK(validate_category(a).ok);
    // it really is the cyclic-groups category
    AddCat built = cyclic_groups_category({4, 2}, {"Z4", "Z2"});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) CHECK(a.comp_table(x, y, z) == built.comp_table(x, y, z));
    REQUIRE(pf.subcats.size() == 1);
    CHECK(pf.subcats[0].name == "torsion");
    CHECK(pf.subcats[0].objects == std::vector<int>{1});
}

TEST_CASE("functor blocks load as valid functors") {
    PresentationFile pf = parse_str(slurp("nilred.acat"));
    REQUIRE(pf.functors.size() == 1);
    const AddFunctor& red = pf.functors[0].f;
    CHECK(validate_functor(red).ok);
    NilpotentExtensionReport r = check_nilpotent_extension(red, 16, 100000);
    CHECK(r.is_nilpotent_extension());
    CHECK(r.certificate.exponent == 2);

    PresentationFile pf8 = parse_str(slurp("z8z2.acat"));
    NilpotentExtensionReport r8 =
        check_nilpotent_extension(pf8.functors[0].f, 16, 100000);
    CHECK(r8.is_nilpotent_extension());
    CHECK(r8.certificate.exponent == 3);
}

TEST_CASE("bimodule blocks load and drive a square-zero extension") {
    PresentationFile pf = parse_str(slurp("dual.acat"));
    REQUIRE(pf.bimodules.size() == 1);
    const Bimodule& m = pf.bimodules[0].m;
    CHECK(validate_bimodule(m).ok);
    SquareZeroCat s = build_square_zero(pf.cats[0], m);
    CHECK(s.cat.hom(0, 0).order() == 16);
}

TEST_CASE("empty objects section gives the zero category") {
    PresentationFile pf = parse_str("category main\nobjects\nend\n");
    CHECK(pf.cats[0].num_objects() == 0);
    CHECK(validate_category(pf.cats[0]).ok);
    std::string canon = serialize_presentation(pf);
    CHECK(serialize_presentation(parse_str(canon)) == canon);
}

TEST_CASE("parse errors carry line numbers and name the offender") {
    try {
        parse_str(slurp("bad_chain.acat"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("hom X X") != std::string::npos);
        CHECK(std::string(e.what()).find("divisibility") != std::string::npos);
    }

    try {
        parse_str("category main\nobjects X\nhom X X 2\ncomp X X X\n1 1\nidentity X 1\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);  // the bad matrix row
    }

    CHECK_THROWS_AS(parse_str("category main\nobjects X\nhom X Y 2\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_str("category main\nobjects X\n"), ParseError);
    CHECK_THROWS_AS(parse_str("functor f a b\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_str("category main\nobjects X X\nend\n"), ParseError);
}

TEST_CASE("invalid categories parse but fail validation") {
    PresentationFile pf = parse_str(slurp("bad_unit.acat"));
    CHECK_FALSE(validate_category(pf.cats[0]).ok);
}

TEST_CASE("a built presentation survives serialize then parse") {
    PresentationFile pf;
    pf.cat_names = {"main"};
    pf.cats.push_back(cyclic_groups_category({9, 3}, {"Z9", "Z3"}));
    std::string canon = serialize_presentation(pf);
    PresentationFile back = parse_str(canon);
    CHECK(serialize_presentation(back) == canon);
    CHECK(validate_category(back.cats[0]).ok);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(back.cats[0].hom(x, y) == pf.cats[0].hom(x, y));
}
