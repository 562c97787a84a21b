#include "addcat/io.hpp"

#include <fstream>
#include <sstream>

namespace addcat {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line;
    size_t hash = body.find('#');
    if (hash != std::string::npos) body.erase(hash);
    std::istringstream is(body);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

Int parse_int(int line, const std::string& s) {
    size_t start = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw ParseError(line, "expected an integer, got '" + s + "'");
    for (size_t i = start; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(line, "expected an integer, got '" + s + "'");
    return Int(s);
}

std::vector<Int> parse_ints(int line, const std::vector<std::string>& toks, size_t from) {
    std::vector<Int> out;
    for (size_t i = from; i < toks.size(); ++i) out.push_back(parse_int(line, toks[i]));
    return out;
}

FpAbGroup parse_factors(int line, const std::string& what, const std::vector<Int>& fs) {
    int seen_zero = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i] < 0) throw ParseError(line, what + ": negative invariant factor");
        if (fs[i] == 0) {
            seen_zero = 1;
            continue;
        }
        if (seen_zero) throw ParseError(line, what + ": free factors must come last");
        if (fs[i] == 1) throw ParseError(line, what + ": invariant factor 1 is not allowed");
        if (i > 0 && fs[i - 1] != 0 && fs[i] % fs[i - 1] != 0)
            throw ParseError(line, what + ": invariant factors violate the divisibility chain");
    }
    FpAbGroup g;
    g.factors = fs;
    return g;
}

IntMatrix read_matrix(const std::vector<std::string>& lines, size_t& i, int rows, int cols) {
    IntMatrix m(rows, cols);
    if (cols == 0 || rows == 0) return m;
    for (int r = 0; r < rows; ++r) {
        while (i < lines.size() && tokenize(lines[i]).empty()) ++i;
        if (i >= lines.size())
            throw ParseError(static_cast<int>(lines.size()), "unexpected end of file in a matrix");
        std::vector<std::string> toks = tokenize(lines[i]);
        if (static_cast<int>(toks.size()) != cols)
            throw ParseError(static_cast<int>(i) + 1,
                             "matrix row has " + std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(cols));
        for (int c = 0; c < cols; ++c) m.at(r, c) = parse_int(static_cast<int>(i) + 1, toks[c]);
        ++i;
    }
    return m;
}

int require_object(int line, const AddCat& c, const std::string& label) {
    int o = c.object_index(label);
    if (o < 0) throw ParseError(line, "unknown object '" + label + "'");
    return o;
}

void need(int line, bool ok, const std::string& msg) {
    if (!ok) throw ParseError(line, msg);
}

AddCat parse_category_block(const std::vector<std::string>& lines, size_t& i) {
    AddCat c;
    bool have_objects = false;
    while (i < lines.size()) {
        int ln = static_cast<int>(i) + 1;
        std::vector<std::string> toks = tokenize(lines[i]);
        if (toks.empty()) {
            ++i;
            continue;
        }
        const std::string& kw = toks[0];
        ++i;
        if (kw == "end") {
            need(ln, have_objects, "category block without an objects line");
            int n = c.num_objects();
            for (int x = 0; x < n; ++x) {
                if (c.identities[x].empty()) c.identities[x] = c.hom(x, x).zero();
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        IntMatrix& t = c.comp_table_mut(x, y, z);
                        int rows = c.hom(x, z).num_generators();
                        int cols = c.hom(y, z).num_generators() * c.hom(x, y).num_generators();
                        if (t.rows == 0 && t.cols == 0 && (rows != 0 || cols != 0))
                            t = IntMatrix(rows, cols);
                    }
            }
            return c;
        }
        if (kw == "objects") {
            need(ln, !have_objects, "duplicate objects line");
            c = AddCat::with_shape(std::vector<std::string>(toks.begin() + 1, toks.end()));
            for (size_t a = 1; a < toks.size(); ++a)
                for (size_t b = a + 1; b < toks.size(); ++b)
                    need(ln, toks[a] != toks[b], "duplicate object label '" + toks[a] + "'");
            have_objects = true;
        } else if (kw == "hom") {
            need(ln, have_objects, "hom before objects");
            need(ln, toks.size() >= 3, "hom needs source and target");
            int x = require_object(ln, c, toks[1]);
            int y = require_object(ln, c, toks[2]);
            c.hom_mut(x, y) = parse_factors(ln, "hom " + toks[1] + " " + toks[2],
                                            parse_ints(ln, toks, 3));
        } else if (kw == "comp") {
            need(ln, have_objects, "comp before objects");
            need(ln, toks.size() == 4, "comp needs three objects");
            int x = require_object(ln, c, toks[1]);
            int y = require_object(ln, c, toks[2]);
            int z = require_object(ln, c, toks[3]);
            int rows = c.hom(x, z).num_generators();
            int cols = c.hom(y, z).num_generators() * c.hom(x, y).num_generators();
            c.comp_table_mut(x, y, z) = read_matrix(lines, i, rows, cols);
        } else if (kw == "identity") {
            need(ln, have_objects, "identity before objects");
            need(ln, toks.size() >= 2, "identity needs an object");
            int x = require_object(ln, c, toks[1]);
            GroupElement e = parse_ints(ln, toks, 2);
            need(ln, static_cast<int>(e.size()) == c.hom(x, x).num_generators(),
                 "identity coordinate count does not match End(" + toks[1] + ")");
            c.identities[x] = c.hom(x, x).reduce(e);
        } else {
            throw ParseError(ln, "unknown keyword '" + kw + "' in a category block");
        }
    }
    throw ParseError(static_cast<int>(lines.size()), "category block missing its end line");
}

void skip_block(const std::vector<std::string>& lines, size_t& i) {
    while (i < lines.size()) {
        std::vector<std::string> toks = tokenize(lines[i]);
        ++i;
        if (!toks.empty() && toks[0] == "end") return;
    }
    throw ParseError(static_cast<int>(lines.size()), "block missing its end line");
}

void parse_functor_block(PresentationFile& pf, const std::vector<std::string>& head, int head_ln,
                         const std::vector<std::string>& lines, size_t& i) {
    need(head_ln, head.size() == 4, "functor needs a name and two category names");
    PresentationFile::FunctorBlock fb;
    fb.name = head[1];
    fb.src = pf.category_index(head[2]);
    fb.dst = pf.category_index(head[3]);
    need(head_ln, fb.src >= 0, "unknown category '" + head[2] + "'");
    need(head_ln, fb.dst >= 0, "unknown category '" + head[3] + "'");
    const AddCat& s = pf.cats[fb.src];
    const AddCat& d = pf.cats[fb.dst];
    int n = s.num_objects();
    fb.f.source = &s;
    fb.f.target = &d;
    fb.f.object_map.assign(n, -1);
    bool maps_started = false;
    auto ensure_maps = [&](int ln) {
        if (maps_started) return;
        for (int x = 0; x < n; ++x)
            need(ln, fb.f.object_map[x] >= 0,
                 "object line for '" + s.objects[x] + "' missing before map lines");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                fb.f.hom_maps.push_back(AbHom::zero(
                    s.hom(x, y), d.hom(fb.f.object_map[x], fb.f.object_map[y])));
        maps_started = true;
    };
    while (i < lines.size()) {
        int ln = static_cast<int>(i) + 1;
        std::vector<std::string> toks = tokenize(lines[i]);
        if (toks.empty()) {
            ++i;
            continue;
        }
        ++i;
        if (toks[0] == "end") {
            ensure_maps(ln);
            pf.functors.push_back(std::move(fb));
            return;
        }
        if (toks[0] == "object") {
            need(ln, !maps_started, "object lines must come before map lines");
            need(ln, toks.size() == 3, "object needs a source and a target object");
            int x = require_object(ln, s, toks[1]);
            fb.f.object_map[x] = require_object(ln, d, toks[2]);
        } else if (toks[0] == "map") {
            need(ln, toks.size() == 3, "map needs two objects");
            ensure_maps(ln);
            int x = require_object(ln, s, toks[1]);
            int y = require_object(ln, s, toks[2]);
            AbHom& h = fb.f.hom_maps[x * n + y];
            h.mat = read_matrix(lines, i, h.target.num_generators(), h.source.num_generators());
        } else {
            throw ParseError(ln, "unknown keyword '" + toks[0] + "' in a functor block");
        }
    }
    throw ParseError(static_cast<int>(lines.size()), "functor block missing its end line");
}

void parse_bimodule_block(PresentationFile& pf, const std::vector<std::string>& head, int head_ln,
                          const std::vector<std::string>& lines, size_t& i) {
    need(head_ln, head.size() == 3, "bimodule needs a name and a category name");
    PresentationFile::BimoduleBlock bb;
    bb.name = head[1];
    bb.cat = pf.category_index(head[2]);
    need(head_ln, bb.cat >= 0, "unknown category '" + head[2] + "'");
    const AddCat& c = pf.cats[bb.cat];
    int n = c.num_objects();
    bb.m.base = &c;
    bb.m.value.assign(static_cast<size_t>(n) * n, FpAbGroup::trivial());
    bb.m.left_action.assign(static_cast<size_t>(n) * n * n, IntMatrix());
    bb.m.right_action.assign(static_cast<size_t>(n) * n * n, IntMatrix());
    while (i < lines.size()) {
        int ln = static_cast<int>(i) + 1;
        std::vector<std::string> toks = tokenize(lines[i]);
        if (toks.empty()) {
            ++i;
            continue;
        }
        ++i;
        if (toks[0] == "end") {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        IntMatrix& l = bb.m.left_action[(x * n + y) * n + z];
                        int lr = bb.m.value[x * n + z].num_generators();
                        int lc = c.hom(y, z).num_generators() *
                                 bb.m.value[x * n + y].num_generators();
                        if (l.rows == 0 && l.cols == 0) l = IntMatrix(lr, lc);
                        IntMatrix& r = bb.m.right_action[(x * n + y) * n + z];
                        int rr = bb.m.value[x * n + z].num_generators();
                        int rc = bb.m.value[y * n + z].num_generators() *
                                 c.hom(x, y).num_generators();
                        if (r.rows == 0 && r.cols == 0) r = IntMatrix(rr, rc);
                    }
            pf.bimodules.push_back(std::move(bb));
            return;
        }
        if (toks[0] == "value") {
            need(ln, toks.size() >= 3, "value needs two objects");
            int x = require_object(ln, c, toks[1]);
            int y = require_object(ln, c, toks[2]);
            bb.m.value[x * n + y] = parse_factors(ln, "value " + toks[1] + " " + toks[2],
                                                  parse_ints(ln, toks, 3));
        } else if (toks[0] == "left") {
            need(ln, toks.size() == 4, "left needs three objects");
            int x = require_object(ln, c, toks[1]);
            int y = require_object(ln, c, toks[2]);
            int y2 = require_object(ln, c, toks[3]);
            int rows = bb.m.value[x * n + y2].num_generators();
            int cols = c.hom(y, y2).num_generators() * bb.m.value[x * n + y].num_generators();
            bb.m.left_action[(x * n + y) * n + y2] = read_matrix(lines, i, rows, cols);
        } else if (toks[0] == "right") {
            need(ln, toks.size() == 4, "right needs three objects");
            int x2 = require_object(ln, c, toks[1]);
            int x = require_object(ln, c, toks[2]);
            int y = require_object(ln, c, toks[3]);
            int rows = bb.m.value[x2 * n + y].num_generators();
            int cols = bb.m.value[x * n + y].num_generators() * c.hom(x2, x).num_generators();
            bb.m.right_action[(x2 * n + x) * n + y] = read_matrix(lines, i, rows, cols);
        } else {
            throw ParseError(ln, "unknown keyword '" + toks[0] + "' in a bimodule block");
        }
    }
    throw ParseError(static_cast<int>(lines.size()), "bimodule block missing its end line");
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) os << " ";
            os << m.at(r, c).get_str();
        }
        os << "\n";
    }
}

void write_factors(std::ostream& os, const FpAbGroup& g) {
    for (const Int& d : g.factors) os << " " << d.get_str();
}

void check_token(const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty name in a presentation");
    for (char ch : t)
        if (isspace(static_cast<unsigned char>(ch)) || ch == '#')
            throw std::invalid_argument("name '" + t + "' contains whitespace or '#'");
}

}  // namespace

int PresentationFile::category_index(const std::string& name) const {
    for (size_t i = 0; i < cat_names.size(); ++i)
        if (cat_names[i] == name) return static_cast<int>(i);
    return -1;
}

int PresentationFile::functor_index(const std::string& name) const {
    for (size_t i = 0; i < functors.size(); ++i)
        if (functors[i].name == name) return static_cast<int>(i);
    return -1;
}

int PresentationFile::bimodule_index(const std::string& name) const {
    for (size_t i = 0; i < bimodules.size(); ++i)
        if (bimodules[i].name == name) return static_cast<int>(i);
    return -1;
}

int PresentationFile::subcat_index(const std::string& name) const {
    for (size_t i = 0; i < subcats.size(); ++i)
        if (subcats[i].name == name) return static_cast<int>(i);
    return -1;
}

PresentationFile parse_presentation(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    PresentationFile pf;
    // categories first, so blocks that point into the category vector never
    // see it grow afterwards
    for (size_t i = 0; i < lines.size();) {
        int ln = static_cast<int>(i) + 1;
        std::vector<std::string> toks = tokenize(lines[i]);
        if (toks.empty()) {
            ++i;
            continue;
        }
        ++i;
        if (toks[0] == "category") {
            need(ln, toks.size() == 2, "category needs exactly one name");
            need(ln, pf.category_index(toks[1]) < 0, "duplicate category '" + toks[1] + "'");
            pf.cat_names.push_back(toks[1]);
            pf.cats.push_back(parse_category_block(lines, i));
        } else if (toks[0] == "functor" || toks[0] == "bimodule") {
            skip_block(lines, i);
        } else if (toks[0] == "subcat") {
            // single line, nothing to skip
        } else {
            throw ParseError(ln, "unknown block '" + toks[0] + "'");
        }
    }
    for (size_t i = 0; i < lines.size();) {
        int ln = static_cast<int>(i) + 1;
        std::vector<std::string> toks = tokenize(lines[i]);
        if (toks.empty()) {
            ++i;
            continue;
        }
        ++i;
        if (toks[0] == "category") {
            skip_block(lines, i);
        } else if (toks[0] == "functor") {
            parse_functor_block(pf, toks, ln, lines, i);
        } else if (toks[0] == "bimodule") {
            parse_bimodule_block(pf, toks, ln, lines, i);
        } else if (toks[0] == "subcat") {
            need(ln, toks.size() >= 3, "subcat needs a name and a category name");
            PresentationFile::SubcatBlock sb;
            sb.name = toks[1];
            sb.cat = pf.category_index(toks[2]);
            need(ln, sb.cat >= 0, "unknown category '" + toks[2] + "'");
            for (size_t k = 3; k < toks.size(); ++k)
                sb.objects.push_back(require_object(ln, pf.cats[sb.cat], toks[k]));
            pf.subcats.push_back(std::move(sb));
        }
    }
    return pf;
}

PresentationFile parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_presentation(in);
}

std::string serialize_presentation(const PresentationFile& pf) {
    std::ostringstream os;
    bool first_block = true;
    auto sep = [&]() {
        if (!first_block) os << "\n";
        first_block = false;
    };
    for (size_t ci = 0; ci < pf.cats.size(); ++ci) {
        sep();
        const AddCat& c = pf.cats[ci];
        check_token(pf.cat_names[ci]);
        os << "category " << pf.cat_names[ci] << "\n";
        os << "objects";
        for (const std::string& o : c.objects) {
            check_token(o);
            os << " " << o;
        }
        os << "\n";
        int n = c.num_objects();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                os << "hom " << c.objects[x] << " " << c.objects[y];
                write_factors(os, c.hom(x, y));
                os << "\n";
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const IntMatrix& t = c.comp_table(x, y, z);
                    if (t.rows == 0 || t.cols == 0) continue;
                    os << "comp " << c.objects[x] << " " << c.objects[y] << " " << c.objects[z]
                       << "\n";
                    write_matrix(os, t);
                }
        for (int x = 0; x < n; ++x) {
            os << "identity " << c.objects[x];
            for (const Int& v : c.identities[x]) os << " " << v.get_str();
            os << "\n";
        }
        os << "end\n";
    }
    for (const auto& fb : pf.functors) {
        sep();
        check_token(fb.name);
        const AddCat& s = pf.cats[fb.src];
        const AddCat& d = pf.cats[fb.dst];
        os << "functor " << fb.name << " " << pf.cat_names[fb.src] << " " << pf.cat_names[fb.dst]
           << "\n";
        int n = s.num_objects();
        for (int x = 0; x < n; ++x)
            os << "object " << s.objects[x] << " " << d.objects[fb.f.object_map[x]] << "\n";
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const IntMatrix& m = fb.f.hom_maps[x * n + y].mat;
                if (m.rows == 0 || m.cols == 0) continue;
                os << "map " << s.objects[x] << " " << s.objects[y] << "\n";
                write_matrix(os, m);
            }
        os << "end\n";
    }
    for (const auto& bb : pf.bimodules) {
        sep();
        check_token(bb.name);
        const AddCat& c = pf.cats[bb.cat];
        int n = c.num_objects();
        os << "bimodule " << bb.name << " " << pf.cat_names[bb.cat] << "\n";
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                os << "value " << c.objects[x] << " " << c.objects[y];
                write_factors(os, bb.m.value[x * n + y]);
                os << "\n";
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const IntMatrix& l = bb.m.left_action[(x * n + y) * n + z];
                    if (l.rows != 0 && l.cols != 0) {
                        os << "left " << c.objects[x] << " " << c.objects[y] << " " << c.objects[z]
                           << "\n";
                        write_matrix(os, l);
                    }
                }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const IntMatrix& r = bb.m.right_action[(x * n + y) * n + z];
                    if (r.rows != 0 && r.cols != 0) {
                        os << "right " << c.objects[x] << " " << c.objects[y] << " "
                           << c.objects[z] << "\n";
                        write_matrix(os, r);
                    }
                }
        os << "end\n";
    }
    for (const auto& sb : pf.subcats) {
        sep();
        check_token(sb.name);
        os << "subcat " << sb.name << " " << pf.cat_names[sb.cat];
        for (int o : sb.objects) os << " " << pf.cats[sb.cat].objects[o];
        os << "\n";
    }
    return os.str();
}

}  // namespace addcat
