#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "addcat/complexes.hpp"
#include "addcat/io.hpp"
#include "addcat/kzero.hpp"

using namespace addcat;

namespace {

struct Report {
    std::vector<std::pair<std::string, std::string>> items;

    void add(const std::string& k, const std::string& v) { items.emplace_back(k, v); }
    void add(const std::string& k, bool v) { items.emplace_back(k, v ? "yes" : "no"); }
    void add(const std::string& k, long v) { items.emplace_back(k, std::to_string(v)); }

    void print(const std::string& format) const {
        for (const auto& [k, v] : items) {
            if (format == "structured")
                std::cout << k << "=" << v << "\n";
            else
                std::cout << k << ": " << v << "\n";
        }
    }
};

struct Options {
    std::string path;
    std::string format = "plain";
    std::string category;
    std::string functor;
    std::string bimodule_name;
    std::string subcat_name;
    std::vector<std::string> kill;
    std::string from_obj, to_obj;
    int shift = 0;
    int bound = 4;
    int max_exponent = 16;
    long cap = 200000;
    int samples = 20;
    unsigned seed = 1;
};

int pick_category(const PresentationFile& pf, const Options& opt) {
    if (opt.category.empty()) {
        if (pf.cats.empty()) throw ParseError(0, "the file contains no category");
        return 0;
    }
    int c = pf.category_index(opt.category);
    if (c < 0) throw ParseError(0, "unknown category '" + opt.category + "'");
    return c;
}

// every command other than `check` requires valid input up front
bool validate_all(const PresentationFile& pf, Report& rep) {
    bool ok = true;
    for (size_t i = 0; i < pf.cats.size(); ++i) {
        ValidationReport v = validate_category(pf.cats[i]);
        if (!v.ok) {
            rep.add("invalid-category " + pf.cat_names[i], v.summary());
            ok = false;
        }
    }
    return ok;
}

std::vector<int> killed_objects(const PresentationFile& pf, int cat, const Options& opt) {
    std::vector<int> objs;
    if (!opt.subcat_name.empty()) {
        int s = pf.subcat_index(opt.subcat_name);
        if (s < 0) throw ParseError(0, "unknown subcat '" + opt.subcat_name + "'");
        if (pf.subcats[s].cat != cat)
            throw ParseError(0, "subcat '" + opt.subcat_name + "' belongs to another category");
        return pf.subcats[s].objects;
    }
    for (const std::string& label : opt.kill) {
        int o = pf.cats[cat].object_index(label);
        if (o < 0) throw ParseError(0, "unknown object '" + label + "'");
        objs.push_back(o);
    }
    return objs;
}

int cmd_check(const PresentationFile& pf, const Options& opt, Report& rep) {
    bool ok = true;
    for (size_t i = 0; i < pf.cats.size(); ++i) {
        if (!opt.category.empty() && pf.cat_names[i] != opt.category) continue;
        ValidationReport v = validate_category(pf.cats[i]);
        rep.add("category " + pf.cat_names[i], v.summary());
        ok = ok && v.ok;
    }
    for (const auto& fb : pf.functors) {
        ValidationReport v = validate_functor(fb.f);
        rep.add("functor " + fb.name, v.summary());
        ok = ok && v.ok;
    }
    for (const auto& bb : pf.bimodules) {
        ValidationReport v = validate_bimodule(bb.m);
        rep.add("bimodule " + bb.name, v.summary());
        ok = ok && v.ok;
    }
    return ok ? 0 : 1;
}

int cmd_quotient(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    const AddCat& a = pf.cats[ci];
    std::vector<int> objs = killed_objects(pf, ci, opt);
    QuotientResult q = quotient_category(a, objs);
    for (int x = 0; x < a.num_objects(); ++x)
        for (int y = 0; y < a.num_objects(); ++y)
            rep.add("hom " + a.objects[x] + " " + a.objects[y], q.cat.hom(x, y).to_string());
    return 0;
}

int cmd_karoubi(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    Envelope env = karoubi_envelope(pf.cats[ci], opt.bound, opt.cap);
    rep.add("objects", static_cast<long>(env.cat.num_objects()));
    for (int i = 0; i < env.cat.num_objects(); ++i)
        rep.add("end " + env.cat.objects[i], env.cat.hom(i, i).to_string());
    rep.add("capped", env.capped);
    return 0;
}

int cmd_sqzero(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    const AddCat& a = pf.cats[ci];
    Bimodule m;
    if (opt.bimodule_name.empty()) {
        m = hom_bimodule(a);
        rep.add("bimodule", std::string("hom"));
    } else {
        int b = pf.bimodule_index(opt.bimodule_name);
        if (b < 0) throw ParseError(0, "unknown bimodule '" + opt.bimodule_name + "'");
        if (pf.bimodules[b].cat != ci)
            throw ParseError(0, "bimodule '" + opt.bimodule_name + "' belongs to another category");
        m = pf.bimodules[b].m;
        rep.add("bimodule", opt.bimodule_name);
    }
    ValidationReport v = validate_bimodule(m);
    if (!v.ok) {
        rep.add("bimodule-valid", v.summary());
        return 1;
    }
    SquareZeroCat s = build_square_zero(a, m);
    for (int x = 0; x < a.num_objects(); ++x)
        rep.add("end " + a.objects[x], s.cat.hom(x, x).to_string());
    NilpotenceCertificate c = verify_square_zero_nilpotent(s, opt.max_exponent);
    rep.add("kernel-nilpotent", c.status == NilpotenceCertificate::Status::Nilpotent);
    rep.add("exponent", static_cast<long>(c.exponent));
    return c.status == NilpotenceCertificate::Status::Nilpotent ? 0 : 1;
}

const AddFunctor& named_functor(const PresentationFile& pf, const Options& opt) {
    if (opt.functor.empty()) throw ParseError(0, "this command needs --functor");
    int f = pf.functor_index(opt.functor);
    if (f < 0) throw ParseError(0, "unknown functor '" + opt.functor + "'");
    ValidationReport v = validate_functor(pf.functors[f].f);
    if (!v.ok) throw ParseError(0, "functor '" + opt.functor + "' is invalid: " + v.summary());
    return pf.functors[f].f;
}

int cmd_nilpotent_check(const PresentationFile& pf, const Options& opt, Report& rep) {
    const AddFunctor& f = named_functor(pf, opt);
    NilpotentExtensionReport r = check_nilpotent_extension(f, opt.max_exponent, opt.cap);
    rep.add("hom-surjective", r.hom_surjective);
    rep.add("essentially-surjective", r.essentially_surjective);
    rep.add("bijective-on-classes", r.bijective_on_classes);
    const char* status = r.certificate.status == NilpotenceCertificate::Status::Nilpotent
                             ? "nilpotent"
                             : (r.certificate.status == NilpotenceCertificate::Status::NotNilpotent
                                    ? "not-nilpotent"
                                    : "inconclusive");
    rep.add("kernel", std::string(status));
    if (r.certificate.status == NilpotenceCertificate::Status::Nilpotent)
        rep.add("exponent", static_cast<long>(r.certificate.exponent));
    rep.add("capped", r.capped);
    rep.add("nilpotent-extension", r.is_nilpotent_extension());
    if (!r.detail.empty()) rep.add("detail", r.detail);
    return r.is_nilpotent_extension() ? 0 : 1;
}

int cmd_exact_check(const PresentationFile& pf, const Options& opt, Report& rep) {
    const AddFunctor& g = named_functor(pf, opt);
    int ci = -1;
    for (size_t i = 0; i < pf.cats.size(); ++i)
        if (&pf.cats[i] == g.source) ci = static_cast<int>(i);
    std::vector<int> objs = killed_objects(pf, ci, opt);
    ExactSequenceReport r = check_exact_sequence(objs, *g.source, g, opt.bound, opt.cap);
    rep.add("exact", r.exact);
    rep.add("capped", r.capped);
    if (!r.detail.empty()) rep.add("detail", r.detail);
    return r.exact ? 0 : 1;
}

void report_k0(Report& rep, const std::string& prefix, const K0Result& k) {
    rep.add(prefix + "group", k.group.to_string());
    std::ostringstream os;
    for (size_t i = 0; i < k.labels.size(); ++i) {
        if (i) os << " ";
        os << k.labels[i];
    }
    rep.add(prefix + "classes", os.str());
    rep.add(prefix + "complete", k.complete);
}

int cmd_k0(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    report_k0(rep, "", k0_enumeration(pf.cats[ci], opt.cap));
    return 0;
}

int cmd_k0_compare(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    K0Result enumerated = k0_enumeration(pf.cats[ci], opt.cap);
    report_k0(rep, "enumeration ", enumerated);
    EndRing er = endomorphism_ring(pf.cats[ci]);
    K0Result oracle = k0_radical_oracle(er.ring, opt.cap);
    rep.add("oracle group", oracle.group.to_string());
    bool agree = enumerated.group == oracle.group;
    rep.add("agree", agree);
    return agree ? 0 : 1;
}

int cmd_weights_check(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    const AddCat& a = pf.cats[ci];
    std::vector<BoundedComplex> samples;
    for (int x = 0; x < a.num_objects(); ++x) {
        samples.push_back(object_complex(a, {x}, 0));
        samples.push_back(object_complex(a, {x}, 1));
    }
    std::mt19937 rng(opt.seed);
    auto random_elem = [&](const FpAbGroup& g) {
        GroupElement e = g.zero();
        for (size_t i = 0; i < e.size(); ++i) {
            long span = g.factors[i] == 0 ? 7 : g.factors[i].get_si();
            e[i] = static_cast<long>(rng() % span);
        }
        return g.reduce(e);
    };
    while (static_cast<int>(samples.size()) < opt.samples && a.num_objects() > 0) {
        int x = static_cast<int>(rng() % a.num_objects());
        int y = static_cast<int>(rng() % a.num_objects());
        int deg = static_cast<int>(rng() % 3) - 1;
        BoundedComplex cx = object_complex(a, {x}, deg);
        BoundedComplex cy = object_complex(a, {y}, deg);
        ChainMap f{deg, {elem_mat(a, x, y, random_elem(a.hom(x, y)))}};
        samples.push_back(cone(cx, cy, f));
    }
    ValidationReport r = check_weight_axioms(a, samples, WeightWindow{});
    rep.add("samples", static_cast<long>(samples.size()));
    rep.add("axioms", r.summary());
    return r.ok ? 0 : 1;
}

int cmd_kb_hom(const PresentationFile& pf, const Options& opt, Report& rep) {
    int ci = pick_category(pf, opt);
    const AddCat& a = pf.cats[ci];
    int x = a.object_index(opt.from_obj);
    int y = a.object_index(opt.to_obj);
    if (x < 0) throw ParseError(0, "unknown object '" + opt.from_obj + "'");
    if (y < 0) throw ParseError(0, "unknown object '" + opt.to_obj + "'");
    BoundedComplex cx = object_complex(a, {x}, 0);
    BoundedComplex cy = shift_complex(object_complex(a, {y}, 0), opt.shift);
    rep.add("group", kb_hom(cx, cy).to_string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finitely presented additive categories: validation, quotients, "
                 "Karoubi envelopes, square-zero extensions, K0"};
    app.require_subcommand(1);
    Options opt;

    struct Cmd {
        CLI::App* sub;
        int (*run)(const PresentationFile&, const Options&, Report&);
        bool needs_valid;
    };
    std::vector<Cmd> cmds;
    auto make = [&](const std::string& name, const std::string& desc,
                    int (*run)(const PresentationFile&, const Options&, Report&),
                    bool needs_valid = true) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("file", opt.path, "presentation file")->required();
        sub->add_option("--format", opt.format, "plain or structured")
            ->check(CLI::IsMember({"plain", "structured"}));
        sub->add_option("--category", opt.category, "category name (default: first in the file)");
        sub->add_option("--cap", opt.cap, "enumeration cap")->envname("ADDCAT_CAP");
        cmds.push_back({sub, run, needs_valid});
        return sub;
    };

    make("check", "validate every block of the file", cmd_check, false);

    CLI::App* quot = make("quotient", "quotient by morphisms factoring through objects",
                          cmd_quotient);
    quot->add_option("--kill", opt.kill, "objects spanning the subcategory to kill");
    quot->add_option("--subcat", opt.subcat_name, "named subcategory block to kill");

    CLI::App* kar = make("karoubi", "bounded idempotent completion", cmd_karoubi);
    kar->add_option("--bound", opt.bound, "carrier size bound")->envname("ADDCAT_BOUND");

    CLI::App* sqz = make("sqzero", "square-zero extension by a bimodule", cmd_sqzero);
    sqz->add_option("--bimodule", opt.bimodule_name, "bimodule block (default: hom bimodule)");
    sqz->add_option("--max-exponent", opt.max_exponent, "nilpotence search bound")
        ->envname("ADDCAT_MAX_EXPONENT");

    CLI::App* nil = make("nilpotent-check", "verify a functor is a nilpotent extension",
                         cmd_nilpotent_check);
    nil->add_option("--functor", opt.functor, "functor block name")->required();
    nil->add_option("--max-exponent", opt.max_exponent, "nilpotence search bound")
        ->envname("ADDCAT_MAX_EXPONENT");

    CLI::App* exc = make("exact-check", "verify b -> a -> c is exact up to idempotents",
                         cmd_exact_check);
    exc->add_option("--functor", opt.functor, "functor a -> c")->required();
    exc->add_option("--kill", opt.kill, "objects spanning b");
    exc->add_option("--subcat", opt.subcat_name, "named subcategory block spanning b");
    exc->add_option("--bound", opt.bound, "retract search bound")->envname("ADDCAT_BOUND");

    make("k0", "K0 by idempotent enumeration", cmd_k0);

    CLI::App* k0c = make("k0-compare", "K0 two ways: enumeration vs radical oracle",
                         cmd_k0_compare);
    k0c->add_option("--bound", opt.bound, "accepted for symmetry; enumeration needs no bound")
        ->envname("ADDCAT_BOUND");

    CLI::App* wts = make("weights-check", "weight structure axioms on sampled complexes",
                         cmd_weights_check);
    wts->add_option("--samples", opt.samples, "number of sample complexes");
    wts->add_option("--seed", opt.seed, "sampling seed");

    CLI::App* kbh = make("kb-hom", "maps in the bounded homotopy category", cmd_kb_hom);
    kbh->add_option("--from", opt.from_obj, "source object")->required();
    kbh->add_option("--to", opt.to_obj, "target object")->required();
    kbh->add_option("--shift", opt.shift, "shift applied to the target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const Cmd& c : cmds) {
            if (!c.sub->parsed()) continue;
            PresentationFile pf = parse_presentation_file(opt.path);
            Report rep;
            rep.add("command", c.sub->get_name());
            int code = 0;
            if (c.needs_valid && !validate_all(pf, rep))
                code = 1;
            else
                code = c.run(pf, opt, rep);
            rep.print(opt.format);
            return code;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
