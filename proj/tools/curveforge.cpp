#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "curveforge/admissibility.hpp"
#include "curveforge/cremona.hpp"
#include "curveforge/io.hpp"
#include "curveforge/parallel.hpp"
#include "curveforge/parser.hpp"
#include "curveforge/synthesis.hpp"

using namespace curveforge;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 0;
    int jobs = 1;
};

Globals G;

bool text() { return G.format == "text"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CurveEquation load_curve(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::SyntaxError, path + ": " + e.what());
    }
    return curve_from_json(j);
}

// --data accepts a file (canonical text or JSON) or the text itself
DataSpec load_data(const std::string& arg) {
    std::string body = arg;
    if (std::filesystem::is_regular_file(arg)) body = read_file(arg);
    const auto start = body.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && body[start] == '{') {
        try {
            return data_from_json(Json::parse(body));
        } catch (const Json::parse_error& e) {
            fail(ErrorKind::SyntaxError, e.what());
        }
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
    return parse_data(body.substr(start == std::string::npos ? 0 : start));
}

std::vector<Position> positions(const std::vector<std::string>& items) {
    std::vector<Position> out;
    for (const auto& s : items) out.push_back(parse_position(s));
    return out;
}

std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
    std::string s = "{";
    for (size_t i = 0; i < pairs.size(); ++i)
        s += (i ? "," : "") + std::string("(") + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    return s + "}";
}

void print_curve_text(const CurveEquation& c) {
    std::cout << "d: " << c.d() << "\nF: " << format_poly(c.F()) << "\nG: " << format_poly(c.G())
              << "\nH: " << format_poly(c.H()) << "\n";
}

void print_report_text(const std::string& name, const AnalysisReport& r) {
    if (!name.empty()) std::cout << "file: " << name << "\n";
    std::cout << "d: " << r.d << "\nT(C): " << pairs_text(r.two_formula.pairs()) << "\n";
    std::cout << "lemma1: " << (r.lemma1.all() ? "ok" : "violated") << "\n";
    std::cout << "data: " << (r.data ? format_data(*r.data) : "none") << "\n";
    std::cout << "genus: " << (r.genus ? std::to_string(*r.genus) : "none") << "\n";
    std::cout << "irreducible_sufficient: " << (r.irreducible_sufficient ? "true" : "false") << "\n";
    std::cout << "irreducibility: " << (r.irreducible_sufficient ? "irreducible" : "inconclusive") << "\n";
}

void print_synthesis(const Synthesis& s, const Json& params) {
    if (text()) {
        print_curve_text(s.curve);
        std::cout << "data: " << format_data(s.data) << "\n";
    } else {
        emit(synthesis_to_json(s, params));
    }
}

int run_analyze(const std::vector<std::string>& files) {
    std::vector<CurveEquation> curves;
    for (const auto& f : files) curves.push_back(load_curve(f));
    const auto out = analyze_batch(curves);
    for (const auto& o : out)
        if (!o.ok()) throw Error(*o.error, o.message);
    if (text()) {
        for (size_t i = 0; i < out.size(); ++i) print_report_text(files.size() > 1 ? files[i] : "", *out[i].value);
        return 0;
    }
    if (files.size() == 1) {
        emit(report_to_json(*out[0].value));
    } else {
        Json arr = Json::array();
        for (size_t i = 0; i < out.size(); ++i) arr.push_back(Json{{"file", files[i]}, {"report", report_to_json(*out[i].value)}});
        emit(arr);
    }
    return 0;
}

struct ConstructArgs {
    std::string cls;
    int g = 1, r = 1, j = 0, l = 0;
    std::vector<int> b;
    std::vector<std::string> lambda;
    std::string sign = "+";
};

int run_construct(const ConstructArgs& a) {
    const auto kind = parse_construction(a.cls);
    if (!kind) throw Usage("unknown class " + a.cls);
    ClassParams p;
    p.kind = *kind;
    p.g = a.g;
    p.r = a.r;
    p.j = a.j;
    p.l = a.l;
    p.tails = a.b;
    for (const auto& s : a.lambda) p.lambdas.push_back(parse_rat(s));
    p.sign = a.sign == "-" ? -1 : 1;
    p.seed = G.seed;
    const Synthesis s = construct_class(p);
    Json lam = Json::array();
    for (const auto& v : p.lambdas) lam.push_back(to_string(v));
    print_synthesis(s, Json{{"command", "construct"}, {"class", a.cls}, {"genus", a.g}, {"r", a.r}, {"j", a.j},
                            {"l", a.l}, {"b", a.b}, {"lambda", lam}, {"sign", a.sign}, {"seed", G.seed}});
    return 0;
}

int run_synthesize(const std::string& data, int d, int g, const std::vector<std::string>& placement) {
    const DataSpec m = load_data(data);
    SynthesizeOptions o;
    o.seed = G.seed;
    o.placement = positions(placement);
    const Synthesis s = synthesize(d, g, m, o);
    print_synthesis(s, Json{{"command", "synthesize"}, {"data", format_data(m)}, {"d", d}, {"genus", g},
                            {"placement", placement}, {"seed", G.seed}});
    return 0;
}

int run_reduce(const std::string& file) {
    const NormalForm nf = reduce_to_normal_form(load_curve(file));
    if (text()) {
        std::cout << "genus: " << nf.g << "\nbranch_points:";
        for (const auto& b : nf.branch_points) std::cout << " " << to_string(b);
        std::cout << "\nscale: " << to_string(nf.scale) << "\n";
        for (const auto& e : nf.transform_log) std::cout << "map: " << e << "\n";
    } else {
        emit(normal_form_to_json(nf));
    }
    return 0;
}

int run_enumerate(int d, int g, const std::string& filter) {
    const EnumFilter f = filter == "cuspidal" ? EnumFilter::cuspidal
                         : filter == "bibranched" ? EnumFilter::bibranched
                                                  : EnumFilter::all;
    const auto specs = G.jobs > 1 ? enumerate(d, g, f) : enumerate_serial(d, g, f);
    if (text()) {
        for (const auto& m : specs) std::cout << format_data(m) << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& m : specs) arr.push_back(enumerate_entry(m));
        emit(arr);
    }
    return 0;
}

int run_verify(const std::string& file, const std::string& data) {
    const DataSpec want = load_data(data);
    const AnalysisReport r = analyze(load_curve(file));
    const bool match = r.data && *r.data == want;
    if (text()) {
        std::cout << (match ? "match" : "mismatch") << "\n";
    } else {
        emit(Json{{"match", match}, {"expected", format_data(want)}, {"actual", r.data ? Json(format_data(*r.data)) : Json(nullptr)}});
    }
    return match ? 0 : 1;
}

int run_transform(const std::string& file, const std::string& map, const std::string& c) {
    const Rat cc = parse_rat(c);
    const CremonaMap m = map == "phi" ? phi(cc) : map == "phi_inverse" ? phi_inverse(cc) : map == "iota" ? iota() : identity_map();
    const TernaryForm t = strict_transform(load_curve(file).polynomial(), m);
    if (t.z_degree() == 2) {
        const CurveEquation out = CurveEquation::from_ternary(t);
        if (text())
            print_curve_text(out);
        else
            emit(curve_to_json(out));
    } else if (text()) {
        std::cout << format_ternary(t) << "\n";
    } else {
        emit(Json{{"degree", t.degree()}, {"polynomial", format_ternary(t)}});
    }
    return 0;
}

int run_pgl2(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const bool eq = G.jobs > 1 ? pgl2_equivalent(positions(a), positions(b)) : pgl2_equivalent_serial(positions(a), positions(b));
    if (text())
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    else
        emit(Json{{"equivalent", eq}});
    return eq ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analyze, synthesize and reduce plane curves of type (d, d-2)", "curveforge"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::uint64_t> seed;
    app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "RNG seed (falls back to CURVEFORGE_SEED)");
    app.add_option("--jobs", G.jobs, "OpenMP threads for the parallel sweeps")->check(CLI::PositiveNumber);

    std::function<int()> action;

    std::vector<std::string> analyze_files;
    auto* an = app.add_subcommand("analyze", "2-formula, data and genus of a curve file");
    an->add_option("curve", analyze_files, "Curve JSON file(s)")->required()->check(CLI::ExistingFile);
    an->callback([&] { action = [&] { return run_analyze(analyze_files); }; });

    ConstructArgs ca;
    auto* co = app.add_subcommand("construct", "Equation of a class family");
    co->add_option("--class", ca.cls, "a, b, c, e, f, aa, aa+, aa1-aa4, ab, ab+, ac, ac+, bb, bc, cc")->required();
    co->add_option("--genus", ca.g, "Genus");
    co->add_option("--r", ca.r, "Second cluster size r");
    co->add_option("--j", ca.j, "Class integer j");
    co->add_option("--l", ca.l, "Class integer l");
    co->add_option("--b", ca.b, "Tail lengths")->delimiter(',');
    co->add_option("--lambda", ca.lambda, "Root positions, tails first")->delimiter(',');
    co->add_option("--sign", ca.sign, "Square-root branch")->check(CLI::IsMember({"+", "-"}));
    co->callback([&] { action = [&] { return run_construct(ca); }; });

    std::string syn_data;
    int syn_d = 0, syn_g = 0;
    std::vector<std::string> syn_place;
    auto* sy = app.add_subcommand("synthesize", "Equation realizing admissible data");
    sy->add_option("--data", syn_data, "Data text or file")->required();
    sy->add_option("--d", syn_d, "Degree")->required();
    sy->add_option("--genus", syn_g, "Genus")->required();
    sy->add_option("--placement", syn_place, "Root positions (inf allowed)")->delimiter(',');
    sy->callback([&] { action = [&] { return run_synthesize(syn_data, syn_d, syn_g, syn_place); }; });

    std::string red_file;
    auto* re = app.add_subcommand("reduce", "Hyperelliptic normal form");
    re->add_option("curve", red_file, "Curve JSON file")->required()->check(CLI::ExistingFile);
    re->callback([&] { action = [&] { return run_reduce(red_file); }; });

    int en_d = 0, en_g = 0;
    std::string en_filter = "all";
    auto* en = app.add_subcommand("enumerate", "All admissible data for (d, g)");
    en->add_option("--d", en_d, "Degree")->required();
    en->add_option("--genus", en_g, "Genus")->required();
    en->add_option("--filter", en_filter, "Class filter")->check(CLI::IsMember({"all", "cuspidal", "bibranched"}));
    en->callback([&] { action = [&] { return run_enumerate(en_d, en_g, en_filter); }; });

    std::string ve_file, ve_data;
    auto* ve = app.add_subcommand("verify", "Exit 0 iff the curve has the given data");
    ve->add_option("curve", ve_file, "Curve JSON file")->required()->check(CLI::ExistingFile);
    ve->add_option("--data", ve_data, "Data text or file")->required();
    ve->callback([&] { action = [&] { return run_verify(ve_file, ve_data); }; });

    std::string tr_file, tr_map = "phi", tr_c = "0";
    auto* tr = app.add_subcommand("transform", "Strict transform under a Cremona map");
    tr->add_option("curve", tr_file, "Curve JSON file")->required()->check(CLI::ExistingFile);
    tr->add_option("--map", tr_map, "Map")->check(CLI::IsMember({"phi", "phi_inverse", "iota", "identity"}));
    tr->add_option("--c", tr_c, "Parameter c of phi");
    tr->callback([&] { action = [&] { return run_transform(tr_file, tr_map, tr_c); }; });

    std::vector<std::string> pa, pb;
    auto* pg = app.add_subcommand("pgl2", "Exit 0 iff the point sets are PGL2-equivalent");
    pg->add_option("--a", pa, "First set")->required()->delimiter(',');
    pg->add_option("--b", pb, "Second set")->required()->delimiter(',');
    pg->callback([&] { action = [&] { return run_pgl2(pa, pb); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (seed) {
        G.seed = *seed;
    } else if (const char* env = std::getenv("CURVEFORGE_SEED")) {
        try {
            size_t used = 0;
            G.seed = std::stoull(env, &used);
            if (env[used] != '\0') throw std::invalid_argument(env);
        } catch (const std::exception&) {
            std::cerr << "CURVEFORGE_SEED must be an unsigned integer\n";
            return 2;
        }
    }
    omp_set_num_threads(G.jobs);

    try {
        return action();
    } catch (const Usage& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << error_to_json(e).dump() << "\n";
        return 1;
    }
}
