#include "curveforge/io.hpp"

#include <sstream>

#include "curveforge/admissibility.hpp"
#include "curveforge/parser.hpp"

namespace curveforge {

namespace {

std::string str(const RootDesc& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::SyntaxError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) fail(ErrorKind::SyntaxError, std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) fail(ErrorKind::SyntaxError, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

Json curve_to_json(const CurveEquation& c) {
    return Json{{"d", c.d()}, {"F", format_poly(c.F())}, {"G", format_poly(c.G())}, {"H", format_poly(c.H())}};
}

CurveEquation curve_from_json(const Json& j) {
    const int d = int_field(j, "d");
    if (d < 4) fail(ErrorKind::InvalidType, "d must be at least 4");
    return CurveEquation(parse_poly(string_field(j, "F"), d - 2), parse_poly(string_field(j, "G"), d - 1),
                         parse_poly(string_field(j, "H"), d));
}

Json data_to_json(const DataSpec& m) {
    Json q = Json::array(), off = Json::array();
    for (const auto& c : m.q_clusters()) {
        if (c.is_pair())
            q.push_back(Json{{"kind", "Pair"}, {"k", c.k}, {"kp", c.kp}, {"a", c.a}});
        else
            q.push_back(Json{{"kind", "Single"}, {"k", c.k}, {"a", c.a}});
    }
    for (const auto& s : m.off_q()) off.push_back(Json{{"kind", s.is_tacnode() ? "Tacnode" : "Cusp"}, {"b", s.b}});
    return Json{{"text", format_data(m)}, {"q_clusters", q}, {"off_q", off}};
}

DataSpec data_from_json(const Json& j) {
    if (j.is_string()) return parse_data(j.get<std::string>());
    std::vector<QCluster> q;
    std::vector<OffQSing> off;
    const Json& qs = field(j, "q_clusters");
    const Json& os = field(j, "off_q");
    if (!qs.is_array() || !os.is_array()) fail(ErrorKind::SyntaxError, "q_clusters and off_q must be arrays");
    for (const auto& c : qs) {
        const std::string kind = string_field(c, "kind");
        if (kind == "Pair")
            q.push_back(QCluster::pair(int_field(c, "k"), int_field(c, "kp"), int_field(c, "a")));
        else if (kind == "Single")
            q.push_back(QCluster::single(int_field(c, "k"), int_field(c, "a")));
        else
            fail(ErrorKind::SyntaxError, "unknown cluster kind " + kind);
    }
    for (const auto& s : os) {
        const std::string kind = string_field(s, "kind");
        if (kind == "Cusp")
            off.push_back(OffQSing::cusp(int_field(s, "b")));
        else if (kind == "Tacnode")
            off.push_back(OffQSing::tacnode(int_field(s, "b")));
        else
            fail(ErrorKind::SyntaxError, "unknown singularity kind " + kind);
    }
    return DataSpec(std::move(q), std::move(off));
}

std::string position_to_string(const Position& p) { return p ? to_string(*p) : "inf"; }

Position parse_position(std::string_view text) {
    if (text == "inf") return std::nullopt;
    return parse_rat(text);
}

Json report_to_json(const AnalysisReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.two_formula.entries)
        entries.push_back(Json{{"root", str(e.root)}, {"weight", e.weight()}, {"p", e.p}, {"q", e.q}});
    Json pairs = Json::array();
    for (const auto& [p, q] : r.two_formula.pairs()) pairs.push_back(Json::array({p, q}));
    Json out{{"d", r.d},
             {"discriminant", format_poly(r.discriminant)},
             {"two_formula", pairs},
             {"two_formula_entries", entries},
             {"lemma1", {{"sum_rule", r.lemma1.sum_rule}, {"parity_rule", r.lemma1.parity_rule}, {"odd_rule", r.lemma1.odd_rule}}}};
    out["data"] = r.data ? data_to_json(*r.data) : Json(nullptr);
    out["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
    Json label = nullptr;
    if (r.data) {
        try {
            label = std::string(label_name(corollary_class(*r.data)));
        } catch (const Error&) {
        }
    }
    out["class"] = label;
    out["irreducible_sufficient"] = r.irreducible_sufficient;
    out["irreducibility"] = r.irreducible_sufficient ? "irreducible" : "inconclusive";
    out["flex_tangent_entries"] = r.flex_tangent_entries;
    out["simple_tangent_entries"] = r.simple_tangent_entries;
    return out;
}

Json normal_form_to_json(const NormalForm& nf) {
    Json pts = Json::array();
    for (const auto& b : nf.branch_points) pts.push_back(to_string(b));
    return Json{{"genus", nf.g}, {"branch_points", pts}, {"scale", to_string(nf.scale)}, {"transform_log", nf.transform_log}};
}

Json synthesis_to_json(const Synthesis& s, const Json& parameters) {
    Json out = curve_to_json(s.curve);
    Json roots = Json::array();
    for (const auto& r : s.roots)
        roots.push_back(Json{{"position", position_to_string(r.position)},
                             {"p", r.p},
                             {"q", r.q},
                             {"sign", r.sign},
                             {"pin_next", r.pin_next}});
    Json free = Json::array();
    for (const auto& v : s.free_values) free.push_back(to_string(v));
    out["provenance"] = Json{{"parameters", parameters},
                             {"data", format_data(s.data)},
                             {"roots", roots},
                             {"delta_scale", to_string(s.delta_scale)},
                             {"attempt", s.attempt},
                             {"free_values", free}};
    return out;
}

Json error_to_json(const Error& e) {
    return Json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
}

Json enumerate_entry(const DataSpec& m) {
    return Json{{"data", format_data(m)}, {"N", m.N()},       {"s", m.s()},
                {"n", m.n()},             {"n_prime", m.n_prime()}, {"s_prime", m.s_prime()},
                {"class", std::string(label_name(corollary_class(m)))}};
}

}  // namespace curveforge
