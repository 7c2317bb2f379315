#include "diaglab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace diaglab {

using nlohmann::ordered_json;

Format parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["version"] = r.version;
    j["command"] = r.command;
    j["params"] = r.params;
    j["seed"] = r.seed;
    j["results"] = r.results;
    if (r.wall_time_s) j["wall_time_s"] = *r.wall_time_s;
    return j;
}

Report report_from_json(const ordered_json& j) {
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != report_schema) throw std::invalid_argument("unsupported report schema '" + r.schema + "'");
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::vector<std::string>>();
    r.params = j.at("params");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.results = j.at("results");
    if (!r.results.is_array()) throw std::invalid_argument("results must be an array");
    if (j.contains("wall_time_s")) r.wall_time_s = j.at("wall_time_s").get<double>();
    return r;
}

namespace {

std::string num(const ordered_json& v) {
    if (v.is_null()) return "-";
    return v.dump();
}

std::string str(const ordered_json& j, const char* key) {
    if (!j.contains(key)) return "-";
    const auto& v = j.at(key);
    return v.is_string() ? v.get<std::string>() : num(v);
}

void render_notes(std::ostream& os, const ordered_json& r) {
    if (!r.contains("notes")) return;
    for (const auto& n : r.at("notes")) os << "  note: " << n.get<std::string>() << "\n";
}

void render_certificate(std::ostream& os, const ordered_json& c, const std::string& indent) {
    os << indent << str(c, "method") << ": " << str(c, "value") << " (" << str(c, "kind") << ")";
    if (c.contains("upper_bound") && !c.at("upper_bound").is_null()) {
        os << ", upper bound " << num(c.at("upper_bound"));
    }
    os << "\n";
}

void render_result(std::ostream& os, const ordered_json& r) {
    const std::string type = str(r, "type");
    if (type == "classification") {
        const auto& c = r.at("classification");
        os << c.at("family").get<std::string>() << " p=" << str(c, "p");
        if (!c.at("q").is_null()) os << " q=" << str(c, "q");
        os << " n=" << str(c, "n") << "\n  " << c.at("chain").get<std::string>() << "\n";
    } else if (type == "table") {
        os << "p=" << str(r, "p") << " q=" << str(r, "q") << "\n";
        os << "  Table 1: " << str(r.at("rows"), "table1") << "\n";
        os << "  Table 2: " << str(r.at("rows"), "table2") << "\n";
        os << "  consistent with classification: " << str(r, "consistent") << "\n";
    } else if (type == "norm") {
        os << "ideal " << str(r, "ideal") << " p=" << str(r, "p") << " q=" << str(r, "q") << " n=" << str(r, "n")
           << "\n";
        render_certificate(os, r.at("certificate"), "  ");
        render_notes(os, r.at("certificate"));
    } else if (type == "factorization") {
        const auto& f = r.at("certificate");
        os << str(f, "method") << ": bound " << str(f, "bound") << " (" << str(f, "kind") << ")\n";
        for (const auto& leg : f.at("legs")) {
            os << "  " << str(leg, "name") << ": " << str(leg, "from") << " -> " << str(leg, "to") << ", norm "
               << str(leg, "norm");
            if (leg.at("multiplicity").get<int>() != 1) os << " ^" << str(leg, "multiplicity");
            os << "\n";
        }
        os << "  middle " << str(f, "middle") << " in " << str(f, "middle_ideal") << ", norm "
           << str(f, "middle_norm") << " [" << str(f, "middle_fact") << "]\n";
        if (f.at("scale").get<double>() != 1.0) os << "  scale " << str(f, "scale") << "\n";
        render_notes(os, f);
    } else if (type == "certificate") {
        render_certificate(os, r.at("certificate"), "");
        render_notes(os, r.at("certificate"));
    } else if (type == "phi-bound") {
        const auto& c = r.at("certificate");
        const auto& l = c.at("l_norm");
        os << "Phi_N bound " << str(c, "value") << " (" << str(c, "kind") << "), N=" << str(c, "dimension")
           << " n=" << str(c, "arity") << " " << str(c, "field") << "\n";
        os << "  ||L_N|| = " << str(l, "value") << ": " << str(l, "method") << " gives " << str(l, "verified_value")
           << " (" << str(l, "verified_kind") << "), analytic upper " << str(l, "analytic_upper")
           << ", consistent " << str(l, "consistent") << "\n";
    } else if (type == "diagnostic") {
        const auto& d = r.at("diagnostic");
        os << "regime: " << str(d, "regime") << "\n";
        for (const auto& s : d.at("series")) {
            os << "  " << str(s, "label") << " u=" << str(s, "u") << ": final " << num(s.at("values").back())
               << ", slope " << str(s, "slope") << "\n";
        }
        render_notes(os, d);
    } else if (type == "verify") {
        os << str(r, "identity") << ": " << (r.at("pass").get<bool>() ? "pass" : "FAIL") << ", residual "
           << str(r, "residual") << " (tolerance " << str(r, "tolerance") << ")\n";
    } else if (type == "growth") {
        const auto& g = r.at("scan");
        os << "growth of " << str(g, "ideal") << " for k^-" << str(g, "s") << " (p=" << str(g, "p")
           << " q=" << str(g, "q") << " n=" << str(g, "n") << ", u=" << str(g, "u") << ")\n";
        os << "  growth exponent " << str(g, "growth_exponent") << " -> "
           << (g.at("bounded").get<bool>() ? "bounded" : "unbounded") << "; membership " << str(g, "expected")
           << "; agrees " << str(g, "agrees") << "\n";
        render_notes(os, g);
    } else {
        os << r.dump(2) << "\n";
    }
}

}  // namespace

std::string render(const Report& r, Format f) {
    if (f == Format::json) return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    for (const auto& res : r.results) render_result(os, res);
    os << "seed " << r.seed;
    if (r.wall_time_s) os << ", " << *r.wall_time_s << " s";
    os << "\n";
    return os.str();
}

}  // namespace diaglab
