#include "susylab/serialization.hpp"

#include "susylab/errors.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace susylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

json endpoint(double v) {
    if (v == -kInf) return "-inf";
    if (v == kInf) return "+inf";
    return v;
}

double parse_endpoint(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "-inf") return -kInf;
        if (s == "+inf" || s == "inf") return kInf;
        throw InvalidParameters("domain endpoint must be a number, \"-inf\" or \"+inf\"");
    }
    return j.get<double>();
}

std::optional<double> opt(const json& obj, const char* key) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return obj.at(key).get<double>();
}

// null for non-finite values, which JSON cannot hold
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_nan(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

} // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Phase parse_phase(std::string_view text) {
    if (text == "broken") return Phase::Broken;
    if (text == "unbroken") return Phase::Unbroken;
    throw InvalidParameters("unknown phase '" + std::string(text) + "'");
}

Partner parse_partner(std::string_view text) {
    if (text == "minus") return Partner::Minus;
    if (text == "plus") return Partner::Plus;
    throw InvalidParameters("unknown partner '" + std::string(text) + "' (minus or plus)");
}

json params_json(const ParamRecord& p) {
    json out = json::object();
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) out[key] = *v;
    };
    put("a", p.a);
    put("B", p.B);
    put("alpha", p.alpha);
    put("lambda", p.lambda);
    put("epsilon", p.epsilon);
    put("omega", p.omega);
    out["hbar"] = p.hbar;
    return out;
}

json to_json(const SuperpotentialInstance& sp) {
    return json{{"name", sp.name()},
                {"tag", std::string(to_string(sp.tag()))},
                {"params", params_json(sp.params())},
                {"domain", {{"xL", endpoint(sp.domain().xL)}, {"xR", endpoint(sp.domain().xR)}}}};
}

SuperpotentialInstance instance_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InvalidParameters("instance JSON must be an object");
        const auto tag_text = j.at("tag").get<std::string>();
        const auto tag = parse_class_tag(tag_text);
        if (!tag) throw InvalidParameters("unknown class tag '" + tag_text + "'");
        const json params = j.value("params", json::object());
        for (const auto& [key, _] : params.items())
            if (key != "a" && key != "B" && key != "alpha" && key != "lambda" &&
                key != "epsilon" && key != "omega" && key != "hbar")
                throw InvalidParameters("unknown parameter '" + key + "'");
        ParamRecord p;
        p.a = opt(params, "a");
        p.B = opt(params, "B");
        p.alpha = opt(params, "alpha");
        p.lambda = opt(params, "lambda");
        p.epsilon = opt(params, "epsilon");
        p.omega = opt(params, "omega");
        p.hbar = opt(params, "hbar").value_or(1.0);

        Branch branch = Branch::Right;
        if (j.contains("domain")) {
            const double xR = parse_endpoint(j.at("domain").at("xR"));
            if (*tag == ClassTag::IIIB_pos_lambda_unbounded && xR == 0.0) branch = Branch::Left;
        }
        auto sp = SuperpotentialInstance::make(j.value("name", std::string("custom")), *tag, p,
                                               branch);
        if (j.contains("domain")) {
            const double xL = parse_endpoint(j.at("domain").at("xL"));
            const double xR = parse_endpoint(j.at("domain").at("xR"));
            const auto& d = sp.domain();
            auto same = [](double u, double v) {
                return u == v || (std::isfinite(u) && std::isfinite(v) &&
                                  std::abs(u - v) <= 1e-12 * std::max(1.0, std::abs(v)));
            };
            if (!same(xL, d.xL) || !same(xR, d.xR))
                throw InvalidParameters("domain does not match the class tag and parameters");
        }
        return sp;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameters(std::string("malformed instance JSON: ") + e.what());
    }
}

json to_json(const PhaseReport& report, const std::optional<DiscreteMap>& map) {
    json out{{"phase", std::string(to_string(report.phase))},
             {"signs", {report.boundary_signs[0], report.boundary_signs[1]}}};
    if (map) {
        out["map"] = params_json(map->mapped_params);
        out["shift"] = map->energy_shift;
        out["rule"] = map->rule;
    } else {
        out["map"] = nullptr;
        out["shift"] = nullptr;
    }
    return out;
}

json to_json(const SpectrumResult& s) {
    json levels = json::array();
    for (const auto& l : s.levels) levels.push_back({{"n", l.n}, {"E", l.value}});
    return json{{"instance", s.instance},
                {"phase", std::string(to_string(s.phase))},
                {"levels", levels},
                {"formula", s.formula},
                {"g", s.g_function},
                {"hierarchy_condition_satisfied", s.hierarchy_condition_satisfied}};
}

SpectrumResult spectrum_from_json(const json& j) {
    SpectrumResult s;
    s.instance = j.at("instance").get<std::string>();
    s.phase = parse_phase(j.at("phase").get<std::string>());
    s.formula = j.at("formula").get<std::string>();
    s.g_function = j.value("g", std::string());
    s.hierarchy_condition_satisfied = j.value("hierarchy_condition_satisfied", true);
    for (const auto& l : j.at("levels"))
        s.levels.push_back({l.at("n").get<int>(), l.at("E").get<double>(), s.phase, s.formula});
    return s;
}

std::string spectrum_csv(const SpectrumResult& s) {
    std::string out = "n,E\n";
    for (const auto& l : s.levels) out += std::to_string(l.n) + "," + format_number(l.value) + "\n";
    return out;
}

json to_json(const QuantizationReport& r) {
    return json{{"instance", r.instance},
                {"phase", std::string(to_string(r.phase))},
                {"n", r.n},
                {"hbar", r.hbar},
                {"E", r.E},
                {"x1", number(r.turning.x1)},
                {"x2", number(r.turning.x2)},
                {"integral", r.integral},
                {"target", r.target},
                {"abs_error", r.abs_error},
                {"quadrature_nodes", r.quadrature_nodes},
                {"root_residual", r.turning.residual}};
}

QuantizationReport quantization_from_json(const json& j) {
    QuantizationReport r;
    r.instance = j.at("instance").get<std::string>();
    r.phase = parse_phase(j.at("phase").get<std::string>());
    r.n = j.at("n").get<int>();
    r.hbar = j.at("hbar").get<double>();
    r.E = j.at("E").get<double>();
    r.turning.x1 = number_or_nan(j.at("x1"));
    r.turning.x2 = number_or_nan(j.at("x2"));
    r.turning.residual = j.value("root_residual", 0.0);
    r.integral = j.at("integral").get<double>();
    r.target = j.at("target").get<double>();
    r.abs_error = j.at("abs_error").get<double>();
    r.quadrature_nodes = j.value("quadrature_nodes", std::size_t{0});
    return r;
}

std::string quantization_csv_header() { return "instance,phase,n,hbar,E,x1,x2,integral,target,abs_error"; }

std::string quantization_csv_row(const QuantizationReport& r) {
    std::ostringstream os;
    os << r.instance << ',' << to_string(r.phase) << ',' << r.n << ',' << format_number(r.hbar)
       << ',' << format_number(r.E) << ',' << format_number(r.turning.x1) << ','
       << format_number(r.turning.x2) << ',' << format_number(r.integral) << ','
       << format_number(r.target) << ',' << format_number(r.abs_error);
    return os.str();
}

json to_json(const OracleSpectrum& s) {
    json out{{"which", std::string(to_string(s.which))},
             {"N", s.grid.N},
             {"xmin", s.grid.xmin},
             {"xmax", s.grid.xmax},
             {"eigenvalues", s.eigenvalues}};
    if (s.richardson_estimate) out["richardson"] = *s.richardson_estimate;
    return out;
}

OracleSpectrum oracle_from_json(const json& j) {
    OracleSpectrum s;
    s.which = parse_partner(j.at("which").get<std::string>());
    s.grid = {j.at("xmin").get<double>(), j.at("xmax").get<double>(), j.at("N").get<int>()};
    s.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    if (j.contains("richardson")) s.richardson_estimate = j.at("richardson").get<std::vector<double>>();
    return s;
}

json to_json(const ComparisonReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"analytic", row.analytic},
                        {"numeric", row.numeric},
                        {"rel_error", row.rel_error},
                        {"pass", row.pass}});
    json out{{"rel_tol", r.rel_tol}, {"all_pass", r.all_pass}, {"rows", rows}};
    if (r.ground_level) out["ground_level"] = *r.ground_level;
    return out;
}

std::string comparison_csv(const ComparisonReport& r) {
    std::string out = "n,analytic,numeric,rel_error,pass\n";
    for (const auto& row : r.rows)
        out += std::to_string(row.n) + "," + format_number(row.analytic) + "," +
               format_number(row.numeric) + "," + format_number(row.rel_error) + "," +
               (row.pass ? "true" : "false") + "\n";
    return out;
}

} // namespace susylab
