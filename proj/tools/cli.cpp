#include "cli.hpp"

#include "susylab/catalog.hpp"
#include "susylab/errors.hpp"
#include "susylab/invariance.hpp"
#include "susylab/oracle.hpp"
#include "susylab/serialization.hpp"
#include "susylab/spectra.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace susylab::cli {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kQuantizationTol = 1e-9;
constexpr int kOracleLevels = 4;

// Configuration problems map to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sci(double v) {
    if (!std::isfinite(v)) return format_number(v);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fixed(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string domain_text(const DomainSpec& d) {
    auto end = [](double v) {
        if (std::isinf(v)) return std::string(v < 0 ? "-∞" : "∞");
        return fixed(v);
    };
    return "(" + end(d.xL) + "," + end(d.xR) + ")";
}

std::string params_text(const ParamRecord& p) {
    std::string out;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (!v) return;
        if (!out.empty()) out += ' ';
        out += std::string(key) + "=" + fixed(*v);
    };
    put("a", p.a);
    put("B", p.B);
    put("alpha", p.alpha);
    put("lambda", p.lambda);
    put("omega", p.omega);
    if (!out.empty()) out += ' ';
    out += "hbar=" + fixed(p.hbar);
    return out;
}

std::string phase_text(const SuperpotentialInstance& sp) {
    try {
        return std::string(to_string(classify_phase(sp).phase));
    } catch (const IndeterminatePhase&) {
        return "indeterminate";
    }
}

std::vector<double> hbars_or(const RunConfig& cfg, std::vector<double> fallback) {
    return cfg.hbars.empty() ? fallback : cfg.hbars;
}

// ---- verify / suite building blocks ---------------------------------------

CheckRecord record(const std::string& check, const SuperpotentialInstance& sp,
                   const std::string& detail) {
    CheckRecord r;
    r.check = check;
    r.instance = sp.name();
    r.phase = phase_text(sp);
    r.detail = detail;
    return r;
}

void residual_checks(const SuperpotentialInstance& sp, SuiteResult& out) {
    const auto grid = standard_grid(sp);
    const std::string detail = std::to_string(grid.size()) + " points";

    auto r = record("riccati", sp, detail);
    r.worst_error = check_riccati(sp, grid);
    r.status = r.worst_error < kResidualTol ? "pass" : "fail";
    out.checks.push_back(r);

    r = record("shape-invariance", sp, detail);
    r.worst_error = additive_si_residual(sp, grid);
    r.status = r.worst_error < kResidualTol ? "pass" : "fail";
    out.checks.push_back(r);

    if (family_of(sp.tag()) != ClassFamily::III) return;
    r = record("discrete-map", sp, "");
    try {
        const auto map = discrete_si_map(sp);
        const auto check = verify_discrete_si(sp, constancy_grid(sp));
        const double shift_err = std::abs(check.measured_shift - check.expected_shift) /
                                 std::max(1.0, std::abs(check.expected_shift));
        r.detail = map.rule;
        r.worst_error = std::max(check.max_deviation, shift_err);
        r.status = r.worst_error < kResidualTol ? "pass" : "fail";
        r.message = "shift " + fixed(check.measured_shift) + " (expected " +
                    fixed(check.expected_shift) + ")";
    } catch (const UnsupportedParameters& e) {
        r.status = "skip";
        r.message = e.what();
    }
    out.checks.push_back(r);
}

void quantization_checks(const SuperpotentialInstance& base, const std::vector<double>& hbars,
                         int nmax, double tol, SuiteResult& out) {
    for (double hbar : hbars) {
        const auto sp = base.with_hbar(hbar);
        const bool broken = phase_text(sp) == "broken";
        auto r = record(broken ? "bswkb" : "swkb", sp,
                        "hbar=" + fixed(hbar) + " n=0.." + std::to_string(nmax));
        int done = 0;
        for (int n = 0; n <= nmax; ++n) {
            try {
                const auto q = verify_quantization(sp, n);
                out.quantization.push_back(q);
                r.worst_error = std::max(r.worst_error, q.abs_error);
                ++done;
            } catch (const HierarchyError&) {
                r.message = "levels n >= " + std::to_string(n) + " skipped: hierarchy condition";
                break;
            } catch (const SingleIntersection& e) {
                r.message = std::string("BSWKB skipped: ") + e.what();
                break;
            } catch (const UnsupportedClass& e) {
                r.message = e.what();
                break;
            } catch (const UnsupportedParameters& e) {
                r.message = e.what();
                break;
            } catch (const Error& e) {
                r.status = "fail";
                r.message = e.what();
                break;
            }
        }
        if (done > 0 && done <= nmax)
            r.detail = "hbar=" + fixed(hbar) + " n=0.." + std::to_string(done - 1);
        if (r.status.empty()) {
            if (done == 0) r.status = "skip";
            else r.status = r.worst_error < tol ? "pass" : "fail";
        }
        out.checks.push_back(r);
    }
}

std::vector<double> analytic_levels(const SuperpotentialInstance& sp, int k) {
    std::vector<double> out;
    const bool broken = classify_phase(sp).phase == Phase::Broken;
    for (int n = 0; n < k; ++n) {
        try {
            out.push_back(broken ? broken_energy(sp, n) : unbroken_energy(sp, n));
        } catch (const HierarchyError&) {
            break;
        }
    }
    return out;
}

void oracle_checks(const SuperpotentialInstance& sp, const RunConfig& cfg, SuiteResult& out) {
    const std::string detail = "N=" + std::to_string(cfg.oracle_nodes) + " k=" +
                               std::to_string(kOracleLevels);
    auto r = record("oracle-spectrum", sp, detail);
    std::vector<double> analytic;
    try {
        if (phase_text(sp) == "broken" && family_of(sp.tag()) != ClassFamily::III)
            throw UnsupportedClass("no analytic broken-phase spectrum for Classes I and II");
        analytic = analytic_levels(sp, kOracleLevels);
    } catch (const Error& e) {
        r.status = "skip";
        r.message = e.what();
        out.checks.push_back(r);
        return;
    }

    OracleOptions opts;
    opts.tolerance = cfg.oracle_tol;
    try {
        const auto grid = auto_grid(sp, Partner::Minus, kOracleLevels, cfg.oracle_nodes);
        const auto numeric = solve_spectrum(sp, Partner::Minus, grid, kOracleLevels, opts);
        const auto cmp = compare_spectra(analytic, numeric, cfg.oracle_tol);
        r.worst_error = cmp.worst_error();
        r.status = cmp.all_pass ? "pass" : "fail";
        r.message = "grid [" + fixed(grid.xmin) + ", " + fixed(grid.xmax) + "]";

        auto c = record("oracle-convergence", sp, "level 0, three grids");
        const auto fit = convergence_order(sp, Partner::Minus, grid, 0);
        c.worst_error = std::abs(fit.order - 2.0);
        c.status = c.worst_error < 0.2 ? "pass" : "fail";
        c.message = "fitted order " + fixed(fit.order);
        out.checks.push_back(r);
        out.checks.push_back(c);
    } catch (const Error& e) {
        r.status = "fail";
        r.message = e.what();
        out.checks.push_back(r);
    }

    auto iso = record("oracle-isospectrality", sp, detail);
    try {
        const auto grid = auto_grid_pair(sp, kOracleLevels, cfg.oracle_nodes);
        const auto cmp = verify_isospectrality(sp, grid, kOracleLevels, opts);
        iso.worst_error = cmp.worst_error();
        if (cmp.ground_level) {
            iso.worst_error = std::max(iso.worst_error, std::abs(*cmp.ground_level));
            iso.message = "E-_0 = " + sci(*cmp.ground_level);
        }
        iso.status = cmp.all_pass ? "pass" : "fail";
    } catch (const Error& e) {
        iso.status = "fail";
        iso.message = e.what();
    }
    out.checks.push_back(iso);
}

// ---- output ----------------------------------------------------------------

json suite_json(const SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks)
        checks.push_back({{"check", c.check},
                          {"instance", c.instance},
                          {"phase", c.phase},
                          {"detail", c.detail},
                          {"status", c.status},
                          {"worst_error", c.worst_error},
                          {"message", c.message}});
    json quantization = json::array();
    for (const auto& q : s.quantization) quantization.push_back(to_json(q));
    return json{{"all_pass", s.all_pass()},
                {"summary",
                 {{"pass", s.count("pass")},
                  {"fail", s.count("fail")},
                  {"skip", s.count("skip")},
                  {"worst_error",
                   {{"swkb", s.worst("swkb")},
                    {"bswkb", s.worst("bswkb")},
                    {"riccati", s.worst("riccati")},
                    {"shape_invariance", s.worst("shape-invariance")},
                    {"discrete_map", s.worst("discrete-map")},
                    {"oracle", s.worst("oracle-spectrum")},
                    {"isospectrality", s.worst("oracle-isospectrality")}}}}},
                {"checks", checks},
                {"quantization", quantization}};
}

std::string suite_table(const SuiteResult& s) {
    std::ostringstream os;
    os << pad("check", 22) << pad("instance", 20) << pad("phase", 10) << pad("detail", 37)
       << pad("status", 8) << "worst\n";
    for (const auto& c : s.checks) {
        os << pad(c.check, 22) << pad(c.instance, 20) << pad(c.phase, 10) << pad(c.detail, 37)
           << pad(c.status, 8) << sci(c.worst_error) << '\n';
        if (!c.message.empty() && c.status != "pass") os << "    " << c.message << '\n';
    }
    os << s.checks.size() << " checks: " << s.count("pass") << " pass, " << s.count("fail")
       << " fail, " << s.count("skip") << " skip; worst quantization error "
       << sci(std::max(s.worst("swkb"), s.worst("bswkb"))) << '\n';
    return os.str();
}

std::string suite_csv(const SuiteResult& s) {
    std::string out = quantization_csv_header() + "\n";
    for (const auto& q : s.quantization) out += quantization_csv_row(q) + "\n";
    return out;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("write to '" + cfg.out + "' failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- commands --------------------------------------------------------------

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
    std::optional<ClassTag> filter;
    if (!cfg.tag_filter.empty()) {
        filter = parse_class_tag(cfg.tag_filter);
        if (!filter) throw ConfigError("unknown class tag '" + cfg.tag_filter + "'");
    }
    json arr = json::array();
    std::ostringstream table;
    std::string csv = "name,tag,xL,xR,phase\n";
    for (const auto& e : catalog_entries()) {
        const auto& sp = e.instance;
        if (filter && sp.tag() != *filter) continue;
        auto j = to_json(sp);
        j["phase"] = phase_text(sp);
        j["broken_params"] = e.broken_preset ? params_json(*e.broken_preset) : json(nullptr);
        j["description"] = e.description;
        arr.push_back(j);
        table << sp.name() << "  " << to_string(sp.tag()) << "  " << domain_text(sp.domain())
              << "  " << phase_text(sp) << "  " << params_text(sp.params()) << '\n';
        csv += sp.name() + "," + std::string(to_string(sp.tag())) + "," +
               format_number(sp.domain().xL) + "," + format_number(sp.domain().xR) + "," +
               phase_text(sp) + "\n";
    }
    if (cfg.format == "json") emit(cfg, dump(arr), out);
    else if (cfg.format == "csv") emit(cfg, csv, out);
    else emit(cfg, table.str(), out);
    return kPass;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    const auto sp = resolve_instance(cfg).with_hbar(hbars_or(cfg, {1.0}).front());
    const int count = cfg.nmax.value_or(9) + 1;
    const auto spectrum = build_spectrum(sp, count);

    if (!cfg.both_partners) {
        if (cfg.format == "json") {
            emit(cfg, dump(to_json(spectrum)), out);
        } else if (cfg.format == "csv") {
            emit(cfg, spectrum_csv(spectrum), out);
        } else {
            std::ostringstream os;
            os << sp.name() << " (" << to_string(sp.tag()) << ", " << params_text(sp.params())
               << "): " << to_string(spectrum.phase) << " phase\n";
            os << "formula " << spectrum.formula << '\n';
            for (const auto& l : spectrum.levels) os << pad(std::to_string(l.n), 4) << fixed(l.value) << '\n';
            if (!spectrum.hierarchy_condition_satisfied)
                os << "(truncated: hierarchy condition fails beyond n = "
                   << spectrum.levels.back().n << ")\n";
            emit(cfg, os.str(), out);
        }
        return kPass;
    }

    // E-_n and E+_n side by side.
    json levels = json::array();
    std::string csv = "n,E_minus,E_plus\n";
    std::ostringstream table;
    table << sp.name() << ": " << to_string(spectrum.phase) << " phase\n"
          << pad("n", 4) << pad("E-_n", 20) << "E+_n\n";
    for (int n = 0; n < count; ++n) {
        std::pair<double, double> pair;
        try {
            pair = spectrum.phase == Phase::Broken
                       ? isospectral_pair(sp, n)
                       : std::pair{unbroken_energy(sp, n), isospectral_pair(sp, n).second};
        } catch (const HierarchyError&) {
            break;
        }
        levels.push_back({{"n", n}, {"E_minus", pair.first}, {"E_plus", pair.second}});
        csv += std::to_string(n) + "," + format_number(pair.first) + "," +
               format_number(pair.second) + "\n";
        table << pad(std::to_string(n), 4) << pad(fixed(pair.first), 20) << fixed(pair.second)
              << '\n';
    }
    if (cfg.format == "json")
        emit(cfg,
             dump(json{{"instance", sp.name()},
                       {"phase", std::string(to_string(spectrum.phase))},
                       {"levels", levels}}),
             out);
    else if (cfg.format == "csv") emit(cfg, csv, out);
    else emit(cfg, table.str(), out);
    return kPass;
}

int finish_suite(const RunConfig& cfg, const SuiteResult& result, std::ostream& out,
                 std::ostream& err, double seconds) {
    if (cfg.format == "json") emit(cfg, dump(suite_json(result)), out);
    else if (cfg.format == "csv") emit(cfg, suite_csv(result), out);
    else emit(cfg, suite_table(result), out);
    if (!cfg.json_out.empty()) {
        RunConfig file_cfg = cfg;
        file_cfg.out = cfg.json_out;
        emit(file_cfg, dump(suite_json(result)), out);
    }
    err << "runtime " << fixed(seconds) << " s\n";
    return result.all_pass() ? kPass : kCheckFailure;
}

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_verify(resolve_instance(cfg), cfg);
    return finish_suite(cfg, result, out, err, elapsed(start));
}

int cmd_suite(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_suite(cfg);
    return finish_suite(cfg, result, out, err, elapsed(start));
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path.string() + "' failed");
}

int cmd_figure_data(const RunConfig& cfg, std::ostream& out) {
    const auto chosen = resolve_instance(cfg);
    const auto entry = find_entry(chosen.name());

    std::optional<SuperpotentialInstance> broken, unbroken;
    (phase_text(chosen) == "broken" ? broken : unbroken) = chosen;
    if (entry) {
        if (!unbroken) unbroken = entry->instance.with_hbar(chosen.hbar());
        if (!broken && entry->broken_preset) {
            auto p = *entry->broken_preset;
            p.hbar = chosen.hbar();
            broken = entry->instance.with_params(p);
        }
    }

    const auto& d = chosen.domain();
    auto [lo, hi] = standard_range(chosen);
    if (d.left_finite() != d.right_finite()) {
        lo = d.left_finite() ? 0.2 : -8.0;
        hi = d.left_finite() ? 8.0 : -0.2;
    }
    lo = cfg.xmin.value_or(lo);
    hi = cfg.xmax.value_or(hi);
    if (!(lo < hi) || !d.contains(lo) || !d.contains(hi))
        throw ConfigError("plot range must satisfy xmin < xmax inside the domain");
    if (cfg.points < 2) throw ConfigError("--points must be >= 2");
    const auto xs = linspace(lo, hi, static_cast<std::size_t>(cfg.points));

    std::string fig1 = "x";
    std::string fig2 = "x";
    if (broken) {
        fig1 += ",W_broken";
        fig2 += ",Vminus_broken,Vplus_broken";
    }
    if (unbroken) {
        fig1 += ",W_unbroken";
        fig2 += ",Vminus_unbroken,Vplus_unbroken";
    }
    fig1 += "\n";
    fig2 += "\n";
    for (double x : xs) {
        fig1 += format_number(x);
        fig2 += format_number(x);
        for (const auto* sp : {broken ? &*broken : nullptr, unbroken ? &*unbroken : nullptr}) {
            if (!sp) continue;
            fig1 += "," + format_number(evaluate_W(*sp, x));
            fig2 += "," + format_number(partner_potential(*sp, x, Partner::Minus)) + "," +
                    format_number(partner_potential(*sp, x, Partner::Plus));
        }
        fig1 += "\n";
        fig2 += "\n";
    }

    // Unbroken rows put E+_{n-1} beside E-_n, which it equals.
    const int nmax = cfg.nmax.value_or(5);
    std::string levels = "phase,n,E_minus,E_plus\n";
    if (broken) {
        for (int n = 0; n <= nmax; ++n) {
            try {
                const auto [em, ep] = isospectral_pair(*broken, n);
                levels += "broken," + std::to_string(n) + "," + format_number(em) + "," +
                          format_number(ep) + "\n";
            } catch (const Error&) {
                break;
            }
        }
    }
    if (unbroken) {
        for (int n = 0; n <= nmax; ++n) {
            try {
                const double em = unbroken_energy(*unbroken, n);
                const std::string ep =
                    n == 0 ? "" : format_number(isospectral_pair(*unbroken, n - 1).second);
                levels += "unbroken," + std::to_string(n) + "," + format_number(em) + "," + ep + "\n";
            } catch (const Error&) {
                break;
            }
        }
    }

    const std::filesystem::path dir = cfg.out.empty() ? "figure-data" : cfg.out;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());
    const auto f1 = dir / (chosen.name() + "-fig1.csv");
    const auto f2 = dir / (chosen.name() + "-fig2.csv");
    const auto fl = dir / (chosen.name() + "-levels.csv");
    write_file(f1, fig1);
    write_file(f2, fig2);
    write_file(fl, levels);

    if (cfg.format == "json")
        out << dump(json{{"files", {f1.string(), f2.string(), fl.string()}},
                         {"xmin", lo},
                         {"xmax", hi},
                         {"points", cfg.points}});
    else
        out << f1.string() << '\n' << f2.string() << '\n' << fl.string() << '\n';
    return kPass;
}

} // namespace

bool SuiteResult::all_pass() const { return count("fail") == 0; }

int SuiteResult::count(const std::string& status) const {
    int n = 0;
    for (const auto& c : checks) n += c.status == status;
    return n;
}

double SuiteResult::worst(const std::string& check) const {
    double w = 0.0;
    for (const auto& c : checks)
        if (c.check == check && c.status != "skip") w = std::max(w, c.worst_error);
    return w;
}

SuperpotentialInstance resolve_instance(const RunConfig& cfg) {
    if (cfg.instance.empty()) throw ConfigError("an instance (catalog name or JSON) is required");
    std::optional<SuperpotentialInstance> sp;
    if (cfg.instance.front() == '{') {
        if (cfg.broken) throw ConfigError("--broken needs a catalog name");
        try {
            sp = instance_from_json(json::parse(cfg.instance));
        } catch (const json::exception& e) {
            throw ConfigError(std::string("invalid instance JSON: ") + e.what());
        }
    } else {
        const auto entry = find_entry(cfg.instance);
        if (!entry) throw ConfigError("unknown catalog entry '" + cfg.instance + "'");
        sp = entry->instance;
        if (cfg.broken) {
            if (!entry->broken_preset)
                throw ConfigError("'" + cfg.instance + "' has no broken-phase preset");
            sp = sp->with_params(*entry->broken_preset);
        }
    }

    auto p = sp->params();
    if (cfg.a) p.a = cfg.a;
    if (cfg.B) p.B = cfg.B;
    if (cfg.lambda) p.lambda = cfg.lambda;
    if (cfg.alpha) p.alpha = cfg.alpha;
    if (cfg.omega) {
        p.omega = cfg.omega;
        p.epsilon.reset(); // rederived from omega
    }
    if (!cfg.hbars.empty()) p.hbar = cfg.hbars.front();
    return sp->with_params(p);
}

SuiteResult run_verify(const SuperpotentialInstance& sp, const RunConfig& cfg) {
    SuiteResult out;
    residual_checks(sp, out);
    quantization_checks(sp, hbars_or(cfg, {sp.hbar()}), cfg.nmax.value_or(7),
                        cfg.tol.value_or(kQuantizationTol), out);
    if (cfg.oracle) oracle_checks(sp, cfg, out);
    return out;
}

SuiteResult run_suite(const RunConfig& cfg) {
    const bool skip_oracle =
        std::find(cfg.skip.begin(), cfg.skip.end(), "oracle") != cfg.skip.end();
    const bool skip_quantization =
        std::find(cfg.skip.begin(), cfg.skip.end(), "quantization") != cfg.skip.end();
    const auto hbars = hbars_or(cfg, {0.5, 1.0, 2.0});
    const int nmax = cfg.nmax.value_or(7);
    const double tol = cfg.tol.value_or(kQuantizationTol);

    SuiteResult out;
    for (const auto& entry : catalog_entries()) {
        std::vector<SuperpotentialInstance> variants{entry.instance};
        if (entry.broken_preset) variants.push_back(entry.instance.with_params(*entry.broken_preset));
        for (const auto& sp : variants) {
            residual_checks(sp, out);
            if (!skip_quantization) quantization_checks(sp, hbars, nmax, tol, out);
            const bool broken_iii =
                family_of(sp.tag()) == ClassFamily::III && phase_text(sp) == "broken";
            if (!skip_oracle && broken_iii) oracle_checks(sp, cfg, out);
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"susylab: shape-invariant superpotentials, spectra and (B)SWKB checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool with_instance) {
        if (with_instance)
            sub->add_option("instance", cfg.instance, "catalog name or inline instance JSON")
                ->required();
        sub->add_option("--format", cfg.format, "table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--out", cfg.out, "output path (directory for figure-data)");
        sub->add_option("--hbar", cfg.hbars, "comma-separated hbar values")->delimiter(',');
        sub->add_option("--nmax", cfg.nmax, "highest level index")->check(CLI::NonNegativeNumber);
        sub->add_option("--tol", cfg.tol, "quantization tolerance")->check(CLI::PositiveNumber);
        if (with_instance) {
            sub->add_option("--a", cfg.a);
            sub->add_option("--B", cfg.B);
            sub->add_option("--omega", cfg.omega);
            sub->add_option("--lambda", cfg.lambda);
            sub->add_option("--alpha", cfg.alpha);
            sub->add_flag("--broken", cfg.broken, "start from the entry's broken-phase preset");
        }
    };

    auto* catalog_cmd = app.add_subcommand("catalog", "list catalog entries");
    common(catalog_cmd, false);
    catalog_cmd->add_option("--tag", cfg.tag_filter, "only entries with this class tag");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "energy levels n = 0..nmax");
    common(spectrum_cmd, true);
    spectrum_cmd->add_flag("--both-partners", cfg.both_partners, "levels of H- and H+");

    auto* verify_cmd = app.add_subcommand("verify", "residual, quantization and oracle checks");
    common(verify_cmd, true);
    verify_cmd->add_flag("--oracle", cfg.oracle, "compare with finite-difference eigenvalues");
    verify_cmd->add_option("--oracle-tol", cfg.oracle_tol)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--oracle-nodes", cfg.oracle_nodes)->check(CLI::Range(200, 1 << 22));

    auto* figure_cmd = app.add_subcommand("figure-data", "CSV data for W and V+- plots");
    common(figure_cmd, true);
    figure_cmd->add_option("--xmin", cfg.xmin);
    figure_cmd->add_option("--xmax", cfg.xmax);
    figure_cmd->add_option("--points", cfg.points);

    auto* suite_cmd = app.add_subcommand("suite", "full acceptance matrix");
    common(suite_cmd, false);
    suite_cmd->add_option("--skip", cfg.skip, "parts to skip: oracle, quantization")
        ->delimiter(',')
        ->check(CLI::IsMember({"oracle", "quantization"}));
    suite_cmd->add_option("--json", cfg.json_out, "also write the summary JSON here");
    suite_cmd->add_option("--oracle-tol", cfg.oracle_tol)->check(CLI::PositiveNumber);
    suite_cmd->add_option("--oracle-nodes", cfg.oracle_nodes)->check(CLI::Range(200, 1 << 22));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (*catalog_cmd) return cmd_catalog(cfg, out);
        if (*spectrum_cmd) return cmd_spectrum(cfg, out);
        if (*verify_cmd) return cmd_verify(cfg, out, err);
        if (*figure_cmd) return cmd_figure_data(cfg, out);
        if (*suite_cmd) return cmd_suite(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const InvalidParameters& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailure;
    }
    return kConfigError;
}

} // namespace susylab::cli
