#pragma once

#include "susylab/quadrature.hpp"
#include "susylab/superpotential.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace susylab::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kConfigError = 2 };

struct RunConfig {
    std::string command;
    std::string instance;      // catalog name or inline JSON
    bool broken = false;       // start from the entry's broken preset
    std::optional<double> a, B, omega, lambda, alpha;
    std::vector<double> hbars; // empty: command default
    std::optional<int> nmax;
    std::string format = "table";
    std::string out;
    std::optional<double> tol;
    double oracle_tol = 1e-3;
    int oracle_nodes = 4000;
    bool oracle = false;
    bool both_partners = false;
    std::string tag_filter;
    std::vector<std::string> skip;
    std::string json_out;
    std::optional<double> xmin, xmax;
    int points = 400;
};

struct CheckRecord {
    std::string check;
    std::string instance;
    std::string phase;
    std::string detail;
    std::string status; // pass | fail | skip
    double worst_error = 0.0;
    std::string message;
};

struct SuiteResult {
    std::vector<CheckRecord> checks;
    std::vector<QuantizationReport> quantization;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] int count(const std::string& status) const;
    /// Largest worst_error over passing and failing checks of one kind.
    [[nodiscard]] double worst(const std::string& check) const;
};

/// Catalog name (optionally its broken preset) or inline JSON, plus overrides.
SuperpotentialInstance resolve_instance(const RunConfig& cfg);

SuiteResult run_verify(const SuperpotentialInstance& sp, const RunConfig& cfg);
SuiteResult run_suite(const RunConfig& cfg);

/// Full command line (without argv[0]); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace susylab::cli
