#pragma once

#include "susylab/superpotential.hpp"

#include <optional>
#include <span>
#include <vector>

namespace susylab {

/// Truncated interval with N interior nodes, Dirichlet at xmin and xmax.
struct GridSpec {
    double xmin = 0.0;
    double xmax = 1.0;
    int N = 4000;

    [[nodiscard]] double spacing() const { return (xmax - xmin) / (N + 1); }
    /// Same interval with the spacing halved (2N + 1 interior nodes).
    [[nodiscard]] GridSpec refined() const { return {xmin, xmax, 2 * N + 1}; }
};

struct OracleOptions {
    bool richardson = true;
    double margin = 25.0;     ///< required V(cut) - E_k at cuts of infinite ends
    double tolerance = 1e-3;  ///< max relative two-grid shift before GridTooCoarse
    double potential_shift = 0.0;
};

struct OracleSpectrum {
    Partner which = Partner::Minus;
    std::vector<double> eigenvalues; ///< raw values on `grid`, ascending
    GridSpec grid;
    std::optional<std::vector<double>> richardson_estimate;

    /// Richardson values when present, otherwise the raw ones.
    [[nodiscard]] const std::vector<double>& best() const {
        return richardson_estimate ? *richardson_estimate : eigenvalues;
    }
};

/// Lowest k eigenvalues of -hbar^2 d^2/dx^2 + V_which on the grid.
OracleSpectrum solve_spectrum(const SuperpotentialInstance& sp, Partner which,
                              const GridSpec& grid, int k, const OracleOptions& options = {});

/// Lowest k eigenvalues of the tridiagonal matrix (diagonal d, off-diagonal e).
std::vector<double> lowest_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                   std::span<const double> off_diagonal, int k);

/// Grid whose cuts sit 1e-3 length scales inside finite endpoints and far
/// enough out on infinite ends that V(cut) >= E_k + margin, with E_k from
/// coarse solves (no analytic input).
GridSpec auto_grid(const SuperpotentialInstance& sp, Partner which, int k, int N = 4000,
                   double margin = 25.0);

/// Union of the minus and plus grids, suitable for both partners.
GridSpec auto_grid_pair(const SuperpotentialInstance& sp, int k, int N = 4000,
                        double margin = 25.0);

struct ComparisonRow {
    int n = 0;
    double analytic = 0.0;
    double numeric = 0.0;
    double rel_error = 0.0; ///< |numeric - analytic| / max(|analytic|, 1)
    bool pass = false;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    double rel_tol = 1e-3;
    bool all_pass = false;
    /// Unbroken isospectrality only: the H- ground level, expected to be 0.
    std::optional<double> ground_level;

    [[nodiscard]] double worst_error() const;
};

ComparisonReport compare_spectra(std::span<const double> analytic, const OracleSpectrum& numeric,
                                 double rel_tol = 1e-3);
ComparisonReport compare_lists(std::span<const double> reference, std::span<const double> numeric,
                               double rel_tol = 1e-3);

/// Broken: H- and H+ levels elementwise.  Unbroken: H- levels 1..k against
/// H+ levels 0..k-1, plus |E-_0| < rel_tol.
ComparisonReport verify_isospectrality(const SuperpotentialInstance& sp, const GridSpec& grid,
                                       int k, const OracleOptions& options = {});

/// Three-grid estimate of the order p in E(h) = E + C h^p for one level.
struct ConvergenceFit {
    int level = 0;
    double coarse = 0.0;
    double medium = 0.0;
    double fine = 0.0;
    double order = 0.0;
};
ConvergenceFit convergence_order(const SuperpotentialInstance& sp, Partner which,
                                 const GridSpec& grid, int level);

/// Largest relative level shift when every finite-end cut is moved halfway
/// toward its endpoint.  Used to flag boundary-condition sensitivity.
double offset_sensitivity(const SuperpotentialInstance& sp, Partner which, const GridSpec& grid,
                          int k);

} // namespace susylab
