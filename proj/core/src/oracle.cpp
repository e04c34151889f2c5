#include "susylab/oracle.hpp"

#include "susylab/errors.hpp"
#include "susylab/invariance.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace susylab {

namespace {

constexpr double kCutOffset = 1e-3; // in length scales, at finite endpoints
constexpr int kCoarseNodes = 400;

void validate(const SuperpotentialInstance& sp, const GridSpec& grid, int k) {
    if (k < 1) throw InvalidParameters("oracle: k must be >= 1");
    if (grid.N < 200) throw InvalidParameters("oracle: grid needs N >= 200 interior nodes");
    if (!(grid.xmin < grid.xmax) || !std::isfinite(grid.xmin) || !std::isfinite(grid.xmax))
        throw InvalidParameters("oracle: grid needs finite xmin < xmax");
    if (!sp.domain().contains(grid.xmin) || !sp.domain().contains(grid.xmax))
        throw DomainError("oracle: grid cuts must lie strictly inside the domain");
    if (k > grid.N) throw InvalidParameters("oracle: k exceeds the number of grid nodes");
}

double potential(const SuperpotentialInstance& sp, Partner which, double x, double shift) {
    return partner_potential(sp, x, which) + shift;
}

std::vector<double> raw_levels(const SuperpotentialInstance& sp, Partner which,
                               const GridSpec& grid, int k, double shift) {
    const double h = grid.spacing();
    const double hb2 = sp.hbar() * sp.hbar();
    std::vector<double> d(static_cast<std::size_t>(grid.N));
    std::vector<double> e(d.size() - 1, -hb2 / (h * h));
    for (int i = 0; i < grid.N; ++i)
        d[static_cast<std::size_t>(i)] =
            2.0 * hb2 / (h * h) + potential(sp, which, grid.xmin + (i + 1) * h, shift);
    return lowest_tridiagonal_eigenvalues(d, e, k);
}

} // namespace

std::vector<double> lowest_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                   std::span<const double> off_diagonal, int k) {
    const auto n = static_cast<lapack_int>(diagonal.size());
    if (n == 0 || k < 1 || k > n) throw InvalidParameters("tridiagonal: need 1 <= k <= n");
    if (off_diagonal.size() + 1 != diagonal.size())
        throw InvalidParameters("tridiagonal: off-diagonal must have n - 1 entries");
    std::vector<double> w(diagonal.size());
    std::vector<lapack_int> iblock(diagonal.size()), isplit(diagonal.size());
    lapack_int m = 0, nsplit = 0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    const lapack_int info = LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, k, abstol, diagonal.data(),
                                           off_diagonal.data(), &m, &nsplit, w.data(),
                                           iblock.data(), isplit.data());
    if (info != 0) {
        std::ostringstream os;
        os << "dstebz failed with info = " << info;
        throw ConvergenceFailure(os.str());
    }
    w.resize(static_cast<std::size_t>(m));
    return w;
}

OracleSpectrum solve_spectrum(const SuperpotentialInstance& sp, Partner which,
                              const GridSpec& grid, int k, const OracleOptions& options) {
    validate(sp, grid, k);
    OracleSpectrum out;
    out.which = which;
    out.grid = grid;
    out.eigenvalues = raw_levels(sp, which, grid, k, options.potential_shift);

    const double top = out.eigenvalues.back();
    const auto& d = sp.domain();
    auto check_cut = [&](double x, bool infinite_end) {
        if (!infinite_end) return;
        const double v = potential(sp, which, x, options.potential_shift);
        if (v < top + options.margin) {
            std::ostringstream os;
            os.precision(10);
            os << sp.name() << ": V(" << x << ") = " << v << " < E_k + margin = "
               << top + options.margin;
            throw TruncationError(os.str());
        }
    };
    check_cut(grid.xmin, !d.left_finite());
    check_cut(grid.xmax, !d.right_finite());

    if (options.richardson) {
        const auto fine = raw_levels(sp, which, grid.refined(), k, options.potential_shift);
        std::vector<double> extrapolated(out.eigenvalues.size());
        for (std::size_t i = 0; i < extrapolated.size(); ++i) {
            const double shift =
                std::abs(fine[i] - out.eigenvalues[i]) / std::max(1.0, std::abs(fine[i]));
            if (shift > options.tolerance) {
                std::ostringstream os;
                os.precision(6);
                os << sp.name() << ": level " << i << " moves by " << shift
                   << " (relative) under grid refinement; increase N";
                throw GridTooCoarse(os.str());
            }
            extrapolated[i] = (4.0 * fine[i] - out.eigenvalues[i]) / 3.0;
        }
        out.richardson_estimate = std::move(extrapolated);
    }
    return out;
}

GridSpec auto_grid(const SuperpotentialInstance& sp, Partner which, int k, int N, double margin) {
    const auto& d = sp.domain();
    const double L = sp.length_scale();
    auto [lo, hi] = standard_range(sp);
    if (d.left_finite()) lo = d.xL + kCutOffset * L;
    if (d.right_finite()) hi = d.xR - kCutOffset * L;
    if (d.left_finite() && d.right_finite()) return {lo, hi, N};

    for (int iter = 0; iter < 60; ++iter) {
        const GridSpec coarse{lo, hi, std::max(kCoarseNodes, 4 * k)};
        const double top = raw_levels(sp, which, coarse, k, 0.0).back();
        const double mid = 0.5 * (lo + hi);
        bool grown = false;
        if (!d.left_finite() && partner_potential(sp, lo, which) < top + margin) {
            lo = mid - 1.5 * (mid - lo);
            grown = true;
        }
        if (!d.right_finite() && partner_potential(sp, hi, which) < top + margin) {
            hi = mid + 1.5 * (hi - mid);
            grown = true;
        }
        if (!grown) break;
    }
    return {lo, hi, N};
}

GridSpec auto_grid_pair(const SuperpotentialInstance& sp, int k, int N, double margin) {
    const auto minus = auto_grid(sp, Partner::Minus, k + 1, N, margin);
    const auto plus = auto_grid(sp, Partner::Plus, k + 1, N, margin);
    return {std::min(minus.xmin, plus.xmin), std::max(minus.xmax, plus.xmax), N};
}

double ComparisonReport::worst_error() const {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.rel_error);
    return worst;
}

ComparisonReport compare_lists(std::span<const double> reference, std::span<const double> numeric,
                               double rel_tol) {
    if (reference.empty() || numeric.empty())
        throw EmptyInput("compare_spectra: nothing to compare");
    ComparisonReport out;
    out.rel_tol = rel_tol;
    out.all_pass = true;
    const std::size_t count = std::min(reference.size(), numeric.size());
    for (std::size_t i = 0; i < count; ++i) {
        ComparisonRow row;
        row.n = static_cast<int>(i);
        row.analytic = reference[i];
        row.numeric = numeric[i];
        row.rel_error = std::abs(row.numeric - row.analytic) / std::max(std::abs(row.analytic), 1.0);
        row.pass = row.rel_error < rel_tol;
        out.all_pass = out.all_pass && row.pass;
        out.rows.push_back(row);
    }
    return out;
}

ComparisonReport compare_spectra(std::span<const double> analytic, const OracleSpectrum& numeric,
                                 double rel_tol) {
    return compare_lists(analytic, numeric.best(), rel_tol);
}

ComparisonReport verify_isospectrality(const SuperpotentialInstance& sp, const GridSpec& grid,
                                       int k, const OracleOptions& options) {
    const auto phase = classify_phase(sp).phase;
    if (phase == Phase::Broken) {
        const auto minus = solve_spectrum(sp, Partner::Minus, grid, k, options);
        const auto plus = solve_spectrum(sp, Partner::Plus, grid, k, options);
        return compare_lists(minus.best(), plus.best(), options.tolerance);
    }
    const auto minus = solve_spectrum(sp, Partner::Minus, grid, k + 1, options);
    const auto plus = solve_spectrum(sp, Partner::Plus, grid, k, options);
    const auto& m = minus.best();
    auto out = compare_lists(std::span(m).subspan(1), plus.best(), options.tolerance);
    out.ground_level = m.front();
    out.all_pass = out.all_pass && std::abs(m.front()) < options.tolerance;
    return out;
}

ConvergenceFit convergence_order(const SuperpotentialInstance& sp, Partner which,
                                 const GridSpec& grid, int level) {
    validate(sp, grid, level + 1);
    ConvergenceFit fit;
    fit.level = level;
    const auto g2 = grid.refined();
    const auto g4 = g2.refined();
    const auto at = [&](const GridSpec& g) {
        return raw_levels(sp, which, g, level + 1, 0.0)[static_cast<std::size_t>(level)];
    };
    fit.coarse = at(grid);
    fit.medium = at(g2);
    fit.fine = at(g4);
    fit.order = std::log2((fit.coarse - fit.medium) / (fit.medium - fit.fine));
    return fit;
}

double offset_sensitivity(const SuperpotentialInstance& sp, Partner which, const GridSpec& grid,
                          int k) {
    validate(sp, grid, k);
    const auto& d = sp.domain();
    GridSpec moved = grid;
    if (d.left_finite()) moved.xmin = d.xL + 0.5 * (grid.xmin - d.xL);
    if (d.right_finite()) moved.xmax = d.xR - 0.5 * (d.xR - grid.xmax);
    // Keep the spacing comparable so only the cut moves.
    moved.N = static_cast<int>(std::lround((moved.xmax - moved.xmin) / grid.spacing())) - 1;
    const auto base = raw_levels(sp, which, grid, k, 0.0);
    const auto shifted = raw_levels(sp, which, moved, k, 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i)
        worst = std::max(worst, std::abs(shifted[i] - base[i]) / std::max(1.0, std::abs(base[i])));
    return worst;
}

} // namespace susylab
