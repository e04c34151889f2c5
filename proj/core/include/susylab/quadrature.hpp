#pragma once

#include "susylab/invariance.hpp"
#include "susylab/superpotential.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace susylab {

struct TurningPoints {
    double x1 = 0.0;
    double x2 = 0.0;
    int bracket_iterations = 0;  ///< chart steps spent expanding brackets
    int polish_iterations = 0;   ///< root-solver iterations
    double residual = 0.0;       ///< max |W^2(x_i) - E|

    [[nodiscard]] bool degenerate() const { return x1 == x2; }
};

struct RootOptions {
    /// Target for |W^2(x) - E| relative to max(1, E).
    double relative_tolerance = 1e-13;
    int max_iterations = 200;
};

/// The two roots x1 < x2 of W^2 = E around the minimum of W^2.
/// E equal to min W^2 (to root tolerance) yields the degenerate pair x1 = x2.
/// Throws NoTurningPoints when E < min W^2 (or E lies above W^2 on both
/// sides) and SingleIntersection when only one side crosses.
TurningPoints turning_points(const SuperpotentialInstance& sp, double E,
                             const RootOptions& options = {});

/// Location and value of the minimum of W^2, from the sign change of (W^2)' = 2 W W'.
struct W2Minimum {
    double x = 0.0;
    double value = 0.0;
    bool interior = false; ///< false when W^2 is monotone on the domain
};
W2Minimum locate_min_W2(const SuperpotentialInstance& sp, const RootOptions& options = {});

struct QuadratureOptions {
    double tolerance = 1e-11;          ///< |T_2M - T_M| stopping threshold
    std::size_t max_nodes = 1u << 20;  ///< node cap
    std::size_t min_nodes = 16;
    double negative_tolerance = 1e-12; ///< allowed E - W^2 < 0, relative to max(1, E)
};

struct QuadratureResult {
    double value = 0.0;
    std::size_t nodes = 0;
    double error_estimate = 0.0;
};

/// integral over [x1, x2] of sqrt(r(x)) where r vanishes like a simple root
/// at both ends.  Uses x = m + w cos(theta) and the trapezoidal rule in theta,
/// which is spectrally accurate for such integrands; the number of panels is
/// doubled until successive estimates agree.
QuadratureResult integrate_sqrt_radicand(const std::function<double(double)>& radicand,
                                         double x1, double x2,
                                         const QuadratureOptions& options = {});

/// Fixed-panel evaluation of the same rule (M panels).
double sqrt_radicand_rule(const std::function<double(double)>& radicand, double x1, double x2,
                          std::size_t panels);

/// I = integral_{x1}^{x2} sqrt(E - W^2(x)) dx.
double swkb_integral(const SuperpotentialInstance& sp, double E, const TurningPoints& tp,
                     const QuadratureOptions& options = {});
QuadratureResult swkb_integral_detailed(const SuperpotentialInstance& sp, double E,
                                        const TurningPoints& tp,
                                        const QuadratureOptions& options = {});

struct QuantizationReport {
    std::string instance;
    int n = 0;
    Phase phase = Phase::Unbroken;
    double hbar = 1.0;
    double E = 0.0;
    TurningPoints turning;
    double integral = 0.0;
    double target = 0.0; ///< n pi hbar (unbroken) or (n + 1/2) pi hbar (broken)
    double abs_error = 0.0;
    std::size_t quadrature_nodes = 0;
    double quadrature_error_estimate = 0.0;
};

/// Spectrum -> turning points -> integral, compared with the phase's target.
/// Broken Classes I/II raise UnsupportedClass; broken IIIA/IIIB instances whose
/// E_n^B meets W^2 only once raise SingleIntersection.
QuantizationReport verify_quantization(const SuperpotentialInstance& sp, int n,
                                       const QuadratureOptions& options = {});

std::vector<QuantizationReport> hbar_sweep(const SuperpotentialInstance& sp, int n,
                                           std::span<const double> hbars,
                                           const QuadratureOptions& options = {});

} // namespace susylab
