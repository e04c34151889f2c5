#pragma once

#include "susylab/superpotential.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace susylab {

enum class Phase { Unbroken, Broken };
std::string_view to_string(Phase phase);

/// Leading behaviour of W at one end of the domain, taken from the closed
/// form rather than from floating-point evaluation.
struct BoundaryLimit {
    double value = 0.0;     ///< lim W (may be +-inf)
    int sign = 0;           ///< sign of W on approach; 0 when W vanishes identically
    bool infinite_endpoint = false;
    std::string leading_term;
};

/// Unbroken iff W has opposite signs at the two ends of the domain.
struct PhaseReport {
    Phase phase = Phase::Unbroken;
    std::array<int, 2> boundary_signs{};
    std::array<BoundaryLimit, 2> evidence{};

    /// The normalizable zero mode belongs to H- (W < 0 on the left, W > 0 on the right).
    [[nodiscard]] bool zero_mode_in_minus() const {
        return phase == Phase::Unbroken && boundary_signs[0] < 0 && boundary_signs[1] > 0;
    }
};

std::array<BoundaryLimit, 2> boundary_limits(const SuperpotentialInstance& sp);

/// Throws IndeterminatePhase when W tends to zero at an infinite endpoint
/// (the sign test is then not decisive) or vanishes identically.
PhaseReport classify_phase(const SuperpotentialInstance& sp);

/// max over grid of |V+(x,a) + g(a) - V-(x,a+hbar) - g(a+hbar)|.
double additive_si_residual(const SuperpotentialInstance& sp, std::span<const double> grid);

/// Phase-changing parameter map and the constant V+(x; source) - V-(x; mapped).
///   IIIA: a -> -a,                            shift (2a - hbar) epsilon
///   IIIB: (a, B) -> (B + hbar/2, a + hbar/2), shift lambda (a^2 - (B + hbar/2)^2)
struct DiscreteMap {
    ParamRecord source_params;
    ParamRecord mapped_params;
    double energy_shift = 0.0;
    std::string rule;
};

/// Throws UnsupportedClass for Classes I/II and UnsupportedParameters for the
/// bounded IIIB form, which admits no such map.
DiscreteMap discrete_si_map(const SuperpotentialInstance& sp);
SuperpotentialInstance apply_map(const SuperpotentialInstance& sp, const DiscreteMap& map);

struct DiscreteSiCheck {
    double max_deviation = 0.0;   ///< max |d(x) - mean(d)|
    double measured_shift = 0.0;  ///< mean(d)
    double expected_shift = 0.0;
};

/// d(x) = V+(x; source) - V-(x; mapped) over `grid`.
DiscreteSiCheck verify_discrete_si(const SuperpotentialInstance& sp, std::span<const double> grid);
/// Same check against an explicitly supplied mapped instance.
DiscreteSiCheck discrete_si_deviation(const SuperpotentialInstance& source,
                                      const SuperpotentialInstance& mapped,
                                      std::span<const double> grid);

/// Standard grid with points closer than `margin` to a finite endpoint removed.
std::vector<double> constancy_grid(const SuperpotentialInstance& sp, double margin = 1e-6);

enum class Applicability { TwoTurningPoints, SingleIntersection, NoIntersection };
std::string_view to_string(Applicability kind);

struct BswkbApplicability {
    Applicability kind = Applicability::NoIntersection;
    std::string rationale;
    double min_W2 = 0.0; ///< infimum of W^2 over the domain used for the verdict
};

/// Broken-phase case analysis: does W^2 = E cut the domain at two points?
/// Throws PhaseError on unbroken instances and UnsupportedParameters where the
/// class analysis declares the configuration outside the BSWKB setting.
BswkbApplicability bswkb_applicability(const SuperpotentialInstance& sp, double E);

} // namespace susylab
