#pragma once

#include "susylab/invariance.hpp"
#include "susylab/superpotential.hpp"

#include <string>
#include <utility>
#include <vector>

namespace susylab {

struct EnergyLevel {
    int n = 0;
    double value = 0.0;
    Phase phase = Phase::Unbroken;
    std::string formula_id;
};

struct SpectrumResult {
    std::string instance;
    Phase phase = Phase::Unbroken;
    std::vector<EnergyLevel> levels;
    std::string g_function;
    std::string formula;
    bool hierarchy_condition_satisfied = true;
};

/// E-_n from additive shape invariance, g(a_n) - g(a_0), in closed form per class.
/// Requires the unbroken phase with the zero mode in H-; throws PhaseError
/// otherwise and HierarchyError when some a + k hbar, k <= n, leaves the
/// unbroken region (for IIIB: lambda (a + k hbar) >= 0).
double unbroken_energy(const SuperpotentialInstance& sp, int n);

/// E_n^B of the broken phase (IIIA and IIIB only):
///   IIIA: (2a - hbar (1 + 2n)) epsilon,   IIIB: lambda [a^2 - (B + n hbar + hbar/2)^2].
/// The value is also rebuilt as unbroken_energy(mapped, n) + shift and the two
/// routes must agree.
double broken_energy(const SuperpotentialInstance& sp, int n);

/// Fig. 3 route alone: discrete map, additive spectrum of the mapped
/// parameters, plus the map's constant shift.
double broken_energy_via_map(const SuperpotentialInstance& sp, int n);

/// Broken: (E-_n, E+_n), equal.  Unbroken: (E-_{n+1}, E+_n), where E+_n is
/// obtained from the shape-invariant partner a -> a + hbar.
std::pair<double, double> isospectral_pair(const SuperpotentialInstance& sp, int n);

/// Hierarchy check used by unbroken_energy.
bool hierarchy_holds(const SuperpotentialInstance& sp, int n);

inline constexpr int kDefaultLevelCount = 10;

/// Levels n = 0..count-1 in the instance's phase, truncated at the first
/// level violating the hierarchy condition.
SpectrumResult build_spectrum(const SuperpotentialInstance& sp, int count = kDefaultLevelCount);

std::string formula_id(const SuperpotentialInstance& sp, Phase phase);
std::string g_function_description(ClassTag tag);

} // namespace susylab
