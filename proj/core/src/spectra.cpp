#include "susylab/spectra.hpp"

#include "susylab/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace susylab {

namespace {

void require_level(int n) {
    if (n < 0) throw InvalidParameters("level index n must be >= 0");
}

double sq(double v) { return v * v; }

double unbroken_closed_form(const SuperpotentialInstance& sp, int n) {
    const double hbar = sp.hbar();
    const double a = sp.a();
    const double an = a + n * hbar;
    const double B = sp.B();
    switch (sp.tag()) {
    case ClassTag::IA: return n * sp.omega() * hbar;
    case ClassTag::IB: return sq(sp.alpha()) * (sq(a) - sq(an));
    case ClassTag::IIA: return sq(B) / sq(a) - sq(B) / sq(an);
    case ClassTag::IIB: return sq(B) / sq(a) - sq(B) / sq(an) + sp.lambda() * (sq(a) - sq(an));
    case ClassTag::IIIA: return 2.0 * n * sp.omega() * hbar;
    default: return sp.lambda() * (sq(a) - sq(an));
    }
}

double broken_closed_form(const SuperpotentialInstance& sp, int n) {
    const double hbar = sp.hbar();
    if (sp.tag() == ClassTag::IIIA) return (2.0 * sp.a() - hbar * (1.0 + 2.0 * n)) * sp.epsilon();
    return sp.lambda() * (sq(sp.a()) - sq(sp.B() + n * hbar + 0.5 * hbar));
}

bool unbroken_in_minus(const SuperpotentialInstance& sp) {
    try {
        return classify_phase(sp).zero_mode_in_minus();
    } catch (const IndeterminatePhase&) {
        return false;
    }
}

} // namespace

std::string g_function_description(ClassTag tag) {
    switch (tag) {
    case ClassTag::IA: return "g(a) = omega a";
    case ClassTag::IB: return "g(a) = -alpha^2 a^2";
    case ClassTag::IIA: return "g(a) = -B^2 / a^2";
    case ClassTag::IIB: return "g(a) = -lambda a^2 - B^2 / a^2";
    case ClassTag::IIIA: return "g(a) = -2 epsilon a";
    default: return "g(a) = -lambda a^2";
    }
}

std::string formula_id(const SuperpotentialInstance& sp, Phase phase) {
    std::string head = std::string(to_string(sp.tag())) + "/" + std::string(to_string(phase)) + ": ";
    if (phase == Phase::Broken) {
        if (sp.tag() == ClassTag::IIIA) return head + "(2a - hbar(1+2n)) epsilon";
        return head + "lambda [a^2 - (B + n hbar + hbar/2)^2]";
    }
    switch (sp.tag()) {
    case ClassTag::IA: return head + "n omega hbar";
    case ClassTag::IB: return head + "alpha^2 a^2 - alpha^2 (a + n hbar)^2";
    case ClassTag::IIA: return head + "B^2/a^2 - B^2/(a + n hbar)^2";
    case ClassTag::IIB:
        return head + "B^2/a^2 - B^2/(a + n hbar)^2 + lambda [a^2 - (a + n hbar)^2]";
    case ClassTag::IIIA: return head + "2 n omega hbar";
    default: return head + "lambda [a^2 - (a + n hbar)^2]";
    }
}

bool hierarchy_holds(const SuperpotentialInstance& sp, int n) {
    if (sp.tag() == ClassTag::IA) return true;
    const bool iiib = is_class_iiib(sp.tag());
    for (int k = 0; k <= n; ++k) {
        const double ak = sp.a() + k * sp.hbar();
        if (iiib && !(sp.lambda() * ak < 0.0)) return false;
        if (k == 0) continue;
        try {
            if (!unbroken_in_minus(sp.with_a(ak))) return false;
        } catch (const InvalidParameters&) {
            return false;
        }
    }
    return true;
}

double unbroken_energy(const SuperpotentialInstance& sp, int n) {
    require_level(n);
    const auto phase = classify_phase(sp);
    if (phase.phase != Phase::Unbroken)
        throw PhaseError(sp.name() + ": unbroken_energy called in the broken phase");
    if (!phase.zero_mode_in_minus())
        throw PhaseError(sp.name() + ": the zero mode belongs to H+ (W > 0 on the left); "
                                     "negate W to use the H- spectrum formulas");
    if (!hierarchy_holds(sp, n)) {
        std::ostringstream os;
        os << sp.name() << ": hierarchy condition fails by level n = " << n << " (a = " << sp.a()
           << ", hbar = " << sp.hbar() << ")";
        throw HierarchyError(os.str());
    }
    return unbroken_closed_form(sp, n);
}

double broken_energy_via_map(const SuperpotentialInstance& sp, int n) {
    require_level(n);
    const auto map = discrete_si_map(sp);
    const auto mapped = apply_map(sp, map);
    if (!unbroken_in_minus(mapped))
        throw UnsupportedParameters(sp.name() + ": the discrete map " + map.rule +
                                    " does not reach the unbroken phase with the zero mode in H-"
                                    " (for IIIB this needs a != B and lambda B < 0; use -W)");
    return unbroken_energy(mapped, n) + map.energy_shift;
}

double broken_energy(const SuperpotentialInstance& sp, int n) {
    require_level(n);
    const auto family = family_of(sp.tag());
    if (family != ClassFamily::III)
        throw UnsupportedClass(sp.name() + ": no broken-phase spectrum for Classes I and II");
    if (sp.tag() == ClassTag::IIIB_pos_lambda_bounded)
        throw UnsupportedParameters(sp.name() + ": f1^2 < lambda has no broken phase");
    if (classify_phase(sp).phase != Phase::Broken)
        throw PhaseError(sp.name() + ": broken_energy called in the unbroken phase");

    const double closed = broken_closed_form(sp, n);
    const double routed = broken_energy_via_map(sp, n);
    if (std::abs(closed - routed) > 1e-12 * std::max(1.0, std::abs(closed))) {
        std::ostringstream os;
        os.precision(17);
        os << sp.name() << ": broken spectrum routes disagree at n = " << n << ": " << closed
           << " vs " << routed;
        throw std::logic_error(os.str());
    }
    return closed;
}

std::pair<double, double> isospectral_pair(const SuperpotentialInstance& sp, int n) {
    require_level(n);
    if (classify_phase(sp).phase == Phase::Broken) {
        const double e = broken_energy(sp, n);
        return {e, e};
    }
    const double e_minus = unbroken_energy(sp, n + 1);
    const double a = sp.a();
    const double a1 = a + sp.hbar();
    // E+_n(a) = E-_n(a + hbar) + g(a + hbar) - g(a).
    const double e_plus = unbroken_energy(sp.with_a(a1), n) + sp.g(a1) - sp.g(a);
    return {e_minus, e_plus};
}

SpectrumResult build_spectrum(const SuperpotentialInstance& sp, int count) {
    SpectrumResult out;
    out.instance = sp.name();
    out.phase = classify_phase(sp).phase;
    out.g_function = g_function_description(sp.tag());
    out.formula = formula_id(sp, out.phase);
    for (int n = 0; n < count; ++n) {
        double e = 0.0;
        try {
            e = out.phase == Phase::Broken ? broken_energy(sp, n) : unbroken_energy(sp, n);
        } catch (const HierarchyError&) {
            out.hierarchy_condition_satisfied = false;
            break;
        }
        out.levels.push_back({n, e, out.phase, out.formula});
    }
    if (out.levels.empty() && !out.hierarchy_condition_satisfied)
        throw HierarchyError(sp.name() + ": no level satisfies the hierarchy condition");
    return out;
}

} // namespace susylab
