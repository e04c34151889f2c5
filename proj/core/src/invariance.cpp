#include "susylab/invariance.hpp"

#include "susylab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace susylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

BoundaryLimit diverging(int sign, bool infinite_endpoint, std::string term) {
    return {sign * kInf, sign, infinite_endpoint, std::move(term)};
}

BoundaryLimit finite_limit(double value, int approach_sign, bool infinite_endpoint,
                           std::string term) {
    return {value, value != 0.0 ? sgn(value) : approach_sign, infinite_endpoint, std::move(term)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

std::string_view to_string(Phase phase) {
    return phase == Phase::Broken ? "broken" : "unbroken";
}

std::string_view to_string(Applicability kind) {
    switch (kind) {
    case Applicability::TwoTurningPoints: return "TwoTurningPoints";
    case Applicability::SingleIntersection: return "SingleIntersection";
    case Applicability::NoIntersection: return "NoIntersection";
    }
    return "?";
}

std::array<BoundaryLimit, 2> boundary_limits(const SuperpotentialInstance& sp) {
    const double a = sp.a();
    const double B = sp.B();
    const double k = sp.k();
    std::array<BoundaryLimit, 2> out;
    auto& L = out[0];
    auto& R = out[1];

    switch (sp.tag()) {
    case ClassTag::IA:
        L = diverging(-1, true, "omega x / 2");
        R = diverging(+1, true, "omega x / 2");
        break;
    case ClassTag::IB: {
        const double alpha = sp.alpha();
        const double c = alpha * a;
        if (alpha < 0.0) {
            L = diverging(-1, true, "-exp(alpha x)");
            R = finite_limit(c, -1, true, c != 0.0 ? "alpha a" : "-exp(alpha x) -> 0");
        } else {
            L = finite_limit(c, -1, true, c != 0.0 ? "alpha a" : "-exp(alpha x) -> 0");
            R = diverging(-1, true, "-exp(alpha x)");
        }
        break;
    }
    case ClassTag::IIA:
        L = diverging(-sgn(a), false, "-a / x");
        R = finite_limit(B / a, -sgn(a), true, B != 0.0 ? "B / a" : "-a / x -> 0");
        break;
    case ClassTag::IIB: {
        L = diverging(-sgn(a), false, "-a / x");
        const double v = B / a - a * k;
        R = finite_limit(v, -sgn(a), true,
                         v != 0.0 ? "B/a - a sqrt(lambda)" : "-2 a k exp(-2 k x) -> 0");
        break;
    }
    case ClassTag::IIIA:
        if (a != 0.0)
            L = diverging(-sgn(a), false, "-a / x");
        else
            L = finite_limit(0.0, +1, false, "omega x / 2 -> 0");
        R = diverging(+1, true, "omega x / 2");
        break;
    case ClassTag::IIIB_neg_lambda: {
        // W = k (a tan + B sec); near -pi/2k: (B - a)/d, near +pi/2k: (a + B)/d.
        const double cl = B - a;
        const double cr = a + B;
        L = cl != 0.0 ? diverging(sgn(cl), false, "(B - a) k sec(k x)")
                      : finite_limit(0.0, sgn(a), false, "a k (1 + sin)/cos -> 0");
        R = cr != 0.0 ? diverging(sgn(cr), false, "(a + B) k sec(k x)")
                      : finite_limit(0.0, -sgn(a), false, "a k (sin - 1)/cos -> 0");
        break;
    }
    case ClassTag::IIIB_pos_lambda_bounded:
        L = finite_limit(a * k, sgn(B), true, a != 0.0 ? "a k" : "B k sech(k x) -> 0");
        R = finite_limit(-a * k, sgn(B), true, a != 0.0 ? "-a k" : "B k sech(k x) -> 0");
        break;
    case ClassTag::IIIB_pos_lambda_unbounded:
        if (sp.branch() == Branch::Right) {
            // W = k (-a coth u + B csch u), u = k x > 0.
            const double c = B - a;
            L = c != 0.0 ? diverging(sgn(c), false, "(B - a) / x")
                         : finite_limit(0.0, -sgn(a), false, "-a k tanh(k x / 2) -> 0");
            R = finite_limit(-a * k, sgn(B), true, a != 0.0 ? "-a k" : "B k csch(k x) -> 0");
        } else {
            // W = k (-a coth u - B csch u), u = k x < 0.
            L = finite_limit(a * k, sgn(B), true, a != 0.0 ? "a k" : "-B k csch(k x) -> 0");
            const double c = a + B;
            R = c != 0.0 ? diverging(sgn(c), false, "-(a + B) / x")
                         : finite_limit(0.0, sgn(a), false, "-a k tanh(k x / 2) -> 0");
        }
        break;
    }

    if (sp.is_negated()) {
        for (auto& lim : out) {
            lim.value = -lim.value;
            lim.sign = -lim.sign;
            lim.leading_term = "-(" + lim.leading_term + ")";
        }
    }
    return out;
}

PhaseReport classify_phase(const SuperpotentialInstance& sp) {
    const auto limits = boundary_limits(sp);
    for (const auto& lim : limits) {
        if (lim.sign == 0 || (lim.infinite_endpoint && lim.value == 0.0)) {
            std::ostringstream os;
            os << sp.name() << ": W -> 0 (" << lim.leading_term
               << ") at an infinite endpoint; boundary signs do not decide the phase";
            throw IndeterminatePhase(os.str());
        }
    }
    PhaseReport r;
    r.boundary_signs = {limits[0].sign, limits[1].sign};
    r.evidence = limits;
    r.phase = limits[0].sign == limits[1].sign ? Phase::Broken : Phase::Unbroken;
    return r;
}

double additive_si_residual(const SuperpotentialInstance& sp, std::span<const double> grid) {
    const double hbar = sp.hbar();
    const auto next = sp.with_a(sp.a() + hbar);
    // Extended precision: at large |a| the potentials reach 1e6 and more, where
    // double rounding alone would exceed the residual tolerance.
    const long double g0 = g_extended(sp, sp.a());
    const long double g1 = g_extended(sp, sp.a() + hbar);
    long double worst = 0.0L;
    for (double x : grid) {
        const long double lhs = partner_potential_extended(sp, x, Partner::Plus) + g0;
        const long double rhs = partner_potential_extended(next, x, Partner::Minus) + g1;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return static_cast<double>(worst);
}

DiscreteMap discrete_si_map(const SuperpotentialInstance& sp) {
    if (sp.is_negated())
        throw UnsupportedParameters("discrete maps are defined for W, not -W");
    const double hbar = sp.hbar();
    DiscreteMap m;
    m.source_params = sp.params();
    m.mapped_params = sp.params();
    switch (sp.tag()) {
    case ClassTag::IIIA:
        m.mapped_params.a = -sp.a();
        m.energy_shift = (2.0 * sp.a() - hbar) * sp.epsilon();
        m.rule = "a -> -a";
        return m;
    case ClassTag::IIIB_neg_lambda:
    case ClassTag::IIIB_pos_lambda_unbounded:
        m.mapped_params.a = sp.B() + 0.5 * hbar;
        m.mapped_params.B = sp.a() + 0.5 * hbar;
        m.energy_shift = sp.lambda() * (sp.a() * sp.a() - std::pow(sp.B() + 0.5 * hbar, 2));
        m.rule = "(a, B) -> (B + hbar/2, a + hbar/2)";
        return m;
    case ClassTag::IIIB_pos_lambda_bounded:
        throw UnsupportedParameters(
            sp.name() + ": f1^2 < lambda never enters a broken phase; no phase-changing map");
    default:
        throw UnsupportedClass(sp.name() + " (" + std::string(to_string(sp.tag())) +
                               "): no phase-changing discrete map for Classes I and II");
    }
}

SuperpotentialInstance apply_map(const SuperpotentialInstance& sp, const DiscreteMap& map) {
    return sp.with_params(map.mapped_params);
}

std::vector<double> constancy_grid(const SuperpotentialInstance& sp, double margin) {
    auto grid = standard_grid(sp);
    const auto& d = sp.domain();
    std::erase_if(grid, [&](double x) {
        return (d.left_finite() && x - d.xL < margin) || (d.right_finite() && d.xR - x < margin);
    });
    return grid;
}

DiscreteSiCheck discrete_si_deviation(const SuperpotentialInstance& source,
                                      const SuperpotentialInstance& mapped,
                                      std::span<const double> grid) {
    if (grid.empty()) throw EmptyInput("discrete shape-invariance check needs grid points");
    std::vector<double> d;
    d.reserve(grid.size());
    for (double x : grid)
        d.push_back(partner_potential(source, x, Partner::Plus) -
                    partner_potential(mapped, x, Partner::Minus));
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= static_cast<double>(d.size());
    DiscreteSiCheck out;
    out.measured_shift = mean;
    for (double v : d) out.max_deviation = std::max(out.max_deviation, std::abs(v - mean));
    return out;
}

DiscreteSiCheck verify_discrete_si(const SuperpotentialInstance& sp, std::span<const double> grid) {
    const auto map = discrete_si_map(sp);
    auto out = discrete_si_deviation(sp, apply_map(sp, map), grid);
    out.expected_shift = map.energy_shift;
    return out;
}

namespace {

BswkbApplicability monotone_verdict(const SuperpotentialInstance& sp, double E,
                                    std::string rationale) {
    const auto limits = boundary_limits(sp);
    double inf_w2 = kInf;
    for (const auto& lim : limits) inf_w2 = std::min(inf_w2, lim.value * lim.value);
    BswkbApplicability out;
    out.min_W2 = inf_w2;
    if (E <= inf_w2) {
        out.kind = Applicability::NoIntersection;
        out.rationale = "E <= inf W^2 = " + fmt(inf_w2) + "; " + rationale;
    } else {
        out.kind = Applicability::SingleIntersection;
        out.rationale = std::move(rationale);
    }
    return out;
}

BswkbApplicability well_verdict(double E, double min_w2, double upper, std::string rationale) {
    BswkbApplicability out;
    out.min_W2 = min_w2;
    if (E <= min_w2) {
        out.kind = Applicability::NoIntersection;
        out.rationale = "E <= min W^2 = " + fmt(min_w2);
    } else if (E >= upper) {
        out.kind = Applicability::SingleIntersection;
        out.rationale = "E >= asymptotic W^2 = " + fmt(upper) + "; only one intersection";
    } else {
        out.kind = Applicability::TwoTurningPoints;
        out.rationale = std::move(rationale);
    }
    return out;
}

[[noreturn]] void unsupported(const SuperpotentialInstance& sp, const std::string& why) {
    throw UnsupportedParameters(sp.name() + ": " + why);
}

} // namespace

BswkbApplicability bswkb_applicability(const SuperpotentialInstance& sp, double E) {
    if (!(E > 0.0)) throw InvalidParameters("bswkb_applicability needs E > 0");
    if (sp.tag() == ClassTag::IIIB_pos_lambda_bounded)
        unsupported(sp, "f1^2 < lambda: the superpotential does not go into a broken "
                        "supersymmetric phase for any parameter values");

    const auto phase = classify_phase(sp);
    if (phase.phase != Phase::Broken)
        throw PhaseError(sp.name() + ": BSWKB applies to the broken phase only");

    const double a = sp.a();
    const double B = sp.B();
    const double lambda = sp.lambda();

    switch (sp.tag()) {
    case ClassTag::IA:
    case ClassTag::IB:
        return monotone_verdict(sp, E,
                                "Class I: W' = f2' has a fixed sign, W is monotonic; "
                                "W^2 = E has only one intersection point, not two");
    case ClassTag::IIA:
    case ClassTag::IIB:
        return monotone_verdict(sp, E,
                                "Class II: W' = a f1' has a fixed sign, W is monotonic; "
                                "W^2 = E has only one intersection point, not two");
    case ClassTag::IIIA: {
        if (a == 0.0)
            return monotone_verdict(sp, E, "IIIA with a = 0: W = omega x / 2 is monotonic");
        // W = -a/x - epsilon x / 2 with a, epsilon < 0: minimum sqrt(2 a epsilon).
        return well_verdict(E, 2.0 * a * sp.epsilon(), kInf,
                            "IIIA, a < 0: W has a single minimum; two turning points");
    }
    case ClassTag::IIIB_neg_lambda: {
        if (std::abs(a) == std::abs(B))
            return monotone_verdict(sp, E,
                                    "IIIB lambda < 0 with |a| = |B|: neither W nor W' vanishes, "
                                    "(W^2)' = 2 W W' cannot be zero; only one intersection point");
        // Extremum at sin(k x) = -a/B: W^2 = |lambda| (B^2 - a^2).
        return well_verdict(E, -lambda * (B * B - a * a), kInf,
                            "IIIB lambda < 0 with |a| < |B|: W^2 has a minimum; "
                            "two turning points");
    }
    case ClassTag::IIIB_pos_lambda_unbounded: {
        if (a == 0.0 || B == 0.0)
            return monotone_verdict(sp, E, "IIIB lambda > 0 with a B = 0: W is monotonic");
        if (sp.branch() == Branch::Right) {
            // f1 < 0.
            if (a * B < 0.0)
                unsupported(sp, "f1 < 0 and a B < 0: W^2 has no minimum; "
                                "the BSWKB condition does not apply");
            if (a == B)
                unsupported(sp, "f1 < 0 and a = B: W^2 has no minimum; "
                                "the BSWKB condition does not apply");
            // a B > 0 in the broken phase means |a| > |B|; extremum at cosh(k x) = a/B.
            return well_verdict(E, lambda * (a * a - B * B), lambda * a * a,
                                "IIIB lambda > 0, f1 < 0, a B > 0 (broken): W^2 has a minimum; "
                                "two turning points");
        }
        // f1 > 0.
        if (a * B > 0.0)
            return monotone_verdict(sp, E,
                                    "IIIB lambda > 0, f1 > 0, a B > 0: W^2 has no minimum; "
                                    "only one intersection point");
        if (a == -B)
            return monotone_verdict(sp, E,
                                    "IIIB lambda > 0, f1 > 0, a = -B: (W^2)' cannot vanish; "
                                    "only one intersection point");
        unsupported(sp, "f1 > 0, a B < 0 and a != -B: treated as a configuration where "
                        "SUSY cannot be broken");
    }
    case ClassTag::IIIB_pos_lambda_bounded: break;
    }
    unsupported(sp, "no case analysis for this configuration");
}

} // namespace susylab
