#include "susylab/quadrature.hpp"

#include "susylab/errors.hpp"
#include "susylab/spectra.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace susylab {

namespace {

constexpr double kHuge = std::numeric_limits<double>::max();

// Monotone map t in R -> x in the open domain, used only to expand brackets.
class Chart {
public:
    Chart(const DomainSpec& d, double scale) : d_(d), s_(scale) {}

    [[nodiscard]] double x(double t) const {
        if (d_.left_finite() && d_.right_finite()) {
            const double mid = 0.5 * (d_.xL + d_.xR);
            const double half = 0.5 * (d_.xR - d_.xL);
            return mid + half * std::tanh(t);
        }
        if (d_.left_finite()) return d_.xL + s_ * std::exp(t);
        if (d_.right_finite()) return d_.xR - s_ * std::exp(-t);
        return s_ * std::sinh(t);
    }

    [[nodiscard]] double t(double x) const {
        if (d_.left_finite() && d_.right_finite()) {
            const double mid = 0.5 * (d_.xL + d_.xR);
            const double half = 0.5 * (d_.xR - d_.xL);
            return std::atanh(std::clamp((x - mid) / half, -1.0 + 1e-16, 1.0 - 1e-16));
        }
        if (d_.left_finite()) return std::log((x - d_.xL) / s_);
        if (d_.right_finite()) return -std::log((d_.xR - x) / s_);
        return std::asinh(x / s_);
    }

    static constexpr double kMaxT = 700.0;

private:
    DomainSpec d_;
    double s_;
};

// Evaluates f at x, or nullopt once x has left the usable interior.
template <class F>
std::optional<double> probe(const SuperpotentialInstance& sp, F&& f, double x) {
    if (!sp.domain().contains(x)) return std::nullopt;
    try {
        return f(x);
    } catch (const DomainError&) {
        return std::nullopt;
    } catch (const SingularityError&) {
        return std::nullopt;
    }
}

double clamp_huge(double v) {
    if (std::isnan(v)) return kHuge;
    return std::clamp(v, -kHuge, kHuge);
}

struct Polished {
    double x = 0.0;
    int iterations = 0;
};

// Sign-change root of f on [lo, hi] (either order) with TOMS 748.
template <class F>
Polished polish(F f, double lo, double hi, const RootOptions& options) {
    if (lo > hi) std::swap(lo, hi);
    auto g = [&](double x) { return clamp_huge(f(x)); };
    const double flo = g(lo);
    const double fhi = g(hi);
    if (flo == 0.0) return {lo, 0};
    if (fhi == 0.0) return {hi, 0};
    auto tol = [](double a, double b) {
        return std::abs(a - b) <=
               4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
    };
    std::uintmax_t iters = static_cast<std::uintmax_t>(options.max_iterations);
    const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, flo, fhi, tol, iters);
    const double x = std::abs(g(a)) <= std::abs(g(b)) ? a : b;
    return {x, static_cast<int>(iters)};
}

double w2(const SuperpotentialInstance& sp, double x) {
    const double w = evaluate_W(sp, x);
    return w * w;
}

struct SideSearch {
    std::optional<std::pair<double, double>> bracket; // (inside, outside)
    int steps = 0;
};

// Walks from t0 in direction dir until W^2 - E >= 0 or the domain runs out.
SideSearch search_side(const SuperpotentialInstance& sp, const Chart& chart, double t0, int dir,
                       double E) {
    SideSearch out;
    double t = t0;
    double x_prev = chart.x(t0);
    double step = 0.125;
    while (std::abs(t) < Chart::kMaxT) {
        const double t_new = t + dir * step;
        const double x_new = chart.x(t_new);
        ++out.steps;
        if (x_new == x_prev) return out;
        const auto v = probe(sp, [&](double x) { return w2(sp, x); }, x_new);
        if (!v) return out;
        if (!std::isfinite(*v) || *v - E >= 0.0) {
            out.bracket = std::pair{x_prev, x_new};
            return out;
        }
        t = t_new;
        x_prev = x_new;
        step *= 1.6;
    }
    return out;
}

std::string describe(const SuperpotentialInstance& sp, double E) {
    std::ostringstream os;
    os.precision(12);
    os << sp.name() << " at E = " << E;
    return os.str();
}

} // namespace

W2Minimum locate_min_W2(const SuperpotentialInstance& sp, const RootOptions& options) {
    const Chart chart(sp.domain(), sp.length_scale());
    auto slope = [&](double x) { return evaluate_W(sp, x) * evaluate_W_prime(sp, x); };

    const double x0 = chart.x(0.0);
    const double d0 = slope(x0);
    if (d0 == 0.0) return {x0, w2(sp, x0), true};

    // Move toward decreasing W^2 until (W^2)' changes sign.
    const int dir = d0 > 0.0 ? -1 : +1;
    double t = 0.0;
    double x_prev = x0;
    double step = 0.25;
    while (std::abs(t) < Chart::kMaxT) {
        const double t_new = t + dir * step;
        const double x_new = chart.x(t_new);
        if (x_new == x_prev) break;
        const auto d = probe(sp, slope, x_new);
        if (!d || !std::isfinite(*d)) break;
        // A zero slope only counts where W itself vanishes; W' underflowing on
        // an asymptotic tail is not a minimum.
        if (*d == 0.0 && evaluate_W(sp, x_new) == 0.0) return {x_new, 0.0, true};
        if (*d != 0.0 && (*d > 0.0) != (d0 > 0.0)) {
            const auto root = polish(slope, x_prev, x_new, options);
            return {root.x, w2(sp, root.x), true};
        }
        t = t_new;
        x_prev = x_new;
        step *= 1.6;
    }
    return {x_prev, w2(sp, x_prev), false};
}

TurningPoints turning_points(const SuperpotentialInstance& sp, double E,
                             const RootOptions& options) {
    if (!(E >= 0.0) || !std::isfinite(E))
        throw NoTurningPoints(describe(sp, E) + ": E must be finite and >= 0");
    const Chart chart(sp.domain(), sp.length_scale());
    const double tol = options.relative_tolerance * std::max(1.0, E);
    auto f = [&](double x) { return w2(sp, x) - E; };

    const auto minimum = locate_min_W2(sp, options);
    TurningPoints tp;

    if (minimum.interior) {
        if (E < minimum.value - tol) {
            std::ostringstream os;
            os.precision(12);
            os << describe(sp, E) << ": below min W^2 = " << minimum.value;
            throw NoTurningPoints(os.str());
        }
        if (E <= minimum.value + tol) {
            tp.x1 = tp.x2 = minimum.x;
            tp.residual = std::abs(minimum.value - E);
            return tp;
        }
        const double t0 = chart.t(minimum.x);
        const auto left = search_side(sp, chart, t0, -1, E);
        const auto right = search_side(sp, chart, t0, +1, E);
        tp.bracket_iterations = left.steps + right.steps;
        if (!left.bracket && !right.bracket)
            throw NoTurningPoints(describe(sp, E) + ": W^2 stays below E on both sides");
        if (!left.bracket || !right.bracket)
            throw SingleIntersection(describe(sp, E) + ": W^2 = E has only one intersection point");
        const auto r1 = polish(f, left.bracket->first, left.bracket->second, options);
        const auto r2 = polish(f, right.bracket->first, right.bracket->second, options);
        tp.x1 = r1.x;
        tp.x2 = r2.x;
        tp.polish_iterations = r1.iterations + r2.iterations;
        tp.residual = std::max(std::abs(f(tp.x1)), std::abs(f(tp.x2)));
        return tp;
    }

    // Monotone W^2: at most one crossing.
    const double x0 = chart.x(0.0);
    const double f0 = f(x0);
    const double d0 = evaluate_W(sp, x0) * evaluate_W_prime(sp, x0);
    const int uphill = d0 > 0.0 ? +1 : -1;
    bool crosses = false;
    if (f0 < 0.0) {
        crosses = search_side(sp, chart, 0.0, uphill, E).bracket.has_value();
    } else {
        // Look downhill for a point below E.
        double t = 0.0;
        double step = 0.125;
        double x_prev = x0;
        while (std::abs(t) < Chart::kMaxT) {
            t -= uphill * step;
            const double x = chart.x(t);
            if (x == x_prev) break;
            const auto v = probe(sp, f, x);
            if (!v) break;
            if (*v < 0.0) {
                crosses = true;
                break;
            }
            x_prev = x;
            step *= 1.6;
        }
    }
    if (crosses)
        throw SingleIntersection(describe(sp, E) +
                                 ": W^2 is monotonic; W^2 = E has only one intersection point");
    throw NoTurningPoints(describe(sp, E) + ": W^2 never equals E");
}

double sqrt_radicand_rule(const std::function<double(double)>& radicand, double x1, double x2,
                          std::size_t panels) {
    const double m = 0.5 * (x1 + x2);
    const double w = 0.5 * (x2 - x1);
    if (w == 0.0) return 0.0;
    const double h = std::numbers::pi / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t k = 1; k < panels; ++k) {
        const double theta = h * static_cast<double>(k);
        sum += std::sin(theta) * std::sqrt(std::max(0.0, radicand(m + w * std::cos(theta))));
    }
    return w * h * sum;
}

QuadratureResult integrate_sqrt_radicand(const std::function<double(double)>& radicand, double x1,
                                         double x2, const QuadratureOptions& options) {
    QuadratureResult out;
    const double m = 0.5 * (x1 + x2);
    const double w = 0.5 * (x2 - x1);
    if (w == 0.0) return out;
    if (w < 0.0) throw InvalidParameters("integrate_sqrt_radicand needs x1 <= x2");

    auto F = [&](double theta) {
        const double x = m + w * std::cos(theta);
        const double r = radicand(x);
        if (r < -options.negative_tolerance) {
            std::ostringstream os;
            os.precision(12);
            os << "radicand " << r << " < 0 at x = " << x << " inside [" << x1 << ", " << x2
               << "]";
            throw NegativeIntegrand(os.str());
        }
        return std::sin(theta) * std::sqrt(std::max(0.0, r));
    };

    // Trapezoidal sums on [0, pi]; F vanishes at both ends.
    std::size_t panels = 4;
    double sum = 0.0;
    for (std::size_t k = 1; k < panels; ++k)
        sum += F(std::numbers::pi * static_cast<double>(k) / static_cast<double>(panels));
    double estimate = w * std::numbers::pi / static_cast<double>(panels) * sum;

    while (true) {
        const std::size_t next = panels * 2;
        if (next > options.max_nodes) {
            std::ostringstream os;
            os << "no convergence with " << panels << " panels (last change "
               << out.error_estimate << ")";
            throw ConvergenceFailure(os.str());
        }
        for (std::size_t j = 1; j < next; j += 2)
            sum += F(std::numbers::pi * static_cast<double>(j) / static_cast<double>(next));
        const double refined = w * std::numbers::pi / static_cast<double>(next) * sum;
        out.error_estimate = std::abs(refined - estimate);
        estimate = refined;
        panels = next;
        if (panels >= options.min_nodes && out.error_estimate < options.tolerance) break;
    }
    out.value = estimate;
    out.nodes = panels;
    return out;
}

QuadratureResult swkb_integral_detailed(const SuperpotentialInstance& sp, double E,
                                        const TurningPoints& tp,
                                        const QuadratureOptions& options) {
    if (tp.degenerate()) return {};
    auto opts = options;
    opts.negative_tolerance = options.negative_tolerance * std::max(1.0, E);
    return integrate_sqrt_radicand([&](double x) { return E - w2(sp, x); }, tp.x1, tp.x2, opts);
}

double swkb_integral(const SuperpotentialInstance& sp, double E, const TurningPoints& tp,
                     const QuadratureOptions& options) {
    return swkb_integral_detailed(sp, E, tp, options).value;
}

QuantizationReport verify_quantization(const SuperpotentialInstance& sp, int n,
                                       const QuadratureOptions& options) {
    if (n < 0) throw InvalidParameters("level index n must be >= 0");
    QuantizationReport r;
    r.instance = sp.name();
    r.n = n;
    r.hbar = sp.hbar();
    r.phase = classify_phase(sp).phase;

    if (r.phase == Phase::Broken) {
        const auto family = family_of(sp.tag());
        if (family != ClassFamily::III)
            throw UnsupportedClass(sp.name() + ": BSWKB undefined: single intersection (Class " +
                                   std::string(family == ClassFamily::I ? "I" : "II") + ")");
        try {
            r.E = broken_energy(sp, n);
        } catch (const UnsupportedParameters&) {
            // No spectrum via the map; W^2 without a minimum is still worth reporting as such.
            auto app = bswkb_applicability(sp, 1.0);
            if (app.kind == Applicability::NoIntersection)
                app = bswkb_applicability(sp, app.min_W2 + 1.0);
            if (app.kind == Applicability::SingleIntersection)
                throw SingleIntersection(sp.name() + ": " + app.rationale);
            throw;
        }
        const auto app = bswkb_applicability(sp, r.E);
        if (app.kind == Applicability::SingleIntersection)
            throw SingleIntersection(sp.name() + ": " + app.rationale);
        if (app.kind == Applicability::NoIntersection)
            throw NoTurningPoints(sp.name() + ": " + app.rationale);
        r.target = (n + 0.5) * std::numbers::pi * sp.hbar();
    } else {
        r.E = unbroken_energy(sp, n);
        r.target = n * std::numbers::pi * sp.hbar();
    }

    r.turning = turning_points(sp, r.E);
    const auto q = swkb_integral_detailed(sp, r.E, r.turning, options);
    r.integral = q.value;
    r.quadrature_nodes = q.nodes;
    r.quadrature_error_estimate = q.error_estimate;
    r.abs_error = std::abs(r.integral - r.target);
    return r;
}

std::vector<QuantizationReport> hbar_sweep(const SuperpotentialInstance& sp, int n,
                                           std::span<const double> hbars,
                                           const QuadratureOptions& options) {
    std::vector<QuantizationReport> out;
    out.reserve(hbars.size());
    for (double hbar : hbars) out.push_back(verify_quantization(sp.with_hbar(hbar), n, options));
    return out;
}

} // namespace susylab
