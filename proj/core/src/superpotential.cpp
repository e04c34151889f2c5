#include "susylab/superpotential.hpp"

#include "susylab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace susylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TagName {
    ClassTag tag;
    std::string_view name;
};

constexpr TagName kTagNames[] = {
    {ClassTag::IA, "IA"},
    {ClassTag::IB, "IB"},
    {ClassTag::IIA, "IIA"},
    {ClassTag::IIB, "IIB"},
    {ClassTag::IIIA, "IIIA"},
    {ClassTag::IIIB_neg_lambda, "IIIB_neg_lambda"},
    {ClassTag::IIIB_pos_lambda_bounded, "IIIB_pos_lambda_bounded"},
    {ClassTag::IIIB_pos_lambda_unbounded, "IIIB_pos_lambda_unbounded"},
};

[[noreturn]] void invalid(const std::string& name, ClassTag tag, const std::string& what) {
    std::ostringstream os;
    os << "instance '" << name << "' (" << to_string(tag) << "): " << what;
    throw InvalidParameters(os.str());
}

void require(bool ok, const std::string& name, ClassTag tag, const std::string& what) {
    if (!ok) invalid(name, tag, what);
}

void require_finite(const std::optional<double>& v, const char* field, const std::string& name,
                    ClassTag tag) {
    if (v && !std::isfinite(*v)) invalid(name, tag, std::string(field) + " must be finite");
}

// Fields outside the allowed set must be absent; lambda/alpha/epsilon may
// additionally appear with value zero where the class pins them to zero.
void forbid(const std::optional<double>& v, const char* field, const std::string& name,
            ClassTag tag) {
    if (v) invalid(name, tag, std::string(field) + " is not a parameter of this class");
}

void forbid_nonzero(const std::optional<double>& v, const char* field, const std::string& name,
                    ClassTag tag) {
    if (v && *v != 0.0) invalid(name, tag, std::string(field) + " must be zero for this class");
}


} // namespace

std::string_view to_string(ClassTag tag) {
    for (const auto& t : kTagNames)
        if (t.tag == tag) return t.name;
    return "?";
}

std::optional<ClassTag> parse_class_tag(std::string_view text) {
    for (const auto& t : kTagNames)
        if (t.name == text) return t.tag;
    return std::nullopt;
}

std::string_view to_string(Partner which) { return which == Partner::Minus ? "minus" : "plus"; }

ClassFamily family_of(ClassTag tag) {
    switch (tag) {
    case ClassTag::IA:
    case ClassTag::IB: return ClassFamily::I;
    case ClassTag::IIA:
    case ClassTag::IIB: return ClassFamily::II;
    default: return ClassFamily::III;
    }
}

bool is_class_iiib(ClassTag tag) {
    return tag == ClassTag::IIIB_neg_lambda || tag == ClassTag::IIIB_pos_lambda_bounded ||
           tag == ClassTag::IIIB_pos_lambda_unbounded;
}

SuperpotentialInstance SuperpotentialInstance::make(std::string name, ClassTag tag,
                                                    ParamRecord p, Branch branch) {
    require(std::isfinite(p.hbar) && p.hbar > 0.0, name, tag, "hbar must be > 0");
    for (auto [v, field] : {std::pair{&p.a, "a"}, {&p.B, "B"}, {&p.alpha, "alpha"},
                            {&p.lambda, "lambda"}, {&p.epsilon, "epsilon"}, {&p.omega, "omega"}})
        require_finite(*v, field, name, tag);

    switch (tag) {
    case ClassTag::IA: {
        require(p.omega.has_value() && *p.omega > 0.0, name, tag, "omega > 0 is required");
        forbid(p.B, "B", name, tag);
        forbid_nonzero(p.alpha, "alpha", name, tag);
        forbid_nonzero(p.lambda, "lambda", name, tag);
        const double eps = -0.5 * *p.omega;
        if (p.epsilon) require(*p.epsilon == eps, name, tag, "epsilon must equal -omega/2");
        p.epsilon = eps;
        p.alpha = 0.0;
        p.lambda.reset();
        if (!p.a) p.a = 0.0;
        break;
    }
    case ClassTag::IB: {
        require(p.a.has_value(), name, tag, "a is required");
        require(p.alpha.has_value() && *p.alpha != 0.0, name, tag, "alpha != 0 is required");
        forbid(p.B, "B", name, tag);
        forbid(p.omega, "omega", name, tag);
        forbid_nonzero(p.lambda, "lambda", name, tag);
        forbid_nonzero(p.epsilon, "epsilon", name, tag);
        p.lambda.reset();
        p.epsilon.reset();
        break;
    }
    case ClassTag::IIA:
    case ClassTag::IIB: {
        require(p.a.has_value() && *p.a != 0.0, name, tag, "a != 0 is required");
        require(p.B.has_value(), name, tag, "B is required");
        forbid(p.alpha, "alpha", name, tag);
        forbid(p.omega, "omega", name, tag);
        forbid_nonzero(p.epsilon, "epsilon", name, tag);
        p.epsilon.reset();
        if (tag == ClassTag::IIA) {
            forbid_nonzero(p.lambda, "lambda", name, tag);
            p.lambda.reset();
        } else {
            require(p.lambda.has_value() && *p.lambda > 0.0, name, tag,
                    "lambda > 0 is required (f1 = -sqrt(lambda) coth(sqrt(lambda) x))");
        }
        break;
    }
    case ClassTag::IIIA: {
        require(p.a.has_value(), name, tag, "a is required");
        forbid(p.B, "B", name, tag);
        forbid(p.alpha, "alpha", name, tag);
        forbid_nonzero(p.lambda, "lambda", name, tag);
        require(p.omega || p.epsilon, name, tag, "omega or epsilon is required");
        if (p.omega) {
            require(*p.omega > 0.0, name, tag, "omega must be > 0");
            if (p.epsilon) require(*p.epsilon == -*p.omega, name, tag, "epsilon must equal -omega");
            p.epsilon = -*p.omega;
        } else {
            require(*p.epsilon < 0.0, name, tag, "epsilon must be < 0");
            p.omega = -*p.epsilon;
        }
        p.lambda.reset();
        break;
    }
    case ClassTag::IIIB_neg_lambda:
    case ClassTag::IIIB_pos_lambda_bounded:
    case ClassTag::IIIB_pos_lambda_unbounded: {
        require(p.a.has_value(), name, tag, "a is required");
        require(p.B.has_value(), name, tag, "B is required");
        require(p.lambda.has_value() && *p.lambda != 0.0, name, tag, "lambda != 0 is required");
        forbid(p.alpha, "alpha", name, tag);
        forbid(p.omega, "omega", name, tag);
        forbid_nonzero(p.epsilon, "epsilon", name, tag);
        p.epsilon.reset();
        if (tag == ClassTag::IIIB_neg_lambda)
            require(*p.lambda < 0.0, name, tag, "lambda must be < 0");
        else
            require(*p.lambda > 0.0, name, tag, "lambda must be > 0");
        break;
    }
    }

    if (branch == Branch::Left)
        require(tag == ClassTag::IIIB_pos_lambda_unbounded, name, tag,
                "the left branch exists only for IIIB_pos_lambda_unbounded");

    SuperpotentialInstance sp;
    sp.name_ = std::move(name);
    sp.tag_ = tag;
    sp.params_ = p;
    sp.branch_ = branch;

    switch (tag) {
    case ClassTag::IA:
    case ClassTag::IB:
    case ClassTag::IIIB_pos_lambda_bounded: sp.domain_ = {-kInf, kInf}; break;
    case ClassTag::IIA:
    case ClassTag::IIB:
    case ClassTag::IIIA: sp.domain_ = {0.0, kInf}; break;
    case ClassTag::IIIB_neg_lambda: {
        const double half = std::numbers::pi / (2.0 * sp.k());
        sp.domain_ = {-half, half};
        break;
    }
    case ClassTag::IIIB_pos_lambda_unbounded:
        sp.domain_ = branch == Branch::Right ? DomainSpec{0.0, kInf} : DomainSpec{-kInf, 0.0};
        break;
    }
    return sp;
}

double SuperpotentialInstance::k() const { return std::sqrt(std::abs(lambda())); }

double SuperpotentialInstance::length_scale() const {
    if (lambda() != 0.0) return 1.0 / k();
    if (tag_ == ClassTag::IB) return 1.0 / std::abs(alpha());
    return 1.0;
}

SuperpotentialInstance SuperpotentialInstance::with_params(ParamRecord params) const {
    auto out = make(name_, tag_, std::move(params), branch_);
    out.f1_offset_ = f1_offset_;
    out.negated_ = negated_;
    out.exclusion_radius_ = exclusion_radius_;
    return out;
}

SuperpotentialInstance SuperpotentialInstance::with_a(double a) const {
    auto p = params_;
    p.a = a;
    return with_params(p);
}

SuperpotentialInstance SuperpotentialInstance::with_hbar(double hbar) const {
    auto p = params_;
    p.hbar = hbar;
    return with_params(p);
}

SuperpotentialInstance SuperpotentialInstance::perturbed(double f1_offset) const {
    auto out = *this;
    out.f1_offset_ = f1_offset;
    return out;
}

SuperpotentialInstance SuperpotentialInstance::negated() const {
    auto out = *this;
    out.negated_ = !negated_;
    return out;
}

SuperpotentialInstance SuperpotentialInstance::with_exclusion_radius(double radius) const {
    if (!(radius >= 0.0)) throw InvalidParameters("exclusion radius must be >= 0");
    auto out = *this;
    out.exclusion_radius_ = radius;
    return out;
}

void SuperpotentialInstance::check_point(double x) const {
    if (!std::isfinite(x) || !domain_.contains(x)) {
        std::ostringstream os;
        os << name_ << ": x = " << x << " outside (" << domain_.xL << ", " << domain_.xR << ")";
        throw DomainError(os.str());
    }
    // Every finite endpoint of the catalog domains is a pole of f1 or f2.
    if ((domain_.left_finite() && x - domain_.xL <= exclusion_radius_) ||
        (domain_.right_finite() && domain_.xR - x <= exclusion_radius_)) {
        std::ostringstream os;
        os << name_ << ": x = " << x << " within " << exclusion_radius_
           << " of a singular endpoint";
        throw SingularityError(os.str());
    }
}

namespace {

// Closed forms, templated on the floating type so residual checks can run in
// extended precision.  Callers validate x first.
template <class T>
T f1_of(const SuperpotentialInstance& sp, T x) {
    const T kk = sp.k();
    switch (sp.tag()) {
    case ClassTag::IA:
    case ClassTag::IB: return T(sp.alpha());
    case ClassTag::IIA:
    case ClassTag::IIIA: return T(-1) / x;
    case ClassTag::IIB:
    case ClassTag::IIIB_pos_lambda_unbounded: return -kk / std::tanh(kk * x);
    case ClassTag::IIIB_neg_lambda: return kk * std::tan(kk * x);
    case ClassTag::IIIB_pos_lambda_bounded: return -kk * std::tanh(kk * x);
    }
    return T(0);
}

template <class T>
T f1_prime_of(const SuperpotentialInstance& sp, T x) {
    const T kk = sp.k();
    switch (sp.tag()) {
    case ClassTag::IA:
    case ClassTag::IB: return T(0);
    case ClassTag::IIA:
    case ClassTag::IIIA: return T(1) / (x * x);
    case ClassTag::IIB:
    case ClassTag::IIIB_pos_lambda_unbounded: {
        const T c = T(1) / std::sinh(kk * x);
        return kk * kk * c * c;
    }
    case ClassTag::IIIB_neg_lambda: {
        const T s = T(1) / std::cos(kk * x);
        return kk * kk * s * s;
    }
    case ClassTag::IIIB_pos_lambda_bounded: {
        const T s = T(1) / std::cosh(kk * x);
        return -kk * kk * s * s;
    }
    }
    return T(0);
}

template <class T>
T f2_of(const SuperpotentialInstance& sp, T x) {
    const T kk = sp.k();
    const T B = sp.B();
    switch (sp.tag()) {
    case ClassTag::IA: return T(0.5) * T(sp.omega()) * x;
    case ClassTag::IB: return -std::exp(T(sp.alpha()) * x);
    case ClassTag::IIA:
    case ClassTag::IIB: return T(0);
    case ClassTag::IIIA: return T(-0.5) * T(sp.epsilon()) * x; // = epsilon / (2 f1)
    case ClassTag::IIIB_neg_lambda: return B * kk / std::cos(kk * x);
    case ClassTag::IIIB_pos_lambda_bounded: return B * kk / std::cosh(kk * x);
    case ClassTag::IIIB_pos_lambda_unbounded: return B * kk * std::abs(T(1) / std::sinh(kk * x));
    }
    return T(0);
}

template <class T>
T f2_prime_of(const SuperpotentialInstance& sp, T x) {
    const T kk = sp.k();
    const T B = sp.B();
    switch (sp.tag()) {
    case ClassTag::IA: return T(0.5) * T(sp.omega());
    case ClassTag::IB: return -T(sp.alpha()) * std::exp(T(sp.alpha()) * x);
    case ClassTag::IIA:
    case ClassTag::IIB: return T(0);
    case ClassTag::IIIA: return T(-0.5) * T(sp.epsilon());
    case ClassTag::IIIB_neg_lambda: {
        const T c = std::cos(kk * x);
        return B * kk * kk * std::sin(kk * x) / (c * c);
    }
    case ClassTag::IIIB_pos_lambda_bounded: {
        const T u = kk * x;
        return -B * kk * kk * std::tanh(u) / std::cosh(u);
    }
    case ClassTag::IIIB_pos_lambda_unbounded: {
        const T u = kk * x;
        return -B * kk * kk * std::abs(T(1) / std::sinh(u)) / std::tanh(u);
    }
    }
    return T(0);
}

template <class T>
T g_of(const SuperpotentialInstance& sp, T a) {
    const T B = sp.B();
    switch (sp.tag()) {
    case ClassTag::IA: return T(sp.omega()) * a;
    case ClassTag::IB: return -T(sp.alpha()) * T(sp.alpha()) * a * a;
    case ClassTag::IIA: return -B * B / (a * a);
    case ClassTag::IIB: return -T(sp.lambda()) * a * a - B * B / (a * a);
    case ClassTag::IIIA: return T(-2) * T(sp.epsilon()) * a;
    default: return -T(sp.lambda()) * a * a;
    }
}

template <class T>
T potential_of(const SuperpotentialInstance& sp, T x, Partner which) {
    const T a = sp.a();
    const T u = family_of(sp.tag()) == ClassFamily::II ? T(sp.B()) / a : T(0);
    T w = a * (f1_of(sp, x) + T(sp.f1_offset())) + f2_of(sp, x) + u;
    T wp = a * f1_prime_of(sp, x) + f2_prime_of(sp, x);
    if (sp.is_negated()) {
        w = -w;
        wp = -wp;
    }
    const T hw = T(sp.hbar()) * wp;
    return which == Partner::Minus ? w * w - hw : w * w + hw;
}

} // namespace

double SuperpotentialInstance::f1(double x) const {
    check_point(x);
    return f1_of(*this, x) + f1_offset_;
}

double SuperpotentialInstance::f1_prime(double x) const {
    check_point(x);
    return f1_prime_of(*this, x);
}

double SuperpotentialInstance::f2(double x) const {
    check_point(x);
    return f2_of(*this, x);
}

double SuperpotentialInstance::f2_prime(double x) const {
    check_point(x);
    return f2_prime_of(*this, x);
}

double SuperpotentialInstance::u() const {
    return family_of(tag_) == ClassFamily::II ? B() / a() : 0.0;
}

double SuperpotentialInstance::g(double a_value) const { return g_of(*this, a_value); }

long double partner_potential_extended(const SuperpotentialInstance& sp, double x, Partner which) {
    sp.check_point(x);
    return potential_of<long double>(sp, x, which);
}

long double g_extended(const SuperpotentialInstance& sp, double a) {
    return g_of<long double>(sp, a);
}

double evaluate_W(const SuperpotentialInstance& sp, double x) {
    const double w = sp.a() * sp.f1(x) + sp.f2(x) + sp.u();
    return sp.is_negated() ? -w : w;
}

double evaluate_W_prime(const SuperpotentialInstance& sp, double x) {
    const double w = sp.a() * sp.f1_prime(x) + sp.f2_prime(x);
    return sp.is_negated() ? -w : w;
}

double partner_potential(const SuperpotentialInstance& sp, double x, Partner which) {
    const double w = evaluate_W(sp, x);
    const double wp = evaluate_W_prime(sp, x);
    return which == Partner::Minus ? w * w - sp.hbar() * wp : w * w + sp.hbar() * wp;
}

double check_riccati(const SuperpotentialInstance& sp, std::span<const double> grid) {
    double worst = 0.0;
    const auto family = family_of(sp.tag());
    for (double x : grid) {
        const double f1 = sp.f1(x);
        if (family == ClassFamily::I) {
            worst = std::max(worst, std::abs(f1 - sp.alpha()));
            const double f2 = sp.f2(x);
            worst = std::max(worst, std::abs(sp.alpha() * f2 - sp.f2_prime(x) - sp.epsilon()));
            continue;
        }
        worst = std::max(worst, std::abs(f1 * f1 - sp.f1_prime(x) - sp.lambda()));
        if (family == ClassFamily::III)
            worst = std::max(worst, std::abs(f1 * sp.f2(x) - sp.f2_prime(x) - sp.epsilon()));
    }
    return worst;
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < points; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t points) {
    auto out = linspace(std::log(lo), std::log(hi), points);
    for (double& v : out) v = std::exp(v);
    return out;
}

std::pair<double, double> standard_range(const SuperpotentialInstance& sp) {
    const double L = sp.length_scale();
    switch (sp.tag()) {
    case ClassTag::IA: return {-10.0, 10.0};
    case ClassTag::IB: return sp.alpha() < 0.0 ? std::pair{-3.0 * L, 10.0 * L}
                                               : std::pair{-10.0 * L, 3.0 * L};
    case ClassTag::IIA:
    case ClassTag::IIIA:
    case ClassTag::IIB: return {0.1 * L, 20.0 * L};
    case ClassTag::IIIB_neg_lambda: {
        const double half = sp.domain().xR;
        return {-0.9 * half, 0.9 * half};
    }
    case ClassTag::IIIB_pos_lambda_bounded: return {-10.0 * L, 10.0 * L};
    case ClassTag::IIIB_pos_lambda_unbounded:
        return sp.branch() == Branch::Right ? std::pair{0.1 * L, 20.0 * L}
                                            : std::pair{-20.0 * L, -0.1 * L};
    }
    return {0.0, 1.0};
}

std::vector<double> standard_grid(const SuperpotentialInstance& sp, std::size_t points) {
    const auto [lo, hi] = standard_range(sp);
    const auto& d = sp.domain();
    const bool half_line = d.left_finite() != d.right_finite();
    if (!half_line) return linspace(lo, hi, points);
    if (lo > 0.0) return logspace(lo, hi, points);
    auto mirrored = logspace(-hi, -lo, points);
    std::vector<double> out(mirrored.rbegin(), mirrored.rend());
    for (double& v : out) v = -v;
    return out;
}

} // namespace susylab
