#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace susylab {

/// Conventional shape-invariant superpotential classes, W = a*f1 + f2 + u(a).
///
/// Class I has constant f1 = alpha, Class II has constant f2, Class III has
/// both functions of x.  The IIIB sub-tags split lambda != 0 by the sign of
/// lambda and, for lambda > 0, by whether f1^2 stays below or above lambda.
enum class ClassTag {
    IA,
    IB,
    IIA,
    IIB,
    IIIA,
    IIIB_neg_lambda,
    IIIB_pos_lambda_bounded,
    IIIB_pos_lambda_unbounded,
};

inline constexpr ClassTag kAllClassTags[] = {
    ClassTag::IA,   ClassTag::IB,
    ClassTag::IIA,  ClassTag::IIB,
    ClassTag::IIIA, ClassTag::IIIB_neg_lambda,
    ClassTag::IIIB_pos_lambda_bounded, ClassTag::IIIB_pos_lambda_unbounded,
};

std::string_view to_string(ClassTag tag);
std::optional<ClassTag> parse_class_tag(std::string_view text);

enum class ClassFamily { I, II, III };
ClassFamily family_of(ClassTag tag);
bool is_class_iiib(ClassTag tag);

/// Parameters of a catalog instance.  Only the fields meaningful for the
/// instance's ClassTag may be present; see SuperpotentialInstance::make.
struct ParamRecord {
    std::optional<double> a;
    std::optional<double> B;
    std::optional<double> alpha;
    std::optional<double> lambda;
    std::optional<double> epsilon;
    std::optional<double> omega;
    double hbar = 1.0;

    friend bool operator==(const ParamRecord&, const ParamRecord&) = default;
};

/// Open interval (xL, xR); either end may be infinite.
struct DomainSpec {
    double xL = -std::numeric_limits<double>::infinity();
    double xR = std::numeric_limits<double>::infinity();

    [[nodiscard]] bool contains(double x) const { return x > xL && x < xR; }
    [[nodiscard]] bool left_finite() const { return xL > -std::numeric_limits<double>::infinity(); }
    [[nodiscard]] bool right_finite() const { return xR < std::numeric_limits<double>::infinity(); }

    friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// For IIIB with lambda > 0 and f1^2 > lambda, f1 = -sqrt(lambda) coth(sqrt(lambda) x)
/// lives on (0, inf) where f1 < 0 (Right) or on (-inf, 0) where f1 > 0 (Left).
enum class Branch { Right, Left };

enum class Partner { Minus, Plus };
std::string_view to_string(Partner which);

/// An evaluable closed-form superpotential.  Immutable after construction.
class SuperpotentialInstance {
public:
    static constexpr double kDefaultExclusionRadius = 1e-9;

    /// Validates `params` against `tag` and derives the domain.
    /// Throws InvalidParameters on meaningless or missing fields.
    static SuperpotentialInstance make(std::string name, ClassTag tag, ParamRecord params,
                                       Branch branch = Branch::Right);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] ClassTag tag() const { return tag_; }
    [[nodiscard]] const ParamRecord& params() const { return params_; }
    [[nodiscard]] const DomainSpec& domain() const { return domain_; }
    [[nodiscard]] Branch branch() const { return branch_; }

    // Resolved parameter values.  Fields absent for the class read as zero,
    // except epsilon which is derived from omega where the class fixes it.
    [[nodiscard]] double a() const { return params_.a.value_or(0.0); }
    [[nodiscard]] double B() const { return params_.B.value_or(0.0); }
    [[nodiscard]] double alpha() const { return params_.alpha.value_or(0.0); }
    [[nodiscard]] double lambda() const { return params_.lambda.value_or(0.0); }
    [[nodiscard]] double epsilon() const { return params_.epsilon.value_or(0.0); }
    [[nodiscard]] double omega() const { return params_.omega.value_or(0.0); }
    [[nodiscard]] double hbar() const { return params_.hbar; }

    /// sqrt(|lambda|), the inverse length scale of the hyperbolic/trigonometric forms.
    [[nodiscard]] double k() const;
    /// Natural length unit of the closed form (1/k, 1/|alpha| or 1).
    [[nodiscard]] double length_scale() const;

    [[nodiscard]] SuperpotentialInstance with_params(ParamRecord params) const;
    [[nodiscard]] SuperpotentialInstance with_a(double a) const;
    [[nodiscard]] SuperpotentialInstance with_hbar(double hbar) const;

    /// Copy whose f1 is shifted by a constant; breaks the Riccati identities.
    [[nodiscard]] SuperpotentialInstance perturbed(double f1_offset) const;
    /// Copy evaluating -W instead of W.
    [[nodiscard]] SuperpotentialInstance negated() const;
    [[nodiscard]] SuperpotentialInstance with_exclusion_radius(double radius) const;

    [[nodiscard]] bool is_negated() const { return negated_; }
    [[nodiscard]] double f1_offset() const { return f1_offset_; }
    [[nodiscard]] double exclusion_radius() const { return exclusion_radius_; }

    // Closed forms.  Each throws DomainError / SingularityError for x outside
    // the open domain or within the exclusion radius of a finite endpoint.
    [[nodiscard]] double f1(double x) const;
    [[nodiscard]] double f1_prime(double x) const;
    [[nodiscard]] double f2(double x) const;
    [[nodiscard]] double f2_prime(double x) const;
    /// The x-independent part u(a): B/a for Class II, zero otherwise.
    [[nodiscard]] double u() const;

    /// g(a) of the additive shape-invariance condition, evaluated at `a`.
    [[nodiscard]] double g(double a) const;

    void check_point(double x) const;

    friend bool operator==(const SuperpotentialInstance&, const SuperpotentialInstance&) = default;

private:
    SuperpotentialInstance() = default;

    std::string name_;
    ClassTag tag_ = ClassTag::IA;
    ParamRecord params_;
    DomainSpec domain_;
    Branch branch_ = Branch::Right;
    double f1_offset_ = 0.0;
    bool negated_ = false;
    double exclusion_radius_ = kDefaultExclusionRadius;
};

double evaluate_W(const SuperpotentialInstance& sp, double x);
double evaluate_W_prime(const SuperpotentialInstance& sp, double x);
/// V-(x) = W^2 - hbar W' and V+(x) = W^2 + hbar W' (units with 2m = 1).
double partner_potential(const SuperpotentialInstance& sp, double x, Partner which);
/// V- or V+ and g(a) in long double, for identity checks that must sit below
/// the rounding of double-precision potentials.
long double partner_potential_extended(const SuperpotentialInstance& sp, double x, Partner which);
long double g_extended(const SuperpotentialInstance& sp, double a);

/// Largest residual of the class's Riccati constraints on `grid`:
/// f1^2 - f1' = lambda and f1 f2 - f2' = epsilon for Class III, the f1 part
/// for Class II, and f1 = alpha, alpha f2 - f2' = epsilon for Class I.
double check_riccati(const SuperpotentialInstance& sp, std::span<const double> grid);

inline constexpr std::size_t kStandardGridPoints = 512;

/// Interval sampled by the standard grid (interior, away from singular ends).
std::pair<double, double> standard_range(const SuperpotentialInstance& sp);
/// Log-spaced on half-line domains, uniform otherwise.
std::vector<double> standard_grid(const SuperpotentialInstance& sp,
                                  std::size_t points = kStandardGridPoints);

std::vector<double> linspace(double lo, double hi, std::size_t points);
std::vector<double> logspace(double lo, double hi, std::size_t points);

} // namespace susylab
