#include "susylab/catalog.hpp"

namespace susylab {

namespace {

ParamRecord params(std::optional<double> a, std::optional<double> B, std::optional<double> alpha,
                   std::optional<double> lambda, std::optional<double> omega) {
    ParamRecord p;
    p.a = a;
    p.B = B;
    p.alpha = alpha;
    p.lambda = lambda;
    p.omega = omega;
    return p;
}

std::vector<CatalogEntry> build() {
    using std::nullopt;
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, ClassTag tag, ParamRecord defaults,
                   std::optional<ParamRecord> broken, std::string description,
                   Branch branch = Branch::Right) {
        auto sp = SuperpotentialInstance::make(std::move(name), tag, defaults, branch);
        if (broken) (void)sp.with_params(*broken); // validate eagerly
        out.push_back({std::move(sp), std::move(broken), std::move(description)});
    };

    add("harmonic", ClassTag::IA, params(nullopt, nullopt, nullopt, nullopt, 1.0), nullopt,
        "one-dimensional oscillator W = omega x / 2 on the real line");

    // alpha < 0: the unbroken spectrum alpha^2 [a^2 - (a + n hbar)^2] grows while a + n hbar < 0.
    add("morse", ClassTag::IB, params(-10.0, nullopt, -1.0, nullopt, nullopt),
        params(5.0, nullopt, -1.0, nullopt, nullopt),
        "Morse W = alpha a - exp(alpha x) on the real line");

    add("coulomb", ClassTag::IIA, params(1.0, 1.0, nullopt, nullopt, nullopt),
        params(1.0, -1.0, nullopt, nullopt, nullopt),
        "Coulomb W = -a/x + B/a on (0, inf)");

    add("eckart", ClassTag::IIB, params(2.0, 100.0, nullopt, 1.0, nullopt),
        params(2.0, -10.0, nullopt, 1.0, nullopt),
        "Eckart W = -a sqrt(lambda) coth(sqrt(lambda) x) + B/a on (0, inf)");

    add("oscillator-3d", ClassTag::IIIA, params(3.0, nullopt, nullopt, nullopt, 1.0),
        params(-3.0, nullopt, nullopt, nullopt, 1.0),
        "three-dimensional oscillator W = omega r / 2 - l / r with a = l on (0, inf)");

    add("scarf1", ClassTag::IIIB_neg_lambda, params(2.0, 1.0, nullopt, -1.0, nullopt),
        params(1.0, 2.0, nullopt, -1.0, nullopt),
        "trigonometric Scarf W = a k tan(k x) + B k sec(k x), k^2 = -lambda");

    add("scarf2", ClassTag::IIIB_pos_lambda_bounded, params(-10.0, 1.0, nullopt, 1.0, nullopt),
        nullopt, "hyperbolic Scarf W = -a k tanh(k x) + B k sech(k x), k^2 = lambda");

    add("poschl-teller", ClassTag::IIIB_pos_lambda_unbounded,
        params(-10.0, -12.0, nullopt, 1.0, nullopt), params(-24.0, -20.0, nullopt, 1.0, nullopt),
        "generalized Poschl-Teller W = -a k coth(k x) + B k csch(k x) on (0, inf), f1 < 0");

    add("poschl-teller-left", ClassTag::IIIB_pos_lambda_unbounded,
        params(-10.0, 12.0, nullopt, 1.0, nullopt), params(2.0, 3.0, nullopt, 1.0, nullopt),
        "generalized Poschl-Teller on (-inf, 0), f1 > 0", Branch::Left);
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

std::vector<SuperpotentialInstance> catalog() {
    std::vector<SuperpotentialInstance> out;
    for (const auto& e : catalog_entries()) out.push_back(e.instance);
    return out;
}

std::optional<CatalogEntry> find_entry(std::string_view name) {
    for (const auto& e : catalog_entries())
        if (e.instance.name() == name) return e;
    return std::nullopt;
}

} // namespace susylab
