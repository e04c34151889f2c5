#include "helpers.hpp"

#include "susylab/errors.hpp"
#include "susylab/invariance.hpp"

#include <doctest.h>

#include <cmath>

using namespace susylab;
using testing::oscillator;
using testing::scarf;
using testing::unbounded;

TEST_CASE("phase classification") {
    CHECK(classify_phase(oscillator(-3)).phase == Phase::Broken);
    CHECK(classify_phase(oscillator(3)).phase == Phase::Unbroken);
    CHECK(classify_phase(scarf(1, 2)).phase == Phase::Broken);
    CHECK(classify_phase(scarf(2, 1)).phase == Phase::Unbroken);

    for (double a : {-5.0, -3.0, -2.0, -1.0, -0.5}) CHECK(classify_phase(oscillator(a)).phase == Phase::Broken);
    for (double a : {0.5, 1.0, 2.0, 3.0, 5.0}) CHECK(classify_phase(oscillator(a)).phase == Phase::Unbroken);

    const auto report = classify_phase(oscillator(3));
    CHECK(report.boundary_signs[0] == -1);
    CHECK(report.boundary_signs[1] == 1);
    CHECK(report.zero_mode_in_minus());
}

TEST_CASE("boundary signs agree with evaluating W near the ends") {
    for (const auto& e : catalog_entries()) {
        std::vector<SuperpotentialInstance> variants{e.instance};
        if (e.broken_preset) variants.push_back(e.instance.with_params(*e.broken_preset));
        for (const auto& sp : variants) {
            const auto& d = sp.domain();
            const double L = sp.length_scale();
            const double left = d.left_finite() ? d.xL + 1e-7 * L : -200.0 * L;
            const double right = d.right_finite() ? d.xR - 1e-7 * L : 200.0 * L;
            const auto signs = classify_phase(sp).boundary_signs;
            CAPTURE(sp.name());
            CHECK((evaluate_W(sp, left) > 0 ? 1 : -1) == signs[0]);
            CHECK((evaluate_W(sp, right) > 0 ? 1 : -1) == signs[1]);
        }
    }
}

TEST_CASE("indeterminate phase") {
    ParamRecord p;
    p.a = 0.0;
    p.B = 0.0;
    p.lambda = 1.0;
    const auto sp = SuperpotentialInstance::make("flat", ClassTag::IIIB_pos_lambda_bounded, p);
    CHECK_THROWS_AS((void)classify_phase(sp), IndeterminatePhase);
}

TEST_CASE("additive shape invariance over a parameter sweep") {
    for (const auto& e : catalog_entries()) {
        const auto& base = e.instance;
        const double a0 = base.a() == 0.0 ? 1.0 : base.a();
        for (double factor : {0.1, 0.3, 1.0, 3.0, 10.0}) {
            for (double hbar : {0.5, 1.0, 2.0}) {
                const auto sp = base.with_a(a0 * factor).with_hbar(hbar);
                CAPTURE(sp.name());
                CAPTURE(sp.a());
                CAPTURE(hbar);
                CHECK(additive_si_residual(sp, standard_grid(sp)) < 1e-10);
            }
        }
    }
    CHECK(additive_si_residual(oscillator(3), standard_grid(oscillator(3))) < 1e-10);
    CHECK(additive_si_residual(scarf(2, 1), standard_grid(scarf(2, 1))) < 1e-10);
    CHECK(additive_si_residual(oscillator(3).perturbed(0.01), standard_grid(oscillator(3))) > 1e-3);
    CHECK(additive_si_residual(scarf(2, 1).perturbed(0.01), standard_grid(scarf(2, 1))) > 1e-3);
}

TEST_CASE("discrete maps") {
    const auto m1 = discrete_si_map(oscillator(-3));
    CHECK(*m1.mapped_params.a == 3.0);
    CHECK(m1.energy_shift == doctest::Approx(7.0));

    const auto m2 = discrete_si_map(scarf(1, 2));
    CHECK(*m2.mapped_params.a == 2.5);
    CHECK(*m2.mapped_params.B == 1.5);
    CHECK(m2.energy_shift == doctest::Approx(5.25));

    const auto m3 = discrete_si_map(oscillator(0.0, 0.5));
    CHECK(*m3.mapped_params.a == 0.0);
    CHECK(m3.energy_shift == doctest::Approx(-0.5 * oscillator(0.0).epsilon()));

    CHECK_THROWS_AS((void)discrete_si_map(testing::entry("morse")), UnsupportedClass);
    CHECK_THROWS_AS((void)discrete_si_map(testing::entry("coulomb")), UnsupportedClass);
    CHECK_THROWS_AS((void)discrete_si_map(testing::entry("scarf2")), UnsupportedParameters);
}

TEST_CASE("discrete shape invariance is a constant shift") {
    const auto c1 = verify_discrete_si(oscillator(-3), constancy_grid(oscillator(-3)));
    CHECK(c1.max_deviation < 1e-10);
    CHECK(c1.measured_shift == doctest::Approx(7.0).epsilon(1e-12));

    const auto c2 = verify_discrete_si(scarf(1, 2), constancy_grid(scarf(1, 2)));
    CHECK(c2.max_deviation < 1e-10);
    CHECK(c2.measured_shift == doctest::Approx(5.25).epsilon(1e-12));

    // a -> a is not a phase-changing map: V+(a) - V-(a) = 2 hbar W' is not constant.
    const auto wrong = discrete_si_deviation(oscillator(-3), oscillator(-3), constancy_grid(oscillator(-3)));
    CHECK(wrong.max_deviation > 1e-3);

    for (const auto& e : catalog_entries()) {
        if (family_of(e.instance.tag()) != ClassFamily::III || !e.broken_preset) continue;
        for (double hbar : {0.5, 1.0, 2.0}) {
            const auto sp = e.instance.with_params(*e.broken_preset).with_hbar(hbar);
            const auto c = verify_discrete_si(sp, constancy_grid(sp));
            CAPTURE(sp.name());
            CHECK(c.max_deviation < 1e-10);
            CHECK(std::abs(c.measured_shift - c.expected_shift) <=
                  1e-10 * std::max(1.0, std::abs(c.expected_shift)));
        }
    }
}

TEST_CASE("the discrete maps change the phase") {
    for (const auto& sp : {oscillator(-3), scarf(1, 2), testing::broken("poschl-teller")}) {
        REQUIRE(classify_phase(sp).phase == Phase::Broken);
        const auto mapped = apply_map(sp, discrete_si_map(sp));
        CHECK(classify_phase(mapped).phase == Phase::Unbroken);
    }
}

TEST_CASE("BSWKB applicability") {
    CHECK(bswkb_applicability(oscillator(-3), 7.0).kind == Applicability::TwoTurningPoints);
    CHECK(bswkb_applicability(oscillator(-3), 5.0).kind == Applicability::NoIntersection);

    const auto morse = testing::broken("morse");
    const auto coulomb = testing::broken("coulomb");
    for (double E : {1.5, 10.0, 100.0, 1e4}) {
        CHECK(bswkb_applicability(morse, 25.0 + E).kind == Applicability::SingleIntersection);
        CHECK(bswkb_applicability(coulomb, 1.0 + E).kind == Applicability::SingleIntersection);
    }
    for (double E : {0.5, 5.0, 50.0})
        CHECK(bswkb_applicability(scarf(2, 2), E).kind == Applicability::SingleIntersection);

    CHECK(bswkb_applicability(scarf(1, 2), 5.25).kind == Applicability::TwoTurningPoints);

    CHECK_THROWS_AS((void)bswkb_applicability(oscillator(3), 2.0), PhaseError);
    CHECK_THROWS_AS((void)bswkb_applicability(oscillator(-3), 0.0), InvalidParameters);
    try {
        (void)bswkb_applicability(testing::entry("scarf2").with_a(1.0), 1.0);
        FAIL("expected UnsupportedParameters");
    } catch (const UnsupportedParameters& e) {
        CHECK(std::string(e.what()).find("does not go into a broken supersymmetric phase") !=
              std::string::npos);
    }
}

TEST_CASE("applicability is monotone in E") {
    for (const auto& sp : {oscillator(-3), scarf(1, 2), scarf(-0.5, 3)}) {
        bool two = false;
        for (double E = 0.25; E < 200.0; E *= 1.3) {
            const bool now = bswkb_applicability(sp, E).kind == Applicability::TwoTurningPoints;
            if (two) CHECK(now);
            two = two || now;
        }
        CHECK(two);
    }
}

TEST_CASE("unbounded IIIB sign table") {
    // f1 < 0 (right branch).
    CHECK(classify_phase(unbounded(3, 2)).phase == Phase::Broken);
    CHECK(bswkb_applicability(unbounded(3, 2), 7.0).kind == Applicability::TwoTurningPoints);
    CHECK(classify_phase(unbounded(-3, -2)).phase == Phase::Broken);
    CHECK(bswkb_applicability(unbounded(-3, -2), 7.0).kind == Applicability::TwoTurningPoints);
    CHECK(classify_phase(unbounded(-3, 2)).phase == Phase::Broken);
    CHECK_THROWS_AS((void)bswkb_applicability(unbounded(-3, 2), 7.0), UnsupportedParameters);
    CHECK(classify_phase(unbounded(-3, -5)).phase == Phase::Unbroken);

    // f1 > 0 (left branch).
    using susylab::Branch;
    CHECK(classify_phase(unbounded(2, 3, Branch::Left)).phase == Phase::Broken);
    CHECK(bswkb_applicability(unbounded(2, 3, Branch::Left), 10.0).kind ==
          Applicability::SingleIntersection);
    CHECK(bswkb_applicability(unbounded(-2, -3, Branch::Left), 10.0).kind ==
          Applicability::SingleIntersection);
    CHECK(classify_phase(unbounded(-10, 12, Branch::Left)).phase == Phase::Unbroken);
}
