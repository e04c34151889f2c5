#include "helpers.hpp"

#include "susylab/errors.hpp"
#include "susylab/serialization.hpp"
#include "susylab/spectra.hpp"

#include <doctest.h>

#include <cmath>

using namespace susylab;

TEST_CASE("numbers print in shortest round-trip form") {
    CHECK(format_number(7.0) == "7");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-2.5e-12) == "-2.5e-12");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(-INFINITY) == "-inf");
    CHECK(format_number(NAN) == "nan");
    const double x = 1.0 / 3.0;
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("instances round-trip through JSON") {
    for (const auto& sp : catalog()) {
        const auto j = to_json(sp);
        CAPTURE(j.dump());
        const auto back = instance_from_json(json::parse(j.dump()));
        CHECK(back == sp);
    }
    const auto left = testing::entry("poschl-teller-left");
    const auto j = to_json(left);
    CHECK(j["domain"]["xL"] == "-inf");
    CHECK(j["domain"]["xR"] == 0.0);
    CHECK(instance_from_json(j).branch() == Branch::Left);
    CHECK(to_json(testing::entry("harmonic"))["domain"]["xR"] == "+inf");
}

TEST_CASE("instance JSON validation") {
    auto j = to_json(testing::entry("scarf1"));
    j["params"]["omega"] = 1.0;
    CHECK_THROWS_AS((void)instance_from_json(j), InvalidParameters);

    auto unknown = to_json(testing::entry("scarf1"));
    unknown["params"]["zeta"] = 1.0;
    CHECK_THROWS_AS((void)instance_from_json(unknown), InvalidParameters);

    auto domain = to_json(testing::entry("oscillator-3d"));
    domain["domain"]["xL"] = -1.0;
    CHECK_THROWS_AS((void)instance_from_json(domain), InvalidParameters);

    CHECK_THROWS_AS((void)instance_from_json(json::parse(R"({"tag":"XIV"})")), InvalidParameters);
    CHECK_THROWS_AS((void)instance_from_json(json::parse("[1,2]")), InvalidParameters);
    CHECK_THROWS_AS((void)instance_from_json(json::parse(R"({"name":"x"})")), InvalidParameters);

    const auto minimal = instance_from_json(
        json::parse(R"({"tag":"IIIA","params":{"a":-3,"omega":1}})"));
    CHECK(minimal.hbar() == 1.0);
    CHECK(minimal.a() == -3.0);
}

TEST_CASE("spectrum JSON and CSV") {
    const auto s = build_spectrum(testing::broken("oscillator-3d"), 4);
    const auto j = to_json(s);
    CHECK(j["phase"] == "broken");
    CHECK(j["levels"][0]["E"] == 7.0);
    const auto back = spectrum_from_json(json::parse(j.dump()));
    REQUIRE(back.levels.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(back.levels[i].value == s.levels[i].value);
    CHECK(back.formula == s.formula);
    CHECK(spectrum_csv(s) == "n,E\n0,7\n1,9\n2,11\n3,13\n");
}

TEST_CASE("quantization reports") {
    const auto r = verify_quantization(testing::oscillator(-3), 1);
    const auto back = quantization_from_json(json::parse(to_json(r).dump()));
    CHECK(back.E == r.E);
    CHECK(back.turning.x1 == r.turning.x1);
    CHECK(back.integral == r.integral);
    CHECK(back.phase == Phase::Broken);
    CHECK(quantization_csv_header() == "instance,phase,n,hbar,E,x1,x2,integral,target,abs_error");
    const auto row = quantization_csv_row(r);
    CHECK(row.rfind("oscillator-3d,broken,1,1,9,", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 9);

    QuantizationReport empty;
    empty.turning.x1 = empty.turning.x2 = NAN;
    const auto j = to_json(empty);
    CHECK(j["x1"].is_null());
    CHECK(std::isnan(quantization_from_json(j).turning.x1));
}

TEST_CASE("oracle spectra and comparisons") {
    OracleSpectrum s;
    s.which = Partner::Plus;
    s.grid = {0.5, 9.0, 400};
    s.eigenvalues = {1.0, 2.0};
    s.richardson_estimate = std::vector<double>{0.9, 1.9};
    const auto back = oracle_from_json(json::parse(to_json(s).dump()));
    CHECK(back.which == Partner::Plus);
    CHECK(back.grid.N == 400);
    CHECK(back.best() == s.best());

    const auto report = compare_lists(std::vector<double>{1.0}, std::vector<double>{1.0005});
    const auto csv = comparison_csv(report);
    CHECK(csv.rfind("n,analytic,numeric,rel_error,pass\n0,1,1.0005,", 0) == 0);
    CHECK(to_json(report)["all_pass"] == true);
}

TEST_CASE("phase reports") {
    const auto sp = testing::broken("oscillator-3d");
    const auto j = to_json(classify_phase(sp), discrete_si_map(sp));
    CHECK(j["phase"] == "broken");
    CHECK(j["map"]["a"] == 3.0);
    CHECK(j["shift"] == 7.0);
    CHECK(to_json(classify_phase(testing::entry("harmonic")), std::nullopt)["map"].is_null());
    CHECK(parse_phase("unbroken") == Phase::Unbroken);
    CHECK_THROWS_AS((void)parse_phase("cracked"), InvalidParameters);
    CHECK_THROWS_AS((void)parse_partner("both"), InvalidParameters);
}
