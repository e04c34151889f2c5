#include "cli.hpp"

#include "susylab/serialization.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace susylab;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("exit codes") {
    CHECK(run({"spectrum", "oscillator-3d", "--a", "-3", "--nmax", "2"}).code == cli::kPass);
    CHECK(run({"spectrum", "no-such-thing"}).code == cli::kConfigError);
    CHECK(run({"spectrum", "harmonic", "--B", "1"}).code == cli::kConfigError);
    CHECK(run({"spectrum", "harmonic", "--format", "yaml"}).code == cli::kConfigError);
    CHECK(run({"frobnicate"}).code == cli::kConfigError);
    CHECK(run({"spectrum", "{not json"}).code == cli::kConfigError);
    CHECK(run({"verify", "oscillator-3d", "--a", "-3", "--tol", "1e-30"}).code ==
          cli::kCheckFailure);
}

TEST_CASE("spectrum output") {
    const auto r = run({"spectrum", "oscillator-3d", "--a", "-3", "--nmax", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["phase"] == "broken");
    CHECK(j["levels"].size() == 3);
    CHECK(j["levels"][2]["E"] == 11.0);

    const auto unbroken = run({"spectrum", "oscillator-3d", "--a", "3", "--nmax", "2", "--format", "csv"});
    CHECK(unbroken.out == "n,E\n0,0\n1,2\n2,4\n");

    const auto inline_json = run({"spectrum", R"({"tag":"IIIA","params":{"a":-3,"omega":1}})",
                                  "--nmax", "0", "--format", "csv"});
    CHECK(inline_json.out == "n,E\n0,7\n");
}

TEST_CASE("catalog listing") {
    const auto r = run({"catalog", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.is_array());
    CHECK(j.size() == 9);
    const auto filtered = json::parse(run({"catalog", "--tag", "IIIA", "--format", "json"}).out);
    REQUIRE(filtered.size() == 1);
    CHECK(filtered[0]["name"] == "oscillator-3d");
    CHECK(run({"catalog"}).out.find("scarf1") != std::string::npos);
}

TEST_CASE("verify reports skips and passes") {
    const auto ok = run({"verify", "oscillator-3d", "--a", "-3", "--nmax", "5", "--format", "json"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["all_pass"] == true);

    const auto single = run({"verify", "scarf1", "--a", "2", "--B", "2"});
    CHECK(single.code == 0);
    CHECK(single.out.find("only one intersection") != std::string::npos);

    const auto morse = run({"verify", "morse", "--broken"});
    CHECK(morse.code == 0);
    CHECK(morse.out.find("BSWKB undefined: single intersection (Class I)") != std::string::npos);

    const auto oracle = run({"verify", "oscillator-3d", "--broken", "--oracle", "--format", "json",
                             "--oracle-nodes", "1000"});
    CHECK(oracle.code == 0);
    const auto checks = json::parse(oracle.out)["checks"];
    bool saw_oracle = false;
    for (const auto& c : checks) saw_oracle = saw_oracle || c["check"] == "oracle-spectrum";
    CHECK(saw_oracle);
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"verify", "scarf1", "--broken", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("suite without the oracle") {
    const auto path = std::filesystem::temp_directory_path() / "susylab-suite-test.json";
    const auto r = run({"suite", "--skip", "oracle", "--format", "json", "--json", path.string()});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["summary"]["worst_error"]["swkb"].get<double>() < 1e-9);
    CHECK(j["summary"]["worst_error"]["bswkb"].get<double>() < 1e-9);
    CHECK(std::filesystem::exists(path));
    for (const auto& c : j["checks"]) CHECK(c["check"].get<std::string>().rfind("oracle", 0) != 0);
    std::filesystem::remove(path);
    CHECK(run({"suite", "--skip", "everything"}).code == cli::kConfigError);
}

TEST_CASE("figure data") {
    const auto dir = std::filesystem::temp_directory_path() / "susylab-figure-test";
    std::filesystem::remove_all(dir);
    const auto r = run({"figure-data", "oscillator-3d", "--out", dir.string(), "--points", "50"});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "oscillator-3d-fig1.csv"));
    CHECK(std::filesystem::exists(dir / "oscillator-3d-fig2.csv"));
    CHECK(std::filesystem::exists(dir / "oscillator-3d-levels.csv"));
    std::filesystem::remove_all(dir);
    CHECK(run({"figure-data", "oscillator-3d", "--points", "1"}).code == cli::kConfigError);
}
