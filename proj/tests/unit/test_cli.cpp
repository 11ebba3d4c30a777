#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sdirac/report.hpp"

using namespace sdirac;

TEST_CASE("reports are byte-identical across repeated runs") {
    SpaceConfig cfg(3, 1);
    auto a = run_casimir(cfg, 1, 2).render("json");
    auto b = run_casimir(cfg, 1, 2).render("json");
    CHECK(a == b);
    auto c = run_singular(cfg, 1, std::nullopt, std::nullopt).render("json");
    auto d = run_singular(cfg, 1, std::nullopt, std::nullopt).render("json");
    CHECK(c == d);
}

TEST_CASE("exit codes reflect the assertions") {
    SpaceConfig good(3, 1);
    CHECK(run_casimir(good, 1, 2).exit_code() == 0);
    // the singular projection degree fails loudly with its reason
    SpaceConfig degenerate(4, 2);
    auto rep = run_fischer(degenerate, 1, 3);
    CHECK(rep.exit_code() == 1);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].reason.find("FischerSingular") == 0);
}

TEST_CASE("monogenics report carries the exact dimension") {
    auto rep = run_monogenics(SpaceConfig(3, 0), 2, std::nullopt, std::nullopt);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.checks.at(0).data.at("dim").get<int>() == 6);
}

TEST_CASE("window violations are reported, not silently passed") {
    auto rep = run_submodule(SpaceConfig(4, 2), 0, 3);
    CHECK(rep.exit_code() == 1);
    CHECK(rep.checks.at(0).reason.find("WindowViolation") == 0);
}

TEST_CASE("atomic report writing") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sdirac_test_reports";
    fs::remove_all(dir);
    SuiteReport rep = run_monogenics(SpaceConfig(3, 0), 1, std::nullopt, std::nullopt);
    std::string path = (dir / "mono.json").string();
    write_report_file(rep, path, "json");
    CHECK(fs::exists(path));
    CHECK_FALSE(fs::exists(path + ".tmp"));
    std::ifstream in(path);
    Json j;
    in >> j;
    CHECK(j["suite"] == "monogenics");
    CHECK(j["version"] == kReportVersion);
    CHECK(j["checks"][0]["status"] == "pass");
    fs::remove_all(dir);
}

TEST_CASE("render formats") {
    SuiteReport rep = run_monogenics(SpaceConfig(3, 0), 1, std::nullopt, std::nullopt);
    CHECK(rep.render("text").find("[PASS]") != std::string::npos);
    CHECK(rep.render("csv").find("suite,name,identity,status,reason") == 0);
    CHECK_THROWS(rep.render("yaml"));
}

TEST_CASE("manifest round trip") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "sdirac_manifest.json";
    fs::remove(path);
    {
        Manifest m(path.string());
        CHECK_FALSE(m.completed(3, 1, 2, 4));
        m.mark(3, 1, 2, 4);
        m.save();
    }
    {
        Manifest m(path.string());
        CHECK(m.completed(3, 1, 2, 4));
        CHECK_FALSE(m.completed(3, 1, 3, 4));
    }
    fs::remove(path);
}

TEST_CASE("expression check reports engine consistency") {
    auto rep = run_check(SpaceConfig(3, 1), "[dirac, vector] == -2*euler - M", 2, 2);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.checks.at(0).data.at("symbolic") == "pass");
    CHECK(rep.checks.at(0).data.at("evaluation") == "pass");
}

TEST_CASE("scalar wire format in reports") {
    Json j = scalar_json(Scalar::fraction(1, 2) + Scalar::i());
    CHECK(j[0] == "1/2");
    CHECK(j[1] == "1/1");
    CHECK(j[2] == "0/1");
    CHECK(j[3] == "0/1");
}
