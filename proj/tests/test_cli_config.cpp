#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "blasius/certificate.hpp"

using namespace blasius;

namespace {

std::string write_temp(const std::string& body) {
    std::string path = "/tmp/blasius_cfg_test.cfg";
    std::ofstream out(path);
    out << body;
    return path;
}

nlohmann::ordered_json strip_timings(nlohmann::ordered_json j) {
    j.erase("timings_ms");
    return j;
}

}  // namespace

TEST_CASE("config parsing") {
    const std::string path = write_temp(
        "# comment\n"
        "digits = 20\n"
        "T = 2.5\n"
        "rho0 = 1e-7\n"
        "eps_inner = 3e-6, 2e-6, 3e-6\n"
        "out = /tmp/cert_out.json\n");
    Config cfg = parse_config_file(path);
    CHECK(cfg.digits == 20);
    CHECK(cfg.T == Rational(5, 2));
    CHECK(cfg.rho0 == Rational(1, 10000000));
    REQUIRE(cfg.eps_inner.size() == 3);
    CHECK(cfg.eps_inner[1] == Rational(2, 1000000));
    CHECK(cfg.out_path == "/tmp/cert_out.json");
    std::remove(path.c_str());
}

TEST_CASE("config rejects unknown keys and bad lines") {
    CHECK_THROWS(parse_config_file(write_temp("bogus_key = 1\n")));
    CHECK_THROWS(parse_config_file(write_temp("not a key value line\n")));
    CHECK_THROWS(parse_config_file("/nonexistent/path.cfg"));
}

TEST_CASE("rational list parsing") {
    auto v = parse_rational_list("0, 0.5, 2/3");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Rational(0));
    CHECK(v[1] == Rational(1, 2));
    CHECK(v[2] == Rational(2, 3));
    CHECK(parse_rational_list("").empty());
}

TEST_CASE("environment default for precision") {
    Config cfg;
    setenv("BLASIUS_PRECISION", "25", 1);
    apply_env_defaults(cfg);
    CHECK(cfg.digits == 25);
    unsetenv("BLASIUS_PRECISION");
}

TEST_CASE("certificate is deterministic and passes on defaults") {
    Config cfg;
    Certificate c1 = run_certificate(cfg);
    Certificate c2 = run_certificate(cfg);
    CHECK(c1.overall);
    CHECK(strip_timings(certificate_to_json(c1)) == strip_timings(certificate_to_json(c2)));
    // section order is part of the format
    REQUIRE(c1.sections.size() >= 17);
    CHECK(c1.sections.front().name == "inner-remainder");
    CHECK(c1.sections.back().name == "wall-stress");
}

TEST_CASE("tiny rho0 starves the fixed-point budget") {
    Config cfg;
    cfg.rho0 = Rational(1, 10000000);
    Certificate c = run_certificate(cfg);
    CHECK_FALSE(c.overall);
    bool match_failed = false;
    for (const auto& s : c.sections)
        if (s.name == "match") match_failed = !s.verdict;
    CHECK(match_failed);
}

TEST_CASE("larger T still passes the far-field sections") {
    Config cfg;
    cfg.T = Rational(5, 2);
    Certificate c = run_certificate(cfg);
    for (const auto& s : c.sections)
        if (s.name == "farfield-constants" || s.name == "farfield-contraction") CHECK(s.verdict);
    CHECK(c.overall);
}

TEST_CASE("report renders every section") {
    Config cfg;
    Certificate c = run_certificate(cfg);
    const std::string text = render_report(certificate_to_json(c));
    for (const auto& s : c.sections) CHECK(text.find(s.name) != std::string::npos);
    CHECK(text.find("overall: pass") != std::string::npos);
}
