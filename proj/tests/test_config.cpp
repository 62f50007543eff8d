#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "airysum/config.hpp"

using namespace airysum;

namespace {

std::string write_temp(const std::string& body) {
    const std::string path = "airysum_test_config.tmp";
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("config file parsing and precedence fields") {
    const std::string path = write_temp(
        "# comment\n"
        "explicit_terms = 5000\n"
        "format = csv   # trailing comment\n"
        "tol.linear.trk = 1e-7\n");
    RunConfig cfg;
    load_config_file(path, cfg);
    CHECK(cfg.sum.explicit_terms == 5000);
    CHECK(cfg.format == "csv");
    CHECK(cfg.tol_overrides.at("linear.trk") == 1e-7);
    std::remove(path.c_str());
}

TEST_CASE("config rejects unknown keys, unknown ids, and bad values") {
    RunConfig cfg;
    const std::string p1 = write_temp("nonsense = 1\n");
    CHECK_THROWS_AS(load_config_file(p1, cfg), std::invalid_argument);
    const std::string p2 = write_temp("tol.bogus.id = 1e-6\n");
    CHECK_THROWS_AS(load_config_file(p2, cfg), std::invalid_argument);
    const std::string p3 = write_temp("explicit_terms = few\n");
    CHECK_THROWS_AS(load_config_file(p3, cfg), std::invalid_argument);
    const std::string p4 = write_temp("explicit_terms = 10\n");
    CHECK_THROWS_AS(load_config_file(p4, cfg), std::invalid_argument);
    CHECK_THROWS_AS(load_config_file("no_such_file.cfg", cfg), std::invalid_argument);
    std::remove(p1.c_str());
}
