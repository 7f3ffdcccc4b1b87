#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blasius/rational.hpp"

namespace blasius {

// Pipeline configuration; file keys and CLI flags map 1:1 onto fields.
struct Config {
    int digits = 17;                      // decimal digits in emitted intervals
    Rational T = Rational(199, 100);      // far-field norm domain start
    Rational c_max = Rational(1, 4);
    Rational rho0 = Rational(5, 100000);
    std::vector<Rational> eps_inner = {Rational(3, 1000000), Rational(2, 1000000),
                                       Rational(3, 1000000)};
    std::optional<std::vector<Rational>> partition;  // override of the default breakpoints
    std::string out_path;                            // certificate destination ("" = stdout only)
};

// key = value lines; '#' comments; unknown keys rejected.
Config parse_config_file(const std::string& path);
void apply_env_defaults(Config& cfg);  // BLASIUS_PRECISION -> digits

std::vector<Rational> parse_rational_list(const std::string& csv);

}  // namespace blasius
