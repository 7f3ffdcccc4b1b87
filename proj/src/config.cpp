#include "blasius/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace blasius {

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(Rational::parse(tok.substr(b, e - b + 1)));
    }
    return out;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::runtime_error("config: bad line " + std::to_string(lineno));
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "digits")
            cfg.digits = std::stoi(val);
        else if (key == "T")
            cfg.T = Rational::parse(val);
        else if (key == "c_max")
            cfg.c_max = Rational::parse(val);
        else if (key == "rho0")
            cfg.rho0 = Rational::parse(val);
        else if (key == "eps_inner")
            cfg.eps_inner = parse_rational_list(val);
        else if (key == "partition")
            cfg.partition = parse_rational_list(val);
        else if (key == "out")
            cfg.out_path = val;
        else
            throw std::runtime_error("config: unknown key '" + key + "' at line " + std::to_string(lineno));
    }
    return cfg;
}

void apply_env_defaults(Config& cfg) {
    if (const char* p = std::getenv("BLASIUS_PRECISION")) {
        const int d = std::atoi(p);
        if (d >= 1 && d <= 100) cfg.digits = d;
    }
}

}  // namespace blasius
