#include "zext/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zext {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::domain_error("config: not a boolean: " + v);
}

} // namespace

void apply_key_value(RunConfig& cfg, const std::string& key,
                     const std::string& value) {
    try {
        if (key == "t_max") cfg.t_max = std::stod(value);
        else if (key == "n") cfg.n = std::stoi(value);
        else if (key == "K") cfg.K = std::stoi(value);
        else if (key == "k_max") cfg.k_max = std::stoi(value);
        else if (key == "abs_tol") cfg.abs_tol = std::stod(value);
        else if (key == "include_sub_gamma1_lambdas")
            cfg.include_sub_gamma1_lambdas = parse_bool(value);
        else if (key == "threads") cfg.threads = std::stoi(value);
        else if (key == "output_dir") cfg.output_dir = value;
        else if (key == "stride") cfg.stride = std::stoi(value);
        else throw std::domain_error("config: unknown key: " + key);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("config: malformed value for " + key + ": " + value);
    } catch (const std::out_of_range&) {
        throw std::domain_error("config: value out of range for " + key + ": " + value);
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("config: cannot open file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config: line " + std::to_string(lineno) +
                                    " is not key=value: " + t);
        apply_key_value(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (cfg.t_max < 15.0)
        throw std::domain_error("config: t_max >= 15 required");
    if (cfg.K < 0) throw std::domain_error("config: K >= 0 required");
    if (!(cfg.abs_tol > 0.0))
        throw std::domain_error("config: abs_tol > 0 required");
    if (cfg.threads < 1) throw std::domain_error("config: threads >= 1 required");
    if (cfg.stride < 1) throw std::domain_error("config: stride >= 1 required");
    if (cfg.k_max < 1) throw std::domain_error("config: k_max >= 1 required");
}

std::string default_output_dir() {
    const char* env = std::getenv("ZEXT_OUTPUT_DIR");
    if (env && *env) return env;
    return ".";
}

std::string to_json(const RunConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"t_max\":" << cfg.t_max << ",\"n\":" << cfg.n << ",\"K\":" << cfg.K
       << ",\"k_max\":" << cfg.k_max << ",\"abs_tol\":" << cfg.abs_tol
       << ",\"include_sub_gamma1_lambdas\":"
       << (cfg.include_sub_gamma1_lambdas ? "true" : "false")
       << ",\"threads\":" << cfg.threads << ",\"output_dir\":\"" << cfg.output_dir
       << "\",\"stride\":" << cfg.stride << "}";
    return os.str();
}

} // namespace zext
