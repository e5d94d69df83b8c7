#pragma once
// Run configuration shared by the command-line tools: flag values, optional
// key=value config file, environment fallback for the output directory.

#include <string>

namespace zext {

struct RunConfig {
    double t_max = 100.0;
    int n = 1;
    int K = 3;
    int k_max = 80;
    double abs_tol = 1e-10;
    bool include_sub_gamma1_lambdas = false;
    int threads = 1;
    std::string output_dir;
    int stride = 1;
};

// Parse a plain key=value file ('#' comments, blank lines ignored).
// Unknown keys are an error.
RunConfig load_config_file(const std::string& path);

// Apply one key=value pair; throws on unknown key or malformed value.
void apply_key_value(RunConfig& cfg, const std::string& key,
                     const std::string& value);

// Throws when invariants are violated (t_max >= 15, K >= 0, abs_tol > 0, ...).
void validate(const RunConfig& cfg);

// ZEXT_OUTPUT_DIR when set, "." otherwise.
std::string default_output_dir();

std::string to_json(const RunConfig& cfg);

} // namespace zext
