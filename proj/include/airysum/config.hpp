#pragma once

#include <map>
#include <string>

#include "airysum/sums.hpp"

namespace airysum {

// Run configuration.  Precedence: built-in defaults < config file < flags.
// The config file is flat "key = value" text; '#' starts a comment.
// Recognized keys: explicit_terms, refine_upto, format, output, and
// per-identity tolerance overrides of the form tol.<identity-id>.
struct RunConfig {
    SummationConfig sum;
    std::string format = "table";  // table | csv | json
    std::string output;            // empty = stdout
    std::map<std::string, double> tol_overrides;
};

// Parses a config file into cfg.  Unknown keys or malformed lines throw
// std::invalid_argument (usage error at the CLI).
void load_config_file(const std::string& path, RunConfig& cfg);

}  // namespace airysum
