#include "airysum/config.hpp"

#include <fstream>
#include <stdexcept>

#include "airysum/identities.hpp"

namespace airysum {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        try {
            if (key == "explicit_terms")
                cfg.sum.explicit_terms = std::stoi(value);
            else if (key == "refine_upto")
                cfg.sum.refine_upto = std::stoi(value);
            else if (key == "format")
                cfg.format = value;
            else if (key == "output")
                cfg.output = value;
            else if (key.rfind("tol.", 0) == 0) {
                const std::string id = key.substr(4);
                if (find_identity(id) == nullptr)
                    throw std::invalid_argument("config: unknown identity id in " + key);
                cfg.tol_overrides[id] = std::stod(value);
            } else {
                throw std::invalid_argument("config: unknown key " + key);
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad value for " + key + " at line " +
                                        std::to_string(lineno));
        }
    }

    if (cfg.sum.explicit_terms < 100 || cfg.sum.refine_upto < 1)
        throw std::invalid_argument("config: counts must be positive (explicit_terms >= 100)");
    if (cfg.format != "table" && cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("config: format must be table, csv, or json");
}

}  // namespace airysum
