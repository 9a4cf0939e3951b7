#include "hedet/config.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "hedet/errors.hpp"

namespace hedet {

int Config::resolved_threads() const {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void Config::validate() const {
    if (timeout_seconds <= 0) throw ParameterError("timeout must be positive");
    if (max_terms == 0) throw ParameterError("term cap must be positive");
    if (threads < 0) throw ParameterError("thread count must be nonnegative");
    if (format != "text" && format != "json")
        throw ParameterError("format must be text or json");
}

Config config_from_env() {
    Config cfg;
    if (const char* v = std::getenv("HEDET_LEDGER")) cfg.ledger_path = v;
    if (const char* v = std::getenv("HEDET_TIMEOUT_SECONDS")) {
        try {
            cfg.timeout_seconds = std::stod(v);
        } catch (const std::exception&) {
            throw ParameterError("HEDET_TIMEOUT_SECONDS is not a number");
        }
    }
    if (const char* v = std::getenv("HEDET_THREADS")) {
        try {
            cfg.threads = std::stoi(v);
        } catch (const std::exception&) {
            throw ParameterError("HEDET_THREADS is not a number");
        }
    }
    cfg.validate();
    return cfg;
}

} // namespace hedet
