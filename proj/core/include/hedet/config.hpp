#pragma once

#include <cstdint>
#include <string>

#include "hedet/groebner.hpp"

namespace hedet {

struct Config {
    double timeout_seconds = 3600.0;
    std::size_t max_terms = 1'000'000;
    int threads = 0; // 0 means use the machine's parallelism
    std::string ledger_path = "./hedet-ledger.jsonl";
    std::string format = "text"; // or "json"
    std::uint64_t seed = 2023;

    GbLimits gb_limits() const { return {timeout_seconds, max_terms}; }
    int resolved_threads() const;
    void validate() const; // throws ParameterError on nonpositive caps
};

// Defaults overridden by HEDET_LEDGER, HEDET_TIMEOUT_SECONDS and
// HEDET_THREADS when set.
Config config_from_env();

} // namespace hedet
