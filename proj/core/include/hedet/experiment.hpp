#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hedet/config.hpp"
#include "hedet/verify.hpp"

namespace hedet {

inline constexpr const char* kEngineVersion = "hedet 0.1.0";

struct ExperimentRecord {
    std::string task;
    nlohmann::json params;
    Verdict verdict = Verdict::aborted;
    std::string note; // triggering cap when aborted
    GbStats stats;
    std::uint64_t elapsed_ms = 0;
    std::string timestamp; // ISO 8601, UTC
};

nlohmann::json to_json(const ExperimentRecord& r);

ExperimentRecord make_record(std::string task, nlohmann::json params,
                             const CheckResult& result, std::uint64_t elapsed_ms);

// Append-only JSONL sink; append is safe to call from several workers.
class Ledger {
public:
    explicit Ledger(std::string path) : path_(std::move(path)) {}
    void append(const ExperimentRecord& r);

private:
    std::mutex mu_;
    std::string path_;
};

// Runs the named battery, appending one record per task to the ledger at
// cfg.ledger_path. Names: thm44-desk, pairs-desk, cycles-desk, structural.
// Task aborts become verdict "aborted" records, not failures.
std::vector<ExperimentRecord> run_experiment_suite(const std::string& name,
                                                   const Config& cfg);

} // namespace hedet
