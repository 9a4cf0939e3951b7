#include "hedet/experiment.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <thread>

#include "hedet/errors.hpp"
#include "hedet/named_graphs.hpp"
#include "hedet/pairsets.hpp"

namespace hedet {

namespace {

std::string iso_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

using Task = std::function<ExperimentRecord()>;

ExperimentRecord timed(const char* task, nlohmann::json params,
                       const std::function<CheckResult()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res = body();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return make_record(task, std::move(params), res, std::uint64_t(ms));
}

ExperimentRecord timed_flag(const char* task, nlohmann::json params,
                            const std::function<bool()>& body) {
    return timed(task, std::move(params), [&] {
        CheckResult r;
        r.verdict = body() ? Verdict::yes : Verdict::no;
        return r;
    });
}

std::vector<Task> suite_tasks(const std::string& name, const Config& cfg) {
    GbLimits lim = cfg.gb_limits();
    auto thm44 = [lim](int k, int n, int np) {
        return Task([=] {
            return timed("thm44", {{"k", k}, {"n", n}, {"nprime", np}},
                         [&] { return check_theorem44(k, n, np, lim); });
        });
    };
    auto pair = [lim](const char* gname, const char* hname, int k) {
        return Task([=] {
            Graph g = graph_from_name(gname), h = graph_from_name(hname);
            return timed("pair", {{"g", gname}, {"h", hname}, {"k", k}},
                         [&] { return check_fixed_pair(g, h, k, lim); });
        });
    };

    if (name == "thm44-desk") return {thm44(3, 4, 4), thm44(3, 4, 5)};
    if (name == "pairs-desk")
        return {pair("H0", "H0", 4), pair("H0", "Grotzsch", 4)};
    if (name == "cycles-desk")
        return {pair("C5", "C5", 3), pair("C5", "C7", 3), pair("C7", "C7", 3)};
    if (name == "structural")
        return {
            Task([] {
                return timed_flag("verify", {{"target", "a4"}},
                                  [] { return verify_A4().ok(); });
            }),
            Task([] {
                return timed_flag("verify",
                                  {{"target", "small-critical"}, {"k", 3}, {"max_n", 7}},
                                  [] { return verify_small_critical(3, 7).matches; });
            }),
            Task([] {
                return timed_flag("verify",
                                  {{"target", "small-critical"}, {"k", 4}, {"max_n", 7}},
                                  [] { return verify_small_critical(4, 7).matches; });
            }),
            Task([] {
                return timed_flag("verify",
                                  {{"target", "small-critical"}, {"k", 5}},
                                  [] { return verify_small_critical(5, 0).matches; });
            }),
            Task([] {
                return timed_flag("verify", {{"target", "prop43"}, {"k", "2..10"}}, [] {
                    for (int k = 2; k <= 10; ++k)
                        if (!verify_prop43(k)) return false;
                    return true;
                });
            }),
            Task([] {
                return timed_flag("prop41", {{"k", 3}, {"n", 3}, {"nprime", 3}},
                                  [] { return check_prop41(3, 3, 3); });
            }),
        };
    throw ParameterError("unknown suite: " + name);
}

} // namespace

nlohmann::json to_json(const ExperimentRecord& r) {
    nlohmann::json j{
        {"schema", 1},
        {"task", r.task},
        {"params", r.params},
        {"verdict", to_string(r.verdict)},
        {"stats",
         {{"s_pairs", r.stats.s_pairs},
          {"zero_reductions", r.stats.zero_reductions},
          {"max_degree", r.stats.max_degree},
          {"gb_elapsed_ms", r.stats.elapsed_ms}}},
        {"elapsed_ms", r.elapsed_ms},
        {"engine", kEngineVersion},
        {"timestamp", r.timestamp},
    };
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ExperimentRecord make_record(std::string task, nlohmann::json params,
                             const CheckResult& result, std::uint64_t elapsed_ms) {
    ExperimentRecord r;
    r.task = std::move(task);
    r.params = std::move(params);
    r.verdict = result.verdict;
    r.note = result.note;
    r.stats = result.stats;
    r.elapsed_ms = elapsed_ms;
    r.timestamp = iso_now();
    return r;
}

void Ledger::append(const ExperimentRecord& r) {
    std::lock_guard lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open ledger at " + path_);
    out << to_json(r).dump() << '\n';
}

std::vector<ExperimentRecord> run_experiment_suite(const std::string& name,
                                                   const Config& cfg) {
    std::vector<Task> tasks = suite_tasks(name, cfg);
    Ledger ledger(cfg.ledger_path);
    std::vector<ExperimentRecord> records(tasks.size());

    std::size_t workers = std::min<std::size_t>(cfg.resolved_threads(), tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        std::size_t i;
        while ((i = next.fetch_add(1)) < tasks.size()) {
            try {
                records[i] = tasks[i]();
                ledger.append(records[i]);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

} // namespace hedet
