#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hedet/canonical.hpp"
#include "hedet/coloring.hpp"
#include "hedet/config.hpp"
#include "hedet/encode.hpp"
#include "hedet/errors.hpp"
#include "hedet/experiment.hpp"
#include "hedet/graph6.hpp"
#include "hedet/named_graphs.hpp"
#include "hedet/pairsets.hpp"
#include "hedet/poly_text.hpp"
#include "hedet/verify.hpp"

namespace {

using namespace hedet;

// exit status contract: 0 completed, 2 aborted by a cap, 3 bad parameters or
// parse failure, 4 oracle mismatch
constexpr int kOk = 0, kAborted = 2, kBadInput = 3, kMismatch = 4;

Graph load_graph(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_graph_text(buf.str());
    }
    return graph_from_name(arg);
}

std::uint64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count());
}

void print_record(const ExperimentRecord& rec, const Config& cfg) {
    if (cfg.format == "json") {
        std::cout << to_json(rec).dump() << '\n';
        return;
    }
    std::string verdict = to_string(rec.verdict);
    verdict[0] = char(std::toupper(verdict[0]));
    if (rec.verdict == Verdict::aborted) verdict += " (" + rec.note + ")";
    std::cout << verdict << '\n';
    std::cout << "s-pairs " << rec.stats.s_pairs << ", zero reductions "
              << rec.stats.zero_reductions << ", max degree "
              << rec.stats.max_degree << ", gb time " << rec.stats.elapsed_ms
              << " ms, total " << rec.elapsed_ms << " ms";
    if (!rec.note.empty() && rec.verdict != Verdict::aborted)
        std::cout << ", " << rec.note;
    std::cout << '\n';
}

int finish_check(const char* task, nlohmann::json params, const CheckResult& res,
                 std::uint64_t elapsed, const Config& cfg) {
    ExperimentRecord rec = make_record(task, std::move(params), res, elapsed);
    Ledger(cfg.ledger_path).append(rec);
    print_record(rec, cfg);
    return res.verdict == Verdict::aborted ? kAborted : kOk;
}

// positional-or-flag int with a required check at use time
struct IntArg {
    std::optional<int> value;
    int get(const char* what) const {
        if (!value) throw ParameterError(std::string(what) + " is required");
        return *value;
    }
};

void add_int_arg(CLI::App* cmd, IntArg& slot, const char* positional,
                 const char* flag, const char* desc) {
    auto* pos = cmd->add_option_function<int>(
        positional, [&slot](const int& v) { slot.value = v; }, desc);
    auto* opt = cmd->add_option_function<int>(
        flag, [&slot](const int& v) { slot.value = v; }, desc);
    pos->excludes(opt);
    opt->excludes(pos);
}

int run_thm44(const IntArg& k, const IntArg& n, const IntArg& np, const Config& cfg) {
    int kk = k.get("k"), nn = n.get("n"), pp = np.get("nprime");
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res = check_theorem44(kk, nn, pp, cfg.gb_limits());
    return finish_check("thm44", {{"k", kk}, {"n", nn}, {"nprime", pp}}, res,
                        ms_since(t0), cfg);
}

int run_pair(const std::string& gname, const std::string& hname, int k,
             const Config& cfg) {
    if (gname.empty() || hname.empty())
        throw ParameterError("pair needs two graphs (positional or --graph-g/--graph-h)");
    Graph g = load_graph(gname), h = load_graph(hname);
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res = check_fixed_pair(g, h, k, cfg.gb_limits());
    return finish_check("pair", {{"g", gname}, {"h", hname}, {"k", k}}, res,
                        ms_since(t0), cfg);
}

int run_suite(const std::string& name, const Config& cfg) {
    auto records = run_experiment_suite(name, cfg);
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        std::cout << arr.dump() << '\n';
    } else {
        for (const auto& r : records)
            std::cout << r.task << ' ' << r.params.dump() << ": "
                      << to_string(r.verdict)
                      << (r.note.empty() ? "" : " (" + r.note + ")") << " in "
                      << r.elapsed_ms << " ms\n";
    }
    return kOk;
}

int run_verify(const std::string& target, std::optional<int> k, int max_n,
               const Config& cfg) {
    bool json = cfg.format == "json";
    if (target == "a4") {
        A4Report r = verify_A4();
        if (json) {
            nlohmann::json j{{"target", "a4"},
                             {"classes", r.classes.size()},
                             {"no_triangle_classes", r.no_triangle_count},
                             {"no_triangle_is_h0", r.no_triangle_is_h0},
                             {"min_degree_ok", r.min_degree_ok},
                             {"ok", r.ok()}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "4-critical classes on 7 vertices: " << r.classes.size()
                      << '\n'
                      << "classes with a vertex in no triangle: "
                      << r.no_triangle_count
                      << (r.no_triangle_is_h0 ? " (isomorphic to H0)" : "") << '\n'
                      << "minimum degree at least 3: "
                      << (r.min_degree_ok ? "yes" : "no") << '\n'
                      << (r.ok() ? "ok" : "paper-discrepancy") << '\n';
        }
        return kOk;
    }
    if (target == "small-critical") {
        CriticalCatalog r = verify_small_critical(k.value_or(3), max_n);
        if (json) {
            nlohmann::json counts = nlohmann::json::array();
            for (const auto& classes : r.found) counts.push_back(classes.size());
            nlohmann::json j{{"target", "small-critical"},
                             {"k", r.k},
                             {"max_n", r.max_n},
                             {"classes_per_order", counts},
                             {"matches", r.matches}};
            if (!r.detail.empty()) j["detail"] = r.detail;
            std::cout << j.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < r.found.size(); ++i)
                if (!r.found[i].empty())
                    std::cout << r.k << "-critical classes on " << i + 1
                              << " vertices: " << r.found[i].size() << '\n';
            std::cout << (r.matches ? "ok" : "paper-discrepancy: " + r.detail)
                      << '\n';
        }
        return kOk;
    }
    if (target == "prop43") {
        int lo = k.value_or(2), hi = k ? *k : 10;
        bool all = true;
        for (int kk = lo; kk <= hi; ++kk) all = all && verify_prop43(kk);
        if (json) {
            std::cout << nlohmann::json{{"target", "prop43"},
                                        {"k_low", lo},
                                        {"k_high", hi},
                                        {"ok", all}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "identity " << (all ? "holds" : "FAILS") << " for k = "
                      << lo << ".." << hi << '\n'
                      << (all ? "ok" : "paper-discrepancy") << '\n';
        }
        return kOk;
    }
    throw ParameterError("unknown verify target: " + target);
}

int run_encode(const std::string& family, std::optional<int> k, std::optional<int> n,
               std::optional<int> np, const std::string& gname,
               const std::string& hname, const Config& cfg) {
    auto need = [&](const std::optional<int>& v, const char* what) {
        if (!v) throw ParameterError("family " + family + " needs --" + what);
        return *v;
    };
    auto needk = [&] { return need(k, "k"); };
    auto needn = [&] { return need(n, "n"); };
    auto neednp = [&] { return need(np, "nprime"); };

    Ideal ideal = [&]() -> Ideal {
        if (family == "E") return ideal_E(needn(), neednp());
        if (family == "X") return ideal_X(needk(), needn(), neednp());
        if (family == "Z") return ideal_Z(needk(), needn(), neednp());
        if (family == "I") return ideal_I(needk(), needn());
        if (family == "Iprime") return ideal_Iprime(needk(), neednp());
        if (family == "J") return ideal_J(needk(), needn(), neednp());
        if (family == "Jcal") return assemble_Jcal(needk(), needn(), neednp());
        if (family == "P") return ideal_P(needk(), needn());
        if (family == "Pprime") return ideal_Pprime(needk(), neednp());
        if (family == "Q") return ideal_Q(needk(), needn());
        if (family == "Qprime") return ideal_Qprime(needk(), neednp());
        if (family == "R") return ideal_R(needk(), needn());
        if (family == "Rprime") return ideal_Rprime(needk(), neednp());
        if (family == "S") return ideal_S(needk(), needn());
        if (family == "Sprime") return ideal_Sprime(needk(), neednp());
        if (family == "Ical") return assemble_Ical(needk(), needn(), neednp());
        if (family == "L") {
            if (gname.empty() || hname.empty())
                throw ParameterError("family L needs --graph-g and --graph-h");
            return assemble_L(load_graph(gname), load_graph(hname), needk());
        }
        throw ParameterError("unknown family: " + family);
    }();

    if (cfg.format == "json") {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : ideal.generators) gens.push_back(to_text(g));
        std::cout << nlohmann::json{{"family", family},
                                    {"provenance", ideal.provenance},
                                    {"universe", ideal.universe.size()},
                                    {"generators", gens}}
                         .dump()
                  << '\n';
    } else {
        for (const auto& g : ideal.generators) std::cout << to_text(g) << '\n';
    }
    return kOk;
}

int run_graph(const std::string& op, const std::string& gname,
              const std::string& hname, std::optional<int> k, const Config& cfg) {
    if (gname.empty()) throw ParameterError("graph needs --graph");
    Graph g = load_graph(gname);
    bool json = cfg.format == "json";
    auto emit = [&](const char* key, auto value) {
        if (json)
            std::cout << nlohmann::json{{"op", op}, {key, value}}.dump() << '\n';
        else
            std::cout << std::boolalpha << value << '\n';
    };
    if (op == "chrom") {
        emit("chromatic_number", chromatic_number(g));
        return kOk;
    }
    if (op == "critical") {
        if (!k) throw ParameterError("graph --op critical needs --k");
        emit("critical", is_k_critical(g, *k));
        return kOk;
    }
    if (op == "tensor") {
        if (hname.empty()) throw ParameterError("graph --op tensor needs --graph-h");
        emit("graph6", emit_graph6(tensor_product(g, load_graph(hname))));
        return kOk;
    }
    if (op == "g6") {
        emit("graph6", emit_graph6(g));
        return kOk;
    }
    throw ParameterError("unknown graph op: " + op);
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    try {
        cfg = config_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }

    CLI::App app{"exact algebraic checker for chromatic product conjecture instances"};
    app.set_version_flag("--version", kEngineVersion);
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--timeout", cfg.timeout_seconds, "basis computation budget, seconds");
    app.add_option("--max-terms", cfg.max_terms, "basis size cap, total terms");
    app.add_option("--threads", cfg.threads, "suite worker count, 0 = machine");
    app.add_option("--ledger", cfg.ledger_path, "JSONL result ledger path");
    app.add_option("--seed", cfg.seed, "seed for sampled pair sets");

    IntArg k44, n44, np44;
    auto* thm = app.add_subcommand("thm44", "decide the inclusion that settles "
                                            "all pairs at (k, n, nprime)");
    add_int_arg(thm, k44, "K", "--k", "chromatic level, at least 3");
    add_int_arg(thm, n44, "N", "--n", "vertex budget for the left graph");
    add_int_arg(thm, np44, "NPRIME", "--nprime", "vertex budget for the right graph");

    std::string pair_g, pair_h;
    int pair_k = 0;
    auto* pair = app.add_subcommand("pair", "unit-ideal check for one fixed pair");
    auto* pg_pos = pair->add_option("G", pair_g, "left graph: name, graph6 or file");
    auto* ph_pos = pair->add_option("H", pair_h, "right graph: name, graph6 or file");
    pair->add_option("--graph-g", pair_g, "left graph")->excludes(pg_pos);
    pair->add_option("--graph-h", pair_h, "right graph")->excludes(ph_pos);
    pair->add_option("--k", pair_k, "chromatic level")->required();

    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "run a named battery and ledger it");
    suite->add_option("--name", suite_name, "thm44-desk, pairs-desk, cycles-desk "
                                            "or structural")
        ->required();

    std::string verify_target;
    std::optional<int> verify_k;
    int verify_max_n = 7;
    auto* verify = app.add_subcommand("verify", "structural checks against the "
                                                "known catalogs");
    verify->add_option("--target", verify_target, "a4, small-critical or prop43")
        ->required();
    verify->add_option("--k", verify_k, "chromatic level (small-critical, prop43)");
    verify->add_option("--max-n", verify_max_n, "largest order to enumerate");

    std::string enc_family, enc_g, enc_h;
    std::optional<int> enc_k, enc_n, enc_np;
    auto* encode = app.add_subcommand("encode", "print an ideal family, one "
                                                "generator per line");
    encode->add_option("--family", enc_family, "E, X, Z, I, Iprime, J, Jcal, P, "
                                               "Pprime, Q, Qprime, R, Rprime, S, "
                                               "Sprime, Ical or L")
        ->required();
    encode->add_option("--k", enc_k, "chromatic level");
    encode->add_option("--n", enc_n, "left vertex budget");
    encode->add_option("--nprime", enc_np, "right vertex budget");
    encode->add_option("--graph-g", enc_g, "left graph (family L)");
    encode->add_option("--graph-h", enc_h, "right graph (family L)");

    std::string graph_op, graph_g, graph_h;
    std::optional<int> graph_k;
    auto* graph = app.add_subcommand("graph", "small graph utilities");
    graph->add_option("--op", graph_op, "chrom, critical, tensor or g6")->required();
    graph->add_option("--graph", graph_g, "graph: name, graph6 or file");
    graph->add_option("--graph-h", graph_h, "second graph (tensor)");
    graph->add_option("--k", graph_k, "chromatic level (critical)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        cfg.validate();
        if (thm->parsed()) return run_thm44(k44, n44, np44, cfg);
        if (pair->parsed()) return run_pair(pair_g, pair_h, pair_k, cfg);
        if (suite->parsed()) return run_suite(suite_name, cfg);
        if (verify->parsed())
            return run_verify(verify_target, verify_k, verify_max_n, cfg);
        if (encode->parsed())
            return run_encode(enc_family, enc_k, enc_n, enc_np, enc_g, enc_h, cfg);
        if (graph->parsed())
            return run_graph(graph_op, graph_g, graph_h, graph_k, cfg);
    } catch (const OracleMismatchError& e) {
        std::cerr << "oracle mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kOk;
}
