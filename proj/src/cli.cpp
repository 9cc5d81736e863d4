#include "euler/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "euler/color_coding.hpp"
#include "euler/euler_subgraph.hpp"
#include "euler/graph.hpp"
#include "euler/io.hpp"
#include "euler/long_circuit.hpp"
#include "euler/reductions.hpp"

namespace euler {
namespace {

using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

const char* verdict_label(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::no_with_confidence: return "no-with-confidence";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::yes: return kExitYes;
        case Verdict::no:
        case Verdict::no_with_confidence: return kExitNo;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

Graph load_graph(const std::string& path, std::vector<PartAssignment>* parts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in, parts);
}

CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_cnf(in);
}

std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

/// Renders a report object as "key: value" lines; nested objects get dotted
/// keys and arrays become space-separated values.
void write_text(std::ostream& out, const std::string& prefix, const ordered_json& v) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items())
            write_text(out, prefix.empty() ? key : prefix + "." + key, value);
        return;
    }
    out << prefix << ":";
    if (v.is_array()) {
        for (const auto& element : v) out << ' ' << scalar_text(element);
        out << '\n';
        return;
    }
    out << ' ' << scalar_text(v) << '\n';
}

/// wall_ms < 0 suppresses the timing line; timings stay out of the JSON form
/// so that identical invocations produce identical bytes.
void emit(std::ostream& out, bool json, const ordered_json& report, double wall_ms) {
    if (json) {
        out << report.dump() << '\n';
        return;
    }
    write_text(out, "", report);
    if (wall_ms >= 0.0) {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.2f", wall_ms);
        out << "wall-ms: " << buffer << '\n';
    }
}

ordered_json circuit_json(const Circuit& c) {
    ordered_json cert;
    cert["type"] = "circuit";
    cert["length"] = c.length();
    cert["vertices"] = c.vertices;
    cert["edges"] = c.edges;
    return cert;
}

ordered_json vertex_set_json(const EulerCertificate& cert) {
    ordered_json j;
    j["type"] = "vertex-set";
    j["size"] = cert.size();
    j["vertices"] = cert.vertices;
    return j;
}

struct CircuitOptions {
    std::string input;
    int k = 0;
    int k_prime = 0;
    std::string mode;
    std::uint64_t seed = 0;
    double epsilon = 0.01;
    long long max_trials = 0;
    bool json = false;
};

void add_circuit_flags(CLI::App* cmd, CircuitOptions& o, bool with_k_prime) {
    cmd->add_option("input", o.input, "graph file")->required();
    cmd->add_option("-k,--k", o.k, "minimum circuit length")
        ->required()
        ->check(CLI::PositiveNumber);
    if (with_k_prime)
        cmd->add_option("--k-prime", o.k_prime, "maximum circuit length")
            ->required()
            ->check(CLI::PositiveNumber);
    cmd->add_option("--mode", o.mode, "search strategy (default: choose by instance size)")
        ->check(CLI::IsMember({"randomized", "exhaustive"}));
    cmd->add_option("--seed", o.seed, "random seed (default 0)");
    cmd->add_option("--epsilon", o.epsilon, "randomized false-negative bound (default 0.01)");
    cmd->add_option("--max-trials", o.max_trials, "cap on randomized trials")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "machine-readable output");
}

SolverConfig to_config(const CircuitOptions& o) {
    SolverConfig cfg;
    if (o.mode == "randomized")
        cfg.mode = SearchMode::randomized;
    else if (o.mode == "exhaustive")
        cfg.mode = SearchMode::exhaustive;
    cfg.seed = o.seed;
    cfg.epsilon = o.epsilon;
    if (o.max_trials > 0) cfg.max_trials = o.max_trials;
    return cfg;
}

int run_circuit(const std::string& command, const CircuitOptions& o, std::ostream& out,
                std::ostream& err) {
    if (o.epsilon <= 0.0 || o.epsilon >= 1.0) {
        err << "error: --epsilon must lie strictly between 0 and 1\n";
        return kExitUsage;
    }
    const bool ranged = command == "range-circuit";
    if (ranged && o.k_prime < o.k) {
        err << "error: --k-prime must be at least k\n";
        return kExitUsage;
    }
    const Graph g = load_graph(o.input, nullptr);

    const auto started = std::chrono::steady_clock::now();
    CircuitAnswer answer;
    std::string note;
    try {
        if (command == "long-circuit")
            answer = solve_long_circuit(g, o.k, to_config(o));
        else if (ranged)
            answer = solve_range_circuit(g, o.k, o.k_prime, to_config(o));
        else
            answer = solve_exact_circuit(g, o.k, to_config(o));
    } catch (const BudgetError& e) {
        answer = CircuitAnswer{};
        note = e.what();
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    if (answer.verdict == Verdict::yes) {
        if (!answer.certificate) throw std::logic_error("yes verdict without a certificate");
        const Circuit& c = *answer.certificate;
        const bool length_ok = command == "long-circuit" ? c.length() >= o.k
                             : ranged ? c.length() >= o.k && c.length() <= o.k_prime
                                      : c.length() == o.k;
        if (!length_ok || !verify_circuit(g, c))
            throw std::logic_error("certificate failed re-verification");
    }

    ordered_json report;
    report["command"] = command;
    report["k"] = o.k;
    if (ranged) report["k-prime"] = o.k_prime;
    report["seed"] = o.seed;
    report["mode"] = to_string(answer.mode_used);
    report["verdict"] = verdict_label(answer.verdict);
    if (answer.certificate) report["certificate"] = circuit_json(*answer.certificate);
    report["stats"] =
        ordered_json{{"trials", answer.trials_used}, {"states", answer.states_explored}};
    if (!note.empty()) report["note"] = note;
    emit(out, o.json, report, wall_ms);
    return verdict_exit(answer.verdict);
}

struct EulerOptions {
    std::string input;
    int k = 0;
    bool json = false;
};

void add_euler_flags(CLI::App* cmd, EulerOptions& o, const char* k_help) {
    cmd->add_option("input", o.input, "graph file")->required();
    cmd->add_option("-k,--k", o.k, k_help)->required()->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "machine-readable output");
}

int run_euler(const std::string& command, const EulerOptions& o, std::ostream& out) {
    const Graph g = load_graph(o.input, nullptr);

    const auto started = std::chrono::steady_clock::now();
    Verdict verdict = Verdict::inconclusive;
    std::optional<EulerCertificate> certificate;
    std::string route;
    std::string note;
    if (command == "euler-k") {
        try {
            certificate = brute_large_euler(g, o.k, true);
            verdict = certificate ? Verdict::yes : Verdict::no;
            route = "exhaustive";
        } catch (const BudgetError& e) {
            route = "open";
            note = e.what();
        }
    } else if (g.directed()) {
        if (o.k <= 3) {
            certificate = directed_large_euler_small_k(g, o.k);
            verdict = certificate ? Verdict::yes : Verdict::no;
            route = "small-k";
        } else {
            try {
                certificate = brute_large_euler(g, o.k);
                verdict = certificate ? Verdict::yes : Verdict::no;
                route = "exhaustive";
            } catch (const BudgetError& e) {
                route = "open";
                note = std::string(e.what()) +
                       "; the directed problem is NP-hard for every fixed k >= 4, so only "
                       "budgeted exact search is available";
            }
        }
    } else {
        LargeEulerDecision decision = decide_large_euler_undirected(g, o.k);
        verdict = decision.verdict;
        certificate = std::move(decision.certificate);
        route = decision.route;
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    if (verdict == Verdict::yes) {
        if (!certificate) throw std::logic_error("yes verdict without a certificate");
        const bool size_ok = command != "euler-k" || certificate->size() == o.k;
        if (!size_ok || !verify_euler_certificate(g, *certificate, o.k))
            throw std::logic_error("certificate failed re-verification");
    }

    ordered_json report;
    report["command"] = command;
    report["k"] = o.k;
    report["verdict"] = verdict_label(verdict);
    report["route"] = route;
    if (certificate) report["certificate"] = vertex_set_json(*certificate);
    if (!note.empty()) report["note"] = note;
    emit(out, o.json, report, wall_ms);
    return verdict_exit(verdict);
}

struct ReduceOptions {
    std::string kind;
    std::string input;
    std::string output;
    std::string provenance;
    int sat_k = 0;
    bool sat_k_given = false;
    bool check = false;
    bool json = false;
};

bool multicolored_clique_exists(const PartitionedGraph& p) {
    std::vector<int> pick(p.parts.size(), 0);
    const auto search = [&](const auto& self, std::size_t depth) -> bool {
        if (depth == p.parts.size()) return true;
        for (int v : p.parts[depth]) {
            bool compatible = true;
            for (std::size_t earlier = 0; earlier < depth && compatible; ++earlier)
                compatible = p.base.has_edge(pick[earlier], v);
            if (!compatible) continue;
            pick[depth] = v;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    return search(search, 0);
}

std::optional<std::vector<bool>> satisfying_assignment(const CnfFormula& f) {
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        std::vector<bool> assignment(f.num_vars, false);
        for (int var = 1; var <= f.num_vars; ++var)
            assignment[var - 1] = (mask >> (var - 1)) & 1u;
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int literal : clause)
                sat = sat ||
                      (literal > 0 ? assignment[literal - 1] : !assignment[-literal - 1]);
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return assignment;
    }
    return std::nullopt;
}

int run_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err) {
    const TargetSolver target_brute = [](const Graph& g, int k) {
        return brute_large_euler(g, k, false, 25).has_value();
    };

    ReductionOutput reduction;
    std::string check_note;
    if (o.kind == "subdivision") {
        const Graph source = load_graph(o.input, nullptr);
        reduction = reduce_hamiltonian_cubic(source);
        if (o.check) {
            try {
                LongCycleOracle oracle;
                oracle.strategy = LongCycleOracle::Strategy::brute_exact;
                oracle.edge_budget = 25;
                const bool hamiltonian =
                    has_cycle_at_least(source, source.vertex_count(), oracle).has_value();
                check_note = verify_reduction(hamiltonian, reduction, target_brute)
                                 ? "passed"
                                 : "failed";
            } catch (const BudgetError& e) {
                check_note = std::string("skipped: ") + e.what();
            }
        }
    } else if (o.kind == "mcc") {
        std::vector<PartAssignment> assignments;
        Graph base = load_graph(o.input, &assignments);
        const PartitionedGraph partitioned = make_partitioned(std::move(base), assignments);
        reduction = reduce_multicolored_clique(partitioned);
        if (o.check) {
            try {
                long long tuples = 1;
                for (const auto& part : partitioned.parts) {
                    tuples *= static_cast<long long>(part.size());
                    if (tuples > 1'000'000)
                        throw BudgetError("clique enumeration exceeds the check budget");
                }
                check_note = verify_reduction(multicolored_clique_exists(partitioned), reduction,
                                              target_brute)
                                 ? "passed"
                                 : "failed";
            } catch (const BudgetError& e) {
                check_note = std::string("skipped: ") + e.what();
            }
        }
    } else {
        const CnfFormula formula = load_cnf(o.input);
        const int parameter =
            o.sat_k_given ? o.sat_k : 4 * (formula.num_vars + formula.clause_count());
        reduction = reduce_3sat_4occ(formula, parameter);
        if (o.check) {
            if (formula.num_vars > 20) {
                check_note = "skipped: too many variables for the assignment sweep";
            } else if (const auto assignment = satisfying_assignment(formula)) {
                const auto witness = sat_witness_vertices(formula, *assignment);
                check_note = verify_reduction(true, reduction, target_brute, witness)
                                 ? "passed (witness verified)"
                                 : "failed";
            } else {
                check_note = "skipped: source unsatisfiable and the target exceeds exact search";
            }
        }
    }

    {
        std::ofstream target_file(o.output);
        if (!target_file) {
            err << "error: cannot write " << o.output << '\n';
            return kExitData;
        }
        target_file << serialize_graph(reduction.target);
    }
    const std::string provenance_path = o.provenance.empty() ? o.output + ".prov" : o.provenance;
    {
        std::ofstream provenance_file(provenance_path);
        if (!provenance_file) {
            err << "error: cannot write " << provenance_path << '\n';
            return kExitData;
        }
        for (const auto& [vertex, label] : reduction.provenance)
            provenance_file << "v " << vertex << ' ' << label << '\n';
    }

    ordered_json report;
    report["command"] = "reduce";
    report["kind"] = o.kind;
    report["parameter"] = reduction.parameter;
    report["vertices"] = reduction.target.vertex_count();
    report["edges"] = reduction.target.edge_count();
    report["output"] = o.output;
    report["provenance"] = provenance_path;
    if (o.check) report["check"] = check_note;
    emit(out, o.json, report, -1.0);
    if (check_note == "failed") {
        err << "error: soundness check failed: the target answer disagrees with the source\n";
        return kExitData;
    }
    return kExitYes;
}

int run_thresholds(int k, bool json, std::ostream& out, std::ostream& err) {
    if (k < 4) {
        err << "error: -k must be at least 4\n";
        return kExitUsage;
    }
    const Thresholds thresholds = compute_thresholds(k);
    if (!json) {
        for (const auto& [len, value] : thresholds.path_table) out << value.str() << '\n';
        out << thresholds.degree_bound.str() << '\n';
        out << thresholds.treewidth_bound.str() << '\n';
        return kExitYes;
    }
    ordered_json report;
    report["command"] = "thresholds";
    report["k"] = k;
    ordered_json table = ordered_json::object();
    for (const auto& [len, value] : thresholds.path_table)
        table[std::to_string(len)] = value.str();
    report["path-table"] = table;
    report["degree-bound"] = thresholds.degree_bound.str();
    report["treewidth-bound"] = thresholds.treewidth_bound.str();
    out << report.dump() << '\n';
    return kExitYes;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"circuit length and induced Euler subgraph toolkit"};
    app.name("eulertool");
    app.require_subcommand(1);

    CircuitOptions long_opts;
    CLI::App* cmd_long =
        app.add_subcommand("long-circuit", "closed trail with at least k edges");
    add_circuit_flags(cmd_long, long_opts, false);

    CircuitOptions range_opts;
    CLI::App* cmd_range =
        app.add_subcommand("range-circuit", "closed trail with k to k-prime edges");
    add_circuit_flags(cmd_range, range_opts, true);

    CircuitOptions exact_opts;
    CLI::App* cmd_exact =
        app.add_subcommand("k-circuit", "closed trail with exactly k edges");
    add_circuit_flags(cmd_exact, exact_opts, false);

    EulerOptions large_opts;
    CLI::App* cmd_large = app.add_subcommand(
        "large-euler", "induced Euler subgraph with at least k vertices");
    add_euler_flags(cmd_large, large_opts, "minimum vertex count");

    EulerOptions exact_euler_opts;
    CLI::App* cmd_euler_k = app.add_subcommand(
        "euler-k", "induced Euler subgraph with exactly k vertices (budgeted exact search)");
    add_euler_flags(cmd_euler_k, exact_euler_opts, "exact vertex count");

    ReduceOptions reduce_opts;
    CLI::App* cmd_reduce =
        app.add_subcommand("reduce", "generate a hard instance from a source problem");
    cmd_reduce->add_option("kind", reduce_opts.kind, "reduction kind")
        ->required()
        ->check(CLI::IsMember({"subdivision", "mcc", "3sat"}));
    cmd_reduce->add_option("input", reduce_opts.input, "source instance file")->required();
    cmd_reduce->add_option("--output", reduce_opts.output, "target graph file")->required();
    cmd_reduce->add_option("--provenance", reduce_opts.provenance,
                           "provenance sidecar file (default: <output>.prov)");
    CLI::Option* sat_k_option =
        cmd_reduce->add_option("-k,--k", reduce_opts.sat_k, "target parameter (3sat only)")
            ->check(CLI::PositiveNumber);
    cmd_reduce->add_flag("--check", reduce_opts.check,
                         "cross-check the target answer against the source");
    cmd_reduce->add_flag("--json", reduce_opts.json, "machine-readable output");

    int thresholds_k = 0;
    bool thresholds_json = false;
    CLI::App* cmd_thresholds =
        app.add_subcommand("thresholds", "structural bounds that force a k-vertex witness");
    cmd_thresholds->add_option("-k,--k", thresholds_k, "witness size, at least 4")->required();
    cmd_thresholds->add_flag("--json", thresholds_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eulertool");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*cmd_long) return run_circuit("long-circuit", long_opts, out, err);
        if (*cmd_range) return run_circuit("range-circuit", range_opts, out, err);
        if (*cmd_exact) return run_circuit("k-circuit", exact_opts, out, err);
        if (*cmd_large) return run_euler("large-euler", large_opts, out);
        if (*cmd_euler_k) return run_euler("euler-k", exact_euler_opts, out);
        if (*cmd_reduce) {
            reduce_opts.sat_k_given = sat_k_option->count() > 0;
            if (reduce_opts.sat_k_given && reduce_opts.kind != "3sat") {
                err << "error: -k applies only to the 3sat reduction\n";
                return kExitUsage;
            }
            return run_reduce(reduce_opts, out, err);
        }
        if (*cmd_thresholds) return run_thresholds(thresholds_k, thresholds_json, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

} // namespace euler
