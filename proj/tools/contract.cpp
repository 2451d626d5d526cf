#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "contraction/generators.hpp"
#include "contraction/graph_io.hpp"
#include "contraction/oracle.hpp"
#include "contraction/path_kernel.hpp"
#include "contraction/path_solver.hpp"
#include "contraction/reductions.hpp"
#include "contraction/tree_solver.hpp"
#include "contraction/witness.hpp"

using namespace contraction;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

Graph read_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    return parse_edge_list_file(path);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

struct SolveOpts {
    std::string target;
    std::string input = "-";
    int k = 0;
    std::string mode = "deterministic";
    std::uint64_t seed = 0;
    bool print_witness = false;
};

int run_solve(const SolveOpts& o) {
    Graph g = read_graph(o.input);
    Verdict v;
    if (o.target == "path") {
        v = o.mode == "randomized" ? solve_path_randomized(g, o.k, o.seed) : solve_path_deterministic(g, o.k);
    } else {
        v = solve_tree(g, o.k, o.mode == "randomized" ? SolveMode::randomized : SolveMode::deterministic, o.seed);
    }
    if (!v.answer) {
        std::cout << "no";
        if (!v.reason.empty()) std::cout << " # " << v.reason;
        std::cout << '\n';
        return kExitNo;
    }
    std::cout << "yes k_used=" << v.contractions_used << '\n';
    if (o.print_witness && v.witness) write_witness_text(std::cout, *v.witness);
    return kExitYes;
}

struct OracleOpts {
    std::string target;
    std::string input = "-";
};

int run_oracle(const OracleOpts& o) {
    Graph g = read_graph(o.input);
    if (o.target == "path") {
        auto r = min_contractions_to_path(g);
        if (r)
            std::cout << *r << '\n';
        else
            std::cout << "infinity\n";
    } else if (o.target == "tree") {
        std::cout << min_contractions_to_tree(g) << '\n';
    } else {
        std::cout << min_cvc_bruteforce(g) << '\n';
    }
    return kExitYes;
}

struct KernelOpts {
    std::string input = "-";
    int k = 0;
    std::string out;
    std::string trace;
};

int run_kernelize(const KernelOpts& o) {
    Graph g = read_graph(o.input);
    KernelResult kr = kernelize(g, o.k);
    std::ofstream out_file;
    std::ostream& os = open_out(out_file, o.out);
    os << "# kernelized with k=" << o.k << ", decided_no=" << (kr.decided_no ? "true" : "false") << '\n';
    write_edge_list(os, kr.reduced);
    if (!o.trace.empty()) {
        std::ofstream tf(o.trace);
        if (!tf) throw std::invalid_argument("cannot open trace file: " + o.trace);
        // one contracted bridge per line, in the ids of the graph it was taken from
        for (const auto& step : kr.steps) tf << step.u << ' ' << step.v << '\n';
    }
    return kExitYes;
}

struct VerifyOpts {
    std::string target;
    std::string input = "-";
    int k = 0;
    std::string witness_file;
};

int run_verify(const VerifyOpts& o) {
    Graph g = read_graph(o.input);
    std::ifstream wf(o.witness_file);
    if (!wf) throw std::invalid_argument("cannot open witness file: " + o.witness_file);
    WitnessStructure ws = parse_witness_text(wf);
    auto check = verify_witness_detailed(g, ws, o.target == "path" ? TargetShape::path : TargetShape::tree, o.k);
    if (check.ok()) {
        std::cout << "valid k_used=" << check.cost << '\n';
        return kExitYes;
    }
    std::cout << "invalid " << fault_name(check.fault) << '\n';
    return kExitNo;
}

struct GenOpts {
    std::string kind;
    std::string input = "-"; // bipartite instance for rbds-gadget
    int n = 8;
    int legs = 3;
    int leg_length = 2;
    double p = 0.3;
    std::uint64_t seed = 1;
    bool connected = true;
    std::string out;
};

int run_gen(const GenOpts& o) {
    std::ofstream out_file;
    std::ostream& os = open_out(out_file, o.out);
    if (o.kind == "rbds-gadget") {
        RbdsInstance inst;
        if (o.input == "-") {
            inst = parse_rbds_instance(std::cin);
        } else {
            std::ifstream in(o.input);
            if (!in) throw std::invalid_argument("cannot open file: " + o.input);
            inst = parse_rbds_instance(in);
        }
        auto [g, k] = rbds_to_tree_instance(inst);
        os << "# k = " << k << '\n';
        write_edge_list(os, g);
        return kExitYes;
    }
    Graph g;
    if (o.kind == "path") {
        g = gen_path(o.n);
    } else if (o.kind == "cycle") {
        g = gen_cycle(o.n);
    } else if (o.kind == "spider") {
        g = gen_spider(o.legs, o.leg_length);
    } else {
        std::mt19937_64 rng(o.seed);
        g = o.connected ? gen_random_connected(o.n, o.p, rng) : gen_random(o.n, o.p, rng);
    }
    write_edge_list(os, g);
    return kExitYes;
}

struct BenchOpts {
    std::vector<std::string> inputs;
    std::uint64_t seed = 1;
    std::string target = "both";
    std::string modes = "deterministic,randomized";
    int k_max = 3;
    std::string out;
};

int run_bench(const BenchOpts& o) {
    std::vector<std::pair<std::string, Graph>> instances;
    if (o.inputs.empty()) {
        std::mt19937_64 rng(o.seed);
        for (int n : {6, 10, 14}) instances.emplace_back("cycle-" + std::to_string(n), gen_cycle(n));
        instances.emplace_back("path-12", gen_path(12));
        instances.emplace_back("spider-3x3", gen_spider(3, 3));
        for (int n : {10, 14})
            instances.emplace_back("random-" + std::to_string(n), gen_random_connected(n, 0.25, rng));
    } else {
        for (const auto& path : o.inputs) {
            auto slash = path.find_last_of('/');
            instances.emplace_back(slash == std::string::npos ? path : path.substr(slash + 1),
                                   parse_edge_list_file(path));
        }
    }

    std::vector<std::string> targets;
    if (o.target == "both")
        targets = {"path", "tree"};
    else
        targets = {o.target};
    std::vector<std::string> modes;
    {
        std::istringstream ms(o.modes);
        std::string m;
        while (std::getline(ms, m, ',')) {
            if (m == "det") m = "deterministic";
            if (m == "rand") m = "randomized";
            modes.push_back(m);
        }
    }

    std::ofstream out_file;
    std::ostream& os = open_out(out_file, o.out);
    os << "instance,n,m,k,mode,answer,trials,millis\n";
    for (const auto& [name, g] : instances) {
        for (const auto& target : targets) {
            for (int k = 0; k <= o.k_max; ++k) {
                for (const auto& mode : modes) {
                    auto t0 = std::chrono::steady_clock::now();
                    Verdict v;
                    try {
                        if (target == "path")
                            v = mode == "randomized" ? solve_path_randomized(g, k, o.seed)
                                                     : solve_path_deterministic(g, k);
                        else
                            v = solve_tree(g, k, mode == "randomized" ? SolveMode::randomized : SolveMode::deterministic,
                                           o.seed);
                    } catch (const input_too_large&) {
                        continue; // row skipped: this configuration is out of range
                    }
                    auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();
                    os << name << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << k << ','
                       << (target + "-" + mode) << ',' << (v.answer ? "yes" : "no") << ',' << v.trials << ','
                       << millis << '\n';
                }
            }
        }
    }
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-contraction toolkit: decide whether a graph turns into a path or a tree within k contractions"};
    app.require_subcommand(1);

    SolveOpts solve_opts;
    auto* solve = app.add_subcommand("solve", "decide contractibility and print a witness");
    solve->add_option("target", solve_opts.target, "path or tree")
        ->required()
        ->check(CLI::IsMember({"path", "tree"}));
    solve->add_option("input", solve_opts.input, "edge-list file, or - for stdin");
    solve->add_option("--k", solve_opts.k, "contraction budget")->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--mode", solve_opts.mode, "deterministic (default) or randomized")
        ->check(CLI::IsMember({"deterministic", "randomized"}));
    solve->add_option("--seed", solve_opts.seed, "seed for randomized mode");
    solve->add_flag("--witness", solve_opts.print_witness, "print the witness partition on yes");

    OracleOpts oracle_opts;
    auto* oracle = app.add_subcommand("oracle", "exact brute-force minimum (small graphs only)");
    oracle->add_option("target", oracle_opts.target, "path, tree or cvc")
        ->required()
        ->check(CLI::IsMember({"path", "tree", "cvc"}));
    oracle->add_option("input", oracle_opts.input, "edge-list file, or - for stdin");

    KernelOpts kernel_opts;
    auto* kern = app.add_subcommand("kernelize", "apply the bridge reduction until fixpoint");
    kern->add_option("input", kernel_opts.input, "edge-list file, or - for stdin");
    kern->add_option("--k", kernel_opts.k, "contraction budget")->required()->check(CLI::NonNegativeNumber);
    kern->add_option("--out", kernel_opts.out, "write the reduced edge list here (default stdout)");
    kern->add_option("--trace", kernel_opts.trace, "write one contracted bridge per line");

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify-witness", "check a witness partition against a graph");
    verify->add_option("target", verify_opts.target, "path or tree")
        ->required()
        ->check(CLI::IsMember({"path", "tree"}));
    verify->add_option("input", verify_opts.input, "edge-list file, or - for stdin");
    verify->add_option("--k", verify_opts.k, "contraction budget")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--witness-file", verify_opts.witness_file, "one part per line")->required();

    GenOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "write instance files");
    gen->add_option("kind", gen_opts.kind, "path, cycle, spider, random or rbds-gadget")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "spider", "random", "rbds-gadget"}));
    gen->add_option("input", gen_opts.input, "bipartite instance file for rbds-gadget");
    gen->add_option("--n", gen_opts.n, "vertex count for path/cycle/random");
    gen->add_option("--legs", gen_opts.legs, "spider legs");
    gen->add_option("--leg-length", gen_opts.leg_length, "spider leg length");
    gen->add_option("--p", gen_opts.p, "edge probability for random");
    gen->add_option("--seed", gen_opts.seed, "random generator seed");
    gen->add_flag("!--disconnected", gen_opts.connected, "allow a disconnected random graph");
    gen->add_option("--out", gen_opts.out, "output file (default stdout)");

    BenchOpts bench_opts;
    auto* bench = app.add_subcommand("bench", "run solver matrices, one CSV row per (instance, mode, k)");
    bench->add_option("inputs", bench_opts.inputs, "edge-list files (default: built-in seeded set)");
    bench->add_option("--seed", bench_opts.seed, "seed for generated instances and randomized runs");
    bench->add_option("--target", bench_opts.target, "path, tree or both")
        ->check(CLI::IsMember({"path", "tree", "both"}));
    bench->add_option("--modes", bench_opts.modes, "comma list: deterministic,randomized");
    bench->add_option("--k-max", bench_opts.k_max, "largest budget per instance");
    bench->add_option("--out", bench_opts.out, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(solve)) return run_solve(solve_opts);
        if (app.got_subcommand(oracle)) return run_oracle(oracle_opts);
        if (app.got_subcommand(kern)) return run_kernelize(kernel_opts);
        if (app.got_subcommand(verify)) return run_verify(verify_opts);
        if (app.got_subcommand(gen)) return run_gen(gen_opts);
        if (app.got_subcommand(bench)) return run_bench(bench_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
