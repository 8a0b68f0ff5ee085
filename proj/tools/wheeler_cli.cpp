// Command-line front end for the Wheeler automata library.
//
// Exit codes: 0 success or affirmative answer, 1 negative answer or
// violation, 2 usage, I/O or parse error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wheeler/wheeler.hpp"

namespace {

using namespace wheeler;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

/// Usage-level failure: message goes to stderr, exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

WheelerNfa load_automaton(const std::string& path) {
    try {
        return parse_wnfa(read_input(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

/// Loads and validates; a violation is a usage error for commands that require valid input.
WheelerNfa load_valid(const std::string& path) {
    WheelerNfa a = load_automaton(path);
    const auto report = validate(a);
    if (!report.ok()) throw UsageError(path + ": not a valid Wheeler NFA: " + describe(a, report.violations.front()));
    return a;
}

void print_report(const WheelerNfa& a, const ValidationReport& r) {
    if (r.ok()) {
        std::cout << "ok\n";
        return;
    }
    for (const auto& v : r.violations) std::cout << describe(a, v) << '\n';
}

int cmd_validate(const std::string& path) {
    const WheelerNfa a = load_automaton(path);
    const auto report = validate(a);
    print_report(a, report);
    return report.ok() ? kOk : kNegative;
}

struct MinimizeOptions {
    std::string input;
    std::string output = "-";
    std::string trace;
    std::string dot;
    std::string class_map;
};

int cmd_minimize(const MinimizeOptions& o) {
    const WheelerNfa a = load_automaton(o.input);
    const auto report = validate(a);
    if (!report.ok()) {
        std::cerr << "input is not a valid Wheeler NFA\n";
        for (const auto& v : report.violations) std::cerr << describe(a, v) << '\n';
        return kNegative;
    }
    const BoundaryRun run = compute_boundary_bits(a, !o.trace.empty());
    const QuotientResult q = quotient(a, run.bits);
    const std::string classes = serialize_class_map(q.class_map);
    if (o.class_map.empty()) {
        write_output(o.output, serialize_wnfa(q.quotient) + classes);
    } else {
        write_output(o.output, serialize_wnfa(q.quotient));
        write_output(o.class_map, classes);
    }
    if (!o.trace.empty()) write_output(o.trace, serialize_trace(run.trace));
    if (!o.dot.empty()) write_output(o.dot, to_dot(q.quotient));
    return kOk;
}

int cmd_equiv(const std::string& pa, const std::string& pb, const std::string& witness_path) {
    const WheelerNfa a = load_valid(pa);
    const WheelerNfa b = load_valid(pb);
    const EquivalenceVerdict v = wheeler_bisimilar(a, b);
    if (!v.bisimilar) {
        std::cout << "not bisimilar: " << to_string(v.reason) << '\n';
        return kNegative;
    }
    std::cout << "bisimilar\n";
    if (!witness_path.empty()) write_output(witness_path, serialize_relation(*v.witness));
    return kOk;
}

int cmd_check_relation(const std::string& pa, const std::string& pb, const std::string& pr, bool wheeler) {
    const WheelerNfa a = load_valid(pa);
    const WheelerNfa b = load_valid(pb);
    std::optional<Relation> r;
    try {
        r = parse_relation(read_input(pr));
    } catch (const ParseError& e) {
        throw UsageError(pr + ":" + e.what());
    }
    if (r->left_size() != a.num_states() || r->right_size() != b.num_states()) {
        throw UsageError(pr + ": relation sizes do not match the automata");
    }
    const BisimVerdict v = wheeler ? is_wheeler_bisimulation(a, b, *r) : is_bisimulation(a, b, *r);
    if (v.ok()) {
        std::cout << "ok\n";
        return kOk;
    }
    std::cout << describe(a, b, *v.witness) << '\n';
    return kNegative;
}

struct GenOptions {
    std::size_t k = 3;
    std::string text;
    std::size_t n = 8;
    std::size_t edges = 2;
    std::size_t sigma = 2;
    std::uint64_t seed = 0;
    bool dfa = false;
    std::string output = "-";
};

int cmd_gen(const std::string& family, const GenOptions& o) {
    WheelerNfa a = [&] {
        if (family == "chain") {
            if (o.k < 3) throw UsageError("chain needs --k >= 3");
            return gen_chain(o.k);
        }
        if (family == "distinctness") {
            if (o.text.empty()) throw UsageError("distinctness needs a non-empty --text");
            return gen_distinctness(o.text);
        }
        std::vector<std::string> notes;
        WheelerNfa r = o.dfa ? gen_random_wheeler_dfa(o.n, o.sigma, o.seed, &notes)
                             : gen_random_wheeler(o.n, o.edges, o.sigma, o.seed, &notes);
        for (const auto& s : notes) std::cerr << "note: " << s << '\n';
        return r;
    }();
    write_output(o.output, serialize_wnfa(a));
    return kOk;
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        // Accept plain integers and 1eK shorthands.
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad size '" + item + "'");
        }
        if (pos != item.size() || v < 1 || v != std::floor(v)) throw UsageError("bad size '" + item + "'");
        sizes.push_back(static_cast<std::size_t>(v));
    }
    return sizes;
}

int cmd_bench(const std::string& size_list, std::uint64_t seed, std::size_t per_target) {
    const auto sizes = parse_sizes(size_list);
    if (per_target < 1) throw UsageError("--edges must be >= 1");
    std::cout << "size\tstates\tedges\tseconds\tenqueues\n";
    std::vector<double> log_e, log_t;
    bool bound_ok = true;
    for (std::size_t size : sizes) {
        const std::size_t n = std::max<std::size_t>(2, size / per_target);
        const WheelerNfa a = gen_random_wheeler(n, per_target, 4, seed);
        // Repeat small inputs so the timer resolves them.
        std::size_t reps = 0;
        std::size_t enqueues = 0;
        const auto start = std::chrono::steady_clock::now();
        double elapsed = 0;
        do {
            enqueues = compute_boundary_bits(a).enqueues;
            ++reps;
            elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        } while (elapsed < 0.2 && reps < 1000);
        const double seconds = elapsed / static_cast<double>(reps);
        std::cout << size << '\t' << a.num_states() << '\t' << a.num_edges() << '\t' << std::scientific
                  << std::setprecision(3) << seconds << std::defaultfloat << '\t' << enqueues << '\n';
        if (enqueues > a.num_states() - 1) {
            std::cerr << "enqueue bound violated at size " << size << '\n';
            bound_ok = false;
        }
        log_e.push_back(std::log(static_cast<double>(std::max<std::size_t>(1, a.num_edges()))));
        log_t.push_back(std::log(seconds));
    }
    if (log_e.size() >= 2) {
        const double m = static_cast<double>(log_e.size());
        double se = 0, st = 0, see = 0, set = 0;
        for (std::size_t k = 0; k < log_e.size(); ++k) {
            se += log_e[k];
            st += log_t[k];
            see += log_e[k] * log_e[k];
            set += log_e[k] * log_t[k];
        }
        const double denom = m * see - se * se;
        if (denom > 0) {
            std::cout << "growth exponent: " << std::fixed << std::setprecision(3) << (m * set - se * st) / denom
                      << '\n';
        }
    }
    return bound_ok ? kOk : kNegative;
}

int cmd_dev_oracle(const std::string& path, std::size_t cap) {
    const WheelerNfa a = load_valid(path);
    if (a.num_states() > cap) throw UsageError("oracle is capped at " + std::to_string(cap) + " states");
    const BoundaryBits b = oracle_max_wheeler_autobisimulation(a, cap);
    std::cout << "bits " << b.to_string() << '\n' << "classes " << b.num_classes() << '\n';
    return kOk;
}

int cmd_dev_std_bisim(const std::string& path) {
    const WheelerNfa a = load_valid(path);
    const Partition p = max_standard_autobisimulation(a);
    for (const auto& c : p.classes()) {
        std::cout << "class";
        for (State u : c) std::cout << ' ' << u + 1;
        std::cout << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wheeler automata: validation, minimization and bisimilarity"};
    app.require_subcommand(1);
    bool dev = false;
    app.add_flag("--dev", dev, "Enable developer commands (oracle, std-bisim)");

    std::string path_a, path_b, path_r;

    auto* validate_cmd = app.add_subcommand("validate", "Check the Wheeler axioms and reachability");
    validate_cmd->add_option("input", path_a, "Automaton (.wnfa, - for stdin)")->required();

    MinimizeOptions mo;
    auto* minimize_cmd = app.add_subcommand("minimize", "Build the minimal Wheeler-bisimilar NFA");
    minimize_cmd->add_option("input", mo.input, "Automaton (.wnfa, - for stdin)")->required();
    minimize_cmd->add_option("-o,--output", mo.output, "Quotient output (default stdout)");
    minimize_cmd->add_option("--class-map", mo.class_map,
                             "Write the class map here instead of after the quotient");
    minimize_cmd->add_option("--trace", mo.trace, "Write the boundary propagation trace");
    minimize_cmd->add_option("--dot", mo.dot, "Write the quotient as Graphviz DOT");

    std::string witness;
    auto* equiv_cmd = app.add_subcommand("equiv", "Decide Wheeler bisimilarity");
    equiv_cmd->add_option("first", path_a)->required();
    equiv_cmd->add_option("second", path_b)->required();
    equiv_cmd->add_option("--witness", witness, "Write a witness relation when bisimilar");

    bool as_wheeler = false, as_standard = false;
    auto* check_cmd = app.add_subcommand("check-relation", "Check a relation between two automata");
    check_cmd->add_option("first", path_a)->required();
    check_cmd->add_option("second", path_b)->required();
    check_cmd->add_option("relation", path_r)->required();
    auto* wf = check_cmd->add_flag("--wheeler", as_wheeler, "Check for a Wheeler bisimulation");
    auto* sf = check_cmd->add_flag("--standard", as_standard, "Check for a bisimulation");
    wf->excludes(sf);

    GenOptions go;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an automaton");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_option("-o,--output", go.output, "Output (default stdout)");
    auto* chain_cmd = gen_cmd->add_subcommand("chain", "Chain family for a*");
    chain_cmd->add_option("--k", go.k, "Number of states (>= 3)");
    auto* dist_cmd = gen_cmd->add_subcommand("distinctness", "Element-distinctness gadget");
    dist_cmd->add_option("--text", go.text, "Text, one symbol per character")->required();
    auto* random_cmd = gen_cmd->add_subcommand("random", "Random Wheeler NFA");
    random_cmd->add_option("--n", go.n, "States");
    random_cmd->add_option("--edges", go.edges, "Incoming edges per state, roughly");
    random_cmd->add_option("--sigma", go.sigma, "Alphabet size");
    random_cmd->add_option("--seed", go.seed, "Seed");
    random_cmd->add_flag("--dfa", go.dfa, "Generate a Wheeler DFA");
    for (auto* sub : {chain_cmd, dist_cmd, random_cmd}) sub->add_option("-o,--output", go.output, "Output");

    std::string sizes = "1e3,1e4,1e5";
    std::uint64_t bench_seed = 1;
    std::size_t per_target = 2;
    auto* bench_cmd = app.add_subcommand("bench", "Time the boundary computation");
    bench_cmd->add_option("--sizes", sizes, "Comma-separated target edge counts; may be empty");
    bench_cmd->add_option("--seed", bench_seed, "Seed");
    bench_cmd->add_option("--edges", per_target, "Incoming edges per state, roughly");

    std::size_t cap = 16;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force maximum Wheeler autobisimulation (needs --dev)");
    oracle_cmd->add_option("input", path_a)->required();
    oracle_cmd->add_option("--cap", cap, "Maximum number of states");
    auto* std_cmd = app.add_subcommand("std-bisim", "Maximum standard autobisimulation (needs --dev)");
    std_cmd->add_option("input", path_a)->required();
    oracle_cmd->group("");
    std_cmd->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(path_a);
        if (minimize_cmd->parsed()) return cmd_minimize(mo);
        if (equiv_cmd->parsed()) return cmd_equiv(path_a, path_b, witness);
        if (check_cmd->parsed()) {
            if (!as_wheeler && !as_standard) throw UsageError("check-relation needs --wheeler or --standard");
            return cmd_check_relation(path_a, path_b, path_r, as_wheeler);
        }
        if (gen_cmd->parsed()) {
            const std::string family = chain_cmd->parsed() ? "chain" : dist_cmd->parsed() ? "distinctness" : "random";
            return cmd_gen(family, go);
        }
        if (bench_cmd->parsed()) return cmd_bench(sizes, bench_seed, per_target);
        if (oracle_cmd->parsed() || std_cmd->parsed()) {
            if (!dev) throw UsageError("developer commands require --dev");
            return oracle_cmd->parsed() ? cmd_dev_oracle(path_a, cap) : cmd_dev_std_bisim(path_a);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
