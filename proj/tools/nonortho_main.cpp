// Command-line front end: encode/decode, single-shot search, measurement
// decoding, tree search and benchmark sweeps, all seeded and reproducible.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nonortho/codec.hpp"
#include "nonortho/decomposition.hpp"
#include "nonortho/errors.hpp"
#include "nonortho/grover.hpp"
#include "nonortho/report.hpp"
#include "nonortho/sampler.hpp"
#include "nonortho/serialize.hpp"
#include "nonortho/treesearch.hpp"

namespace {

using nlohmann::json;
using namespace nonortho;

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
    if (seed_opt->count() > 0) {
        return seed_flag;
    }
    if (const char* env = std::getenv("NONORTHO_SEED")) {
        std::uint64_t value = 0;
        std::size_t used = 0;
        try {
            value = std::stoull(env, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("NONORTHO_SEED is not a valid 64-bit seed");
        }
        if (used != std::string(env).size()) {
            throw std::invalid_argument("NONORTHO_SEED is not a valid 64-bit seed");
        }
        return value;
    }
    return 0;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open output path: " + out_path);
    }
    file << text;
    if (!text.empty() && text.back() != '\n') {
        file << '\n';
    }
    if (!file.good()) {
        throw IoError("failed while writing: " + out_path);
    }
}

std::string read_input(const std::string& in_path) {
    if (in_path.empty() || in_path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(in_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open input path: " + in_path);
    }
    std::stringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

json report_envelope(const std::string& command, std::uint64_t seed, json config) {
    return json{{"schema", kSchemaVersion},
                {"version", std::string(kArtifactVersion)},
                {"command", command},
                {"seed", seed},
                {"config", std::move(config)}};
}

std::string csv_comment(const std::string& command, std::uint64_t seed,
                        const std::string& extras) {
    std::string line = "# nonortho ";
    line += kArtifactVersion;
    line += " command=" + command + " seed=" + std::to_string(seed);
    if (!extras.empty()) {
        line += " " + extras;
    }
    line += "\n";
    return line;
}

// ---------------------------------------------------------------------------

struct EncodeOpts {
    std::string bits;
    std::string out;
};

int run_encode(const EncodeOpts& o, std::uint64_t seed) {
    const BitString bits = BitString::parse(o.bits);
    const Codeword cw = encode(bits);
    json report = report_envelope("encode", seed, {{"bits", o.bits}});
    report["n"] = cw.n();
    report["bits"] = bits.str();
    report["codeword"] = codeword_to_json(cw);
    report["space"] = space_to_json(report_space(cw.n()));
    write_output(report.dump(2), o.out);
    return 0;
}

struct DecodeOpts {
    std::string in;
    std::string out;
};

int run_decode(const DecodeOpts& o, std::uint64_t seed) {
    json input;
    try {
        input = json::parse(read_input(o.in));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    // accept either the bare codeword schema or a full encode report
    if (input.is_object() && input.contains("codeword")) {
        input = input["codeword"];
    }
    const Codeword cw = codeword_from_json(input);
    json report = report_envelope("decode", seed, {{"in", o.in.empty() ? "-" : o.in}});
    report["n"] = cw.n();
    report["bits"] = decode_codeword(cw).str();
    write_output(report.dump(2), o.out);
    return 0;
}

struct SearchOpts {
    std::string bits;
    std::string oracle = "reflection";
    std::string out;
};

int run_search(const SearchOpts& o, std::uint64_t seed) {
    const BitString bits = BitString::parse(o.bits);
    const Codeword target = encode(bits);
    const int n = target.n();
    const OracleSpec oracle =
        o.oracle == "diagonal" ? diagonal_oracle(target) : reflection_oracle(target);
    const StateVector out_state = grover_step(oracle, build_list(n));
    const double fidelity = std::norm(inner(target, out_state));

    json report = report_envelope("search", seed, {{"bits", o.bits}, {"oracle", o.oracle}});
    report["result"] = search_result_json(n, bits, fidelity, o.oracle, 1);
    report["final_state"] = state_to_json(out_state);
    write_output(report.dump(2), o.out);
    return 0;
}

struct SampleOpts {
    std::string bits;
    int trials = 1;
    int max_runs = 0;
    std::string format = "json";
    std::string out;
};

int run_sample(const SampleOpts& o, std::uint64_t seed) {
    if (o.trials < 1) {
        throw std::invalid_argument("--trials must be positive");
    }
    const BitString bits = BitString::parse(o.bits);
    const Codeword cw = encode(bits);
    const int n = cw.n();
    const int max_runs = o.max_runs > 0 ? o.max_runs : default_max_runs(n);
    const StateVector state = codeword_state(cw);

    struct Row {
        std::uint64_t seed;
        int runs;
        bool completed;
        bool conflict;
        std::string decoded;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(o.trials));
    for (int t = 0; t < o.trials; ++t) {
        RandomSource rng(RandomSource::derive(seed, static_cast<std::uint64_t>(t)));
        const DecoderState d = collect_until_complete(state, n, rng, max_runs);
        Row row{rng.seed(), d.runs, d.complete(), d.conflict, ""};
        if (d.complete() && !d.conflict) {
            row.decoded = reconstruct(d).str();
        }
        rows.push_back(std::move(row));
    }

    if (o.format == "csv") {
        std::string text = csv_comment("sample", seed,
                                       "bits=" + bits.str() + " trials=" + std::to_string(o.trials) +
                                           " max_runs=" + std::to_string(max_runs));
        text += "n,seed,runs,completed,conflict\n";
        for (const Row& r : rows) {
            text += std::to_string(n) + "," + std::to_string(r.seed) + "," +
                    std::to_string(r.runs) + "," + (r.completed ? "1" : "0") + "," +
                    (r.conflict ? "1" : "0") + "\n";
        }
        write_output(text, o.out);
        return 0;
    }

    json report = report_envelope("sample", seed,
                                  {{"bits", o.bits},
                                   {"trials", o.trials},
                                   {"max_runs", max_runs}});
    report["n"] = n;
    json trials = json::array();
    for (const Row& r : rows) {
        json t{{"seed", r.seed},
               {"runs", r.runs},
               {"completed", r.completed},
               {"conflict", r.conflict}};
        if (!r.decoded.empty()) {
            t["decoded"] = r.decoded;
        }
        trials.push_back(std::move(t));
    }
    report["trials"] = std::move(trials);
    report["expected_runs"] = expected_runs(n);
    write_output(report.dump(2), o.out);
    return 0;
}

struct TreeOpts {
    std::string in;
    bool random = false;
    std::int64_t target = -1;
    bool target_set = false;
    int depth = 0;
    double child_prob = 0.5;
    std::string format = "json";
    std::string out;
};

int run_tree(const TreeOpts& o, std::uint64_t seed) {
    RandomSource rng(seed);

    std::optional<OrderedTree> tree;
    OrderedTree::NodeId target = o.target;
    int depth = o.depth;

    if (o.random) {
        if (depth < 1) {
            throw std::invalid_argument("--random needs --depth >= 1");
        }
        tree = random_tree(depth, o.child_prob, rng);
        const auto candidates = tree->nodes_at_depth(depth);
        target = candidates[static_cast<std::size_t>(rng.next_below(static_cast<int>(candidates.size())))];
    } else {
        if (o.in.empty()) {
            throw std::invalid_argument("tree needs --in FILE or --random");
        }
        json input;
        try {
            input = json::parse(read_input(o.in));
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
        }
        tree = tree_from_json(input);
        if (!o.target_set) {
            throw std::invalid_argument("tree needs --target NODE");
        }
        const auto d = tree->depth_of(target);
        if (!d.has_value()) {
            throw std::invalid_argument("target is not in the tree");
        }
        if (depth == 0) {
            depth = *d;
        }
    }

    const QuantumFindResult quantum = quantum_find(*tree, target, depth, rng);
    const ClassicalFindResult classical = classical_find(*tree, target, depth);

    if (o.format == "csv") {
        std::string text = csv_comment("tree", seed, "");
        text += "depth,classical_examined,quantum_queries,measurement_runs,seed\n";
        text += std::to_string(depth) + "," + std::to_string(classical.examined) + "," +
                std::to_string(quantum.oracle_queries) + "," +
                std::to_string(quantum.measurement_runs) + "," + std::to_string(seed) + "\n";
        write_output(text, o.out);
        return 0;
    }

    json labels = json::array();
    for (std::uint8_t label : quantum.path.labels) {
        labels.push_back(json::array({pair_p(label), pair_q(label)}));
    }
    json report = report_envelope("tree", seed,
                                  {{"in", o.in.empty() ? json() : json(o.in)},
                                   {"random", o.random},
                                   {"depth", depth},
                                   {"child_prob", o.child_prob}});
    report["depth"] = depth;
    report["target"] = target;
    report["nodes"] = tree->node_count();
    report["path"] = std::move(labels);
    report["bits"] = decode_codeword(path_to_codeword(quantum.path)).str();
    report["oracle_queries"] = quantum.oracle_queries;
    report["measurement_runs"] = quantum.measurement_runs;
    report["classical_examined"] = classical.examined;
    write_output(report.dump(2), o.out);
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
    std::string mode;
    std::vector<int> n_values;
    std::vector<int> depths;
    std::vector<int> num_bits;
    std::vector<int> marked;
    int trials = 0;
    int max_runs = 0;
    double child_prob = 0.5;
    int jobs = 1;
    std::string format = "csv";
    std::string out;
};

struct CouponAggregate {
    std::uint64_t sum_runs = 0;
    std::uint64_t sum_runs_sq = 0;
    std::uint64_t completed = 0;
    std::uint64_t conflicts = 0;
};

CouponAggregate coupon_chunk(int n, int max_runs, std::uint64_t master_seed, int first, int last) {
    CouponAggregate agg;
    for (int t = first; t < last; ++t) {
        RandomSource rng(RandomSource::derive(master_seed, static_cast<std::uint64_t>(t)));
        // a fresh random codeword per trial; the run distribution does not
        // depend on which codeword is measured
        std::vector<std::uint8_t> packed(static_cast<std::size_t>(n));
        for (auto& pv : packed) {
            pv = static_cast<std::uint8_t>(rng.next_below(4));
        }
        const StateVector state = codeword_state(Codeword(n, std::move(packed)));
        const DecoderState d = collect_until_complete(state, n, rng, max_runs);
        agg.sum_runs += static_cast<std::uint64_t>(d.runs);
        agg.sum_runs_sq += static_cast<std::uint64_t>(d.runs) * static_cast<std::uint64_t>(d.runs);
        agg.completed += d.complete() ? 1 : 0;
        agg.conflicts += d.conflict ? 1 : 0;
    }
    return agg;
}

// integer accumulators summed over per-trial derived seeds, so the result is
// identical no matter how trials are split across workers
CouponAggregate coupon_runs(int n, int trials, int max_runs, std::uint64_t master_seed, int jobs) {
    if (jobs <= 1) {
        return coupon_chunk(n, max_runs, master_seed, 0, trials);
    }
    const int chunk = (trials + jobs - 1) / jobs;
    std::vector<CouponAggregate> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        const int first = w * chunk;
        const int last = std::min(trials, first + chunk);
        if (first >= last) {
            break;
        }
        workers.emplace_back([&, w, first, last] {
            parts[static_cast<std::size_t>(w)] = coupon_chunk(n, max_runs, master_seed, first, last);
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    CouponAggregate total;
    for (const auto& p : parts) {
        total.sum_runs += p.sum_runs;
        total.sum_runs_sq += p.sum_runs_sq;
        total.completed += p.completed;
        total.conflicts += p.conflicts;
    }
    return total;
}

int run_bench_coupon(const BenchOpts& o, std::uint64_t seed) {
    const std::vector<int> ns = o.n_values.empty() ? std::vector<int>{2, 4, 8, 16} : o.n_values;
    const int trials = o.trials > 0 ? o.trials : 100000;

    json rows = json::array();
    for (int n : ns) {
        const int max_runs = o.max_runs > 0 ? o.max_runs : default_max_runs(n);
        const CouponAggregate agg = coupon_runs(n, trials, max_runs, seed, o.jobs);
        const double mean = static_cast<double>(agg.sum_runs) / trials;
        const double variance =
            trials > 1
                ? (static_cast<double>(agg.sum_runs_sq) - trials * mean * mean) / (trials - 1)
                : 0.0;
        rows.push_back({{"n", n},
                        {"seed", seed},
                        {"trials", trials},
                        {"mean_runs", mean},
                        {"variance_runs", variance},
                        {"expected_runs", expected_runs(n)},
                        {"completed", agg.completed},
                        {"conflicts", agg.conflicts}});
    }

    if (o.format == "json") {
        json report = report_envelope("bench", seed,
                                      {{"mode", "coupon"}, {"trials", trials}, {"jobs", o.jobs}});
        report["rows"] = std::move(rows);
        write_output(report.dump(2), o.out);
        return 0;
    }
    std::string text = csv_comment("bench", seed, "mode=coupon trials=" + std::to_string(trials));
    text += "n,seed,trials,mean_runs,variance_runs,expected_runs,completed,conflicts\n";
    for (const json& r : rows) {
        text += std::to_string(r["n"].get<int>()) + "," + std::to_string(seed) + "," +
                std::to_string(trials) + "," + format_double(r["mean_runs"].get<double>()) + "," +
                format_double(r["variance_runs"].get<double>()) + "," +
                format_double(r["expected_runs"].get<double>()) + "," +
                std::to_string(r["completed"].get<std::uint64_t>()) + "," +
                std::to_string(r["conflicts"].get<std::uint64_t>()) + "\n";
    }
    write_output(text, o.out);
    return 0;
}

int run_bench_tree(const BenchOpts& o, std::uint64_t seed) {
    const std::vector<int> depths = o.depths.empty() ? std::vector<int>{2, 4, 8} : o.depths;
    const int trials = o.trials > 0 ? o.trials : 100;

    json rows = json::array();
    for (int depth : depths) {
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed =
                RandomSource::derive(seed, static_cast<std::uint64_t>(depth) * 1000003u +
                                               static_cast<std::uint64_t>(t));
            RandomSource rng(trial_seed);
            const OrderedTree tree = random_tree(depth, o.child_prob, rng);
            const auto candidates = tree.nodes_at_depth(depth);
            const OrderedTree::NodeId target =
                candidates[static_cast<std::size_t>(rng.next_below(static_cast<int>(candidates.size())))];
            const QuantumFindResult quantum = quantum_find(tree, target, depth, rng);
            const ClassicalFindResult classical = classical_find(tree, target, depth);
            rows.push_back({{"depth", depth},
                            {"classical_examined", classical.examined},
                            {"quantum_queries", quantum.oracle_queries},
                            {"measurement_runs", quantum.measurement_runs},
                            {"seed", trial_seed}});
        }
    }

    if (o.format == "json") {
        json report = report_envelope("bench", seed,
                                      {{"mode", "tree"},
                                       {"trials", trials},
                                       {"child_prob", o.child_prob}});
        report["rows"] = std::move(rows);
        write_output(report.dump(2), o.out);
        return 0;
    }
    std::string text = csv_comment("bench", seed,
                                   "mode=tree trials=" + std::to_string(trials) +
                                       " child_prob=" + format_double(o.child_prob));
    text += "depth,classical_examined,quantum_queries,measurement_runs,seed\n";
    for (const json& r : rows) {
        text += std::to_string(r["depth"].get<int>()) + "," +
                std::to_string(r["classical_examined"].get<std::uint64_t>()) + "," +
                std::to_string(r["quantum_queries"].get<int>()) + "," +
                std::to_string(r["measurement_runs"].get<int>()) + "," +
                std::to_string(r["seed"].get<std::uint64_t>()) + "\n";
    }
    write_output(text, o.out);
    return 0;
}

int run_bench_standard(const BenchOpts& o, std::uint64_t seed) {
    const std::vector<int> bits = o.num_bits.empty() ? std::vector<int>{2, 4, 6} : o.num_bits;
    const std::vector<int> marked = o.marked.empty() ? std::vector<int>{1, 2} : o.marked;

    json rows = json::array();
    for (int b : bits) {
        const std::uint64_t n_states = std::uint64_t{1} << b;
        for (int m : marked) {
            if (m < 1 || static_cast<std::uint64_t>(m) > n_states) {
                throw std::invalid_argument("marked count out of range");
            }
            StandardSearchProblem problem;
            problem.num_bits = b;
            for (int t = 0; t < m; ++t) {
                problem.targets.push_back(static_cast<std::uint64_t>(t));
            }
            const int k_opt =
                standard_optimal_iterations(n_states, static_cast<std::uint64_t>(m));
            const double theta =
                std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(n_states)));
            for (int k = 0; k <= k_opt; ++k) {
                const auto outcome = standard_grover_search(problem, k);
                const double predicted = std::pow(std::sin((2 * k + 1) * theta), 2);
                rows.push_back({{"num_bits", b},
                                {"n_states", n_states},
                                {"marked", m},
                                {"iterations", k},
                                {"predicted", predicted},
                                {"measured", outcome.success_probability}});
            }
        }
    }

    if (o.format == "json") {
        json report = report_envelope("bench", seed,
                                      {{"mode", "standard"}, {"num_bits", bits}, {"marked", marked}});
        report["rows"] = std::move(rows);
        write_output(report.dump(2), o.out);
        return 0;
    }
    std::string num_bits_list;
    std::string marked_list;
    for (int b : bits) {
        num_bits_list += (num_bits_list.empty() ? "" : "/") + std::to_string(b);
    }
    for (int m : marked) {
        marked_list += (marked_list.empty() ? "" : "/") + std::to_string(m);
    }
    std::string text = csv_comment("bench", seed,
                                   "mode=standard num_bits=" + num_bits_list +
                                       " marked=" + marked_list);
    text += "num_bits,n_states,marked,iterations,predicted,measured\n";
    for (const json& r : rows) {
        text += std::to_string(r["num_bits"].get<int>()) + "," +
                std::to_string(r["n_states"].get<std::uint64_t>()) + "," +
                std::to_string(r["marked"].get<int>()) + "," +
                std::to_string(r["iterations"].get<int>()) + "," +
                format_double(r["predicted"].get<double>()) + "," +
                format_double(r["measured"].get<double>()) + "\n";
    }
    write_output(text, o.out);
    return 0;
}

int run_bench(const BenchOpts& o, std::uint64_t seed) {
    if (o.jobs < 1) {
        throw std::invalid_argument("--jobs must be positive");
    }
    if (o.mode == "coupon") {
        return run_bench_coupon(o, seed);
    }
    if (o.mode == "tree") {
        return run_bench_tree(o, seed);
    }
    if (o.mode == "standard") {
        return run_bench_standard(o, seed);
    }
    throw std::invalid_argument("unknown bench mode: " + o.mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search over lists of non-orthogonally encoded bit strings"};
    app.require_subcommand(1);

    std::uint64_t seed_flag = 0;
    CLI::Option* seed_opt =
        app.add_option("--seed", seed_flag, "64-bit seed (default: NONORTHO_SEED or 0)");

    EncodeOpts encode_opts;
    CLI::App* cmd_encode = app.add_subcommand("encode", "encode a bit string as a codeword");
    cmd_encode->add_option("--bits", encode_opts.bits, "bit string to encode")->required();
    cmd_encode->add_option("--out", encode_opts.out, "output path (default: stdout)");

    DecodeOpts decode_opts;
    CLI::App* cmd_decode = app.add_subcommand("decode", "decode a codeword JSON back to bits");
    cmd_decode->add_option("--in", decode_opts.in, "input path (default: stdin)");
    cmd_decode->add_option("--out", decode_opts.out, "output path (default: stdout)");

    SearchOpts search_opts;
    CLI::App* cmd_search = app.add_subcommand("search", "single-step search for a codeword");
    cmd_search->add_option("--bits", search_opts.bits, "target bit string")->required();
    cmd_search->add_option("--oracle", search_opts.oracle, "oracle variant")
        ->check(CLI::IsMember({"reflection", "diagonal"}));
    cmd_search->add_option("--out", search_opts.out, "output path (default: stdout)");

    SampleOpts sample_opts;
    CLI::App* cmd_sample = app.add_subcommand("sample", "measurement decoding of a codeword state");
    cmd_sample->add_option("--bits", sample_opts.bits, "bit string whose codeword is measured")
        ->required();
    cmd_sample->add_option("--trials", sample_opts.trials, "number of independent trials");
    cmd_sample->add_option("--max-runs", sample_opts.max_runs,
                           "measurement budget per trial (default: 50 n H_n)");
    cmd_sample->add_option("--format", sample_opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_sample->add_option("--out", sample_opts.out, "output path (default: stdout)");

    TreeOpts tree_opts;
    CLI::App* cmd_tree = app.add_subcommand("tree", "path search in an ordered tree");
    cmd_tree->add_option("--in", tree_opts.in, "tree JSON file");
    cmd_tree->add_flag("--random", tree_opts.random, "generate a random instance instead");
    CLI::Option* tree_target_opt =
        cmd_tree->add_option("--target", tree_opts.target, "target node id (with --in)");
    cmd_tree->add_option("--depth", tree_opts.depth, "path length (required with --random)");
    cmd_tree->add_option("--child-prob", tree_opts.child_prob,
                         "per-label child probability for --random");
    cmd_tree->add_option("--format", tree_opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_tree->add_option("--out", tree_opts.out, "output path (default: stdout)");

    BenchOpts bench_opts;
    CLI::App* cmd_bench = app.add_subcommand("bench", "benchmark sweeps");
    cmd_bench->add_option("--mode", bench_opts.mode, "coupon, tree or standard")->required();
    cmd_bench->add_option("--n", bench_opts.n_values, "subspace counts (coupon mode)");
    cmd_bench->add_option("--depth", bench_opts.depths, "tree depths (tree mode)");
    cmd_bench->add_option("--num-bits", bench_opts.num_bits, "register sizes (standard mode)");
    cmd_bench->add_option("--marked", bench_opts.marked, "marked-state counts (standard mode)");
    cmd_bench->add_option("--trials", bench_opts.trials, "trials per configuration");
    cmd_bench->add_option("--max-runs", bench_opts.max_runs, "measurement budget per trial");
    cmd_bench->add_option("--child-prob", bench_opts.child_prob, "per-label child probability");
    cmd_bench->add_option("--jobs", bench_opts.jobs, "worker threads (identical output for any value)");
    cmd_bench->add_option("--format", bench_opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_bench->add_option("--out", bench_opts.out, "output path (default: stdout)");

    // let --seed appear after the subcommand name as well
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    tree_opts.target_set = tree_target_opt->count() > 0;

    try {
        const std::uint64_t seed = resolve_seed(seed_opt, seed_flag);
        if (cmd_encode->parsed()) {
            return run_encode(encode_opts, seed);
        }
        if (cmd_decode->parsed()) {
            return run_decode(decode_opts, seed);
        }
        if (cmd_search->parsed()) {
            return run_search(search_opts, seed);
        }
        if (cmd_sample->parsed()) {
            return run_sample(sample_opts, seed);
        }
        if (cmd_tree->parsed()) {
            return run_tree(tree_opts, seed);
        }
        if (cmd_bench->parsed()) {
            return run_bench(bench_opts, seed);
        }
        return kExitUsage;
    } catch (const GuardError& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kExitGuard}}.dump() << "\n";
        return kExitGuard;
    } catch (const IoError& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kExitIo}}.dump() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kExitUsage}}.dump() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kExitUsage}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"exit", 1}}.dump() << "\n";
        return 1;
    }
}
