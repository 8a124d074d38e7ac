// qmsort command-line harness: benchmark trials to CSV, an invariant
// verifier, and a line-oriented file sorter.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmsort/qmsort.hpp"

namespace {

using qmsort::AlgoId;
using qmsort::DataSpec;
using qmsort::Distribution;
using qmsort::Metrics;
using qmsort::SortConfig;

double parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos)
        return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    return std::stod(s);
}

std::vector<std::size_t> parse_size_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string tok =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(static_cast<std::size_t>(std::stoull(tok)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Per-trial generator seed: a fixed function of (seed, n, trial) so every
// algorithm sorts the same arrays.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::uint64_t trial) {
    return qmsort::mix_seed(seed, static_cast<std::uint64_t>(n) * 1000003ull + trial);
}

struct BenchOptions {
    std::string algo = "qms";
    std::string sizes = "65536";
    std::string dist = "random";
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    std::string beta = "1/2";
    std::string delta = "1/16";
    std::size_t block = qmsort::kDefaultBlock;
    bool three_way = false;
    std::string side = "larger";
    std::string out_path;
};

SortConfig build_config(AlgoId algo, const BenchOptions& opt) {
    SortConfig cfg = qmsort::preset_for(algo);
    cfg.beta = parse_ratio(opt.beta);
    cfg.delta = parse_ratio(opt.delta);
    cfg.block = opt.block;
    cfg.three_way = opt.three_way;
    cfg.side = opt.side == "smaller" ? qmsort::MergesortSide::smaller_always
                                     : qmsort::MergesortSide::larger_when_feasible;
    return cfg;
}

int run_bench(const BenchOptions& opt) {
    const auto algo = qmsort::parse_algo(opt.algo);
    if (!algo) {
        std::cerr << "unknown --algo '" << opt.algo << "' (qms|qmqs|momqms|hqms|std)\n";
        return 2;
    }
    const auto spec = qmsort::parse_dataset(opt.dist);
    if (!spec) {
        std::cerr << "unknown --dist '" << opt.dist
                  << "' (random|sorted|reverse|organpipe|fewdistinct:<k>)\n";
        return 2;
    }
    const auto sizes = parse_size_list(opt.sizes);
    if (sizes.empty()) {
        std::cerr << "--n needs at least one size\n";
        return 2;
    }
    const SortConfig cfg = build_config(*algo, opt);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) {
            std::cerr << "cannot open --out file '" << opt.out_path << "'\n";
            return 2;
        }
        os = &file;
    }
    *os << qmsort::kCsvHeader << '\n';
    const std::string dist_name = qmsort::dataset_name(*spec);
    for (const std::size_t n : sizes) {
        for (std::uint64_t t = 0; t < opt.trials; ++t) {
            const auto input = qmsort::generate_input(*spec, n, trial_seed(opt.seed, n, t));
            const auto rec = qmsort::run_trial(*algo, cfg, input, dist_name, opt.seed, t);
            *os << qmsort::to_csv(rec) << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: library invariants at desk scale, nonzero exit on any failure
// ---------------------------------------------------------------------------

struct Verifier {
    int failures = 0;

    void check(bool ok, const std::string& what) {
        std::printf("%s: %s\n", ok ? "ok" : "FAIL", what.c_str());
        if (!ok) ++failures;
    }
};

struct GuaranteeObserver : qmsort::SortObserver {
    std::size_t violations = 0;
    void on_partition(std::size_t, std::size_t n, const qmsort::PartitionResult& pr,
                      bool mom) override {
        if (!mom || n < 12) return;
        const std::size_t bound = 2 * (n / 6) >= 2 ? 2 * (n / 6) - 2 : 0;
        const std::size_t le = pr.gt_begin;
        const std::size_t ge = n - pr.lt_end;
        if (std::min(le, ge) < bound) ++violations;
    }
};

struct FlagElem {
    std::int64_t key;
    bool dummy = false;
};
struct FlagLess {
    bool operator()(const FlagElem& a, const FlagElem& b) const { return a.key < b.key; }
};
struct FlagDummy {
    bool operator()(const FlagElem& f) const { return f.dummy; }
};
struct MarkObserver : qmsort::SortObserver {
    std::vector<FlagElem>* data = nullptr;
    void on_merge_begin(std::size_t off, std::size_t len) override {
        for (std::size_t i = 0; i < len; ++i) (*data)[off + i].dummy = true;
    }
    void on_merge_end(std::size_t lo, std::size_t hi) override {
        for (std::size_t i = lo; i < hi; ++i) (*data)[i].dummy = false;
    }
};

int run_verify(bool quick) {
    const std::size_t max_n = quick ? 10000 : 100000;
    Verifier v;

    const SortConfig configs[] = {qmsort::qms(), qmsort::qmqs(), qmsort::momqms(),
                                  qmsort::hqms()};
    const DataSpec specs[] = {
        {Distribution::random_perm, 0}, {Distribution::sorted, 0},
        {Distribution::reverse, 0},     {Distribution::organ_pipe, 0},
        {Distribution::few_distinct, 8}, {Distribution::random_dup, 64},
    };

    {
        std::size_t bad = 0, runs = 0;
        for (const auto& cfg : configs)
            for (const auto& spec : specs)
                for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2},
                                      std::size_t{3}, std::size_t{10}, std::size_t{100},
                                      std::size_t{1000}, max_n}) {
                    for (std::uint64_t seed : {1ull, 2ull}) {
                        const auto input = qmsort::generate_input(spec, n, seed);
                        auto work = input;
                        qmsort::sort(work.begin(), work.end(), cfg);
                        ++runs;
                        if (!qmsort::verify_sort_outcome(input, work)) ++bad;
                    }
                }
        v.check(bad == 0, "sortedness and multiset preservation over " + std::to_string(runs) +
                              " runs");
    }

    {
        GuaranteeObserver obs;
        std::size_t runs = 0;
        for (const auto& spec : specs) {
            SortConfig cfg = qmsort::momqms();
            if (spec.kind == Distribution::few_distinct || spec.kind == Distribution::random_dup)
                cfg.three_way = true;
            for (std::size_t n : {std::size_t{12}, std::size_t{100}, std::size_t{999},
                                  std::size_t{4096}, max_n}) {
                auto work = qmsort::generate_input(spec, n, 3);
                qmsort::sort(work.begin(), work.end(), cfg, std::less<>{}, &obs);
                ++runs;
            }
        }
        v.check(obs.violations == 0,
                "worst-case pivot guarantee on every partitioning call (" +
                    std::to_string(runs) + " sorts)");
    }

    {
        bool ok = true;
        qmsort::SplitMix64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + qmsort::bounded(rng, 2000);
            auto work = qmsort::generate_input({Distribution::random_perm, 0}, n, rng.next());
            Metrics m;
            qmsort::CountingComparator<std::less<>> cmp(m);
            qmsort::block_partition(work.begin(), work.end(), qmsort::bounded(rng, n), 128, cmp,
                                    m);
            if (m.comparisons != n - 1) ok = false;
        }
        v.check(ok, "block partition comparison count is exactly n - 1");
    }

    {
        bool ok = true;
        std::vector<std::int64_t> base{10, 20, 30, 40, 50};
        std::sort(base.begin(), base.end());
        do {
            auto w = base;
            Metrics m;
            qmsort::CountingComparator<std::less<>> cmp(m);
            const auto mi = qmsort::median_of_5_index(w.begin(), 0, 1, 2, 3, 4, cmp);
            if (w[mi] != 30 || m.comparisons > 7) ok = false;
        } while (std::next_permutation(base.begin(), base.end()));
        v.check(ok, "median of five: exhaustive, at most seven comparisons");
    }

    {
        bool ok = true;
        qmsort::SplitMix64 rng(6);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 30 + qmsort::bounded(rng, max_n);
            auto work = qmsort::generate_input({Distribution::random_perm, 0}, n, rng.next());
            const std::size_t k = 1 + qmsort::bounded(rng, n);
            Metrics m;
            qmsort::CountingComparator<std::less<>> cmp(m);
            qmsort::SelectAudit audit;
            const auto p = qmsort::select_nth(work.begin(), work.end(), k, cmp, m, &audit);
            if (work[p] != static_cast<std::int64_t>(k)) ok = false;
            if (m.comparisons > 22 * n || audit.violations != 0) ok = false;
        }
        v.check(ok, "selection: rank correctness, 22n budget, geometric shrink");
    }

    {
        std::size_t violations = 0;
        qmsort::SplitMix64 rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + qmsort::bounded(rng, max_n);
            const auto input = qmsort::generate_input({Distribution::random_perm, 0}, n, rng.next());
            std::vector<FlagElem> work(n);
            for (std::size_t i = 0; i < n; ++i) work[i] = {input[i], false};
            MarkObserver obs;
            obs.data = &work;
            Metrics m;
            qmsort::CountingComparator<FlagLess, FlagDummy> cmp(m);
            try {
                qmsort::sort_range_counted(work.begin(), work.end(), qmsort::qms(), cmp, m, &obs);
            } catch (const qmsort::SentinelViolation&) {
                ++violations;
            }
            if (!std::is_sorted(work.begin(), work.end(), FlagLess{})) ++violations;
        }
        v.check(violations == 0, "displaced elements are moved but never compared");
    }

    {
        bool ok = true;
        for (const auto& cfg : configs) {
            auto work = qmsort::generate_input({Distribution::random_perm, 0}, max_n, 8);
            const Metrics m = qmsort::sort(work.begin(), work.end(), cfg);
            const double cap = 2.0 * std::log2(static_cast<double>(max_n)) + 16.0;
            if (static_cast<double>(m.max_depth) > cap) ok = false;
        }
        v.check(ok, "auxiliary stack depth within 2 log2(n) + 16");
    }

    std::printf("%s\n", v.failures == 0 ? "verify: all checks passed" : "verify: FAILURES");
    return v.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sort_file
// ---------------------------------------------------------------------------

int run_sort_file(const std::string& in_path, const std::string& out_path,
                  const BenchOptions& opt) {
    const auto algo = qmsort::parse_algo(opt.algo);
    if (!algo || *algo == AlgoId::std_sort) {
        std::cerr << "sort_file needs --algo qms|qmqs|momqms|hqms\n";
        return 2;
    }
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "cannot open input file '" << in_path << "'\n";
        return 2;
    }
    std::vector<std::int64_t> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            std::cerr << in_path << ":" << line_no << ": empty line\n";
            return 1;
        }
        std::int64_t value = 0;
        const char* b = line.data();
        const char* e = b + line.size();
        const auto [ptr, ec] = std::from_chars(b, e, value);
        if (ec != std::errc{} || ptr != e) {
            std::cerr << in_path << ":" << line_no << ": not a 64-bit integer: '" << line
                      << "'\n";
            return 1;
        }
        values.push_back(value);
    }
    qmsort::sort(values.begin(), values.end(), build_config(*algo, opt));
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return 2;
    }
    for (const auto v : values) out << v << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"QuickMergesort family sorting harness"};
    app.require_subcommand(1);

    BenchOptions opt;

    auto* bench = app.add_subcommand("bench", "run trials and emit CSV");
    bench->add_option("--algo", opt.algo, "qms|qmqs|momqms|hqms|std")->required();
    bench->add_option("--n", opt.sizes, "comma-separated input sizes")->required();
    bench->add_option("--dist", opt.dist,
                      "random|sorted|reverse|organpipe|fewdistinct:<k>");
    bench->add_option("--trials", opt.trials, "trials per size");
    bench->add_option("--seed", opt.seed, "base seed");
    bench->add_option("--beta", opt.beta, "block-size exponent (rational or decimal)");
    bench->add_option("--delta", opt.delta, "hybrid band half-width (rational or decimal)");
    bench->add_option("--block", opt.block, "partition block size");
    bench->add_flag("--three-way", opt.three_way, "three-way partitioning for momqms");
    bench->add_option("--side", opt.side, "smaller|larger mergesort side policy");
    bench->add_option("--out", opt.out_path, "CSV output path (default stdout)");

    bool quick = false;
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--quick", quick, "cap input sizes at 10^4");

    std::string in_path, out_path;
    auto* sf = app.add_subcommand("sort_file", "sort a file of newline-delimited integers");
    sf->add_option("input", in_path, "input path")->required();
    sf->add_option("output", out_path, "output path")->required();
    sf->add_option("--algo", opt.algo, "qms|qmqs|momqms|hqms");
    sf->add_option("--beta", opt.beta, "block-size exponent");
    sf->add_option("--delta", opt.delta, "hybrid band half-width");
    sf->add_option("--block", opt.block, "partition block size");
    sf->add_flag("--three-way", opt.three_way, "three-way partitioning for momqms");
    sf->add_option("--side", opt.side, "smaller|larger mergesort side policy");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) return run_bench(opt);
        if (verify->parsed()) return run_verify(quick);
        if (sf->parsed()) return run_sort_file(in_path, out_path, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
