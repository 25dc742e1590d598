// Command-line frontend over the C API.
//
//   sofia mine       --measure delta -L 100 data.dat
//   sofia mine-theta --measure delta --theta 2 data.dat
//   sofia baseline   --measure delta -L 100 data.dat
//   sofia measures   --alpha 0.9 data.dat
//   sofia bench      --sample-fraction 0.5 --repeats 5 data.dat
//
// Exit codes: 0 ok, 1 parse error, 2 invalid flags, 3 oracle guard exceeded.

#include <sofia/sofia.h>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitParse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct DatasetDeleter {
    void operator()(sofia_dataset* ds) const { sofia_dataset_free(ds); }
};
struct ResultDeleter {
    void operator()(sofia_result* r) const { sofia_result_free(r); }
};
using DatasetPtr = std::unique_ptr<sofia_dataset, DatasetDeleter>;
using ResultPtr = std::unique_ptr<sofia_result, ResultDeleter>;

struct RunConfig {
    std::string input;
    std::string command;
    sofia_measure measure = SOFIA_MEASURE_DELTA;
    std::optional<std::size_t> limit;
    std::optional<double> theta;
    double theta_min = 0.0;
    sofia_order order = SOFIA_ORDER_ASCENDING_SUPPORT;
    double alpha = 0.9;
    bool with_bounds = false;
    bool verbose = false;
    std::string output;
    std::vector<double> fractions;
    std::size_t repeats = 5;
    std::uint64_t seed = 1;
};

class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

int exit_code_for(sofia_status s)
{
    switch (s) {
    case SOFIA_OK:
        return 0;
    case SOFIA_ERR_PARSE:
        return kExitParse;
    case SOFIA_ERR_INVALID_ARGUMENT:
        return kExitUsage;
    case SOFIA_ERR_ORACLE_GUARD:
        return kExitGuard;
    case SOFIA_ERR_INTERNAL:
        break;
    }
    return 4;
}

void check(sofia_status s)
{
    if (s != SOFIA_OK) {
        throw CommandError(exit_code_for(s), sofia_last_error());
    }
}

std::string number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

DatasetPtr load(const RunConfig& cfg)
{
    sofia_dataset* ds = nullptr;
    check(sofia_dataset_load(cfg.input.c_str(), &ds));
    return DatasetPtr(ds);
}

void write_rows(std::ostream& out, const sofia_result* result, bool bounds, bool exact)
{
    const std::size_t n = sofia_result_size(result);
    for (std::size_t i = 0; i < n; ++i) {
        sofia_pattern p{};
        check(sofia_result_pattern(result, i, &p));
        for (std::size_t j = 0; j < p.n_items; ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << p.items[j];
        }
        out << '\t' << p.support << '\t' << number(p.measure);
        if (bounds) {
            out << '\t' << number(p.stability_lower) << '\t' << number(p.stability_upper) << '\t'
                << number(p.robustness_lower) << '\t' << number(p.robustness_upper);
        }
        if (exact) {
            out << '\t' << number(p.exact_stability) << '\t' << number(p.exact_robustness);
        }
        out << '\n';
    }
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void run_mining(const RunConfig& cfg, std::ostream& out)
{
    const std::string& cmd = cfg.command;
    if (cmd == "mine" && (!cfg.limit || cfg.theta)) {
        throw CommandError(kExitUsage, "mine takes -L and no --theta");
    }
    if (cmd == "mine-theta" && (!cfg.theta || cfg.limit)) {
        throw CommandError(kExitUsage, "mine-theta takes --theta and no -L");
    }
    if (cmd == "baseline" && (!cfg.limit || cfg.theta)) {
        throw CommandError(kExitUsage, "baseline takes -L (the number of patterns) and no --theta");
    }
    if (cmd == "measures" && (cfg.limit || cfg.theta)) {
        throw CommandError(kExitUsage, "measures takes neither -L nor --theta");
    }

    DatasetPtr ds = load(cfg);
    if (cmd == "measures" && sofia_dataset_transactions(ds.get()) > 25) {
        throw CommandError(kExitGuard, "dataset too large for exact oracle");
    }

    const auto start = Clock::now();
    sofia_result* raw = nullptr;
    if (cmd == "mine") {
        check(sofia_mine_top(ds.get(), cfg.measure, cfg.order, *cfg.limit, cfg.theta_min, &raw));
    } else if (cmd == "mine-theta") {
        check(sofia_mine_threshold(ds.get(), cfg.measure, cfg.order, *cfg.theta, &raw));
    } else if (cmd == "baseline") {
        check(sofia_baseline_top(ds.get(), cfg.measure, *cfg.limit, &raw));
    } else {
        check(sofia_enumerate(ds.get(), cfg.measure, &raw));
    }
    ResultPtr result(raw);
    const double ms = elapsed_ms(start);

    const bool exact = cmd == "measures";
    if (cfg.with_bounds) {
        check(sofia_result_compute_bounds(result.get(), ds.get(), cfg.alpha));
    }
    if (exact) {
        check(sofia_result_compute_exact(result.get(), ds.get(), cfg.alpha));
    }
    write_rows(out, result.get(), cfg.with_bounds, exact);
    out << "# theta_final=" << number(sofia_result_theta(result.get()))
        << " patterns=" << sofia_result_size(result.get()) << " elapsed_ms=" << number(ms)
        << '\n';
    if (cfg.verbose) {
        std::cerr << "# preimage_evaluations=" << sofia_result_preimage_evaluations(result.get())
                  << " max_patterns=" << sofia_result_max_patterns(result.get());
        if (cfg.with_bounds) {
            std::cerr << " clamped_lower_bounds=" << sofia_result_clamped_bounds(result.get());
        }
        std::cerr << '\n';
    }
}

// Times the adaptive miner on prefixes of seeded permutations of the input.
void run_bench(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.theta) {
        throw CommandError(kExitUsage, "bench takes -L, not --theta");
    }
    if (cfg.repeats == 0) {
        throw CommandError(kExitUsage, "--repeats must be at least 1");
    }
    std::vector<double> fractions = cfg.fractions;
    if (fractions.empty()) {
        fractions = {0.25, 0.5, 0.75, 1.0};
    }
    for (double f : fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw CommandError(kExitUsage, "sample fractions must lie in (0, 1]");
        }
    }
    const std::size_t limit = cfg.limit.value_or(1000);

    DatasetPtr ds = load(cfg);
    const std::size_t n = sofia_dataset_transactions(ds.get());
    std::map<double, double> mean_by_fraction;
    for (double f : fractions) {
        const auto count = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(f * static_cast<double>(n) - 1e-9)));
        std::vector<double> times;
        for (std::size_t r = 0; r < cfg.repeats; ++r) {
            sofia_dataset* raw_sub = nullptr;
            check(sofia_dataset_permuted_prefix(ds.get(), cfg.seed + r, count, &raw_sub));
            DatasetPtr sub(raw_sub);
            sofia_result* raw = nullptr;
            const auto start = Clock::now();
            check(sofia_mine_top(sub.get(), cfg.measure, cfg.order, limit, cfg.theta_min, &raw));
            times.push_back(elapsed_ms(start));
            sofia_result_free(raw);
        }
        double mean = 0.0;
        for (double t : times) {
            mean += t;
        }
        mean /= static_cast<double>(times.size());
        double var = 0.0;
        for (double t : times) {
            var += (t - mean) * (t - mean);
        }
        const double sd =
            times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) : 0.0;
        mean_by_fraction[f] = mean;
        out << number(f) << '\t' << number(mean) << '\t' << number(sd) << '\n';
    }
    out << "# L=" << limit << " repeats=" << cfg.repeats << " seed=" << cfg.seed
        << " transactions=" << n;
    if (mean_by_fraction.count(1.0) && mean_by_fraction.count(0.5) && mean_by_fraction[0.5] > 0) {
        out << " ratio_1.0_over_0.5=" << number(mean_by_fraction[1.0] / mean_by_fraction[0.5]);
    }
    out << '\n';
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    static const std::map<std::string, sofia_measure> measures{
        {"delta", SOFIA_MEASURE_DELTA},
        {"cosine", SOFIA_MEASURE_COSINE},
        {"support", SOFIA_MEASURE_SUPPORT}};
    static const std::map<std::string, sofia_order> orders{
        {"ascending", SOFIA_ORDER_ASCENDING_SUPPORT},
        {"descending", SOFIA_ORDER_DESCENDING_SUPPORT},
        {"input", SOFIA_ORDER_INPUT}};

    sub->add_option("input", cfg.input, "FIMI transaction file")->required();
    sub->add_option("--measure", cfg.measure, "delta | cosine | support")
        ->transform(CLI::CheckedTransformer(measures, CLI::ignore_case));
    sub->add_option("--order", cfg.order, "projection chain: ascending | descending | input")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
    sub->add_option("-L,--limit", cfg.limit, "maximal number of patterns kept per step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--theta", cfg.theta, "fixed threshold: keep measure > theta");
    sub->add_option("--alpha", cfg.alpha, "transaction retention probability for robustness")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_flag("--with-bounds", cfg.with_bounds,
                  "append stability and robustness bound columns");
    sub->add_flag("-v,--verbose", cfg.verbose, "print run counters to stderr");
    sub->add_option("-o,--output", cfg.output, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Top closed itemsets under projection-antimonotonic measures"};
    app.require_subcommand(1);
    app.require_subcommand(1);
    RunConfig cfg;

    auto* mine = app.add_subcommand("mine", "adaptive top-L mining");
    add_common(mine, cfg);
    mine->add_option("--theta-min", cfg.theta_min, "starting threshold");
    auto* mine_theta = app.add_subcommand("mine-theta", "fixed-threshold mining");
    add_common(mine_theta, cfg);
    auto* baseline = app.add_subcommand("baseline", "enumerate all closed itemsets, then keep the top L");
    add_common(baseline, cfg);
    auto* measures = app.add_subcommand("measures",
                                        "every closed itemset with bounds and exact stability/robustness");
    add_common(measures, cfg);
    auto* bench = app.add_subcommand("bench", "runtime over dataset fractions");
    add_common(bench, cfg);
    bench->add_option("--sample-fraction", cfg.fractions, "fraction(s) of transactions to keep")
        ->delimiter(',');
    bench->add_option("--repeats", cfg.repeats, "permutations per fraction");
    bench->add_option("--seed", cfg.seed, "permutation seed");
    bench->add_option("--theta-min", cfg.theta_min, "starting threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        std::ostringstream buffer;
        if (cfg.command == "bench") {
            run_bench(cfg, buffer);
        } else {
            run_mining(cfg, buffer);
        }
        if (cfg.output.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) {
                throw CommandError(kExitUsage, "cannot write '" + cfg.output + "'");
            }
            file << buffer.str();
        }
    } catch (const CommandError& e) {
        std::cerr << "sofia: " << e.what() << '\n';
        return e.code();
    }
    return 0;
}
