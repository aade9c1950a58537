#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "viz/graph.hpp"
#include "viz/rng.hpp"

namespace viz {

// Fixed default seed for every seeded subcommand; never time-based.
inline constexpr std::uint64_t kDefaultSeed = 1963;

// Largest factor order the sweep will hand to the exact solver, and the
// largest product order it will solve for the Vizing check.
inline constexpr int kSweepFactorCap = 60;
inline constexpr int kSweepProductCap = 64;

enum class ExperimentMode { Dryer, CorollarySweep, ExhaustivePairs };

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::Dryer;
    int n = 0;                // DRYER graph order
    int n_lo = 0, n_hi = 0;   // COROLLARY_SWEEP range of |H|
    double p = 0.5;
    double epsilon = 0.5;
    int trials = 1;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;  // 1 = serial reference path; >1 = OpenMP with that many threads
};

struct DryerRow {
    int n = 0;
    double p = 0, epsilon = 0;
    int t = 0, trials = 0, successes = 0;
    double phat = 0, wilson_lo = 0, wilson_hi = 0;
    std::uint64_t seed = 0;
};

struct CorollaryRow {
    int trial = 0;
    int h_order = 0, g_order = 0;
    double p = 0;
    int gamma_g = 0, gamma_h = 0;
    bool condition_holds = false;
    bool vizing_checked = false;
    bool vizing_holds = false;
    bool skipped = false;  // empty admissible |G| interval; zeroed in CSV
    std::uint64_t seed = 0;
};

struct ExhaustiveRow {
    std::string g_id, h_id;  // graph6
    int gamma_g = 0, gamma_h = 0, gamma_prod = 0;
    bool vizing = false, suen_tarr = false, condition = false;
    std::string engine_outcome;  // trace outcome, or "N/A" when the theorem condition fails
    bool audit_ok = true;        // audit verdict for engine runs (not a CSV column)
};

struct ExhaustiveSummary {
    long pairs = 0;
    long vizing_violations = 0;
    long suen_tarr_violations = 0;
    long condition_pairs = 0;
    long audit_failures = 0;
    std::map<std::string, long> outcome_counts;
};

struct ExhaustiveResult {
    std::vector<ExhaustiveRow> rows;
    ExhaustiveSummary summary;
};

// t = ceil((1+epsilon) * log_q n) with q = 1/(1-p); requires p in (0,1).
// (The source lemma admits p = 0, where log_q degenerates; rejected here.)
int dryer_set_size(int n, double p, double epsilon);

// uniform random t-subset of 0..n-1 (partial Fisher-Yates)
VertexSet sample_vertex_subset(Rng& rng, int n, int t);

std::pair<double, double> wilson_interval(int successes, int trials);

// One aggregate row over cfg.trials independent trials; each trial samples
// G(n,p) and a uniform t-subset from its own (seed, trial) stream, so the
// result is identical for any jobs value.
DryerRow dryer_probability(const ExperimentConfig& cfg);

std::vector<CorollaryRow> corollary_sweep(const ExperimentConfig& cfg);

// condition-holding fraction per |H| bucket: h_order -> (holds, total)
std::map<int, std::pair<long, long>> corollary_bucket_fractions(const std::vector<CorollaryRow>& rows);

// all 2^C(n,2) labeled graphs for n = 1..max_n (max_n <= 5)
std::vector<Graph> all_labeled_graphs_up_to(int max_n);

// Every ordered corpus pair with product order <= 32: full pair report plus
// the block-engine outcome (run and audited when the theorem condition
// holds).
ExhaustiveResult exhaustive_pairs(const std::vector<Graph>& corpus, int jobs = 1);

// CSV emitters; header row first, floats with 6 decimal places, bools as 0/1
std::string dryer_csv(const DryerRow& row);
std::string corollary_csv(const std::vector<CorollaryRow>& rows);
std::string exhaustive_csv(const std::vector<ExhaustiveRow>& rows);

}  // namespace viz
