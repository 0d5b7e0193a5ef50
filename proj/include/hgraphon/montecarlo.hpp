#pragma once

#include "hgraphon/graphon.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hgraphon {

struct ExperimentConfig {
  std::vector<int> sizes;
  int trials = 1000;
  std::uint64_t master_seed = 0;
  int workers = 0;  // 0 = hardware concurrency
};

struct ExperimentRow {
  int n = 0;
  int trials = 0;
  int successes = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
  double wall_time_s = 0;
};

// Stateless derivation of the per-trial stream seed from (master, n, trial
// index): three chained SplitMix64 finalizer applications. Bit-exact and
// documented so runs are reproducible across machines and worker counts.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial_index);

// For each n: `trials` independent draws, trial i seeded with
// trial_seed(master, n, i); a trial succeeds when the doubled sampled graph
// has a spanning cycle cover. Trials are scheduled across workers but the
// outcome vector is indexed by trial, so results do not depend on the
// worker count. Confidence intervals are Wilson at z = 1.96.
std::vector<ExperimentRow> run_experiment(const StepGraphon& w, const ExperimentConfig& cfg);

// Wilson score interval; z = 0 collapses to the point estimate.
std::pair<double, double> wilson_interval(long successes, long trials, double z);

// Fraction of trials whose empirical concentration deviates from x* by more
// than eps in Euclidean norm. Only coordinates are sampled (the statistic
// never looks at edges); the comparison is exact.
double deviation_probability(const StepGraphon& w, int n, int trials, double eps,
                             std::uint64_t master_seed);

// Six significant digits, no trailing-zero padding ("%.6g").
std::string format_sig6(double x);

// CSV per External Interfaces: one row per (graphon, n), stable order. The
// wall_time_s column reports 0 unless include_timing is set, so that the
// default output is byte-identical across runs and worker counts.
void write_experiment_csv(
    std::ostream& out,
    const std::vector<std::pair<std::string, std::vector<ExperimentRow>>>& results,
    bool include_timing);

}  // namespace hgraphon
