#include "hgraphon/montecarlo.hpp"

#include "hgraphon/hamdec.hpp"
#include "hgraphon/rng.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace hgraphon {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial_index) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ n);
  h = mix64(h ^ trial_index);
  return h;
}

namespace {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs one per-trial predicate for indices [0, trials) across `workers`
// threads. Results land in a trial-indexed vector, so aggregation is
// independent of scheduling.
template <class Fn>
std::vector<char> parallel_trials(int trials, int workers, Fn&& fn) {
  std::vector<char> results(trials, 0);
  if (workers <= 1) {
    for (int i = 0; i < trials; ++i) results[i] = fn(i) ? 1 : 0;
    return results;
  }
  std::atomic<int> next{0};
  auto body = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= trials) return;
      results[i] = fn(i) ? 1 : 0;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const StepGraphon& w, const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
  if (cfg.sizes.empty()) throw std::invalid_argument("run_experiment: sizes must be nonempty");
  for (int n : cfg.sizes)
    if (n < 1) throw std::invalid_argument("run_experiment: sizes must be >= 1");

  const int workers = resolve_workers(cfg.workers);
  std::vector<ExperimentRow> rows;
  rows.reserve(cfg.sizes.size());

  for (int n : cfg.sizes) {
    auto start = std::chrono::steady_clock::now();
    auto results = parallel_trials(cfg.trials, workers, [&](int i) {
      SampledGraph g = sample(w, n, trial_seed(cfg.master_seed, n, i));
      return has_hamiltonian_decomposition(directed_version(g));
    });
    auto stop = std::chrono::steady_clock::now();

    ExperimentRow row;
    row.n = n;
    row.trials = cfg.trials;
    for (char r : results) row.successes += r;
    row.p_hat = static_cast<double>(row.successes) / cfg.trials;
    auto [lo, hi] = wilson_interval(row.successes, cfg.trials, 1.96);
    row.ci_low = lo;
    row.ci_high = hi;
    row.wall_time_s = std::chrono::duration<double>(stop - start).count();
    rows.push_back(row);
  }
  return rows;
}

std::pair<double, double> wilson_interval(long successes, long trials, double z) {
  if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  const double p = static_cast<double>(successes) / trials;
  const double nn = static_cast<double>(trials);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = p + z2 / (2 * nn);
  const double rad = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  double lo = (center - rad) / denom;
  double hi = (center + rad) / denom;
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return {lo, hi};
}

double deviation_probability(const StepGraphon& w, int n, int trials, double eps,
                             std::uint64_t master_seed) {
  if (eps <= 0) throw std::invalid_argument("deviation_probability: eps must be positive");
  if (n < 1 || trials < 1) throw std::invalid_argument("deviation_probability: bad counts");

  const RatVector target = concentration(w);
  const Rat eps2 = rational_from_double(eps) * rational_from_double(eps);
  int exceed = 0;
  for (int i = 0; i < trials; ++i) {
    SampledGraph g = sample_coordinates(w, n, trial_seed(master_seed, n, i));
    RatVector diff = empirical_concentration(g) - target;
    Rat norm2 = 0;
    for (Eigen::Index k = 0; k < diff.size(); ++k) norm2 += diff(k) * diff(k);
    if (norm2 > eps2) ++exceed;
  }
  return static_cast<double>(exceed) / trials;
}

std::string format_sig6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_experiment_csv(
    std::ostream& out,
    const std::vector<std::pair<std::string, std::vector<ExperimentRow>>>& results,
    bool include_timing) {
  out << "graphon,n,trials,successes,p_hat,ci_low,ci_high,wall_time_s\n";
  for (const auto& [name, rows] : results) {
    for (const auto& r : rows) {
      out << name << ',' << r.n << ',' << r.trials << ',' << r.successes << ','
          << format_sig6(r.p_hat) << ',' << format_sig6(r.ci_low) << ','
          << format_sig6(r.ci_high) << ',' << format_sig6(include_timing ? r.wall_time_s : 0.0)
          << '\n';
    }
  }
}

}  // namespace hgraphon
