#include "freqpred/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <thread>

namespace freqpred {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

unsigned worker_count(unsigned requested, long replications) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<long>(n, replications));
}

// Calls body(begin, end, acc) over contiguous blocks of [0, total) and
// returns the per-block accumulators in block order.
template <typename Acc, typename Body>
std::vector<Acc> run_blocks(long total, unsigned workers, const Acc& init, Body body) {
  std::vector<Acc> accs(workers, init);
  std::vector<std::thread> pool;
  const long chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const long begin = std::min<long>(total, w * chunk);
    const long end = std::min<long>(total, begin + chunk);
    if (workers == 1) {
      body(begin, end, accs[w]);
    } else {
      pool.emplace_back([&, w, begin, end] { body(begin, end, accs[w]); });
    }
  }
  for (auto& t : pool) t.join();
  return accs;
}

double plugin_std_error(long hits, long trials) {
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace

std::mt19937_64 replication_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix64(mix64(seed) + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double sample_theta(const Prior& prior, std::mt19937_64& rng) {
  if (prior.is_beta()) {
    const auto& b = prior.as_beta();
    std::gamma_distribution<double> ga(to_double(b.alpha), 1.0);
    std::gamma_distribution<double> gb(to_double(b.beta), 1.0);
    const double x = ga(rng);
    const double y = gb(rng);
    // Both gammas underflow to zero only for tiny shape parameters.
    if (x + y == 0.0) return uniform01(rng) < to_double(b.alpha / (b.alpha + b.beta)) ? 1.0 : 0.0;
    return x / (x + y);
  }
  const auto& atoms = prior.as_discrete();
  const double u = uniform01(rng);
  double cumulative = 0.0;
  for (const auto& atom : atoms) {
    cumulative += to_double(atom.weight);
    if (u < cumulative) return to_double(atom.theta);
  }
  return to_double(atoms.back().theta);
}

SimulationReport simulate_accuracy(const SimulationConfig& config, const PredictionArray& array) {
  if (config.horizon < 1) throw DomainError("simulate_accuracy: horizon must be at least 1");
  if (config.replications < 1)
    throw DomainError("simulate_accuracy: replications must be at least 1");
  if (array.k_max() < config.horizon - 1)
    throw DomainError("simulate_accuracy: prediction array covers rows 0.." +
                      std::to_string(array.k_max()) + " but the horizon needs 0.." +
                      std::to_string(config.horizon - 1));
  if (const double* fixed = std::get_if<double>(&config.theta_source))
    if (!(*fixed >= 0.0 && *fixed <= 1.0))
      throw DomainError("simulate_accuracy: theta outside [0, 1]");

  const long horizon = config.horizon;
  std::vector<std::vector<double>> phi(static_cast<std::size_t>(horizon));
  for (long k = 0; k < horizon; ++k)
    for (const auto& entry : array.row(k)) phi[static_cast<std::size_t>(k)].push_back(to_double(entry));

  struct Counts {
    std::vector<long> hits;
    std::vector<long> ones;
  };
  const Counts init{std::vector<long>(static_cast<std::size_t>(horizon)),
                    std::vector<long>(static_cast<std::size_t>(horizon))};

  auto body = [&](long begin, long end, Counts& acc) {
    for (long r = begin; r < end; ++r) {
      auto rng = replication_stream(config.seed, static_cast<std::uint64_t>(r));
      const double theta = std::holds_alternative<double>(config.theta_source)
                               ? std::get<double>(config.theta_source)
                               : sample_theta(std::get<Prior>(config.theta_source), rng);
      long n = 0;
      for (long k = 0; k < horizon; ++k) {
        const double p = phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
        bool predict_one;
        if (p <= 0.0) {
          predict_one = false;
        } else if (p >= 1.0) {
          predict_one = true;
        } else {
          predict_one = uniform01(rng) < p;
        }
        const bool outcome = uniform01(rng) < theta;
        if (predict_one == outcome) ++acc.hits[static_cast<std::size_t>(k)];
        if (outcome) {
          ++acc.ones[static_cast<std::size_t>(k)];
          ++n;
        }
      }
    }
  };

  const auto blocks =
      run_blocks(config.replications, worker_count(config.threads, config.replications), init, body);

  SimulationReport report;
  report.per_step.resize(static_cast<std::size_t>(horizon));
  for (long k = 0; k < horizon; ++k) {
    auto& step = report.per_step[static_cast<std::size_t>(k)];
    step.k = k;
    step.trials = config.replications;
    for (const auto& b : blocks) {
      step.hits += b.hits[static_cast<std::size_t>(k)];
      step.ones += b.ones[static_cast<std::size_t>(k)];
    }
    step.estimate = static_cast<double>(step.hits) / static_cast<double>(step.trials);
    step.std_error = plugin_std_error(step.hits, step.trials);
  }
  return report;
}

CovarianceEstimate simulate_covariance(const Prior& prior, long i, long j, long replications,
                                       std::uint64_t seed, unsigned threads) {
  if (i == j) throw DomainError("simulate_covariance: trial indices must differ");
  if (i < 1 || j < 1) throw DomainError("simulate_covariance: trial indices start at 1");
  if (replications < 2) throw DomainError("simulate_covariance: need at least 2 replications");

  // cells[2x + y] counts replications with (x_i, x_j) = (x, y)
  using Cells = std::array<long, 4>;
  auto body = [&](long begin, long end, Cells& acc) {
    for (long r = begin; r < end; ++r) {
      auto rng = replication_stream(seed, static_cast<std::uint64_t>(r));
      const double theta = sample_theta(prior, rng);
      // Outcomes are iid given theta, so only the two requested trials are drawn.
      const bool first = uniform01(rng) < theta;
      const bool second = uniform01(rng) < theta;
      const bool xi = i < j ? first : second;
      const bool xj = i < j ? second : first;
      ++acc[static_cast<std::size_t>(2 * xi + xj)];
    }
  };
  Cells cells{};
  for (const auto& b : run_blocks(replications, worker_count(threads, replications), Cells{}, body))
    for (std::size_t c = 0; c < 4; ++c) cells[c] += b[c];

  const double R = static_cast<double>(replications);
  const double mean_x = static_cast<double>(cells[2] + cells[3]) / R;
  const double mean_y = static_cast<double>(cells[1] + cells[3]) / R;
  double sum_z = 0.0;
  std::array<double, 4> z{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      z[static_cast<std::size_t>(2 * x + y)] = (x - mean_x) * (y - mean_y);
      sum_z += static_cast<double>(cells[static_cast<std::size_t>(2 * x + y)]) *
               z[static_cast<std::size_t>(2 * x + y)];
    }
  const double mean_z = sum_z / R;
  double ss = 0.0;
  for (std::size_t c = 0; c < 4; ++c)
    ss += static_cast<double>(cells[c]) * (z[c] - mean_z) * (z[c] - mean_z);

  CovarianceEstimate est;
  est.replications = replications;
  est.value = sum_z / (R - 1.0);
  est.std_error = std::sqrt(ss / (R - 1.0) / R);
  return est;
}

}  // namespace freqpred
