#ifndef FREQPRED_SIMULATOR_HPP
#define FREQPRED_SIMULATOR_HPP

// Seeded Monte Carlo oracle for the analytic accuracy and covariance results.
//
// Replication r draws from its own generator, seeded from (seed, r) alone, so
// a report depends only on the configuration and never on how replications
// are spread over threads. Aggregates are integer counts.

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "freqpred/prediction.hpp"

namespace freqpred {

struct SimulationConfig {
  /// Fixed theta, or a prior from which theta is redrawn per replication.
  std::variant<double, Prior> theta_source = 0.5;
  long horizon = 1;
  long replications = 1;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct StepEstimate {
  long k = 0;       // predicting x_{k+1} from the first k outcomes
  long hits = 0;    // correct predictions
  long trials = 0;  // replications
  long ones = 0;    // replications with x_{k+1} = 1
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/R), plug-in

  friend bool operator==(const StepEstimate&, const StepEstimate&) = default;
};

struct SimulationReport {
  std::vector<StepEstimate> per_step;  // k = 0 .. horizon-1

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// Generator for replication `index` of a run seeded with `seed`.
std::mt19937_64 replication_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng);

/// One draw of theta from the prior.
double sample_theta(const Prior& prior, std::mt19937_64& rng);

/// Runs the predictor described by `array` against simulated outcomes. Throws
/// DomainError when the array does not cover rows 0..horizon-1 or the
/// configuration is invalid.
SimulationReport simulate_accuracy(const SimulationConfig& config, const PredictionArray& array);

struct CovarianceEstimate {
  double value = 0.0;      // sample covariance, divisor R - 1
  double std_error = 0.0;  // standard error of the mean cross-product
  long replications = 0;
};

/// Sample covariance of (x_i, x_j), i != j, with theta drawn from the prior
/// in each replication and the two outcomes independent given theta.
CovarianceEstimate simulate_covariance(const Prior& prior, long i, long j, long replications,
                                       std::uint64_t seed, unsigned threads = 0);

}  // namespace freqpred

#endif  // FREQPRED_SIMULATOR_HPP
