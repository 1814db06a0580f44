#ifndef FREQPRED_PREDICTION_HPP
#define FREQPRED_PREDICTION_HPP

#include <string_view>
#include <variant>
#include <vector>

#include "freqpred/accuracy.hpp"
#include "freqpred/rational.hpp"

namespace freqpred {

/// Triangular array phi_{k,n}: the probability of predicting a one for
/// x_{k+1} after observing n ones among the first k outcomes.
class PredictionArray {
 public:
  /// Validates that row k has k + 1 entries, each in [0, 1].
  explicit PredictionArray(std::vector<std::vector<Rational>> rows);

  long k_max() const { return static_cast<long>(rows_.size()) - 1; }
  const std::vector<Rational>& row(long k) const;
  const Rational& at(long k, long n) const;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  friend bool operator==(const PredictionArray&, const PredictionArray&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Sufficient statistic (k, n): n ones observed in k trials.
struct CountStatistic {
  long k;
  long n;

  CountStatistic(long trials, long ones);
};

/// Raised when every atom of a discrete prior gives the observed count zero
/// likelihood.
class ImpossibleEvidence : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Distribution of theta: a beta(alpha, beta) law or a finite set of atoms.
class Prior {
 public:
  struct Beta {
    Rational alpha;
    Rational beta;
  };
  struct Atom {
    Rational theta;
    Rational weight;
  };
  using Discrete = std::vector<Atom>;

  static Prior beta(Rational alpha, Rational beta);
  /// Weights must be non-negative and sum to 1, exactly or within 1e-12 (in
  /// which case they are rescaled to sum to 1 exactly).
  static Prior discrete(std::vector<Atom> atoms);
  static Prior point_mass(Rational theta) { return discrete({{std::move(theta), 1}}); }

  /// "beta:a,b" or "discrete:t1=p1,t2=p2,..."; numbers as in parse_rational.
  static Prior parse(std::string_view spec);

  bool is_beta() const { return std::holds_alternative<Beta>(kind_); }
  const Beta& as_beta() const { return std::get<Beta>(kind_); }
  const Discrete& as_discrete() const { return std::get<Discrete>(kind_); }

  /// Invariant under theta -> 1 - theta.
  bool symmetric() const;
  /// P(theta != 1/2) > 0.
  bool nondegenerate() const;
  /// Symmetric and nondegenerate: the outcomes form an almost-uniform series.
  bool almost_uniform() const { return symmetric() && nondegenerate(); }

  Rational mean() const;

 private:
  explicit Prior(std::variant<Beta, Discrete> kind) : kind_(std::move(kind)) {}
  std::variant<Beta, Discrete> kind_;
};

/// Deterministic except at ties: 0 below the midpoint, 1 above, 1/2 at
/// n = k/2. Row 0 is {1/2}.
PredictionArray frequent_outcome_array(long k_max);

/// (1 - theta)(1 - phi) + theta phi.
Rational conditional_accuracy(const Rational& phi, const Theta& theta);

/// E[theta | n ones in k trials].
Rational posterior_mean(const Prior& prior, const CountStatistic& stat);

/// Posterior probability that predicting one with probability phi is right.
/// The accuracy is affine in theta, so this is the conditional accuracy at
/// the posterior mean.
Rational posterior_correct_probability(const Rational& phi, const Prior& prior,
                                       const CountStatistic& stat);

/// Bayes-optimal array under 0-1 loss: back the outcome with the larger
/// posterior mean, 1/2 when the posterior mean is exactly 1/2.
PredictionArray optimal_array(const Prior& prior, long k_max);

/// cov(x_i, x_j) for i != j, which equals var(theta) under the prior.
Rational prior_covariance(const Prior& prior);

}  // namespace freqpred

#endif  // FREQPRED_PREDICTION_HPP
