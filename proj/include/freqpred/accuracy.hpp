#ifndef FREQPRED_ACCURACY_HPP
#define FREQPRED_ACCURACY_HPP

// Accuracy of the frequent-outcome predictor at a fixed long-run proportion.
//
// pi_k(theta) is the probability that the prediction of x_{k+1}, made from
// the first k outcomes by backing whichever outcome has occurred more often
// (fair coin on ties), is correct when the outcomes are iid Bernoulli(theta).
// It is a polynomial in theta, constant on plateau pairs:
//   pi_0 = 1/2,  pi_{2a+1} = pi_{2a+2} = pi_{2a} + H_a.
//
// Five exact evaluation routes are provided and agree exactly:
//   direct      sum over n of the per-step accuracy times Bin(n | k, theta)
//   t_table     the triangular T_{k,n} recursion with tie-doubling weights
//   recursive   1/2 + H_0 + ... + H_a
//   condensed   1 - sum C_{i-1} u^i - 2 C(2a,a) u^{a+1},  u = theta(1-theta)
//   expanded    1 - theta - sum alpha_{a,i} theta^{a+i}

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freqpred/rational.hpp"

namespace freqpred {

/// A probability in [0, 1], held exactly.
class Theta {
 public:
  explicit Theta(Rational value);
  explicit Theta(long num, long den = 1) : Theta(make_rational(num, den)) {}

  /// Parses "p/q" or a decimal literal; throws ParseError / DomainError.
  static Theta parse(std::string_view text);

  const Rational& value() const { return value_; }
  Theta complement() const { return Theta(1 - value_); }
  double to_double() const { return freqpred::to_double(value_); }

 private:
  Rational value_;
};

/// Index a of the plateau pair {2a+1, 2a+2} containing k >= 1.
long plateau_index(long k);

Rational bin_pmf(long n, long k, const Theta& theta);
double bin_pmf(long n, long k, double theta);

/// Accuracy of the frequent-outcome prediction after observing n ones in k
/// trials: 1 - theta below the midpoint, theta above it, 1/2 at a tie. k = 0
/// counts as a tie.
Rational per_step_accuracy(long k, long n, const Theta& theta);

/// H_a(theta) = C(2a,a) (theta^a (1-theta)^a / 2 - 2 theta^{a+1} (1-theta)^{a+1}).
/// Non-negative on [0, 1].
Rational h_function(long a, const Theta& theta);

Rational accuracy_direct(long k, const Theta& theta);
Rational accuracy_t_table(long k, const Theta& theta);
Rational accuracy_recursive(long k, const Theta& theta);
/// Requires k >= 1.
Rational accuracy_condensed(long k, const Theta& theta);
/// Requires k >= 1.
Rational accuracy_expanded(long k, const Theta& theta);

/// Row k of the T-table, T_{k,0} .. T_{k,k}; the row sums to pi_k.
std::vector<Rational> t_table_row(long k, const Theta& theta);

enum class AccuracyPath { direct, t_table, recursive, condensed, expanded };

inline constexpr AccuracyPath kAllPaths[] = {AccuracyPath::direct, AccuracyPath::t_table,
                                             AccuracyPath::recursive, AccuracyPath::condensed,
                                             AccuracyPath::expanded};

std::string_view path_name(AccuracyPath path);
/// Accepts "direct", "ttable", "t_table", "recursive", "condensed", "expanded".
AccuracyPath parse_path(std::string_view name);

Rational accuracy(AccuracyPath path, long k, const Theta& theta);

/// Floating-point pi_k(theta). Evaluates the condensed form as a nested
/// (Horner) product in u = theta(1 - theta) with term ratios in place of the
/// raw Catalan numbers, so every step adds non-negative quantities. Agrees
/// with the exact routes to 1e-12 and does not overflow for large k.
double accuracy(long k, double theta);

/// max(theta, 1 - theta), the limit of pi_k as k grows.
Rational ideal_accuracy(const Theta& theta);
double ideal_accuracy(double theta);

struct CurvePoint {
  long k;
  Rational pi;
  Rational ideal;
  Rational gap;
};

/// pi_k, the ideal accuracy and their difference for k = 1..k_max.
std::vector<CurvePoint> accuracy_curve(const Theta& theta, long k_max);

/// Smallest k with pi_k(theta) >= target, or nullopt when no k reaches it.
/// Scans plateau pairs, adding one H_a per step. Because pi_k < max(theta,
/// 1 - theta) for every k when theta is not 0, 1/2 or 1, a target equal to
/// the ideal accuracy is also unreachable there.
std::optional<long> threshold_k(const Theta& theta, const Rational& target);

/// Expanded accuracy polynomial for the plateau pair {2a+1, 2a+2}:
///   constant + linear theta + sum_i tail[i-1] theta^{a+i},  tail[i-1] = -alpha_{a,i}.
/// For a = 0 the theta^1 tail entry is folded into `linear` (which becomes -2)
/// and left as zero in `tail`.
struct PiPolynomial {
  long a = 0;
  Integer constant = 1;
  Integer linear = -1;
  std::vector<Integer> tail;

  /// Dense coefficients c_0 .. c_{2a+2} of theta^0 .. theta^{2a+2}.
  std::vector<Integer> coefficients() const;
  Rational evaluate(const Rational& theta) const;
};

PiPolynomial pi_polynomial(long a);

}  // namespace freqpred

#endif  // FREQPRED_ACCURACY_HPP
