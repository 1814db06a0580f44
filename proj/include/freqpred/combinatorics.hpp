#ifndef FREQPRED_COMBINATORICS_HPP
#define FREQPRED_COMBINATORICS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "freqpred/rational.hpp"

namespace freqpred {

/// C(n, k), zero-extended: returns 0 when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

/// n-th Catalan number, C(2n, n) / (n + 1).
Integer catalan(long n);

/// Catalan numbers C_0 .. C_{count-1}, built by the ratio recurrence.
std::vector<Integer> catalan_sequence(long count);

/// W_{i,j} = (-1)^j C(i, j) C_{i-1} for 0 <= j <= i, zero otherwise. These are
/// the coefficients of C_{i-1} (1 - t)^i in powers of t. Requires i >= 1.
Integer w_coefficient(long i, long j);

/// Integer coefficient alpha_{a,t} of theta^(a+t) in
///   pi_{2a+1}(theta) = 1 - theta - sum_{t=1}^{a+2} alpha_{a,t} theta^(a+t).
///
/// Computed from the W-sums
///   alpha_{a,t} = sum_{i=1}^{a} W_{i,a+t-i} + 2(a+1) W_{a+1,t-1}
/// with the a = 0, t = 1 entry reduced by one so that the linear term is the
/// same "-theta" for every a. Throws DomainError unless 1 <= t <= a + 2.
Integer alpha_coefficient(long a, long t);

/// All of alpha_{a,1} .. alpha_{a,a+2}. Uses a local Pascal triangle, so a
/// row costs O(a^2) big-integer additions.
std::vector<Integer> alpha_row(long a);

/// Rows of alpha coefficients keyed by a.
class CoefficientTable {
 public:
  CoefficientTable() = default;

  /// Table holding rows 0..a_max.
  static CoefficientTable build(long a_max);

  /// Stores a row after checking it has a + 2 entries summing to -1.
  void insert(long a, std::vector<Integer> row);

  bool contains(long a) const { return rows_.count(a) != 0; }
  const std::vector<Integer>& row(long a) const;
  const std::map<long, std::vector<Integer>>& rows() const { return rows_; }

 private:
  std::map<long, std::vector<Integer>> rows_;
};

/// Process-wide, lazily grown cache of alpha rows. Each row is computed at
/// most once; concurrent readers observe identical values.
class CoefficientCache {
 public:
  static CoefficientCache& instance();

  /// Row a, computing rows up to a on first request.
  std::shared_ptr<const std::vector<Integer>> row(long a);

  /// Largest a currently cached, or -1.
  long max_cached() const;

 private:
  mutable std::mutex mutex_;
  std::vector<std::shared_ptr<const std::vector<Integer>>> rows_;
};

/// Catalan generating function sum_k C_k z^k = 2 / (1 + sqrt(1 - 4z)),
/// defined on the closed convergence interval 0 <= z <= 1/4.
double catalan_gf(double z);
double catalan_gf(const Rational& z);

}  // namespace freqpred

#endif  // FREQPRED_COMBINATORICS_HPP
