#include "freqpred/accuracy.hpp"

#include <cmath>
#include <string>

#include "freqpred/combinatorics.hpp"

namespace freqpred {

namespace {

void require_k(long k, long min_k, const char* who) {
  if (k < min_k)
    throw DomainError(std::string(who) + ": k must be at least " + std::to_string(min_k));
}

// Exact Horner evaluation of sum_j coeffs[j] x^j.
Rational horner(const std::vector<Integer>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

Theta::Theta(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1)
    throw DomainError("theta must lie in [0, 1], got " + format_exact(value_));
}

Theta Theta::parse(std::string_view text) { return Theta(parse_rational(text)); }

long plateau_index(long k) {
  require_k(k, 1, "plateau_index");
  return (k + 1) / 2 - 1;
}

Rational bin_pmf(long n, long k, const Theta& theta) {
  if (k < 0 || n < 0 || n > k) throw DomainError("bin_pmf: need 0 <= n <= k");
  const Rational& p = theta.value();
  return Rational(binomial(k, n)) * pow(p, static_cast<unsigned long>(n)) *
         pow(Rational(1 - p), static_cast<unsigned long>(k - n));
}

double bin_pmf(long n, long k, double theta) {
  if (k < 0 || n < 0 || n > k) throw DomainError("bin_pmf: need 0 <= n <= k");
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("bin_pmf: theta outside [0, 1]");
  double log_c = std::lgamma(k + 1.0) - std::lgamma(n + 1.0) - std::lgamma(k - n + 1.0);
  return std::exp(log_c) * std::pow(theta, static_cast<double>(n)) *
         std::pow(1.0 - theta, static_cast<double>(k - n));
}

Rational per_step_accuracy(long k, long n, const Theta& theta) {
  if (k < 0 || n < 0 || n > k) throw DomainError("per_step_accuracy: need 0 <= n <= k");
  if (2 * n < k) return 1 - theta.value();
  if (2 * n > k) return theta.value();
  return Rational(1, 2);
}

Rational h_function(long a, const Theta& theta) {
  if (a < 0) throw DomainError("h_function: a must be non-negative");
  const Rational u = theta.value() * (1 - theta.value());
  const Rational ua = pow(u, static_cast<unsigned long>(a));
  return Rational(binomial(2 * a, a)) * (ua / 2 - 2 * ua * u);
}

Rational accuracy_direct(long k, const Theta& theta) {
  require_k(k, 0, "accuracy_direct");
  Rational sum = 0;
  for (long n = 0; n <= k; ++n) sum += per_step_accuracy(k, n, theta) * bin_pmf(n, k, theta);
  return sum;
}

std::vector<Rational> t_table_row(long k, const Theta& theta) {
  require_k(k, 0, "t_table_row");
  const Rational& p = theta.value();
  const Rational q = 1 - p;
  const Rational up_tie = 2 * p * p;    // weight leaving a tie towards more ones
  const Rational down_tie = 2 * q * q;  // weight leaving a tie towards more zeros

  std::vector<Rational> row{Rational(1, 2)};
  for (long r = 0; r < k; ++r) {
    // T_{r+1,m} = W->_{r,m-1} T_{r,m-1} + W<-_{r,m} T_{r,m}
    std::vector<Rational> next(static_cast<std::size_t>(r + 2));
    for (long m = 0; m <= r + 1; ++m) {
      Rational& cell = next[static_cast<std::size_t>(m)];
      if (m >= 1) {
        const long n = m - 1;
        cell += (2 * n == r ? up_tie : p) * row[static_cast<std::size_t>(n)];
      }
      if (m <= r) cell += (2 * m == r ? down_tie : q) * row[static_cast<std::size_t>(m)];
    }
    row = std::move(next);
  }
  return row;
}

Rational accuracy_t_table(long k, const Theta& theta) {
  Rational sum = 0;
  for (const auto& cell : t_table_row(k, theta)) sum += cell;
  return sum;
}

Rational accuracy_recursive(long k, const Theta& theta) {
  require_k(k, 0, "accuracy_recursive");
  Rational pi(1, 2);
  if (k == 0) return pi;
  const long a = plateau_index(k);
  for (long i = 0; i <= a; ++i) pi += h_function(i, theta);
  return pi;
}

Rational accuracy_condensed(long k, const Theta& theta) {
  require_k(k, 1, "accuracy_condensed");
  const long a = plateau_index(k);
  const Rational u = theta.value() * (1 - theta.value());
  // Coefficients of u^0 .. u^{a+1}: 0, C_0, .., C_{a-1}, 2 C(2a, a).
  std::vector<Integer> coeffs(static_cast<std::size_t>(a + 2));
  const auto cat = catalan_sequence(a);
  for (long i = 1; i <= a; ++i)
    coeffs[static_cast<std::size_t>(i)] = cat[static_cast<std::size_t>(i - 1)];
  coeffs[static_cast<std::size_t>(a + 1)] = 2 * binomial(2 * a, a);
  return 1 - horner(coeffs, u);
}

Rational accuracy_expanded(long k, const Theta& theta) {
  require_k(k, 1, "accuracy_expanded");
  const long a = plateau_index(k);
  const auto alphas = CoefficientCache::instance().row(a);
  const Rational& p = theta.value();
  // sum_i alpha_{a,i} theta^{a+i} = theta^{a+1} * sum_i alpha_{a,i} theta^{i-1}
  Rational tail = horner(*alphas, p) * pow(p, static_cast<unsigned long>(a + 1));
  return 1 - p - tail;
}

std::string_view path_name(AccuracyPath path) {
  switch (path) {
    case AccuracyPath::direct: return "direct";
    case AccuracyPath::t_table: return "ttable";
    case AccuracyPath::recursive: return "recursive";
    case AccuracyPath::condensed: return "condensed";
    case AccuracyPath::expanded: return "expanded";
  }
  return "unknown";
}

AccuracyPath parse_path(std::string_view name) {
  if (name == "direct") return AccuracyPath::direct;
  if (name == "ttable" || name == "t_table") return AccuracyPath::t_table;
  if (name == "recursive") return AccuracyPath::recursive;
  if (name == "condensed") return AccuracyPath::condensed;
  if (name == "expanded") return AccuracyPath::expanded;
  throw ParseError("unknown accuracy path '" + std::string(name) + "'");
}

Rational accuracy(AccuracyPath path, long k, const Theta& theta) {
  switch (path) {
    case AccuracyPath::direct: return accuracy_direct(k, theta);
    case AccuracyPath::t_table: return accuracy_t_table(k, theta);
    case AccuracyPath::recursive: return accuracy_recursive(k, theta);
    case AccuracyPath::condensed: return accuracy_condensed(k, theta);
    case AccuracyPath::expanded: return accuracy_expanded(k, theta);
  }
  throw DomainError("unknown accuracy path");
}

double accuracy(long k, double theta) {
  require_k(k, 0, "accuracy");
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("accuracy: theta outside [0, 1]");
  if (k == 0) return 0.5;
  const long a = plateau_index(k);
  const double u = theta * (1.0 - theta);
  // S = sum_{i=1}^{a+1} d_i u^i with d_i = C_{i-1} (i <= a), d_{a+1} = 2(a+1) C_a.
  // Nested as d_1 u (1 + r_1 u (1 + r_2 u (...))), r_i = d_{i+1} / d_i.
  double nested = 1.0;
  for (long i = a; i >= 1; --i) {
    double ratio = (i == a) ? 4.0 * (2.0 * a - 1.0)
                            : 2.0 * (2.0 * i - 1.0) / static_cast<double>(i + 1);
    nested = 1.0 + ratio * u * nested;
  }
  const double d1 = (a == 0) ? 2.0 : 1.0;
  return 1.0 - d1 * u * nested;
}

Rational ideal_accuracy(const Theta& theta) {
  const Rational& p = theta.value();
  return p > Rational(1, 2) ? p : Rational(1 - p);
}

double ideal_accuracy(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("ideal_accuracy: theta outside [0, 1]");
  return std::max(theta, 1.0 - theta);
}

std::vector<CurvePoint> accuracy_curve(const Theta& theta, long k_max) {
  require_k(k_max, 1, "accuracy_curve");
  const Rational ideal = ideal_accuracy(theta);
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(k_max));
  Rational pi(1, 2);
  for (long k = 1; k <= k_max; ++k) {
    if (k % 2 == 1) pi += h_function(plateau_index(k), theta);
    out.push_back({k, pi, ideal, ideal - pi});
  }
  return out;
}

std::optional<long> threshold_k(const Theta& theta, const Rational& target) {
  if (target < 0 || target > 1) throw DomainError("threshold_k: target outside [0, 1]");
  if (target <= Rational(1, 2)) return 0;
  const Rational& p = theta.value();
  if (p == 0 || p == 1) return 1;
  if (target >= ideal_accuracy(theta)) return std::nullopt;

  // pi_k < ideal strictly and converges to it, so the scan terminates.
  Rational pi(1, 2);
  for (long a = 0;; ++a) {
    pi += h_function(a, theta);
    if (pi >= target) return 2 * a + 1;
  }
}

std::vector<Integer> PiPolynomial::coefficients() const {
  std::vector<Integer> c(static_cast<std::size_t>(2 * a + 3));
  c[0] += constant;
  c[1] += linear;
  for (std::size_t i = 0; i < tail.size(); ++i) c[static_cast<std::size_t>(a) + 1 + i] += tail[i];
  return c;
}

Rational PiPolynomial::evaluate(const Rational& theta) const {
  return horner(coefficients(), theta);
}

PiPolynomial pi_polynomial(long a) {
  if (a < 0) throw DomainError("pi_polynomial: a must be non-negative");
  PiPolynomial poly;
  poly.a = a;
  const auto alphas = CoefficientCache::instance().row(a);
  for (const auto& alpha : *alphas) poly.tail.push_back(-alpha);
  if (a == 0) {
    poly.linear += poly.tail[0];
    poly.tail[0] = 0;
  }
  return poly;
}

}  // namespace freqpred
