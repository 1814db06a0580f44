#ifndef FREQPRED_TESTS_ORACLES_HPP
#define FREQPRED_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. Nothing here
// calls into the evaluation routes it is used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class factorial(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// (2i-2)! / (i! (i-1)!) evaluated at i = n + 1.
inline mpz_class catalan(long n) { return factorial(2 * n) / (factorial(n + 1) * factorial(n)); }

/// Probability of correctly predicting x_{k+1} with the frequent-outcome rule,
/// by enumerating every outcome sequence of length k + 1.
inline mpq_class accuracy_by_enumeration(long k, const mpq_class& theta) {
  mpq_class total = 0;
  const mpq_class q = 1 - theta;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (k + 1)); ++bits) {
    mpq_class weight = 1;
    long ones = 0;
    for (long t = 0; t <= k; ++t) {
      const bool one = (bits >> t) & 1u;
      weight *= one ? theta : q;
      if (t < k) ones += one;
    }
    const bool next_one = (bits >> k) & 1u;
    mpq_class correct;
    if (2 * ones > k) {
      correct = next_one ? 1 : 0;
    } else if (2 * ones < k) {
      correct = next_one ? 0 : 1;
    } else {
      correct = mpq_class(1, 2);
    }
    total += weight * correct;
  }
  return total;
}

/// Integer polynomials as dense coefficient vectors.
using Poly = std::vector<mpz_class>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly poly_add(Poly a, const Poly& b, const mpz_class& scale = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

inline Poly poly_pow(const Poly& base, long e) {
  Poly out{1};
  for (long i = 0; i < e; ++i) out = poly_mul(out, base);
  return out;
}

/// pi_{2a+1} expanded symbolically from
///   1 - sum_{i=1}^a C_{i-1} (t(1-t))^i - 2 C(2a,a) (t(1-t))^{a+1}
/// with plain polynomial multiplication.
inline Poly accuracy_polynomial(long a) {
  const Poly u{0, 1, -1};
  Poly p{1};
  for (long i = 1; i <= a; ++i) p = poly_add(p, poly_pow(u, i), -catalan(i - 1));
  p = poly_add(p, poly_pow(u, a + 1), -2 * binomial(2 * a, a));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

/// Composite Gauss-Legendre (5 point) quadrature on [lo, hi].
inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        int panels = 2000) {
  static const double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                              0.9061798459386640};
  static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                              0.2369268850561891, 0.2369268850561891};
  const double h = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (int i = 0; i < 5; ++i) sum += w[i] * f(mid + 0.5 * h * x[i]);
  }
  return sum * 0.5 * h;
}

inline double beta_density(double t, double a, double b) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp((a - 1) * std::log(t) + (b - 1) * std::log1p(-t) + std::lgamma(a + b) -
                  std::lgamma(a) - std::lgamma(b));
}

/// E[f(theta)] for theta ~ beta(a, b), integrating over s with theta =
/// sin^2(s); the substitution removes the endpoint singularity when a or b
/// is below one.
inline double beta_expectation(const std::function<double(double)>& f, double a, double b) {
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  auto integrand = [&](double s) {
    const double sn = std::sin(s);
    const double cs = std::cos(s);
    if (sn <= 0.0 || cs <= 0.0) return 0.0;
    const double t = sn * sn;
    // density(t) dt = t^{a-1} (1-t)^{b-1} * 2 sin cos ds / B(a,b)
    const double log_w = (2 * a - 1) * std::log(sn) + (2 * b - 1) * std::log(cs) + log_norm;
    return f(t) * 2.0 * std::exp(log_w);
  };
  return integrate(integrand, 0.0, std::acos(0.0));
}

}  // namespace oracle

#endif  // FREQPRED_TESTS_ORACLES_HPP
