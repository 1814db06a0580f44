#include "freqpred/combinatorics.hpp"

#include <cmath>
#include <string>

namespace freqpred {

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

Integer catalan(long n) {
  if (n < 0) throw DomainError("catalan: n must be non-negative");
  Integer c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

std::vector<Integer> catalan_sequence(long count) {
  std::vector<Integer> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  out.emplace_back(1);
  // C_{n+1} = C_n * 2(2n+1) / (n+2)
  for (long n = 0; n + 1 < count; ++n) {
    Integer next = out.back() * static_cast<unsigned long>(2 * (2 * n + 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(n + 2));
    out.push_back(std::move(next));
  }
  return out;
}

Integer w_coefficient(long i, long j) {
  if (i < 1) throw DomainError("w_coefficient: i must be positive");
  if (j < 0 || j > i) return 0;
  Integer w = binomial(i, j) * catalan(i - 1);
  return (j % 2 == 0) ? w : Integer(-w);
}

Integer alpha_coefficient(long a, long t) {
  if (a < 0) throw DomainError("alpha_coefficient: a must be non-negative");
  if (t < 1 || t > a + 2)
    throw DomainError("alpha_coefficient: t=" + std::to_string(t) + " outside 1.." +
                      std::to_string(a + 2));
  Integer sum = 0;
  for (long i = 1; i <= a; ++i) sum += w_coefficient(i, a + t - i);
  sum += 2 * (a + 1) * w_coefficient(a + 1, t - 1);
  if (a == 0 && t == 1) sum -= 1;
  return sum;
}

std::vector<Integer> alpha_row(long a) {
  if (a < 0) throw DomainError("alpha_row: a must be non-negative");
  const auto cat = catalan_sequence(a + 1);

  // pascal[i][j] = C(i, j) for i <= a + 1
  std::vector<std::vector<Integer>> pascal(static_cast<std::size_t>(a + 2));
  pascal[0] = {1};
  for (long i = 1; i <= a + 1; ++i) {
    auto& cur = pascal[static_cast<std::size_t>(i)];
    const auto& prev = pascal[static_cast<std::size_t>(i - 1)];
    cur.resize(static_cast<std::size_t>(i + 1));
    cur.front() = 1;
    cur.back() = 1;
    for (long j = 1; j < i; ++j)
      cur[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)];
  }
  auto w = [&](long i, long j) -> Integer {
    if (j < 0 || j > i) return 0;
    Integer v = pascal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                cat[static_cast<std::size_t>(i - 1)];
    return (j % 2 == 0) ? v : Integer(-v);
  };

  std::vector<Integer> row;
  row.reserve(static_cast<std::size_t>(a + 2));
  for (long t = 1; t <= a + 2; ++t) {
    Integer sum = 0;
    // W_{i,a+t-i} vanishes unless a + t - i <= i
    for (long i = std::max(1L, (a + t + 1) / 2); i <= a; ++i) sum += w(i, a + t - i);
    sum += 2 * (a + 1) * w(a + 1, t - 1);
    row.push_back(std::move(sum));
  }
  if (a == 0) row[0] -= 1;
  return row;
}

CoefficientTable CoefficientTable::build(long a_max) {
  CoefficientTable table;
  for (long a = 0; a <= a_max; ++a) table.insert(a, alpha_row(a));
  return table;
}

void CoefficientTable::insert(long a, std::vector<Integer> row) {
  if (a < 0) throw DomainError("CoefficientTable: negative row index");
  if (static_cast<long>(row.size()) != a + 2)
    throw DomainError("CoefficientTable: row " + std::to_string(a) + " must have " +
                      std::to_string(a + 2) + " entries");
  Integer sum = 0;
  for (const auto& v : row) sum += v;
  if (sum != -1)
    throw DomainError("CoefficientTable: row " + std::to_string(a) + " sums to " +
                      sum.get_str() + ", expected -1");
  rows_[a] = std::move(row);
}

const std::vector<Integer>& CoefficientTable::row(long a) const {
  auto it = rows_.find(a);
  if (it == rows_.end()) throw DomainError("CoefficientTable: no row " + std::to_string(a));
  return it->second;
}

CoefficientCache& CoefficientCache::instance() {
  static CoefficientCache cache;
  return cache;
}

std::shared_ptr<const std::vector<Integer>> CoefficientCache::row(long a) {
  if (a < 0) throw DomainError("CoefficientCache: negative row index");
  std::lock_guard lock(mutex_);
  while (static_cast<long>(rows_.size()) <= a)
    rows_.push_back(std::make_shared<const std::vector<Integer>>(
        alpha_row(static_cast<long>(rows_.size()))));
  return rows_[static_cast<std::size_t>(a)];
}

long CoefficientCache::max_cached() const {
  std::lock_guard lock(mutex_);
  return static_cast<long>(rows_.size()) - 1;
}

double catalan_gf(double z) {
  if (!(z >= 0.0 && z <= 0.25)) throw DomainError("catalan_gf: z outside [0, 1/4]");
  return 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * z));
}

double catalan_gf(const Rational& z) {
  if (z < 0 || z > Rational(1, 4)) throw DomainError("catalan_gf: z outside [0, 1/4]");
  // 1 - 4z is formed exactly so that z = 1/4 lands on sqrt(0).
  Rational disc = 1 - 4 * z;
  return 2.0 / (1.0 + std::sqrt(to_double(disc)));
}

}  // namespace freqpred
