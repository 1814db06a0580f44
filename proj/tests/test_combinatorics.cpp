#include <doctest.h>

#include <cmath>
#include <thread>

#include "freqpred/combinatorics.hpp"
#include "oracles.hpp"
#include "table1.hpp"

using namespace freqpred;

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(6, 3) == 4 * catalan(3));
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial matches factorial oracle") {
  for (long n = 0; n <= 60; ++n)
    for (long k = -2; k <= n + 2; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
  CHECK_THROWS_AS(catalan(-1), DomainError);
}

TEST_CASE("catalan equals factorial oracle and the segregated binomial form") {
  const auto seq = catalan_sequence(31);
  for (long n = 0; n <= 30; ++n) {
    CHECK(catalan(n) == oracle::catalan(n));
    CHECK(catalan(n) == binomial(2 * n, n) - binomial(2 * n, n + 1));
    CHECK(seq[static_cast<std::size_t>(n)] == catalan(n));
  }
}

TEST_CASE("w_coefficient") {
  CHECK(w_coefficient(2, 1) == -2);
  CHECK(w_coefficient(3, 0) == 2);
  CHECK(w_coefficient(2, 3) == 0);
  CHECK(w_coefficient(2, -1) == 0);
  CHECK_THROWS_AS(w_coefficient(0, 0), DomainError);
}

TEST_CASE("anti-diagonal W sums vanish except at t = 1") {
  for (long t = 1; t <= 50; ++t) {
    Integer sum = 0;
    for (long i = 1; i <= t; ++i) sum += w_coefficient(i, t - i);
    CHECK(sum == (t == 1 ? 1 : 0));
  }
}

TEST_CASE("alpha_coefficient spot values") {
  CHECK(alpha_coefficient(0, 1) == 1);
  CHECK(alpha_coefficient(0, 2) == -2);
  CHECK(alpha_coefficient(3, 2) == -154);
  CHECK(alpha_coefficient(10, 12) == -369512);
  CHECK(alpha_coefficient(5, 1) == 462);
  CHECK_THROWS_AS(alpha_coefficient(3, 0), DomainError);
  CHECK_THROWS_AS(alpha_coefficient(3, 6), DomainError);
}

TEST_CASE("alpha rows: row sum, leading coefficient, symbolic expansion") {
  for (long a = 0; a <= 10; ++a) {
    const auto row = alpha_row(a);
    REQUIRE(row.size() == static_cast<std::size_t>(a + 2));
    Integer sum = 0;
    for (long t = 1; t <= a + 2; ++t) {
      CHECK(row[static_cast<std::size_t>(t - 1)] == alpha_coefficient(a, t));
      sum += row[static_cast<std::size_t>(t - 1)];
    }
    CHECK(sum == -1);
    CHECK(row[0] == binomial(2 * a + 1, a));

    // 1 - theta - sum alpha theta^{a+i} against plain polynomial algebra
    const auto poly = oracle::accuracy_polynomial(a);
    REQUIRE(poly.size() == static_cast<std::size_t>(2 * a + 3));
    CHECK(poly[0] == 1);
    for (long d = 1; d <= 2 * a + 2; ++d) {
      Integer expected = 0;
      if (d == 1) expected -= 1;
      if (d >= a + 1) expected -= row[static_cast<std::size_t>(d - a - 1)];
      CHECK(poly[static_cast<std::size_t>(d)] == expected);
    }
  }
}

TEST_CASE("alpha matches the published table except the (5, 1) misprint") {
  const auto& table = published::alpha_table();
  int checked = 0;
  for (long a = 0; a <= 10; ++a) {
    const auto& printed = table[static_cast<std::size_t>(a)];
    const auto row = alpha_row(a);
    REQUIRE(printed.size() == row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (a == 5 && i == 0) continue;
      CHECK(row[i] == Integer(std::to_string(printed[i])));
      ++checked;
    }
  }
  CHECK(checked == 76);

  long long printed_row5 = 0;
  for (auto v : table[5]) printed_row5 += v;
  CHECK(printed_row5 == -37);  // 426 breaks the row-sum identity
  CHECK(alpha_row(5)[0] == 462);
}

TEST_CASE("CoefficientTable validates rows") {
  auto table = CoefficientTable::build(4);
  CHECK(table.rows().size() == 5);
  CHECK(table.row(3)[4] == 40);
  CHECK_THROWS_AS(table.row(9), DomainError);
  CHECK_THROWS_AS(table.insert(1, {Integer(3), Integer(-8)}), DomainError);
  CHECK_THROWS_AS(table.insert(1, {Integer(3), Integer(-8), Integer(5)}), DomainError);
  table.insert(1, {Integer(3), Integer(-8), Integer(4)});
}

TEST_CASE("CoefficientCache fills idempotently under concurrent access") {
  auto& cache = CoefficientCache::instance();
  std::vector<std::shared_ptr<const std::vector<Integer>>> seen(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < seen.size(); ++t)
    pool.emplace_back([&, t] { seen[t] = cache.row(40 + static_cast<long>(t % 3)); });
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < seen.size(); ++t)
    CHECK(*seen[t] == alpha_row(40 + static_cast<long>(t % 3)));
  CHECK(cache.max_cached() >= 42);
  CHECK(cache.row(41).get() == cache.row(41).get());
}

TEST_CASE("alpha rows stay cheap for large a") {
  const auto row = alpha_row(300);
  Integer sum = 0;
  for (const auto& v : row) sum += v;
  CHECK(sum == -1);
  CHECK(row[0] == binomial(601, 300));
}

TEST_CASE("catalan_gf") {
  CHECK(catalan_gf(0.0) == 1.0);
  CHECK(catalan_gf(0.25) == 2.0);
  CHECK(catalan_gf(make_rational(1, 4)) == 2.0);
  CHECK_THROWS_AS(catalan_gf(0.3), DomainError);
  CHECK_THROWS_AS(catalan_gf(-0.01), DomainError);
  CHECK_THROWS_AS(catalan_gf(make_rational(26, 100)), DomainError);

  // partial-sum oracle of sum C_k z^k
  double partial = 0.0;
  double zk = 1.0;
  for (long k = 0; k <= 200; ++k) {
    partial += oracle::catalan(k).get_d() * zk;
    zk *= 0.21;
  }
  CHECK(std::abs(catalan_gf(0.21) - partial) < 1e-9);
}

TEST_CASE("Catalan asymptotic ratio") {
  const long a = 2000;
  // C_a overflows a double; compare logarithms.
  const Integer c = catalan(a);
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  const double log_c = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  const double log_approx = a * std::log(4.0) - 0.5 * std::log(M_PI * std::pow(a, 3.0));
  CHECK(std::abs(std::exp(log_c - log_approx) - 1.0) < 0.01);
}
