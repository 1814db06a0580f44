#include "freqpred/prediction.hpp"

#include <map>
#include <string>

namespace freqpred {

namespace {

void check_probability(const Rational& p, const char* what) {
  if (p < 0 || p > 1) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

PredictionArray::PredictionArray(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("PredictionArray: needs at least row 0");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != k + 1)
      throw DomainError("PredictionArray: row " + std::to_string(k) + " must have " +
                        std::to_string(k + 1) + " entries");
    for (const auto& phi : rows_[k]) check_probability(phi, "PredictionArray entry");
  }
}

const std::vector<Rational>& PredictionArray::row(long k) const {
  if (k < 0 || k > k_max()) throw DomainError("PredictionArray: row out of range");
  return rows_[static_cast<std::size_t>(k)];
}

const Rational& PredictionArray::at(long k, long n) const {
  const auto& r = row(k);
  if (n < 0 || n > k) throw DomainError("PredictionArray: column out of range");
  return r[static_cast<std::size_t>(n)];
}

CountStatistic::CountStatistic(long trials, long ones) : k(trials), n(ones) {
  if (k < 0 || n < 0 || n > k) throw DomainError("CountStatistic: need 0 <= n <= k");
}

Prior Prior::beta(Rational alpha, Rational beta) {
  if (alpha <= 0 || beta <= 0) throw DomainError("beta prior: parameters must be positive");
  return Prior(Beta{std::move(alpha), std::move(beta)});
}

Prior Prior::discrete(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("discrete prior: no atoms");
  Rational total = 0;
  for (const auto& atom : atoms) {
    check_probability(atom.theta, "discrete prior atom");
    if (atom.weight < 0) throw DomainError("discrete prior: negative weight");
    total += atom.weight;
  }
  if (abs(total - 1) > Rational(1, 1000000000000))
    throw DomainError("discrete prior: weights sum to " + format_exact(total) + ", not 1");
  if (total != 1)
    for (auto& atom : atoms) atom.weight /= total;
  return Prior(std::move(atoms));
}

Prior Prior::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("prior must look like beta:a,b or discrete:t=p,...");
  auto kind = trim(spec.substr(0, colon));
  auto body = spec.substr(colon + 1);
  if (kind == "beta") {
    auto parts = split(body, ',');
    if (parts.size() != 2) throw ParseError("beta prior needs two parameters");
    return beta(parse_rational(parts[0]), parse_rational(parts[1]));
  }
  if (kind == "discrete") {
    std::vector<Atom> atoms;
    for (auto item : split(body, ',')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("discrete atom must be theta=weight");
      atoms.push_back({parse_rational(trim(item.substr(0, eq))),
                       parse_rational(trim(item.substr(eq + 1)))});
    }
    return discrete(std::move(atoms));
  }
  throw ParseError("unknown prior kind '" + std::string(kind) + "'");
}

bool Prior::symmetric() const {
  if (is_beta()) return as_beta().alpha == as_beta().beta;
  std::map<Rational, Rational> mass;
  for (const auto& atom : as_discrete()) mass[atom.theta] += atom.weight;
  for (const auto& [theta, weight] : mass) {
    if (weight == 0) continue;
    auto mirror = mass.find(1 - theta);
    if (mirror == mass.end() || mirror->second != weight) return false;
  }
  return true;
}

bool Prior::nondegenerate() const {
  if (is_beta()) return true;
  for (const auto& atom : as_discrete())
    if (atom.weight > 0 && atom.theta != Rational(1, 2)) return true;
  return false;
}

Rational Prior::mean() const {
  if (is_beta()) return as_beta().alpha / (as_beta().alpha + as_beta().beta);
  Rational m = 0;
  for (const auto& atom : as_discrete()) m += atom.weight * atom.theta;
  return m;
}

PredictionArray frequent_outcome_array(long k_max) {
  if (k_max < 0) throw DomainError("frequent_outcome_array: k_max must be non-negative");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(k_max + 1));
  for (long k = 0; k <= k_max; ++k) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(k + 1));
    for (long n = 0; n <= k; ++n)
      row.emplace_back(2 * n < k ? Rational(0) : 2 * n > k ? Rational(1) : Rational(1, 2));
    rows.push_back(std::move(row));
  }
  return PredictionArray(std::move(rows));
}

Rational conditional_accuracy(const Rational& phi, const Theta& theta) {
  check_probability(phi, "phi");
  const Rational& p = theta.value();
  return (1 - p) * (1 - phi) + p * phi;
}

Rational posterior_mean(const Prior& prior, const CountStatistic& stat) {
  if (prior.is_beta()) {
    const auto& b = prior.as_beta();
    return (b.alpha + stat.n) / (b.alpha + b.beta + stat.k);
  }
  // The binomial coefficient is common to every atom and cancels.
  Rational evidence = 0;
  Rational weighted = 0;
  for (const auto& atom : prior.as_discrete()) {
    Rational like = atom.weight * pow(atom.theta, static_cast<unsigned long>(stat.n)) *
                    pow(Rational(1 - atom.theta), static_cast<unsigned long>(stat.k - stat.n));
    evidence += like;
    weighted += like * atom.theta;
  }
  if (evidence == 0)
    throw ImpossibleEvidence("posterior_mean: observed count has zero prior likelihood (k=" +
                             std::to_string(stat.k) + ", n=" + std::to_string(stat.n) + ")");
  return weighted / evidence;
}

Rational posterior_correct_probability(const Rational& phi, const Prior& prior,
                                       const CountStatistic& stat) {
  return conditional_accuracy(phi, Theta(posterior_mean(prior, stat)));
}

PredictionArray optimal_array(const Prior& prior, long k_max) {
  if (k_max < 0) throw DomainError("optimal_array: k_max must be non-negative");
  const Rational half(1, 2);
  std::vector<std::vector<Rational>> rows;
  for (long k = 0; k <= k_max; ++k) {
    std::vector<Rational> row;
    for (long n = 0; n <= k; ++n) {
      Rational m = posterior_mean(prior, CountStatistic(k, n));
      row.emplace_back(m > half ? Rational(1) : m < half ? Rational(0) : half);
    }
    rows.push_back(std::move(row));
  }
  return PredictionArray(std::move(rows));
}

Rational prior_covariance(const Prior& prior) {
  if (prior.is_beta()) {
    const auto& [a, b] = prior.as_beta();
    const Rational s = a + b;
    return a * b / (s * s * (s + 1));
  }
  Rational m1 = 0;
  Rational m2 = 0;
  for (const auto& atom : prior.as_discrete()) {
    m1 += atom.weight * atom.theta;
    m2 += atom.weight * atom.theta * atom.theta;
  }
  return m2 - m1 * m1;
}

}  // namespace freqpred
