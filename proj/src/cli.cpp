#include "freqpred/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include "freqpred/accuracy.hpp"
#include "freqpred/combinatorics.hpp"
#include "freqpred/prediction.hpp"
#include "freqpred/simulator.hpp"

namespace freqpred::cli {

namespace {

std::string decimal(const Rational& q, int digits) { return format_significant(q, digits); }

std::string decimal(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_significant(Rational(x), digits);
}

void check_digits(int digits) {
  if (digits < 1 || digits > 1000) throw DomainError("--digits must be between 1 and 1000");
}

int emit(const Table& table, const OutputEnvelope& env, std::ostream& out, std::ostream& err) {
  auto write = [&](std::ostream& os) {
    if (env.format == Format::csv) {
      write_csv(os, table);
    } else {
      write_json(os, table);
    }
    os.flush();
  };
  if (env.destination.empty()) {
    write(out);
    return out ? kExitOk : kExitError;
  }
  std::ofstream file(env.destination, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << env.destination << "' for writing\n";
    return kExitError;
  }
  write(file);
  if (!file) {
    err << "error: failed writing '" << env.destination << "'\n";
    return kExitError;
  }
  return kExitOk;
}

// Runs `build`, reporting library errors on `err`.
int guarded(std::ostream& err, const std::function<int()>& build) {
  try {
    return build();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace

Table coeffs_table(long a_max) {
  if (a_max < 0) throw DomainError("a_max must be non-negative");
  Table table;
  table.columns = {{"a", ColumnKind::integer},
                   {"i", ColumnKind::integer},
                   {"alpha", ColumnKind::integer},
                   {"note", ColumnKind::text}};
  const auto coeffs = CoefficientTable::build(a_max);
  for (const auto& [a, row] : coeffs.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string note;
      if (a == 5 && i == 0)
        note = "sometimes printed as 426 (digit transposition); the row-sum identity requires 462";
      table.add_row({std::to_string(a), std::to_string(i + 1), row[i].get_str(), note});
    }
  }
  return table;
}

Table accuracy_table(long k, const std::string& theta_text, const std::string& path_text,
                     int digits, bool& agree) {
  check_digits(digits);
  if (k < 0) throw DomainError("k must be non-negative");
  const Theta theta = Theta::parse(theta_text);
  const bool exact_input = is_fraction_syntax(theta_text);

  Table table;
  table.columns = {{"path", ColumnKind::text},   {"k", ColumnKind::integer},
                   {"theta", ColumnKind::text},  {"pi", ColumnKind::number},
                   {"exact", ColumnKind::text},  {"agree", ColumnKind::boolean}};

  std::vector<std::string> names;
  std::vector<Rational> values;
  std::optional<double> float_value;
  if (path_text == "all") {
    for (auto path : kAllPaths) {
      // The polynomial forms start at k = 1.
      if (k == 0 && (path == AccuracyPath::condensed || path == AccuracyPath::expanded)) continue;
      names.emplace_back(path_name(path));
      values.push_back(accuracy(path, k, theta));
    }
    if (!exact_input) float_value = accuracy(k, theta.to_double());
  } else {
    auto path = parse_path(path_text);
    names.emplace_back(path_name(path));
    values.push_back(accuracy(path, k, theta));
  }

  agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  if (float_value) agree = agree && std::abs(*float_value - to_double(values.front())) <= 1e-12;

  const std::string flag = agree ? "true" : "false";
  const std::string theta_exact = format_exact(theta.value());
  for (std::size_t i = 0; i < values.size(); ++i)
    table.add_row({names[i], std::to_string(k), theta_exact, decimal(values[i], digits),
                   format_exact(values[i]), flag});
  if (float_value)
    table.add_row({"float", std::to_string(k), theta_exact, decimal(*float_value, digits), "", flag});
  return table;
}

Table curve_table(const std::string& theta_text, long k_max, int digits) {
  check_digits(digits);
  const Theta theta = Theta::parse(theta_text);
  Table table;
  table.columns = {{"k", ColumnKind::integer},
                   {"pi_k", ColumnKind::number},
                   {"ideal", ColumnKind::number},
                   {"gap", ColumnKind::number}};
  for (const auto& point : accuracy_curve(theta, k_max))
    table.add_row({std::to_string(point.k), decimal(point.pi, digits), decimal(point.ideal, digits),
                   decimal(point.gap, digits)});
  return table;
}

Table threshold_table(const std::string& theta_text, const std::string& target_text) {
  const Theta theta = Theta::parse(theta_text);
  const Rational target = parse_rational(target_text);
  Table table;
  table.columns = {{"theta", ColumnKind::text}, {"target", ColumnKind::text}, {"k", ColumnKind::integer}};
  const auto k = threshold_k(theta, target);
  table.add_row({format_exact(theta.value()), format_exact(target),
                 k ? std::to_string(*k) : std::string("unreachable")});
  return table;
}

Table posterior_table(const std::string& prior_text, long k, long n, int digits) {
  check_digits(digits);
  const Prior prior = Prior::parse(prior_text);
  const CountStatistic stat(k, n);
  const Rational mean = posterior_mean(prior, stat);
  const Rational half(1, 2);
  const Rational phi = mean > half ? Rational(1) : mean < half ? Rational(0) : half;
  const Rational prob = posterior_correct_probability(phi, prior, stat);

  Table table;
  table.columns = {{"k", ColumnKind::integer},         {"n", ColumnKind::integer},
                   {"mean", ColumnKind::number},       {"mean_exact", ColumnKind::text},
                   {"phi", ColumnKind::text},          {"probability", ColumnKind::number},
                   {"probability_exact", ColumnKind::text}};
  table.add_row({std::to_string(k), std::to_string(n), decimal(mean, digits), format_exact(mean),
                 format_exact(phi), decimal(prob, digits), format_exact(prob)});
  return table;
}

Table simulate_table(const std::string& source, long k_max, long reps, std::uint64_t seed,
                     unsigned threads, int digits) {
  check_digits(digits);
  SimulationConfig config;
  config.horizon = k_max;
  config.replications = reps;
  config.seed = seed;
  config.threads = threads;
  std::optional<double> fixed;
  if (source.find(':') != std::string::npos) {
    config.theta_source = Prior::parse(source);
  } else {
    fixed = Theta::parse(source).to_double();
    config.theta_source = *fixed;
  }
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  const auto report = simulate_accuracy(config, frequent_outcome_array(k_max - 1));

  Table table;
  table.columns = {{"k", ColumnKind::integer},        {"hits", ColumnKind::integer},
                   {"trials", ColumnKind::integer},   {"estimate", ColumnKind::number},
                   {"stderr", ColumnKind::number},    {"analytic_pi", ColumnKind::number},
                   {"z", ColumnKind::number}};
  for (const auto& step : report.per_step) {
    std::string analytic;
    std::string z;
    if (fixed) {
      const double pi = accuracy(step.k, *fixed);
      analytic = decimal(pi, digits);
      const double diff = step.estimate - pi;
      if (step.std_error > 0.0) {
        z = decimal(diff / step.std_error, digits);
      } else {
        z = std::abs(diff) <= 1e-12 ? "0" : (diff > 0 ? "inf" : "-inf");
      }
    }
    table.add_row({std::to_string(step.k), std::to_string(step.hits), std::to_string(step.trials),
                   decimal(step.estimate, digits), decimal(step.std_error, digits), analytic, z});
  }
  return table;
}

int cmd_coeffs(long a_max, const OutputEnvelope& env, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return emit(coeffs_table(a_max), env, out, err); });
}

int cmd_accuracy(long k, const std::string& theta, const std::string& path,
                 const OutputEnvelope& env, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool agree = false;
    const Table table = accuracy_table(k, theta, path, env.digits, agree);
    const int status = emit(table, env, out, err);
    if (status != kExitOk) return status;
    if (!agree) {
      err << "error: accuracy paths disagree\n";
      return kExitDisagreement;
    }
    return kExitOk;
  });
}

int cmd_curve(const std::string& theta, long k_max, const OutputEnvelope& env, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] { return emit(curve_table(theta, k_max, env.digits), env, out, err); });
}

int cmd_threshold(const std::string& theta, const std::string& target, const OutputEnvelope& env,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return emit(threshold_table(theta, target), env, out, err); });
}

int cmd_posterior(const std::string& prior, long k, long n, const OutputEnvelope& env,
                  std::ostream& out, std::ostream& err) {
  return guarded(err,
                 [&] { return emit(posterior_table(prior, k, n, env.digits), env, out, err); });
}

int cmd_simulate(const std::string& source, long k_max, long reps, std::uint64_t seed,
                 unsigned threads, const OutputEnvelope& env, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    return emit(simulate_table(source, k_max, reps, seed, threads, env.digits), env, out, err);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact accuracy analysis of frequent-outcome prediction for binary sequences",
               "freqpred"};
  app.require_subcommand(1);

  OutputEnvelope env;
  std::string format = "csv";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", env.destination, "Write to this file instead of stdout");
    sub->add_option("--digits", env.digits, "Significant digits for decimal columns")
        ->capture_default_str();
  };

  long a_max = 10;
  auto* coeffs = app.add_subcommand("coeffs", "Expanded-polynomial coefficients alpha_{a,i}");
  coeffs->add_option("--a-max", a_max, "Largest a")->capture_default_str();
  add_common(coeffs);

  long k = 0;
  std::string theta;
  std::string path = "all";
  auto* acc = app.add_subcommand("accuracy", "Evaluate pi_k(theta)");
  acc->add_option("--k", k, "Number of observed trials")->required();
  acc->add_option("--theta", theta, "Long-run proportion, decimal or p/q")->required();
  acc->add_option("--path", path, "Evaluation route")
      ->check(CLI::IsMember({"direct", "ttable", "recursive", "condensed", "expanded", "all"}))
      ->capture_default_str();
  add_common(acc);

  long k_max = 20;
  auto* curve = app.add_subcommand("curve", "pi_k, ideal accuracy and gap for k = 1..k_max");
  curve->add_option("--theta", theta, "Long-run proportion, decimal or p/q")->required();
  curve->add_option("--k-max", k_max, "Largest k")->capture_default_str();
  add_common(curve);

  std::string target;
  auto* thr = app.add_subcommand("threshold", "Smallest k with pi_k(theta) >= target");
  thr->add_option("--theta", theta, "Long-run proportion, decimal or p/q")->required();
  thr->add_option("--target", target, "Target accuracy")->required();
  add_common(thr);

  std::string prior;
  long n = 0;
  auto* post = app.add_subcommand("posterior", "Posterior mean and optimal prediction");
  post->add_option("--prior", prior, "beta:a,b or discrete:t1=p1,t2=p2,...")->required();
  post->add_option("--k", k, "Number of observed trials")->required();
  post->add_option("--n", n, "Number of ones observed")->required();
  add_common(post);

  std::string source;
  long reps = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo accuracy of the frequent-outcome rule");
  sim->add_option("--source", source, "Fixed theta, or a prior spec as in posterior")->required();
  sim->add_option("--k-max", k_max, "Number of prediction steps")->capture_default_str();
  sim->add_option("--reps", reps, "Replications")->capture_default_str();
  sim->add_option("--seed", seed, "Master seed")->capture_default_str();
  sim->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_common(sim);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  env.format = format == "json" ? Format::json : Format::csv;

  if (coeffs->parsed()) return cmd_coeffs(a_max, env, out, err);
  if (acc->parsed()) return cmd_accuracy(k, theta, path, env, out, err);
  if (curve->parsed()) return cmd_curve(theta, k_max, env, out, err);
  if (thr->parsed()) return cmd_threshold(theta, target, env, out, err);
  if (post->parsed()) return cmd_posterior(prior, k, n, env, out, err);
  return cmd_simulate(source, k_max, reps, seed, threads, env, out, err);
}

}  // namespace freqpred::cli
