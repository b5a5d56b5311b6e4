// seqcoin: decide whether a coin's unknown heads probability lies below
// or above a threshold q, plus the fixed-sample baseline, bound
// calculators, and a Monte Carlo harness. See README.md for the output
// schemas.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqcoin/baseline.hpp"
#include "seqcoin/coinflipper.hpp"
#include "seqcoin/errors.hpp"
#include "seqcoin/montecarlo.hpp"
#include "seqcoin/predict.hpp"
#include "seqcoin/schedule.hpp"
#include "seqcoin/sources.hpp"

namespace {

using nlohmann::ordered_json;
using namespace seqcoin;

constexpr std::uint64_t kDefaultBudget = 1ull << 26;

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

struct SourceFlags {
  std::string p;
  std::uint64_t seed = 0;
  bool use_stdin = false;
  std::string file;

  void add_to(CLI::App& cmd) {
    CLI::Option* p_opt = cmd.add_option("--p", p, "synthetic coin bias, decimal in (0,1)");
    cmd.add_option("--seed", seed, "seed for the synthetic coin (with --p)")->needs(p_opt);
    cmd.add_flag("--stdin", use_stdin, "read a recorded H/T/1/0 stream from stdin");
    cmd.add_option("--file", file, "read a recorded H/T/1/0 stream from a file");
  }

  std::unique_ptr<BernoulliSource> make() const {
    int given = (!p.empty() ? 1 : 0) + (use_stdin ? 1 : 0) + (!file.empty() ? 1 : 0);
    if (given != 1) {
      throw DomainError("exactly one source required: --p [--seed], --stdin, or --file");
    }
    if (!p.empty()) {
      double bias = parse_probability(p).convert_to<double>();
      return std::make_unique<SyntheticSource>(bias, seed);
    }
    if (use_stdin) {
      return std::make_unique<RecordedSource>(RecordedSource::from_stream(std::cin, "recorded(stdin)"));
    }
    return std::make_unique<RecordedSource>(RecordedSource::from_file(file));
  }
};

ordered_json rounds_json(const Transcript& transcript) {
  ordered_json rounds = ordered_json::array();
  for (const RoundOutcome& round : transcript.rounds) {
    rounds.push_back({{"i", round.index},
                      {"epsilon", round.epsilon_string()},
                      {"k", round.samples},
                      {"heads", round.heads},
                      {"verdict", std::string(to_string(round.verdict))}});
  }
  return rounds;
}

ordered_json decision_json(Decision decision) {
  ordered_json out;
  out["decision"] = std::string(to_string(decision));
  if (decision == Decision::kUndecided) {
    out["meaning"] = nullptr;
  } else {
    out["meaning"] = std::string(decision_meaning(decision));
  }
  return out;
}

int run_decide(const std::string& q, const std::string& delta, const SourceFlags& source_flags,
               std::uint64_t budget, bool with_rounds) {
  Probability q_prob = Probability::from_decimal(q);
  Confidence delta_conf = Confidence::from_decimal(delta);
  std::unique_ptr<BernoulliSource> source = source_flags.make();

  Transcript transcript;
  std::string note;
  try {
    transcript = run_coinflipper(*source, q_prob, delta_conf, budget);
  } catch (BudgetOverflowError& err) {
    // The schedule ran past its round cap; report what completed.
    transcript = err.partial ? *err.partial : Transcript{};
    transcript.decision = Decision::kUndecided;
    note = err.what();
  }

  ordered_json out = decision_json(transcript.decision);
  out["total_flips"] = transcript.total_flips;
  out["iterations"] = transcript.iterations();
  if (!note.empty()) out["note"] = note;
  if (with_rounds) out["rounds"] = rounds_json(transcript);
  std::cout << out.dump() << "\n";
  return transcript.decision == Decision::kUndecided ? 2 : 0;
}

int run_baseline(const std::string& q, const std::string& epsilon, const std::string& delta,
                 const SourceFlags& source_flags) {
  Probability q_prob = Probability::from_decimal(q);
  Probability eps_prob = Probability::from_decimal(epsilon);
  Confidence delta_conf = Confidence::from_decimal(delta);
  std::unique_ptr<BernoulliSource> source = source_flags.make();

  BaselineResult result = run_known_gap(*source, q_prob, eps_prob, delta_conf);
  ordered_json out = decision_json(result.decision);
  out["total_flips"] = result.flips;
  out["heads"] = result.heads;
  std::cout << out.dump() << "\n";
  return 0;
}

// Fixed CSV schema; see README.md.
const char* kCsvHeader =
    "p,q,delta,trials,wrong,undecided,error_rate,wilson_hi99,mean_iters,sem_iters,"
    "mean_flips,sem_flips,d,iter_bound,flips_bound";

std::string stats_csv_row(const montecarlo::TrialConfig& config,
                          const montecarlo::TrialStats& stats) {
  std::string row;
  row += config.p_text + "," + config.q + "," + config.delta + ",";
  row += std::to_string(stats.trials) + "," + std::to_string(stats.wrong) + "," +
         std::to_string(stats.undecided) + ",";
  row += format_double(stats.error_rate) + "," + format_double(stats.error_rate_wilson_hi) + ",";
  row += format_double(stats.mean_iterations) + "," + format_double(stats.sem_iterations) + ",";
  row += format_double(stats.mean_flips) + "," + format_double(stats.sem_flips) + ",";
  row += std::to_string(stats.d) + "," + format_double(stats.iteration_bound) + "," +
         format_double(stats.flips_upper_bound);
  return row;
}

ordered_json stats_json(const montecarlo::TrialConfig& config,
                        const montecarlo::TrialStats& stats) {
  ordered_json out;
  out["p"] = config.p_text;
  out["q"] = config.q;
  out["delta"] = config.delta;
  out["algorithm"] =
      config.algorithm == montecarlo::Algorithm::kCoinFlipper ? "coinflipper" : "baseline";
  if (config.algorithm == montecarlo::Algorithm::kBaseline) out["epsilon"] = config.epsilon;
  out["trials"] = stats.trials;
  out["seed"] = config.master_seed;
  if (config.budget) {
    out["budget"] = *config.budget;
  } else {
    out["budget"] = nullptr;
  }
  out["wrong"] = stats.wrong;
  out["undecided"] = stats.undecided;
  out["decisions"] = stats.decisions();
  out["error_rate"] = stats.error_rate;
  out["no_decisions"] = stats.no_decisions;
  out["wilson_hi99"] = stats.error_rate_wilson_hi;
  out["mean_iterations"] = stats.mean_iterations;
  out["sem_iterations"] = stats.sem_iterations;
  out["mean_flips"] = stats.mean_flips;
  out["sem_flips"] = stats.sem_flips;
  if (stats.d > 0) {
    out["d"] = stats.d;
    out["iteration_bound"] = stats.iteration_bound;
    out["flips_upper_bound"] = stats.flips_upper_bound;
  } else {
    out["d"] = nullptr;
    out["iteration_bound"] = nullptr;
    out["flips_upper_bound"] = nullptr;
  }
  return out;
}

struct SimulateFlags {
  std::string p, q, delta;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string format = "json";
  int workers = 0;
  std::string algorithm = "coinflipper";
  std::string epsilon;

  void add_to(CLI::App& cmd, bool lists) {
    const char* p_help = lists ? "coin bias values, comma-separated decimals in (0,1)"
                               : "coin bias, decimal in (0,1)";
    const char* q_help = lists ? "threshold values, comma-separated" : "threshold q, decimal in (0,1)";
    const char* d_help = lists ? "failure probability values, comma-separated"
                               : "failure probability delta, decimal in (0,1)";
    cmd.add_option("--p", p, p_help)->required();
    cmd.add_option("--q", q, q_help)->required();
    cmd.add_option("--delta", delta, d_help)->required();
    cmd.add_option("--trials", trials, "trials per configuration")->required();
    cmd.add_option("--seed", seed, "master seed; trial t derives from (seed, t)")->required();
    cmd.add_option("--budget", budget, "max flips per trial (default: unbounded)");
    cmd.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd.add_option("--workers", workers, "worker threads (0 = all cores)")
        ->envname("SEQCOIN_WORKERS");
    cmd.add_option("--algorithm", algorithm, "coinflipper or baseline")
        ->check(CLI::IsMember({"coinflipper", "baseline"}));
    cmd.add_option("--epsilon", epsilon, "known gap, required with --algorithm baseline");
  }

  montecarlo::TrialConfig config_for(const std::string& p_text, const std::string& q_text,
                                     const std::string& delta_text) const {
    montecarlo::TrialConfig config;
    config.p = parse_probability(p_text).convert_to<double>();
    config.p_text = p_text;
    config.q = q_text;
    config.delta = delta_text;
    config.trials = trials;
    config.master_seed = seed;
    config.budget = budget;
    config.algorithm = algorithm == "baseline" ? montecarlo::Algorithm::kBaseline
                                               : montecarlo::Algorithm::kCoinFlipper;
    config.epsilon = epsilon;
    return config;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

int run_simulate(const SimulateFlags& flags) {
  montecarlo::TrialConfig config = flags.config_for(flags.p, flags.q, flags.delta);
  montecarlo::TrialStats stats = montecarlo::run_trials(config, flags.workers);
  if (flags.format == "csv") {
    std::cout << kCsvHeader << "\n" << stats_csv_row(config, stats) << "\n";
  } else {
    std::cout << stats_json(config, stats).dump() << "\n";
  }
  return 0;
}

int run_sweep(const SimulateFlags& flags) {
  std::vector<montecarlo::TrialConfig> grid;
  for (const std::string& p_text : split_list(flags.p)) {
    for (const std::string& q_text : split_list(flags.q)) {
      for (const std::string& delta_text : split_list(flags.delta)) {
        grid.push_back(flags.config_for(p_text, q_text, delta_text));
      }
    }
  }
  std::vector<montecarlo::TrialStats> rows = montecarlo::sweep(grid, flags.workers);
  if (flags.format == "csv") {
    std::cout << kCsvHeader << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::cout << stats_csv_row(grid[i], rows[i]) << "\n";
    }
  } else {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(stats_json(grid[i], rows[i]));
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int run_predict(const std::string& p, const std::string& q, const std::string& delta,
                int tail_terms) {
  DifficultyReport report = predict_report(Probability::from_decimal(p),
                                           Probability::from_decimal(q),
                                           Confidence::from_decimal(delta), tail_terms);
  ordered_json out;
  out["d"] = report.d;
  out["iteration_bound"] = report.iteration_bound;
  out["flips_upper_bound"] = report.flips_upper_bound;
  out["series"] = {{"c1", report.series.c1}, {"c2", report.series.c2}, {"c3", report.series.c3}};
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential tester for an unknown coin bias against a threshold q"};
  app.require_subcommand(1);

  // decide
  CLI::App* decide = app.add_subcommand("decide", "sequential test: is p < q or p > q?");
  std::string q, delta, epsilon;
  std::uint64_t budget = kDefaultBudget;
  bool with_rounds = false;
  SourceFlags decide_source;
  decide->add_option("--q", q, "threshold q, decimal in (0,1)")->required();
  decide->add_option("--delta", delta, "failure probability, decimal in (0,1)")->required();
  decide->add_option("--budget", budget, "max total flips before giving up")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  decide->add_flag("--transcript", with_rounds, "include per-round detail in the output");
  decide_source.add_to(*decide);

  // baseline
  CLI::App* baseline = app.add_subcommand("baseline", "fixed-sample test with a known gap");
  SourceFlags baseline_source;
  baseline->add_option("--q", q, "threshold q, decimal in (0,1)")->required();
  baseline->add_option("--epsilon", epsilon, "known gap, decimal in (0, min{q,1-q})")->required();
  baseline->add_option("--delta", delta, "failure probability, decimal in (0,1)")->required();
  baseline_source.add_to(*baseline);

  // simulate / sweep
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo trials at one configuration");
  SimulateFlags simulate_flags;
  simulate_flags.add_to(*simulate, false);

  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo trials over a parameter grid");
  SimulateFlags sweep_flags;
  sweep_flags.add_to(*sweep, true);

  // predict
  CLI::App* predict = app.add_subcommand("predict", "difficulty and expectation bounds");
  std::string predict_p;
  int tail_terms = 4;
  predict->add_option("--p", predict_p, "coin bias, decimal in (0,1)")->required();
  predict->add_option("--q", q, "threshold q, decimal in (0,1)")->required();
  predict->add_option("--delta", delta, "failure probability, decimal in (0,1)")->required();
  predict->add_option("--tail-terms", tail_terms, "tail terms in the flips bound (default 4)")
      ->check(CLI::Range(0, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (decide->parsed()) return run_decide(q, delta, decide_source, budget, with_rounds);
    if (baseline->parsed()) return run_baseline(q, epsilon, delta, baseline_source);
    if (simulate->parsed()) return run_simulate(simulate_flags);
    if (sweep->parsed()) return run_sweep(sweep_flags);
    if (predict->parsed()) return run_predict(predict_p, q, delta, tail_terms);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
