// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairtoss/distribution.hpp"
#include "fairtoss/errors.hpp"
#include "fairtoss/exact.hpp"
#include "fairtoss/extractor.hpp"
#include "fairtoss/oracle.hpp"
#include "fairtoss/simulate.hpp"
#include "fairtoss/stats.hpp"
#include "fairtoss/types.hpp"

namespace {

using fairtoss::Distribution;
using fairtoss::Protocol;
using fairtoss::Sound;
using fairtoss::Toss;
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output plumbing

// Wraps a double for emission: any non-finite value becomes JSON null so the
// document never carries NaN or infinity.
json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

void flatten_csv(const json& node, const std::string& path,
                 std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten_csv(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    std::size_t index = 0;
    for (const auto& value : node) {
      flatten_csv(value, path + "." + std::to_string(index), out);
      ++index;
    }
  } else {
    // Scalars keep their JSON rendering: numbers bare, strings quoted and
    // escaped, so embedded commas cannot break the two-column shape.
    out << path << "," << node.dump() << "\n";
  }
}

void emit_document(const json& doc, bool csv) {
  if (csv) {
    std::ostringstream out;
    flatten_csv(doc, "", out);
    std::cout << out.str();
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  std::cout.flush();
}

json make_document(const std::string& command) {
  json doc;
  doc["schema_version"] = "1.0";
  doc["command"] = command;
  doc["inputs"] = json::object();
  doc["results"] = json::object();
  doc["notes"] = json::array();
  return doc;
}

// ---------------------------------------------------------------------------
// Input parsing

std::vector<double> parse_probability_list(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw fairtoss::UsageError("cannot parse probability '" + item + "'");
    }
    if (used != item.size()) {
      throw fairtoss::UsageError("cannot parse probability '" + item + "'");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

// Validates a textual probability list against the looser 1e-9 entry-sum
// tolerance that decimal input deserves, then renormalizes exactly. Returns
// the distribution plus the raw sum so the caller can echo the correction.
std::pair<Distribution, double> parse_distribution(const std::string& text) {
  const std::vector<double> raw = parse_probability_list(text);
  if (raw.size() < 2) {
    throw fairtoss::UsageError("--dist needs at least two probabilities");
  }
  double sum = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0) {
      throw fairtoss::UsageError(
          "distribution entries must be finite and non-negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "distribution entries sum to " << sum
        << "; must equal 1 within 1e-9";
    throw fairtoss::UsageError(msg.str());
  }
  return {Distribution::normalize(raw), sum};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw fairtoss::UsageError("cannot open input file '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

bool is_stream_whitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

[[noreturn]] void illegal_character(char c, std::size_t offset,
                                    const char* expected) {
  std::ostringstream msg;
  msg << "illegal character '" << c << "' at byte offset " << offset
      << "; expected " << expected << " or whitespace";
  throw fairtoss::UsageError(msg.str());
}

std::vector<Toss> parse_tosses(const std::string& text) {
  std::vector<Toss> tosses;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_stream_whitespace(c)) continue;
    if (c == 'H' || c == 'h') {
      tosses.push_back(Toss::Heads);
    } else if (c == 'T' || c == 't') {
      tosses.push_back(Toss::Tails);
    } else {
      illegal_character(c, i, "H/T");
    }
  }
  return tosses;
}

std::vector<Sound> parse_sounds(const std::string& text) {
  std::vector<Sound> sounds;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_stream_whitespace(c)) continue;
    if (c == 'C' || c == 'c') {
      sounds.push_back(Sound::Clap);
    } else if (c == 'W' || c == 'w') {
      sounds.push_back(Sound::Whistle);
    } else {
      illegal_character(c, i, "C/W");
    }
  }
  return sounds;
}

Protocol parse_protocol_or_die(const std::string& name) {
  const auto protocol = fairtoss::parse_protocol(name);
  if (!protocol) {
    throw fairtoss::UsageError(
        "unknown protocol '" + name +
        "'; expected von-neumann, blind, single-sound, sound-von-neumann, "
        "four-toss-naive or first-whistle");
  }
  return *protocol;
}

// ---------------------------------------------------------------------------
// Shared option bundles

struct OutputOptions {
  bool csv = false;
  bool json_flag = false;  // accepted for symmetry; JSON is the default
  bool quiet = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  auto* json_opt =
      cmd->add_flag("--json", opts.json_flag, "structured JSON output (default)");
  cmd->add_flag("--csv", opts.csv, "flattened key,value output")
      ->excludes(json_opt);
  cmd->add_flag("--quiet", opts.quiet, "suppress the human summary on stderr");
}

// ---------------------------------------------------------------------------
// exact

struct ExactArgs {
  std::string dist_text;
  double p = -1.0;
  bool p_given = false;
  bool oracle = false;
  OutputOptions out;
};

int run_exact(const ExactArgs& args) {
  json doc = make_document("exact");
  auto& notes = doc["notes"];

  std::optional<Distribution> dist;
  if (!args.dist_text.empty()) {
    auto [parsed, raw_sum] = parse_distribution(args.dist_text);
    dist = parsed;
    doc["inputs"]["dist"] = parsed.probabilities();
    if (raw_sum != 1.0) {
      std::ostringstream note;
      note.precision(17);
      note << "input probabilities summed to " << raw_sum
           << "; renormalized exactly, corrected values echoed in inputs.dist";
      notes.push_back(note.str());
    }
  } else {
    dist = Distribution::coin(args.p);
    doc["inputs"]["p"] = args.p;
  }

  const fairtoss::ExactReport report = fairtoss::make_exact_report(*dist);
  auto& results = doc["results"];
  results["pr_triple"] = finite_or_null(report.pr_triple);
  results["pr_two_doubles"] = finite_or_null(report.pr_two_doubles);
  results["advantage"] = finite_or_null(report.advantage);
  results["pr_match"] = finite_or_null(report.pr_match);
  if (report.pr_match_given_mismatch) {
    results["pr_match_given_mismatch"] =
        finite_or_null(*report.pr_match_given_mismatch);
  } else {
    results["pr_match_given_mismatch"] = nullptr;
    notes.push_back(
        "pr_match_given_mismatch is undefined for a point mass: a mismatch "
        "never happens");
  }

  if (report.is_coin) {
    if (!report.expected_tosses_by_protocol.empty()) {
      json tosses = json::object();
      json tosses_total = json::object();
      json wins = json::object();
      for (const auto& [protocol, value] : report.expected_tosses_by_protocol) {
        tosses[fairtoss::to_string(protocol)] = finite_or_null(value);
        tosses_total[fairtoss::to_string(protocol)] = finite_or_null(
            value + (fairtoss::has_initial_toss(protocol) ? 1.0 : 0.0));
      }
      for (const auto& [protocol, value] : report.p1_win_by_protocol) {
        wins[fairtoss::to_string(protocol)] = finite_or_null(value);
      }
      results["expected_tosses"] = tosses;
      results["expected_tosses_total"] = tosses_total;
      results["p1_win"] = wins;
      notes.push_back(
          "expected_tosses excludes the initial base-setting toss of "
          "single-sound and sound-von-neumann; expected_tosses_total includes "
          "it");
    } else {
      results["expected_tosses"] = nullptr;
      results["expected_tosses_total"] = nullptr;
      results["p1_win"] = nullptr;
      notes.push_back(
          "protocol quantities are undefined at a degenerate bias: a "
          "constant coin never finishes the retrying protocols");
    }
  }

  if (args.oracle) {
    json oracle_values = json::object();
    double max_dev = 0.0;
    const auto record = [&](const char* key, double oracle_value,
                            double closed_form) {
      oracle_values[key] = finite_or_null(oracle_value);
      max_dev = std::max(max_dev, std::abs(oracle_value - closed_form));
    };
    using fairtoss::oracle::EventPattern;
    record("pr_triple",
           fairtoss::oracle::joint_event_prob(*dist, EventPattern::Triple),
           report.pr_triple);
    record("pr_two_doubles",
           fairtoss::oracle::joint_event_prob(*dist, EventPattern::TwoDoubles),
           report.pr_two_doubles);
    record("pr_match",
           fairtoss::oracle::joint_event_prob(*dist, EventPattern::Match),
           report.pr_match);
    if (report.pr_match_given_mismatch) {
      record("pr_match_given_mismatch",
             fairtoss::oracle::joint_event_prob(
                 *dist, EventPattern::MatchGivenMismatch),
             *report.pr_match_given_mismatch);
    }
    if (report.is_coin && !report.expected_tosses_by_protocol.empty()) {
      json oracle_tosses = json::object();
      json oracle_wins = json::object();
      for (const auto& [protocol, value] : report.expected_tosses_by_protocol) {
        const auto solution =
            fairtoss::oracle::absorbing_solve(protocol, *report.coin_p);
        oracle_tosses[fairtoss::to_string(protocol)] =
            finite_or_null(solution.expected_tosses);
        max_dev = std::max(max_dev, std::abs(solution.expected_tosses - value));
      }
      for (const auto& [protocol, value] : report.p1_win_by_protocol) {
        const auto solution =
            fairtoss::oracle::absorbing_solve(protocol, *report.coin_p);
        oracle_wins[fairtoss::to_string(protocol)] =
            finite_or_null(solution.p1_win);
        max_dev = std::max(max_dev, std::abs(solution.p1_win - value));
      }
      oracle_values["expected_tosses"] = oracle_tosses;
      oracle_values["p1_win"] = oracle_wins;
    }
    oracle_values["max_abs_deviation"] = finite_or_null(max_dev);
    results["oracle"] = oracle_values;
  }

  emit_document(doc, args.out.csv);
  if (!args.out.quiet) {
    std::ostringstream summary;
    summary.precision(12);
    summary << "pr_match=" << report.pr_match
            << " pr_triple=" << report.pr_triple
            << " pr_two_doubles=" << report.pr_two_doubles
            << " advantage=" << report.advantage;
    std::cerr << summary.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string protocol_name;
  double p = 0.5;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::uint64_t max_tosses = fairtoss::kDefaultMaxTossesPerTrial;
  int threads = 0;
  double ci_z = 3.0;
  bool wilson = false;
  bool oracle = false;
  OutputOptions out;
};

int run_simulate(const SimulateArgs& args) {
  const Protocol protocol = parse_protocol_or_die(args.protocol_name);
  if (!(args.p > 0.0 && args.p < 1.0)) {
    throw fairtoss::UsageError(
        "--p must lie strictly between 0 and 1; a constant coin never "
        "finishes");
  }

  json doc = make_document("simulate");
  auto& notes = doc["notes"];
  doc["inputs"]["protocol"] = fairtoss::to_string(protocol);
  doc["inputs"]["p"] = args.p;
  doc["inputs"]["trials"] = args.trials;
  doc["inputs"]["seed"] = args.seed;
  doc["inputs"]["max_tosses_per_trial"] = args.max_tosses;
  doc["inputs"]["ci_z"] = args.ci_z;
  doc["inputs"]["ci_method"] = args.wilson ? "wilson" : "normal";

  const fairtoss::SimulationReport report = fairtoss::run_protocol_trials(
      protocol, args.p, args.trials, args.seed, args.max_tosses, args.ci_z,
      args.threads);

  double ci_low = report.ci_low;
  double ci_high = report.ci_high;
  if (args.wilson && report.p1_wins + report.p2_wins > 0) {
    const auto [low, high] = fairtoss::wilson_interval(
        report.p1_wins, report.p1_wins + report.p2_wins, args.ci_z);
    ci_low = low;
    ci_high = high;
  }

  auto& results = doc["results"];
  results["trials"] = report.trials;
  results["p1_wins"] = report.p1_wins;
  results["p2_wins"] = report.p2_wins;
  results["undecided"] = report.undecided;
  results["max_tosses_hit"] = report.max_tosses_hit;
  results["toss_total"] = report.toss_total;
  results["p1_rate"] = finite_or_null(report.p1_rate);
  results["ci_low"] = finite_or_null(ci_low);
  results["ci_high"] = finite_or_null(ci_high);
  results["mean_tosses"] = finite_or_null(report.mean_tosses);
  if (report.undecided > 0) {
    notes.push_back("some trials hit the per-trial toss cap and are excluded "
                    "from rate and mean");
  }

  const double exact_p1 = fairtoss::flawed_win_probability(protocol, args.p);
  const double exact_tosses =
      fairtoss::expected_tosses(protocol, args.p) +
      (fairtoss::has_initial_toss(protocol) ? 1.0 : 0.0);
  results["exact_p1_win"] = finite_or_null(exact_p1);
  results["exact_mean_tosses"] = finite_or_null(exact_tosses);

  const std::uint64_t decided = report.p1_wins + report.p2_wins;
  if (decided >= fairtoss::kMinSample) {
    results["z_vs_exact"] = finite_or_null(fairtoss::proportion_z(
        {report.p2_wins, report.p1_wins}, exact_p1));
  } else {
    results["z_vs_exact"] = nullptr;
    notes.push_back("too few decided trials for a z-score");
  }

  if (args.oracle) {
    const auto solution = fairtoss::oracle::absorbing_solve(protocol, args.p);
    json oracle_values = json::object();
    oracle_values["p1_win"] = finite_or_null(solution.p1_win);
    oracle_values["expected_tosses_total"] = finite_or_null(
        solution.expected_tosses + (solution.has_initial_toss ? 1.0 : 0.0));
    oracle_values["max_abs_deviation"] = finite_or_null(std::max(
        std::abs(solution.p1_win - exact_p1),
        std::abs(solution.expected_tosses +
                 (solution.has_initial_toss ? 1.0 : 0.0) - exact_tosses)));
    results["oracle"] = oracle_values;
  }

  emit_document(doc, args.out.csv);
  if (!args.out.quiet) {
    std::ostringstream summary;
    summary.precision(8);
    summary << fairtoss::to_string(protocol) << " p=" << args.p << ": p1_rate="
            << report.p1_rate << " (exact " << exact_p1 << "), mean tosses "
            << report.mean_tosses << " (exact " << exact_tosses << ") over "
            << decided << " decided trials";
    std::cerr << summary.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// transduce

struct TransduceArgs {
  std::string input;
  bool quiet = false;
};

int run_transduce(const TransduceArgs& args) {
  const std::vector<Toss> tosses = parse_tosses(read_input(args.input));
  if (tosses.empty()) {
    throw fairtoss::UsageError("input contains no tosses");
  }
  const std::vector<Sound> sounds = fairtoss::transduce(tosses);
  std::string text;
  text.reserve(sounds.size());
  for (const Sound s : sounds) text += fairtoss::to_string(s);
  std::cout << text << "\n";
  std::cout.flush();
  if (!args.quiet) {
    std::cerr << tosses.size() << " tosses -> " << sounds.size()
              << " sounds\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// extract

struct ExtractArgs {
  std::string mode;
  std::string input;
  std::string format = "ht";
  bool quiet = false;
};

int run_extract(const ExtractArgs& args) {
  const Protocol protocol = parse_protocol_or_die(args.mode);
  if (args.format != "ht" && args.format != "cw") {
    throw fairtoss::UsageError("--format must be ht or cw");
  }
  const std::string raw = read_input(args.input);

  std::vector<std::uint8_t> bits;
  if (args.format == "ht") {
    bits = fairtoss::extract_bits(protocol, parse_tosses(raw));
  } else {
    if (protocol == Protocol::VonNeumann) {
      throw fairtoss::UsageError(
          "von-neumann extraction needs tosses (--format ht); sounds only "
          "tell whether tosses repeated");
    }
    bits = fairtoss::extract_bits(protocol, parse_sounds(raw));
  }

  std::string text;
  text.reserve(bits.size());
  for (const std::uint8_t b : bits) text += b ? '1' : '0';
  std::cout << text << "\n";
  std::cout.flush();
  if (!args.quiet) {
    std::cerr << bits.size() << " bits extracted via "
              << fairtoss::to_string(protocol) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dice-game

struct DiceGameArgs {
  std::string dist_text;
  std::uint64_t rounds = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  OutputOptions out;
};

int run_dice_game(const DiceGameArgs& args) {
  auto [dist, raw_sum] = parse_distribution(args.dist_text);

  json doc = make_document("dice-game");
  auto& notes = doc["notes"];
  doc["inputs"]["dist"] = dist.probabilities();
  doc["inputs"]["rounds"] = args.rounds;
  doc["inputs"]["seed"] = args.seed;
  if (raw_sum != 1.0) {
    std::ostringstream note;
    note.precision(17);
    note << "input probabilities summed to " << raw_sum
         << "; renormalized exactly, corrected values echoed in inputs.dist";
    notes.push_back(note.str());
  }

  const fairtoss::DiceGameResult game =
      fairtoss::run_dice_game(dist, args.rounds, args.seed, args.threads);

  auto& results = doc["results"];
  results["rounds"] = game.rounds;
  results["triple_points"] = game.triple_points;
  results["doubles_points"] = game.doubles_points;
  results["triple_rate"] = finite_or_null(
      static_cast<double>(game.triple_points) /
      static_cast<double>(game.rounds));
  results["doubles_rate"] = finite_or_null(
      static_cast<double>(game.doubles_points) /
      static_cast<double>(game.rounds));
  results["outcome"] = fairtoss::to_string(game.outcome);
  results["exact_pr_triple"] = finite_or_null(fairtoss::pr_triple(dist));
  results["exact_pr_two_doubles"] =
      finite_or_null(fairtoss::pr_two_doubles(dist));

  emit_document(doc, args.out.csv);
  if (!args.out.quiet) {
    std::cerr << "triple " << game.triple_points << " vs doubles "
              << game.doubles_points << " over " << game.rounds
              << " rounds: " << fairtoss::to_string(game.outcome) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fairtoss: exact odds, decision protocols and seeded simulations for "
      "biased coins and dice"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", "fairtoss 1.0.0");

  ExactArgs exact_args;
  auto* exact_cmd = app.add_subcommand(
      "exact", "closed-form probabilities for a distribution or coin");
  auto* dist_opt = exact_cmd->add_option("--dist", exact_args.dist_text,
                                         "comma-separated face probabilities");
  auto* p_opt = exact_cmd->add_option("--p", exact_args.p,
                                      "coin bias: probability of heads");
  dist_opt->excludes(p_opt);
  exact_cmd->add_flag("--oracle", exact_args.oracle,
                      "add brute-force cross-check values");
  add_output_options(exact_cmd, exact_args.out);

  SimulateArgs sim_args;
  auto* sim_cmd =
      app.add_subcommand("simulate", "seeded Monte Carlo protocol trials");
  sim_cmd->add_option("--protocol", sim_args.protocol_name, "protocol name")
      ->required();
  sim_cmd->add_option("--p", sim_args.p, "coin bias: probability of heads")
      ->required();
  sim_cmd->add_option("--trials", sim_args.trials, "number of games");
  sim_cmd->add_option("--seed", sim_args.seed, "64-bit seed");
  sim_cmd->add_option("--max-tosses", sim_args.max_tosses,
                      "per-trial toss cap");
  sim_cmd->add_option("--threads", sim_args.threads,
                      "worker threads (0 = runtime default); never changes "
                      "the results");
  sim_cmd->add_option("--z", sim_args.ci_z, "interval width multiplier");
  sim_cmd->add_flag("--wilson", sim_args.wilson,
                    "Wilson score interval instead of normal approximation");
  sim_cmd->add_flag("--oracle", sim_args.oracle,
                    "add absorbing-chain cross-check values");
  add_output_options(sim_cmd, sim_args.out);

  TransduceArgs trans_args;
  auto* trans_cmd = app.add_subcommand(
      "transduce", "convert H/T tosses into the C/W sounds they make");
  trans_cmd->add_option("--input", trans_args.input,
                        "file of H/T characters, or - for stdin")
      ->required();
  trans_cmd->add_flag("--quiet", trans_args.quiet,
                      "suppress the summary on stderr");

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand(
      "extract", "run a protocol repeatedly and print one bit per decision");
  extract_cmd->add_option("--mode", extract_args.mode, "protocol name")
      ->required();
  extract_cmd->add_option("--input", extract_args.input,
                          "file of H/T or C/W characters, or - for stdin")
      ->required();
  extract_cmd->add_option("--format", extract_args.format,
                          "input alphabet: ht (tosses) or cw (sounds)");
  extract_cmd->add_flag("--quiet", extract_args.quiet,
                        "suppress the summary on stderr");

  DiceGameArgs dice_args;
  auto* dice_cmd = app.add_subcommand(
      "dice-game", "simulate the triple-vs-two-doubles dice match");
  dice_cmd->add_option("--dist", dice_args.dist_text,
                       "comma-separated face probabilities")
      ->required();
  dice_cmd->add_option("--rounds", dice_args.rounds, "rounds per game");
  dice_cmd->add_option("--seed", dice_args.seed, "64-bit seed");
  dice_cmd->add_option("--threads", dice_args.threads,
                       "worker threads (0 = runtime default); never changes "
                       "the results");
  add_output_options(dice_cmd, dice_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (exact_cmd->parsed()) {
      exact_args.p_given = p_opt->count() > 0;
      if (exact_args.dist_text.empty() && !exact_args.p_given) {
        throw fairtoss::UsageError("exact needs exactly one of --dist or --p");
      }
      return run_exact(exact_args);
    }
    if (sim_cmd->parsed()) return run_simulate(sim_args);
    if (trans_cmd->parsed()) return run_transduce(trans_args);
    if (extract_cmd->parsed()) return run_extract(extract_args);
    if (dice_cmd->parsed()) return run_dice_game(dice_args);
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const fairtoss::IncompleteStreamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fairtoss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
