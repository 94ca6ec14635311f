// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "fairtoss/errors.hpp"
#include "fairtoss/extractor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fairtoss {

Toss sample_toss(Philox4x32& gen, double p) {
  return gen.next_double() < p ? Toss::Heads : Toss::Tails;
}

std::size_t sample_face(Philox4x32& gen, const Distribution& d) {
  const double u = gen.next_double();
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    cumulative += d[i];
    if (u < cumulative) return i;
  }
  return d.size() - 1;  // the last face absorbs any floating-point shortfall
}

namespace {

void check_trial_args(double p, std::uint64_t trials,
                      std::uint64_t max_tosses_per_trial, double ci_z) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw ValidationError("coin bias must lie in [0, 1]");
  }
  if (trials < 1) throw ValidationError("need at least 1 trial");
  if (max_tosses_per_trial < 4) {
    throw ValidationError("max tosses per trial must be at least 4");
  }
  if (!std::isfinite(ci_z) || ci_z < 0.0) {
    throw ValidationError("interval width multiplier must be >= 0");
  }
}

// Winner of one seeded trial: 0 when the toss cap was hit, otherwise the
// player number; tosses is the count the finished game consumed.
struct TrialResult {
  int winner = 0;
  std::uint64_t tosses = 0;
};

// Plays one full game with tosses drawn from the trial's own substream, so
// the result depends only on (protocol, p, seed, trial_index, cap).
TrialResult trial_once(Protocol protocol, double p, std::uint64_t seed,
                       std::uint64_t trial_index,
                       std::uint64_t max_tosses_per_trial) {
  Philox4x32 gen(seed, trial_index);
  ProtocolMachine machine(protocol);
  if (protocol == Protocol::VonNeumann) {
    for (std::uint64_t k = 0; k < max_tosses_per_trial; ++k) {
      if (auto outcome = machine.feed(sample_toss(gen, p))) {
        return {outcome->winner == Player::P1 ? 1 : 2,
                outcome->tosses_consumed};
      }
    }
    return {};
  }
  Toss last = sample_toss(gen, p);  // the first toss makes no sound
  for (std::uint64_t k = 1; k < max_tosses_per_trial; ++k) {
    const Toss t = sample_toss(gen, p);
    const Sound s = t == last ? Sound::Clap : Sound::Whistle;
    last = t;
    if (auto outcome = machine.feed(s)) {
      return {outcome->winner == Player::P1 ? 1 : 2, outcome->tosses_consumed};
    }
  }
  return {};
}

// Derives every floating-point field from the four integer totals, which are
// the only values the parallel loop accumulates; this is what makes reports
// independent of thread count and summation order.
SimulationReport finalize_report(std::uint64_t trials, std::uint64_t p1,
                                 std::uint64_t p2, std::uint64_t undecided,
                                 std::uint64_t toss_total, double ci_z) {
  SimulationReport report;
  report.trials = trials;
  report.p1_wins = p1;
  report.p2_wins = p2;
  report.undecided = undecided;
  report.max_tosses_hit = undecided;
  report.toss_total = toss_total;
  const std::uint64_t decided = p1 + p2;
  if (decided > 0) {
    report.p1_rate = static_cast<double>(p1) / static_cast<double>(decided);
    const double half_width =
        ci_z * std::sqrt(report.p1_rate * (1.0 - report.p1_rate) /
                         static_cast<double>(decided));
    report.ci_low = std::max(0.0, report.p1_rate - half_width);
    report.ci_high = std::min(1.0, report.p1_rate + half_width);
    report.mean_tosses =
        static_cast<double>(toss_total) / static_cast<double>(decided);
  }
  return report;
}

}  // namespace

SimulationReport run_protocol_trials(Protocol protocol, double p,
                                     std::uint64_t trials, std::uint64_t seed,
                                     std::uint64_t max_tosses_per_trial,
                                     double ci_z, int threads) {
  check_trial_args(p, trials, max_tosses_per_trial, ci_z);
  std::uint64_t p1 = 0, p2 = 0, undecided = 0, toss_total = 0;
  const auto count = static_cast<long long>(trials);
#ifdef _OPENMP
  const int thread_count = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(thread_count) \
    reduction(+ : p1, p2, undecided, toss_total)
#else
  (void)threads;
#endif
  for (long long i = 0; i < count; ++i) {
    const TrialResult r = trial_once(protocol, p, seed,
                                     static_cast<std::uint64_t>(i),
                                     max_tosses_per_trial);
    if (r.winner == 1) {
      ++p1;
      toss_total += r.tosses;
    } else if (r.winner == 2) {
      ++p2;
      toss_total += r.tosses;
    } else {
      ++undecided;
    }
  }
  return finalize_report(trials, p1, p2, undecided, toss_total, ci_z);
}

SimulationReport run_protocol_trials_serial(Protocol protocol, double p,
                                            std::uint64_t trials,
                                            std::uint64_t seed,
                                            std::uint64_t max_tosses_per_trial,
                                            double ci_z) {
  check_trial_args(p, trials, max_tosses_per_trial, ci_z);
  std::uint64_t p1 = 0, p2 = 0, undecided = 0, toss_total = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const TrialResult r = trial_once(protocol, p, seed, i,
                                     max_tosses_per_trial);
    if (r.winner == 1) {
      ++p1;
      toss_total += r.tosses;
    } else if (r.winner == 2) {
      ++p2;
      toss_total += r.tosses;
    } else {
      ++undecided;
    }
  }
  return finalize_report(trials, p1, p2, undecided, toss_total, ci_z);
}

std::pair<double, double> wilson_interval(std::uint64_t successes,
                                          std::uint64_t total, double z) {
  if (total < 1) throw ValidationError("interval needs at least one trial");
  if (successes > total) {
    throw ValidationError("successes cannot exceed the total");
  }
  if (!std::isfinite(z) || z < 0.0) {
    throw ValidationError("interval width multiplier must be >= 0");
  }
  const double n = static_cast<double>(total);
  const double rate = static_cast<double>(successes) / n;
  const double zz = z * z;
  const double denom = 1.0 + zz / n;
  const double center = (rate + zz / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(rate * (1.0 - rate) / n + zz / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// One dice-game round: the triple player's three throws score on a triple,
// the doubles player's four throws score on two straight doubles. Each
// player draws from their own substream of the round.
void play_round(const Distribution& d, std::uint64_t seed, std::uint64_t round,
                std::uint64_t& triple_point, std::uint64_t& doubles_point) {
  Philox4x32 triple_gen(seed, 2 * round);
  const std::size_t a1 = sample_face(triple_gen, d);
  const std::size_t a2 = sample_face(triple_gen, d);
  const std::size_t a3 = sample_face(triple_gen, d);
  if (a1 == a2 && a2 == a3) ++triple_point;

  Philox4x32 doubles_gen(seed, 2 * round + 1);
  const std::size_t b1 = sample_face(doubles_gen, d);
  const std::size_t b2 = sample_face(doubles_gen, d);
  const std::size_t b3 = sample_face(doubles_gen, d);
  const std::size_t b4 = sample_face(doubles_gen, d);
  if (b1 == b2 && b3 == b4) ++doubles_point;
}

DiceGameResult finalize_game(std::uint64_t rounds, std::uint64_t triple_points,
                             std::uint64_t doubles_points) {
  DiceGameResult result;
  result.rounds = rounds;
  result.triple_points = triple_points;
  result.doubles_points = doubles_points;
  if (triple_points > doubles_points) {
    result.outcome = DiceGameResult::Outcome::TripleWins;
  } else if (doubles_points > triple_points) {
    result.outcome = DiceGameResult::Outcome::DoublesWins;
  } else {
    result.outcome = DiceGameResult::Outcome::Draw;
  }
  return result;
}

}  // namespace

DiceGameResult run_dice_game(const Distribution& d, std::uint64_t rounds,
                             std::uint64_t seed, int threads) {
  if (rounds < 1) throw ValidationError("need at least 1 round");
  std::uint64_t triple_points = 0, doubles_points = 0;
  const auto count = static_cast<long long>(rounds);
#ifdef _OPENMP
  const int thread_count = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(thread_count) \
    reduction(+ : triple_points, doubles_points)
#else
  (void)threads;
#endif
  for (long long r = 0; r < count; ++r) {
    play_round(d, seed, static_cast<std::uint64_t>(r), triple_points,
               doubles_points);
  }
  return finalize_game(rounds, triple_points, doubles_points);
}

DiceGameResult run_dice_game_serial(const Distribution& d,
                                    std::uint64_t rounds, std::uint64_t seed) {
  if (rounds < 1) throw ValidationError("need at least 1 round");
  std::uint64_t triple_points = 0, doubles_points = 0;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    play_round(d, seed, r, triple_points, doubles_points);
  }
  return finalize_game(rounds, triple_points, doubles_points);
}

}  // namespace fairtoss
