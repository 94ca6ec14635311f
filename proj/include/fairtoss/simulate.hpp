// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fairtoss/distribution.hpp"
#include "fairtoss/rng.hpp"
#include "fairtoss/types.hpp"

namespace fairtoss {

// Deterministic seeded sources. A draw depends only on (seed, stream,
// position), never on thread schedule: trial t always uses stream t, round r
// of the dice game uses streams 2r and 2r+1. Reports aggregate nothing but
// 64-bit integer counts and sums, so a report is bitwise identical for any
// thread count.

// Samples one coin toss: heads iff the next uniform double is below p.
Toss sample_toss(Philox4x32& gen, double p);

// Samples one die face by cumulative scan in face order; the last face
// absorbs any floating-point shortfall so a draw can never fall off the end.
std::size_t sample_face(Philox4x32& gen, const Distribution& d);

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t p1_wins = 0;
  std::uint64_t p2_wins = 0;
  std::uint64_t undecided = 0;      // trials that hit the per-trial toss cap
  std::uint64_t max_tosses_hit = 0; // same count, kept as an explicit field
  std::uint64_t toss_total = 0;     // summed tosses over decided trials
  double p1_rate = 0.0;             // p1_wins over decided trials
  double ci_low = 0.0;              // normal-approximation interval on p1_rate
  double ci_high = 0.0;
  double mean_tosses = 0.0;         // toss_total over decided trials

  bool operator==(const SimulationReport&) const = default;
};

inline constexpr std::uint64_t kDefaultMaxTossesPerTrial = 1'000'000;

// Runs `trials` independent protocol games at bias p, one substream per
// trial, and aggregates. Games still undecided after max_tosses_per_trial
// tosses are counted as undecided, never silently dropped; rate, mean and
// interval cover decided trials only. The confidence interval is
// p1_rate +/- ci_z * sqrt(p1_rate(1-p1_rate)/decided). threads = 0 uses the
// runtime default; any value yields the identical report.
//
// Requires trials >= 1 and max_tosses_per_trial >= 4. Degenerate p is
// allowed: every trial then hits the cap for the retrying protocols.
SimulationReport run_protocol_trials(Protocol protocol, double p,
                                     std::uint64_t trials, std::uint64_t seed,
                                     std::uint64_t max_tosses_per_trial =
                                         kDefaultMaxTossesPerTrial,
                                     double ci_z = 3.0, int threads = 0);

// Single-threaded reference implementation with the identical contract;
// kept for differential tests and the benchmark. Must produce the same
// report bit for bit.
SimulationReport run_protocol_trials_serial(
    Protocol protocol, double p, std::uint64_t trials, std::uint64_t seed,
    std::uint64_t max_tosses_per_trial = kDefaultMaxTossesPerTrial,
    double ci_z = 3.0);

// Wilson score interval for successes out of total at width multiplier z;
// better behaved than the normal approximation near rates of 0 or 1.
// Requires total >= 1 and successes <= total.
std::pair<double, double> wilson_interval(std::uint64_t successes,
                                          std::uint64_t total, double z);

struct DiceGameResult {
  enum class Outcome : std::uint8_t { TripleWins = 0, DoublesWins = 1, Draw = 2 };

  std::uint64_t rounds = 0;
  std::uint64_t triple_points = 0;   // rounds where three throws all matched
  std::uint64_t doubles_points = 0;  // rounds where both pairs matched
  Outcome outcome = Outcome::Draw;

  bool operator==(const DiceGameResult&) const = default;
};

constexpr const char* to_string(DiceGameResult::Outcome o) {
  switch (o) {
    case DiceGameResult::Outcome::TripleWins:  return "triple-wins";
    case DiceGameResult::Outcome::DoublesWins: return "doubles-wins";
    case DiceGameResult::Outcome::Draw:        return "draw";
  }
  return "?";
}

// The dice match game: each round the triple player throws three dice and
// scores on three identical results; the doubles player throws four and
// scores when the first two match and the last two match. More points wins.
// Requires rounds >= 1.
DiceGameResult run_dice_game(const Distribution& d, std::uint64_t rounds,
                             std::uint64_t seed, int threads = 0);

// Single-threaded reference for run_dice_game, bit-identical by contract.
DiceGameResult run_dice_game_serial(const Distribution& d,
                                    std::uint64_t rounds, std::uint64_t seed);

}  // namespace fairtoss
