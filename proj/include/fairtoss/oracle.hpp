// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairtoss/distribution.hpp"
#include "fairtoss/types.hpp"

namespace fairtoss::oracle {

// Independent ground truth for the closed forms in exact.hpp: exhaustive
// enumeration over small product spaces and exact absorbing-chain solving for
// the repeated-turn protocols. Nothing here calls the closed-form code; the
// two implementations are only ever compared in tests.

// Joint events over independent draws from one distribution.
enum class EventPattern : std::uint8_t {
  TwoDoubles = 0,          // four draws A,B,C,D with A=B and C=D
  Triple = 1,              // three draws A,B,C with A=B=C
  Match = 2,               // two draws B,C with C=B
  MatchGivenMismatch = 3,  // three draws A,B,C; P(C=B | B!=A)
};

// Number of independent draws the pattern enumerates.
constexpr int draw_count(EventPattern pattern) {
  switch (pattern) {
    case EventPattern::TwoDoubles:         return 4;
    case EventPattern::Triple:             return 3;
    case EventPattern::Match:              return 2;
    case EventPattern::MatchGivenMismatch: return 3;
  }
  return 0;
}

// Exact probability of the pattern by iterating every n^k outcome tuple and
// summing product weights; the conditional pattern is the ratio of two such
// sums. Throws CapacityError when n^k exceeds 10^7 tuples and
// DegenerateConditioningError for MatchGivenMismatch on a point mass.
double joint_event_prob(const Distribution& d, EventPattern pattern);

// One transient state of a protocol's turn recursion. Probabilities out of a
// state (transitions plus absorptions) sum to 1.
struct ChainState {
  std::string name;     // human-readable label, e.g. "base-H"
  double toss_cost;     // tosses consumed per visit to this state
  // (target state index, probability) pairs for non-absorbing moves.
  std::vector<std::pair<std::size_t, double>> transitions;
  double absorb_p1;     // probability of ending the game for Player 1
  double absorb_p2;     // probability of ending the game for Player 2
};

// The full finite model of one protocol at one bias.
struct Chain {
  std::vector<ChainState> states;
  std::vector<double> initial;  // entry distribution over states
  bool has_initial_toss;        // one silent base toss precedes the chain,
                                // excluded from every toss count below
};

// Per-state absorption probabilities and expected remaining tosses.
struct StateSolution {
  double p1_win;
  double p2_win;
  double expected_tosses;
};

// Aggregate solution from the chain's initial distribution.
struct ChainSolution {
  double p1_win;
  double p2_win;
  // Expected tosses to absorption, excluding the initial base-setting toss
  // when has_initial_toss is set (add 1 for the total).
  double expected_tosses;
  bool has_initial_toss;
};

// Builds the protocol's absorbing chain at bias p. Every chain has at most 8
// states. Throws NonTerminationError when p is degenerate and the protocol
// has a retry loop (all protocols except SingleSound).
Chain build_chain(Protocol protocol, double p);

// Solves one linear system per quantity by direct Gaussian elimination. The
// systems are tiny (<= 8 unknowns) and strictly diagonally dominant for
// non-degenerate p, so no pivoting finesse is required.
std::vector<StateSolution> solve_states(const Chain& chain);

// build_chain + solve_states + weighting by the initial distribution.
ChainSolution absorbing_solve(Protocol protocol, double p);

}  // namespace fairtoss::oracle
