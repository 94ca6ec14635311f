// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairtoss/distribution.hpp"
#include "fairtoss/types.hpp"

namespace fairtoss {

// Closed-form probabilities for the dice match game and the coin protocols.
// Everything here is a pure function of its arguments; the oracle module
// recomputes the same quantities by brute force with no shared code.

// Probability that four independent draws A,B,C,D from d satisfy A=B and
// C=D: (sum of p_i^2)^2.
double pr_two_doubles(const Distribution& d);

// Probability that three independent draws A,B,C from d satisfy A=B=C:
// sum of p_i^3.
double pr_triple(const Distribution& d);

// pr_triple minus pr_two_doubles for the coin (p, 1-p), in closed form:
// -4p^4 + 8p^3 - 5p^2 + p. Zero exactly at p in {0, 1/2, 1}; positive
// everywhere else in (0, 1). Requires p in [0, 1].
double triple_advantage(double p);

struct AdvantageArgmax {
  double p_low;   // 1/2 - 1/(2*sqrt(2))
  double p_high;  // 1/2 + 1/(2*sqrt(2))
  double value;   // 0.0625
};

// The two analytic maximizers of triple_advantage and the maximum value,
// exact to machine precision. p_low + p_high = 1 by the symmetry
// triple_advantage(p) = triple_advantage(1-p).
AdvantageArgmax argmax_triple_advantage();

// Probability that two independent draws B,C from d match: sum of p_i^2.
double pr_match(const Distribution& d);

// Probability that C=B given B differs from an earlier independent draw A:
// sum of p_i^2 (1-p_i) over sum of p_i (1-p_i). Throws
// DegenerateConditioningError for a point mass, whose conditioning event has
// probability zero. For every two-faced coin with 0 < p < 1 this is exactly
// 0.5.
double pr_match_given_mismatch(const Distribution& d);

// Expected number of coin tosses until the protocol decides, at bias p.
// Protocols with an initial base-setting toss (see has_initial_toss) report
// the expectation excluding that toss, so callers wanting the total add 1.
// With u = p(1-p):
//   VonNeumann       1/u            (total)
//   Blind            1/u + 1        (total)
//   SingleSound      1              (excluding the initial toss; total 2)
//   SoundVonNeumann  2(1-2u)/u      (excluding the initial toss)
//   FourTossNaive    1/(u(1-2u))    (total)
//   FirstWhistle     1/u            (total)
// Throws NonTerminationError for p in {0, 1} on every protocol with a retry
// loop (all but SingleSound): a constant coin never produces the sound
// pattern those protocols wait for.
double expected_tosses(Protocol protocol, double p);

// Player 1's exact win probability at bias p. The three protocols whose
// decision reduces to "did the deciding toss repeat its base" (SingleSound,
// SoundVonNeumann, FirstWhistle) share the biased value 2p^2 - 2p + 1; the
// fair protocols (VonNeumann, Blind, FourTossNaive) return exactly 0.5 for
// every p in (0, 1). SingleSound accepts any p in [0, 1]; the retrying
// protocols require 0 < p < 1 and throw NonTerminationError otherwise.
double flawed_win_probability(Protocol protocol, double p);

// Aggregate of every closed-form quantity for one distribution, used by the
// command-line surface. Coin-only fields stay empty for n != 2 faces, and
// the per-protocol tables stay empty for a degenerate coin.
struct ExactReport {
  double pr_triple = 0.0;
  double pr_two_doubles = 0.0;
  double advantage = 0.0;  // pr_triple - pr_two_doubles
  double pr_match = 0.0;
  std::optional<double> pr_match_given_mismatch;  // empty iff point mass
  bool is_coin = false;                           // exactly two faces
  std::optional<double> coin_p;                   // first entry when is_coin
  // Filled only for a non-degenerate coin; expected tosses follow the
  // accounting convention of expected_tosses above.
  std::vector<std::pair<Protocol, double>> expected_tosses_by_protocol;
  std::vector<std::pair<Protocol, double>> p1_win_by_protocol;
};

ExactReport make_exact_report(const Distribution& d);

}  // namespace fairtoss
