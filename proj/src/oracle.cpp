// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "fairtoss/errors.hpp"

namespace fairtoss::oracle {

namespace {

constexpr double kMaxTuples = 1e7;

bool pattern_holds(EventPattern pattern, const std::vector<std::size_t>& t) {
  switch (pattern) {
    case EventPattern::TwoDoubles:
      return t[0] == t[1] && t[2] == t[3];
    case EventPattern::Triple:
      return t[0] == t[1] && t[1] == t[2];
    case EventPattern::Match:
      return t[1] == t[0];
    case EventPattern::MatchGivenMismatch:
      return t[2] == t[1];  // numerator event; the condition is checked apart
  }
  return false;
}

void check_degenerate(Protocol protocol, double p) {
  if ((p == 0.0 || p == 1.0) && protocol != Protocol::SingleSound) {
    std::ostringstream msg;
    msg << to_string(protocol)
        << " has a retry loop that a constant coin never exits (p = " << p
        << ")";
    throw NonTerminationError(msg.str());
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "coin bias must lie in [0, 1], got " << p;
    throw ValidationError(msg.str());
  }
}

}  // namespace

double joint_event_prob(const Distribution& d, EventPattern pattern) {
  const std::size_t n = d.size();
  const int k = draw_count(pattern);
  double tuples = 1.0;
  for (int i = 0; i < k; ++i) tuples *= static_cast<double>(n);
  if (tuples > kMaxTuples) {
    std::ostringstream msg;
    msg << "enumeration of " << n << "^" << k
        << " tuples exceeds the 1e7 cap";
    throw CapacityError(msg.str());
  }

  // Odometer over all n^k outcome tuples; every tuple contributes its full
  // product weight to the sums it satisfies. No closed form anywhere.
  std::vector<std::size_t> tuple(static_cast<std::size_t>(k), 0);
  double event_mass = 0.0;
  double condition_mass = 0.0;
  const bool conditional = pattern == EventPattern::MatchGivenMismatch;
  for (;;) {
    double weight = 1.0;
    for (int i = 0; i < k; ++i) weight *= d[tuple[static_cast<std::size_t>(i)]];
    if (conditional) {
      const bool mismatch = tuple[1] != tuple[0];
      if (mismatch) {
        condition_mass += weight;
        if (pattern_holds(pattern, tuple)) event_mass += weight;
      }
    } else if (pattern_holds(pattern, tuple)) {
      event_mass += weight;
    }
    // Advance the odometer.
    int pos = k - 1;
    while (pos >= 0) {
      auto& digit = tuple[static_cast<std::size_t>(pos)];
      if (++digit < n) break;
      digit = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  if (!conditional) return event_mass;
  if (condition_mass <= 0.0) {
    throw DegenerateConditioningError(
        "a mismatch has probability zero under a point mass; "
        "the conditional match probability is undefined");
  }
  return event_mass / condition_mass;
}

Chain build_chain(Protocol protocol, double p) {
  check_degenerate(protocol, p);
  const double q = 1.0 - p;
  Chain chain;
  chain.has_initial_toss = has_initial_toss(protocol);

  switch (protocol) {
    case Protocol::VonNeumann: {
      // One state: a fresh two-toss turn. Cases (first, second):
      // (H,T) -> P1, (T,H) -> P2, (H,H) and (T,T) -> new turn.
      chain.states.push_back({"turn", 2.0, {{0, p * p + q * q}}, p * q, q * p});
      chain.initial = {1.0};
      break;
    }
    case Protocol::SingleSound: {
      // The initial toss fixes the base; one more toss makes the single
      // deciding sound: clap (same as base) -> P1, whistle -> P2.
      chain.states.push_back({"base-H", 1.0, {}, p, q});
      chain.states.push_back({"base-T", 1.0, {}, q, p});
      chain.initial = {p, q};
      break;
    }
    case Protocol::SoundVonNeumann: {
      // Turn = two tosses (X, Y) after a base b. Sound 1 compares X with b,
      // sound 2 compares Y with X. From base H:
      //   (H,H) p^2 -> claps, retry with base H   (T,H) qp -> whistles, retry base H
      //   (H,T) pq -> clap-whistle, P1            (T,T) q^2 -> whistle-clap, P2
      // Base T mirrors with p and q swapped; both retry cases keep the base.
      chain.states.push_back(
          {"base-H", 2.0, {{0, p * p + q * p}}, p * q, q * q});
      chain.states.push_back(
          {"base-T", 2.0, {{1, q * q + p * q}}, q * p, p * p});
      chain.initial = {p, q};
      break;
    }
    case Protocol::FourTossNaive: {
      // One state: a fresh four-toss group. The compared sounds are
      // X (toss 2 vs toss 1) and Y (toss 4 vs toss 3), independent, each a
      // whistle on the mixed cases: clap-whistle -> P1, whistle-clap -> P2,
      // equal sounds -> new group.
      const double clap = p * p + q * q;
      const double whistle = p * q + q * p;
      chain.states.push_back({"group", 4.0,
                              {{0, clap * clap + whistle * whistle}},
                              clap * whistle,
                              whistle * clap});
      chain.initial = {1.0};
      break;
    }
    case Protocol::Blind: {
      // Turn = two tosses (X, Y); the sound after Y (even-numbered toss)
      // compares them. Equal -> next turn; different -> armed with base Y,
      // and the next toss Z decides: Z != Y is a whistle -> P1, Z == Y -> P2.
      chain.states.push_back({"turn", 2.0,
                              {{0, p * p + q * q}, {1, q * p}, {2, p * q}},
                              0.0,
                              0.0});
      chain.states.push_back({"armed-base-H", 1.0, {}, q, p});
      chain.states.push_back({"armed-base-T", 1.0, {}, p, q});
      chain.initial = {1.0, 0.0, 0.0};
      break;
    }
    case Protocol::FirstWhistle: {
      // The first toss starts a clap run; the first differing toss whistles
      // and arms, and the very next sound decides: another change of face is
      // a whistle -> P1, a repeat is a clap -> P2.
      chain.states.push_back({"start", 1.0, {{1, p}, {2, q}}, 0.0, 0.0});
      chain.states.push_back({"run-H", 1.0, {{1, p}, {3, q}}, 0.0, 0.0});
      chain.states.push_back({"run-T", 1.0, {{2, q}, {4, p}}, 0.0, 0.0});
      chain.states.push_back({"armed-last-T", 1.0, {}, p, q});
      chain.states.push_back({"armed-last-H", 1.0, {}, q, p});
      chain.initial = {1.0, 0.0, 0.0, 0.0, 0.0};
      break;
    }
  }
  return chain;
}

std::vector<StateSolution> solve_states(const Chain& chain) {
  const std::size_t m = chain.states.size();
  // Three right-hand sides against the same (I - T) matrix: absorption into
  // each player and expected remaining tosses.
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 3, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    a[i][i] = 1.0;
    for (const auto& [j, prob] : chain.states[i].transitions) {
      a[i][j] -= prob;
    }
    a[i][m + 0] = chain.states[i].absorb_p1;
    a[i][m + 1] = chain.states[i].absorb_p2;
    a[i][m + 2] = chain.states[i].toss_cost;
  }

  // Gaussian elimination with partial pivoting; the systems are tiny and
  // strictly diagonally dominant for non-degenerate biases.
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) {
      throw NonTerminationError(
          "singular transition system; the protocol cannot reach absorption "
          "from state " + chain.states[col].name);
    }
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col) continue;
      const double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < m + 3; ++k) {
        a[row][k] -= factor * a[col][k];
      }
    }
  }

  std::vector<StateSolution> solutions(m);
  for (std::size_t i = 0; i < m; ++i) {
    solutions[i] = {a[i][m + 0] / a[i][i], a[i][m + 1] / a[i][i],
                    a[i][m + 2] / a[i][i]};
  }
  return solutions;
}

ChainSolution absorbing_solve(Protocol protocol, double p) {
  const Chain chain = build_chain(protocol, p);
  const std::vector<StateSolution> by_state = solve_states(chain);
  ChainSolution total{0.0, 0.0, 0.0, chain.has_initial_toss};
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    total.p1_win += chain.initial[i] * by_state[i].p1_win;
    total.p2_win += chain.initial[i] * by_state[i].p2_win;
    total.expected_tosses += chain.initial[i] * by_state[i].expected_tosses;
  }
  return total;
}

}  // namespace fairtoss::oracle
