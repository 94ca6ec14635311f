// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/exact.hpp"

#include <cmath>
#include <sstream>

#include "fairtoss/errors.hpp"

namespace fairtoss {

namespace {

void check_unit_interval(double p, const char* what) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " must lie in [0, 1], got " << p;
    throw ValidationError(msg.str());
  }
}

void check_non_degenerate(Protocol protocol, double p) {
  if (p == 0.0 || p == 1.0) {
    std::ostringstream msg;
    msg << to_string(protocol) << " never terminates on a constant coin (p = "
        << p << ")";
    throw NonTerminationError(msg.str());
  }
}

}  // namespace

double pr_two_doubles(const Distribution& d) {
  const double s = d.sum_squares();
  return s * s;
}

double pr_triple(const Distribution& d) { return d.sum_cubes(); }

double triple_advantage(double p) {
  check_unit_interval(p, "coin bias");
  return ((-4.0 * p + 8.0) * p - 5.0) * p * p + p;
}

AdvantageArgmax argmax_triple_advantage() {
  const double half_inv_sqrt2 = 0.5 / std::sqrt(2.0);
  return {0.5 - half_inv_sqrt2, 0.5 + half_inv_sqrt2, 0.0625};
}

double pr_match(const Distribution& d) { return d.sum_squares(); }

double pr_match_given_mismatch(const Distribution& d) {
  double numer = 0.0;
  double denom = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double pi = d[i];
    numer += pi * pi * (1.0 - pi);
    denom += pi * (1.0 - pi);
  }
  if (denom <= 0.0) {
    throw DegenerateConditioningError(
        "a mismatch has probability zero under a point mass; "
        "the conditional match probability is undefined");
  }
  return numer / denom;
}

double expected_tosses(Protocol protocol, double p) {
  check_unit_interval(p, "coin bias");
  if (protocol == Protocol::SingleSound) {
    // One sound always decides, whatever the coin does: exactly one toss
    // after the initial base toss.
    return 1.0;
  }
  check_non_degenerate(protocol, p);
  const double u = p * (1.0 - p);
  switch (protocol) {
    case Protocol::VonNeumann:
      // Each two-toss turn decides with probability 2u.
      return 1.0 / u;
    case Protocol::Blind:
      // One toss more than the von Neumann count: turns are the same, plus
      // the one decisive toss after the arming whistle.
      return 1.0 / u + 1.0;
    case Protocol::SoundVonNeumann: {
      // A turn from a heads base decides only when its second toss is tails
      // (probability 1-p), and every retry keeps a heads base; tails bases
      // mirror that with p. Two tosses per turn, weighted by the initial
      // base: p * 2/(1-p) + (1-p) * 2/p = 2(1-2u)/u.
      return 2.0 * (1.0 - 2.0 * u) / u;
    }
    case Protocol::FourTossNaive:
      // A four-toss group decides when its two compared sounds differ:
      // probability 2 * 2u(1-2u).
      return 1.0 / (u * (1.0 - 2.0 * u));
    case Protocol::FirstWhistle: {
      // One starting toss, then a clap run until the first whistle (mean
      // 1/(1-p) further tosses from a heads run, 1/p from a tails run), then
      // one decisive toss: 1 + p(1/(1-p) + 1) + (1-p)(1/p + 1) = 1/u.
      return 1.0 / u;
    }
    case Protocol::SingleSound:
      break;  // handled above
  }
  throw ValidationError("unknown protocol tag");
}

double flawed_win_probability(Protocol protocol, double p) {
  check_unit_interval(p, "coin bias");
  switch (protocol) {
    case Protocol::VonNeumann:
    case Protocol::Blind:
    case Protocol::FourTossNaive:
      // The two decisive sound/toss patterns are exact mirror images, so
      // each player wins exactly half of the decided games at any bias.
      check_non_degenerate(protocol, p);
      return 0.5;
    case Protocol::SingleSound:
      // Player 1 wins on a clap: the second toss repeats the first with
      // probability p^2 + (1-p)^2. Well-defined even at degenerate biases.
      return 2.0 * p * p - 2.0 * p + 1.0;
    case Protocol::SoundVonNeumann:
    case Protocol::FirstWhistle:
      // From a heads base the first player wins its turn with probability p,
      // from a tails base with probability 1-p, and the base itself is heads
      // with probability p: p^2 + (1-p)^2 = 2p^2 - 2p + 1.
      check_non_degenerate(protocol, p);
      return 2.0 * p * p - 2.0 * p + 1.0;
  }
  throw ValidationError("unknown protocol tag");
}

ExactReport make_exact_report(const Distribution& d) {
  ExactReport report;
  report.pr_triple = pr_triple(d);
  report.pr_two_doubles = pr_two_doubles(d);
  report.advantage = report.pr_triple - report.pr_two_doubles;
  report.pr_match = pr_match(d);
  if (!d.is_point_mass()) {
    report.pr_match_given_mismatch = pr_match_given_mismatch(d);
  }
  if (d.size() == 2) {
    report.is_coin = true;
    const double p = d[0];
    report.coin_p = p;
    if (p > 0.0 && p < 1.0) {
      for (Protocol protocol : kAllProtocols) {
        report.expected_tosses_by_protocol.emplace_back(
            protocol, expected_tosses(protocol, p));
        report.p1_win_by_protocol.emplace_back(
            protocol, flawed_win_probability(protocol, p));
      }
    }
  }
  return report;
}

}  // namespace fairtoss
