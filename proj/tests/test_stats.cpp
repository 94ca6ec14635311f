// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include <cstdint>

#include <doctest.h>

#include "fairtoss/errors.hpp"
#include "fairtoss/extractor.hpp"
#include "fairtoss/rng.hpp"
#include "fairtoss/simulate.hpp"
#include "fairtoss/stats.hpp"
#include "test_util.hpp"

using namespace fairtoss;
using fairtoss::test::close;

namespace {

// Streams protocol decisions at bias p until `bits` bits have been emitted,
// returning the zero/one counts. Each (seed, stream) pair is an independent
// reproducible run.
BitCounts protocol_bit_counts(Protocol proto, double p, std::uint64_t bits,
                              std::uint64_t seed, std::uint64_t stream) {
  Philox4x32 gen(seed, stream);
  ProtocolMachine machine(proto);
  BitCounts counts;
  Toss prev = sample_toss(gen, p);  // base toss
  while (counts.total() < bits) {
    const Toss next = sample_toss(gen, p);
    const Sound sound =
        next == prev ? Sound::Clap : Sound::Whistle;
    prev = next;
    if (const auto outcome = machine.feed(sound)) {
      if (outcome->winner == Player::P1) {
        ++counts.ones;
      } else {
        ++counts.zeros;
      }
      machine.reset();
    }
  }
  return counts;
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("chi-square critical values for one degree of freedom") {
  CHECK(chi_square_critical_df1(0.05) == 3.841458820694124);
  CHECK(chi_square_critical_df1(0.01) == 6.634896601021213);
  CHECK(chi_square_critical_df1(0.001) == 10.827566170662733);
  CHECK_THROWS_AS(chi_square_critical_df1(0.02), ValidationError);
  CHECK_THROWS_AS(chi_square_critical_df1(0.0), ValidationError);
  CHECK_THROWS_AS(chi_square_critical_df1(1.0), ValidationError);
}

TEST_CASE("chi-square uniformity test: pinned statistics") {
  const ChiSquareResult balanced = chi_square_uniform({500, 500});
  CHECK(balanced.statistic == 0.0);
  CHECK_FALSE(balanced.reject);

  const ChiSquareResult biased = chi_square_uniform({600, 400});
  CHECK(biased.statistic == 40.0);
  CHECK(biased.reject);
  CHECK(biased.critical_value == 3.841458820694124);

  const ChiSquareResult mild = chi_square_uniform({512, 488});
  CHECK(close(mild.statistic, 0.576, 1e-12));
  CHECK_FALSE(mild.reject);

  // Swapping the cells cannot change the statistic.
  CHECK(chi_square_uniform({488, 512}).statistic == mild.statistic);

  // The same counts clear the bar at 5% but not at stricter levels.
  const ChiSquareResult at5 = chi_square_uniform({566, 434}, 0.05);
  CHECK(close(at5.statistic, 17.424, 1e-12));
  CHECK(at5.reject);
  CHECK(chi_square_uniform({566, 434}, 0.01).reject);
  const ChiSquareResult edge = chi_square_uniform({535, 465}, 0.05);
  CHECK(close(edge.statistic, 4.9, 1e-12));
  CHECK(edge.reject);                                        // 4.9 > 3.841
  CHECK_FALSE(chi_square_uniform({535, 465}, 0.01).reject);  // 4.9 < 6.635
}

TEST_CASE("chi-square validation") {
  CHECK_THROWS_AS(chi_square_uniform({600, 400}, 0.5), ValidationError);
  CHECK_THROWS_AS(chi_square_uniform({30, 30}), InsufficientDataError);
  CHECK_THROWS_AS(chi_square_uniform({99, 0}), InsufficientDataError);
  CHECK_NOTHROW(chi_square_uniform({50, 50}));  // exactly the minimum
}

TEST_CASE("proportion z statistic: pinned values and direction") {
  CHECK(proportion_z({500, 500}, 0.5) == 0.0);
  CHECK(close(proportion_z({400, 600}, 0.5), 6.324555320336759, 1e-12));
  CHECK(close(proportion_z({600, 400}, 0.5), -6.324555320336759, 1e-12));
  CHECK(close(proportion_z({0, 100}, 0.5), 10.0, 1e-12));
  CHECK(close(proportion_z({100, 0}, 0.5), -10.0, 1e-12));
  // Testing against the true rate keeps the statistic small.
  CHECK(close(proportion_z({320, 680}, 0.68), 0.0, 1e-12));

  CHECK_THROWS_AS(proportion_z({500, 500}, 0.0), ValidationError);
  CHECK_THROWS_AS(proportion_z({500, 500}, 1.0), ValidationError);
  CHECK_THROWS_AS(proportion_z({500, 500}, -0.2), ValidationError);
  CHECK_THROWS_AS(proportion_z({40, 40}, 0.5), InsufficientDataError);
}

TEST_CASE("calibration: fair extracted bits are rejected at roughly the"
          " nominal 5% level") {
  // 1000 independent runs of 10^4 bits each from the listening-blind
  // protocol at bias 0.8. The bits are exactly fair, so the rejection rate
  // must sit near alpha = 0.05; [0.02, 0.09] is far beyond 4 sigma slack.
  constexpr int kRuns = 1000;
  constexpr std::uint64_t kBits = 10000;
  int rejections = 0;
  for (int run = 0; run < kRuns; ++run) {
    const BitCounts counts = protocol_bit_counts(
        Protocol::Blind, 0.8, kBits, 505, static_cast<std::uint64_t>(run));
    REQUIRE(counts.total() == kBits);
    if (chi_square_uniform(counts, 0.05).reject) ++rejections;
  }
  const double rate = rejections / static_cast<double>(kRuns);
  INFO("rejection rate ", rate);
  CHECK(rate >= 0.02);
  CHECK(rate <= 0.09);
}

TEST_CASE("negative control: first-sound bits at bias 0.8 always fail the"
          " uniformity test") {
  // The first-sound protocol emits ones with probability 0.68 at bias 0.8;
  // at 10^4 bits the statistic concentrates near 1296, far past every
  // critical value, so rejections must exceed 99% of runs.
  constexpr int kRuns = 300;
  constexpr std::uint64_t kBits = 10000;
  int rejections = 0;
  for (int run = 0; run < kRuns; ++run) {
    const BitCounts counts = protocol_bit_counts(
        Protocol::SingleSound, 0.8, kBits, 606,
        static_cast<std::uint64_t>(run));
    if (chi_square_uniform(counts, 0.001).reject) ++rejections;
  }
  CHECK(rejections >= 297);
}

}  // TEST_SUITE
