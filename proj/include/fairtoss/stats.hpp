// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

namespace fairtoss {

struct BitCounts {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  std::uint64_t total() const { return zeros + ones; }

  bool operator==(const BitCounts&) const = default;
};

// Every test below requires at least this many observations; smaller samples
// throw InsufficientDataError because the normal/chi-square approximations
// are not trustworthy there.
inline constexpr std::uint64_t kMinSample = 100;

// Exact upper critical values of the chi-square distribution with one degree
// of freedom. Only these three significance levels are supported; any other
// alpha throws ValidationError.
double chi_square_critical_df1(double alpha);

struct ChiSquareResult {
  double statistic = 0.0;
  double critical_value = 0.0;
  bool reject = false;

  bool operator==(const ChiSquareResult&) const = default;
};

// Two-sided goodness-of-fit test of the counts against a fair 50/50 split:
// statistic = sum over both cells of (observed - expected)^2 / expected with
// expected = total/2 and one degree of freedom; reject when the statistic
// exceeds the critical value for alpha (default 0.05). Symmetric in
// zeros/ones by construction.
ChiSquareResult chi_square_uniform(BitCounts counts, double alpha = 0.05);

// One-sample z statistic of the observed ones-fraction against p0:
// (ones/total - p0) / sqrt(p0 (1-p0) / total). Requires 0 < p0 < 1.
double proportion_z(BitCounts counts, double p0);

}  // namespace fairtoss
