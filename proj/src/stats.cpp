// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/stats.hpp"

#include <cmath>
#include <sstream>

#include "fairtoss/errors.hpp"

namespace fairtoss {

namespace {

void check_sample_size(BitCounts counts) {
  if (counts.total() < kMinSample) {
    std::ostringstream msg;
    msg << "sample of " << counts.total() << " bits is below the minimum of "
        << kMinSample << " for a trustworthy approximation";
    throw InsufficientDataError(msg.str());
  }
}

}  // namespace

double chi_square_critical_df1(double alpha) {
  // Upper quantiles of chi-square with one degree of freedom, i.e. the
  // squares of the standard normal two-sided critical values.
  if (alpha == 0.05) return 3.841458820694124;
  if (alpha == 0.01) return 6.634896601021213;
  if (alpha == 0.001) return 10.827566170662733;
  std::ostringstream msg;
  msg << "unsupported significance level " << alpha
      << "; supported: 0.05, 0.01, 0.001";
  throw ValidationError(msg.str());
}

ChiSquareResult chi_square_uniform(BitCounts counts, double alpha) {
  const double critical = chi_square_critical_df1(alpha);
  check_sample_size(counts);
  const double expected = static_cast<double>(counts.total()) / 2.0;
  const double dz = static_cast<double>(counts.zeros) - expected;
  const double d1 = static_cast<double>(counts.ones) - expected;
  const double statistic = (dz * dz + d1 * d1) / expected;
  return {statistic, critical, statistic > critical};
}

double proportion_z(BitCounts counts, double p0) {
  if (!std::isfinite(p0) || p0 <= 0.0 || p0 >= 1.0) {
    throw ValidationError("reference proportion must lie strictly in (0, 1)");
  }
  check_sample_size(counts);
  const double total = static_cast<double>(counts.total());
  const double observed = static_cast<double>(counts.ones) / total;
  return (observed - p0) / std::sqrt(p0 * (1.0 - p0) / total);
}

}  // namespace fairtoss
