// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/distribution.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "fairtoss/errors.hpp"

namespace fairtoss {

namespace {

void check_entries(const std::vector<double>& p) {
  if (p.size() < 2) {
    throw ValidationError("distribution needs at least 2 faces, got " +
                          std::to_string(p.size()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) {
      throw ValidationError("probability " + std::to_string(i) +
                            " is not finite");
    }
    if (p[i] < 0.0) {
      std::ostringstream msg;
      msg << "probability " << i << " is negative: " << p[i];
      throw ValidationError(msg.str());
    }
  }
}

double entry_sum(const std::vector<double>& p) {
  double sum = 0.0;
  for (double v : p) sum += v;
  return sum;
}

}  // namespace

Distribution::Distribution(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  check_entries(p_);
  const double sum = entry_sum(p_);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << sum << ", not 1 (tolerance "
        << kSumTolerance << "); use Distribution::normalize for raw weights";
    throw ValidationError(msg.str());
  }
}

Distribution Distribution::normalize(std::vector<double> weights) {
  check_entries(weights);
  const double sum = entry_sum(weights);
  if (sum <= 0.0) {
    throw ValidationError("weights sum to zero; no distribution defined");
  }
  for (double& w : weights) w /= sum;
  // Division keeps each entry in [0,1] but the new sum can still sit a few
  // ulp away from 1; absorb that residue into the largest entry so the
  // strict constructor tolerance is always met.
  double resid = 1.0 - entry_sum(weights);
  std::size_t largest = 0;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] > weights[largest]) largest = i;
  }
  weights[largest] += resid;
  return Distribution(std::move(weights));
}

Distribution Distribution::coin(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "coin bias must lie in [0, 1], got " << p;
    throw ValidationError(msg.str());
  }
  return Distribution({p, 1.0 - p});
}

std::vector<std::size_t> Distribution::support() const {
  std::vector<std::size_t> faces;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] > 0.0) faces.push_back(i);
  }
  return faces;
}

std::size_t Distribution::support_size() const {
  std::size_t count = 0;
  for (double v : p_) {
    if (v > 0.0) ++count;
  }
  return count;
}

bool Distribution::is_uniform_on_support(double tolerance) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : p_) {
    if (v > 0.0) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo <= tolerance;
}

double Distribution::sum_squares() const {
  double sum = 0.0;
  for (double v : p_) sum += v * v;
  return sum;
}

double Distribution::sum_cubes() const {
  double sum = 0.0;
  for (double v : p_) sum += v * v * v;
  return sum;
}

}  // namespace fairtoss
