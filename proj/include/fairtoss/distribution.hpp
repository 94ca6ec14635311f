// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace fairtoss {

// A finite discrete probability distribution over n >= 2 die faces.
//
// Construction validates and stores the entries exactly as given: every entry
// must be finite and non-negative, and the entries must sum to 1 within an
// absolute tolerance of 1e-12. Inputs are never renormalized silently; use
// `normalize` to build a distribution from arbitrary non-negative weights.
class Distribution {
 public:
  // Absolute tolerance on |sum - 1| accepted by the constructor.
  static constexpr double kSumTolerance = 1e-12;

  explicit Distribution(std::vector<double> probabilities);

  // Builds a distribution from non-negative finite weights with a positive
  // sum, dividing each weight by the total. Throws ValidationError when the
  // weights are fewer than two, negative, non-finite, or all zero.
  static Distribution normalize(std::vector<double> weights);

  // A two-faced coin with P(heads) = p stored as (p, 1-p). Requires p in
  // [0, 1]. Face 0 is heads throughout the library.
  static Distribution coin(double p);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probabilities() const { return p_; }

  // Indices of the faces with strictly positive probability.
  std::vector<std::size_t> support() const;

  // Number of faces with strictly positive probability.
  std::size_t support_size() const;

  // True when exactly one face carries all the probability.
  bool is_point_mass() const { return support_size() == 1; }

  // True when every face in the support has the same probability, within an
  // absolute tolerance on the max-min spread.
  bool is_uniform_on_support(double tolerance = 1e-12) const;

  // Sum of squared probabilities: the chance two independent draws match.
  double sum_squares() const;

  // Sum of cubed probabilities: the chance three independent draws all
  // produce one fixed face, summed over faces.
  double sum_cubes() const;

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> p_;
};

}  // namespace fairtoss
