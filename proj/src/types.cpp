// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/types.hpp"

#include <algorithm>
#include <cctype>

namespace fairtoss {

std::optional<Protocol> parse_protocol(const std::string& name) {
  std::string lower(name.size(), '\0');
  std::transform(name.begin(), name.end(), lower.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (lower == "von-neumann" || lower == "vn") return Protocol::VonNeumann;
  if (lower == "blind") return Protocol::Blind;
  if (lower == "single-sound" || lower == "single") return Protocol::SingleSound;
  if (lower == "sound-von-neumann" || lower == "sound-vn" || lower == "svn")
    return Protocol::SoundVonNeumann;
  if (lower == "four-toss-naive" || lower == "four-toss")
    return Protocol::FourTossNaive;
  if (lower == "first-whistle" || lower == "fw") return Protocol::FirstWhistle;
  return std::nullopt;
}

}  // namespace fairtoss
