// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fairtoss/errors.hpp"

namespace fairtoss {

// A single coin toss outcome. Numeric values follow the usual bit mapping
// tails -> 0, heads -> 1.
enum class Toss : std::uint8_t { Tails = 0, Heads = 1 };

// The audible cue emitted between tosses: a clap when the new toss repeats
// the previous one, a whistle when it differs. Numerically a sound is the
// XOR of the two tosses it compares: same -> 0 (clap), different -> 1
// (whistle).
enum class Sound : std::uint8_t { Clap = 0, Whistle = 1 };

// Which player a finished game awards.
enum class Player : std::uint8_t { P1 = 1, P2 = 2 };

// The decision procedures the library implements. VonNeumann and Blind are
// fair for every coin bias in (0,1); the other four are known-flawed
// variants kept for comparison and for negative controls in tests.
enum class Protocol : std::uint8_t {
  VonNeumann = 0,      // toss pairs; HT -> P1, TH -> P2, otherwise retry
  Blind = 1,           // sound-only; the first whistle heard after an
                       // even-numbered toss arms the game, and the following
                       // sound decides (whistle -> P1, clap -> P2)
  SingleSound = 2,     // the very first sound decides (clap -> P1, whistle -> P2)
  SoundVonNeumann = 3, // sound pairs after an initial base toss;
                       // clap-whistle -> P1, whistle-clap -> P2, otherwise retry
  FourTossNaive = 4,   // groups of four fresh tosses; compares the sound after
                       // the 2nd toss with the sound after the 4th,
                       // clap-whistle -> P1, whistle-clap -> P2, retry on equal
  FirstWhistle = 5,    // the first whistle anywhere arms the game; the
                       // following sound decides (whistle -> P1, clap -> P2)
};

inline constexpr Protocol kAllProtocols[] = {
    Protocol::VonNeumann,   Protocol::Blind,         Protocol::SingleSound,
    Protocol::SoundVonNeumann, Protocol::FourTossNaive, Protocol::FirstWhistle,
};

constexpr const char* to_string(Toss t) {
  return t == Toss::Heads ? "H" : "T";
}

constexpr const char* to_string(Sound s) {
  return s == Sound::Whistle ? "W" : "C";
}

constexpr const char* to_string(Player w) {
  return w == Player::P1 ? "P1" : "P2";
}

constexpr const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::VonNeumann:      return "von-neumann";
    case Protocol::Blind:           return "blind";
    case Protocol::SingleSound:     return "single-sound";
    case Protocol::SoundVonNeumann: return "sound-von-neumann";
    case Protocol::FourTossNaive:   return "four-toss-naive";
    case Protocol::FirstWhistle:    return "first-whistle";
  }
  return "?";
}

// Parses a protocol name as printed by to_string, plus common short aliases
// (vn, sound-vn, svn, single, four-toss, fw). Case-insensitive. Returns
// nullopt on unknown input so callers can produce their own diagnostics.
std::optional<Protocol> parse_protocol(const std::string& name);

// True for the protocols whose accounting starts with one silent base-setting
// toss before the first sound. Their expected-toss figures exclude that
// initial toss; DecisionOutcome::tosses_consumed includes it.
constexpr bool has_initial_toss(Protocol p) {
  return p == Protocol::SingleSound || p == Protocol::SoundVonNeumann;
}

// True for the protocols that consume sound streams; VonNeumann is the only
// one that consumes tosses directly.
constexpr bool consumes_sounds(Protocol p) {
  return p != Protocol::VonNeumann;
}

// Result of running one protocol game to its decision.
struct DecisionOutcome {
  Player winner;
  // Total coin tosses the game consumed, counting the silent initial toss for
  // protocols that have one.
  std::uint64_t tosses_consumed = 0;
  // Sounds consumed, always tosses_consumed - 1: every toss after the first
  // produces exactly one sound.
  std::uint64_t sounds_consumed = 0;

  bool operator==(const DecisionOutcome&) const = default;
};

}  // namespace fairtoss
