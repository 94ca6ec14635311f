// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairtoss/types.hpp"

namespace fairtoss {

// Converts a toss sequence into its sound sequence: element i compares toss
// i+1 with toss i, clap on equal, whistle on different. Output length is
// input length - 1; the first toss produces no sound. Throws
// EmptyStreamError on an empty input.
std::vector<Sound> transduce(std::span<const Toss> tosses);

// Streaming state machine for one protocol game. Feed events one at a time;
// the feed call that completes the game returns its DecisionOutcome and the
// machine ignores further input until reset(). VonNeumann consumes tosses,
// every other protocol consumes sounds; feeding the wrong kind throws
// ValidationError.
//
// Each instance is single-owner mutable state: it may be moved across
// threads but not shared. All counters are per-game and cleared by reset().
class ProtocolMachine {
 public:
  explicit ProtocolMachine(Protocol protocol);

  Protocol protocol() const { return protocol_; }

  std::optional<DecisionOutcome> feed(Toss toss);
  std::optional<DecisionOutcome> feed(Sound sound);

  bool decided() const { return decided_; }

  // Events consumed since construction or the last reset. For sound-consuming
  // protocols tosses_consumed() is sounds_consumed() + 1 once a sound has
  // been heard (the base toss plus one toss per sound).
  std::uint64_t tosses_consumed() const;
  std::uint64_t sounds_consumed() const { return sounds_; }

  // Returns the machine to its initial state for a fresh game.
  void reset();

 private:
  std::optional<DecisionOutcome> decide(Player winner);

  Protocol protocol_;
  bool decided_ = false;
  std::uint64_t tosses_ = 0;  // VonNeumann only
  std::uint64_t sounds_ = 0;  // sound protocols only
  // Protocol-specific per-game state.
  std::optional<Toss> pending_toss_;    // VonNeumann: first toss of the pair
  std::optional<Sound> pending_sound_;  // SoundVonNeumann: first of the pair
  std::optional<Sound> group_x_;        // FourTossNaive: the group's X sound
  int group_slot_ = 0;                  // FourTossNaive: position within group
  bool armed_ = false;                  // Blind, FirstWhistle
};

// Single-game deciders. Each consumes the shortest prefix that finishes one
// game and reports the winner with its toss and sound counts; if the input
// ends first they throw IncompleteStreamError.
DecisionOutcome decide_von_neumann(std::span<const Toss> tosses);
DecisionOutcome decide_single_sound(std::span<const Sound> sounds);
DecisionOutcome decide_sound_von_neumann(std::span<const Sound> sounds);
DecisionOutcome decide_four_toss_naive(std::span<const Sound> sounds);
DecisionOutcome decide_blind(std::span<const Sound> sounds);
DecisionOutcome decide_first_whistle(std::span<const Sound> sounds);

// Dispatch on the protocol tag: tosses for VonNeumann, sounds otherwise.
// The toss overload transduces implicitly for sound protocols; the sound
// overload throws ValidationError for VonNeumann, whose decisions cannot be
// reconstructed from sounds alone.
DecisionOutcome decide(Protocol protocol, std::span<const Toss> tosses);
DecisionOutcome decide(Protocol protocol, std::span<const Sound> sounds);

// Repeated extraction: runs game after game over the input, emitting one bit
// per decision (Player 1 -> 1, Player 2 -> 0) and starting the next game at
// the next unconsumed event. A trailing unfinished game is dropped silently;
// short input gives an empty result rather than an error. The toss overload
// feeds VonNeumann directly and transduces for the sound protocols; the
// sound overload throws ValidationError for VonNeumann.
std::vector<std::uint8_t> extract_bits(Protocol protocol,
                                       std::span<const Toss> tosses);
std::vector<std::uint8_t> extract_bits(Protocol protocol,
                                       std::span<const Sound> sounds);

}  // namespace fairtoss
