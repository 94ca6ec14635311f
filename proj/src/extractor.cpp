// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#include "fairtoss/extractor.hpp"

#include <string>

#include "fairtoss/errors.hpp"

namespace fairtoss {

std::vector<Sound> transduce(std::span<const Toss> tosses) {
  if (tosses.empty()) {
    throw EmptyStreamError("cannot transduce an empty toss sequence");
  }
  std::vector<Sound> sounds;
  sounds.reserve(tosses.size() - 1);
  for (std::size_t i = 1; i < tosses.size(); ++i) {
    sounds.push_back(tosses[i] == tosses[i - 1] ? Sound::Clap
                                                : Sound::Whistle);
  }
  return sounds;
}

ProtocolMachine::ProtocolMachine(Protocol protocol) : protocol_(protocol) {}

void ProtocolMachine::reset() {
  decided_ = false;
  tosses_ = 0;
  sounds_ = 0;
  pending_toss_.reset();
  pending_sound_.reset();
  group_x_.reset();
  group_slot_ = 0;
  armed_ = false;
}

std::uint64_t ProtocolMachine::tosses_consumed() const {
  if (protocol_ == Protocol::VonNeumann) return tosses_;
  return sounds_ == 0 ? 0 : sounds_ + 1;
}

std::optional<DecisionOutcome> ProtocolMachine::decide(Player winner) {
  decided_ = true;
  if (protocol_ == Protocol::VonNeumann) {
    return DecisionOutcome{winner, tosses_, tosses_ - 1};
  }
  return DecisionOutcome{winner, sounds_ + 1, sounds_};
}

std::optional<DecisionOutcome> ProtocolMachine::feed(Toss toss) {
  if (protocol_ != Protocol::VonNeumann) {
    throw ValidationError(std::string(to_string(protocol_)) +
                          " consumes sounds, not tosses");
  }
  if (decided_) return std::nullopt;
  ++tosses_;
  if (!pending_toss_) {
    pending_toss_ = toss;
    return std::nullopt;
  }
  const Toss first = *pending_toss_;
  pending_toss_.reset();
  if (first == Toss::Heads && toss == Toss::Tails) return decide(Player::P1);
  if (first == Toss::Tails && toss == Toss::Heads) return decide(Player::P2);
  return std::nullopt;  // doubled pair: retry with the next pair
}

std::optional<DecisionOutcome> ProtocolMachine::feed(Sound sound) {
  if (protocol_ == Protocol::VonNeumann) {
    throw ValidationError("von-neumann consumes tosses, not sounds");
  }
  if (decided_) return std::nullopt;
  ++sounds_;
  switch (protocol_) {
    case Protocol::SingleSound:
      return decide(sound == Sound::Clap ? Player::P1 : Player::P2);

    case Protocol::SoundVonNeumann: {
      if (!pending_sound_) {
        pending_sound_ = sound;
        return std::nullopt;
      }
      const Sound first = *pending_sound_;
      pending_sound_.reset();
      if (first == Sound::Clap && sound == Sound::Whistle)
        return decide(Player::P1);
      if (first == Sound::Whistle && sound == Sound::Clap)
        return decide(Player::P2);
      return std::nullopt;  // matching pair: next two-toss turn
    }

    case Protocol::FourTossNaive: {
      // Sounds arrive in a four-slot cycle per group of four fresh tosses:
      // slot 0 follows toss 2 (the X sound), slot 1 follows toss 3 (unused),
      // slot 2 follows toss 4 (the Y sound, where the group decides or
      // retries), slot 3 spans the boundary into the next group's first toss
      // and is consumed unused when the game continues.
      const int slot = group_slot_;
      group_slot_ = (group_slot_ + 1) % 4;
      if (slot == 0) {
        group_x_ = sound;
      } else if (slot == 2) {
        const Sound x = *group_x_;
        group_x_.reset();
        if (x == Sound::Clap && sound == Sound::Whistle)
          return decide(Player::P1);
        if (x == Sound::Whistle && sound == Sound::Clap)
          return decide(Player::P2);
      }
      return std::nullopt;
    }

    case Protocol::Blind: {
      if (armed_) {
        return decide(sound == Sound::Whistle ? Player::P1 : Player::P2);
      }
      // Arming candidates are the sounds following even-numbered tosses,
      // i.e. the odd positions 1, 3, 5, ... of the game's sound stream.
      if (sounds_ % 2 == 1 && sound == Sound::Whistle) armed_ = true;
      return std::nullopt;
    }

    case Protocol::FirstWhistle: {
      if (armed_) {
        return decide(sound == Sound::Whistle ? Player::P1 : Player::P2);
      }
      if (sound == Sound::Whistle) armed_ = true;
      return std::nullopt;
    }

    case Protocol::VonNeumann:
      break;  // unreachable, handled above
  }
  throw ValidationError("unknown protocol tag");
}

namespace {

DecisionOutcome run_to_decision(Protocol protocol,
                                std::span<const Toss> tosses) {
  ProtocolMachine machine(protocol);
  for (const Toss t : tosses) {
    if (auto outcome = machine.feed(t)) return *outcome;
  }
  throw IncompleteStreamError(
      std::string(to_string(protocol)) + ": toss stream ended after " +
      std::to_string(tosses.size()) + " tosses with no decision");
}

DecisionOutcome run_to_decision(Protocol protocol,
                                std::span<const Sound> sounds) {
  ProtocolMachine machine(protocol);
  for (const Sound s : sounds) {
    if (auto outcome = machine.feed(s)) return *outcome;
  }
  throw IncompleteStreamError(
      std::string(to_string(protocol)) + ": sound stream ended after " +
      std::to_string(sounds.size()) + " sounds with no decision");
}

}  // namespace

DecisionOutcome decide_von_neumann(std::span<const Toss> tosses) {
  return run_to_decision(Protocol::VonNeumann, tosses);
}

DecisionOutcome decide_single_sound(std::span<const Sound> sounds) {
  return run_to_decision(Protocol::SingleSound, sounds);
}

DecisionOutcome decide_sound_von_neumann(std::span<const Sound> sounds) {
  return run_to_decision(Protocol::SoundVonNeumann, sounds);
}

DecisionOutcome decide_four_toss_naive(std::span<const Sound> sounds) {
  return run_to_decision(Protocol::FourTossNaive, sounds);
}

DecisionOutcome decide_blind(std::span<const Sound> sounds) {
  return run_to_decision(Protocol::Blind, sounds);
}

DecisionOutcome decide_first_whistle(std::span<const Sound> sounds) {
  return run_to_decision(Protocol::FirstWhistle, sounds);
}

DecisionOutcome decide(Protocol protocol, std::span<const Toss> tosses) {
  if (protocol == Protocol::VonNeumann) {
    return run_to_decision(protocol, tosses);
  }
  if (tosses.empty()) {
    throw IncompleteStreamError(std::string(to_string(protocol)) +
                                ": empty toss stream");
  }
  const std::vector<Sound> sounds = transduce(tosses);
  return run_to_decision(protocol, sounds);
}

DecisionOutcome decide(Protocol protocol, std::span<const Sound> sounds) {
  if (protocol == Protocol::VonNeumann) {
    throw ValidationError(
        "von-neumann decisions need the tosses themselves; sounds only tell "
        "whether tosses repeated");
  }
  return run_to_decision(protocol, sounds);
}

namespace {

template <typename Event>
std::vector<std::uint8_t> extract_loop(Protocol protocol,
                                       std::span<const Event> events) {
  std::vector<std::uint8_t> bits;
  ProtocolMachine machine(protocol);
  for (const Event e : events) {
    if (auto outcome = machine.feed(e)) {
      bits.push_back(outcome->winner == Player::P1 ? 1 : 0);
      machine.reset();
    }
  }
  return bits;  // any unfinished trailing game is dropped
}

}  // namespace

std::vector<std::uint8_t> extract_bits(Protocol protocol,
                                       std::span<const Toss> tosses) {
  if (protocol == Protocol::VonNeumann) {
    return extract_loop<Toss>(protocol, tosses);
  }
  if (tosses.size() < 2) return {};
  const std::vector<Sound> sounds = transduce(tosses);
  return extract_loop<Sound>(protocol, sounds);
}

std::vector<std::uint8_t> extract_bits(Protocol protocol,
                                       std::span<const Sound> sounds) {
  if (protocol == Protocol::VonNeumann) {
    throw ValidationError(
        "von-neumann extraction needs the tosses themselves; sounds only "
        "tell whether tosses repeated");
  }
  return extract_loop<Sound>(protocol, sounds);
}

}  // namespace fairtoss
