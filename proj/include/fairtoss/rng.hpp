// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>

namespace fairtoss {

// Philox4x32-10 counter-based pseudo-random generator.
//
// The generator is a pure function of (key, counter): key = the two 32-bit
// halves of the seed, counter = the four 32-bit words (block lo, block hi,
// stream lo, stream hi). Each block of output is four 32-bit words, packed
// into two 64-bit results little-endian (word0 | word1 << 32, then
// word2 | word3 << 32). Uniform doubles take the top 53 bits of a 64-bit
// result: (x >> 11) * 2^-53, giving values in [0, 1).
//
// Because output depends only on (seed, stream, position), any trial or round
// can be given its own stream id and generated independently on any thread,
// in any order, with identical results. The algorithm is standard and
// portable; the layout above is everything needed to reproduce the sequences
// in another language.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  // The ten-round keyed bijection on one 128-bit counter block.
  static Block round10(Block counter, Key key) {
    for (int r = 0; r < 9; ++r) {
      counter = single_round(counter, key);
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return single_round(counter, key);
  }

  // Generates the two 64-bit words of block `block_index` of this
  // (seed, stream) sequence, independent of any internal state.
  std::array<std::uint64_t, 2> block_at(std::uint64_t block_index) const {
    const Block out = round10(
        {static_cast<std::uint32_t>(block_index),
         static_cast<std::uint32_t>(block_index >> 32),
         static_cast<std::uint32_t>(stream_),
         static_cast<std::uint32_t>(stream_ >> 32)},
        key_);
    return {static_cast<std::uint64_t>(out[0]) |
                (static_cast<std::uint64_t>(out[1]) << 32),
            static_cast<std::uint64_t>(out[2]) |
                (static_cast<std::uint64_t>(out[3]) << 32)};
  }

  std::uint64_t next_u64() {
    if (have_buffered_) {
      have_buffered_ = false;
      return buffered_;
    }
    const auto words = block_at(next_block_++);
    buffered_ = words[1];
    have_buffered_ = true;
    return words[0];
  }

  // Uniform double in [0, 1) from the top 53 bits of next_u64.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t stream() const { return stream_; }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static Block single_round(const Block& c, const Key& key) {
    const std::uint64_t prod0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t prod1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const auto lo0 = static_cast<std::uint32_t>(prod0);
    const auto hi0 = static_cast<std::uint32_t>(prod0 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(prod1);
    const auto hi1 = static_cast<std::uint32_t>(prod1 >> 32);
    return {hi1 ^ c[1] ^ key[0], lo1, hi0 ^ c[3] ^ key[1], lo0};
  }

  Key key_;
  std::uint64_t stream_;
  std::uint64_t next_block_ = 0;
  std::uint64_t buffered_ = 0;
  bool have_buffered_ = false;
};

}  // namespace fairtoss
