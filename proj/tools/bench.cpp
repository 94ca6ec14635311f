// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

// Times the parallel simulation kernels against their single-threaded
// reference implementations and verifies that both produce identical
// reports. Timing is informational only: the contract is equality of
// output, not a particular speedup, which depends on the host's cores.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "fairtoss/distribution.hpp"
#include "fairtoss/simulate.hpp"
#include "fairtoss/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const std::string& name, double serial_s, double parallel_s,
            bool identical) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              name.c_str(), serial_s, parallel_s,
              parallel_s > 0.0 ? serial_s / parallel_s : 0.0,
              identical ? "outputs identical" : "OUTPUT MISMATCH");
  if (!identical) ++failures;
}

void bench_protocol(fairtoss::Protocol protocol, double p,
                    std::uint64_t trials) {
  const std::uint64_t seed = 20260816;
  const auto t0 = Clock::now();
  const auto serial =
      fairtoss::run_protocol_trials_serial(protocol, p, trials, seed);
  const double serial_s = seconds_since(t0);

  const auto t1 = Clock::now();
  const auto parallel =
      fairtoss::run_protocol_trials(protocol, p, trials, seed);
  const double parallel_s = seconds_since(t1);

  report(std::string("trials ") + fairtoss::to_string(protocol), serial_s,
         parallel_s, serial == parallel);
}

void bench_dice(std::uint64_t rounds) {
  const std::uint64_t seed = 20260816;
  const fairtoss::Distribution dist({0.5, 0.25, 0.125, 0.125});

  const auto t0 = Clock::now();
  const auto serial = fairtoss::run_dice_game_serial(dist, rounds, seed);
  const double serial_s = seconds_since(t0);

  const auto t1 = Clock::now();
  const auto parallel = fairtoss::run_dice_game(dist, rounds, seed);
  const double parallel_s = seconds_since(t1);

  report("dice-game rounds", serial_s, parallel_s, serial == parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run serial code\n");
#endif
  bench_protocol(fairtoss::Protocol::VonNeumann, 0.3, 2'000'000);
  bench_protocol(fairtoss::Protocol::Blind, 0.5, 2'000'000);
  bench_protocol(fairtoss::Protocol::SoundVonNeumann, 0.9, 1'000'000);
  bench_dice(2'000'000);
  return failures == 0 ? 0 : 1;
}
