// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace qmagic {

/// splitmix64 step; used to whiten seed material.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d9e3b873594faeULL;
  return x ^ (x >> 31);
}

/// Deterministic per-sample engine derived from (master_seed, sample_index).
/// Results are reproducible for a fixed master seed regardless of how samples
/// are distributed over workers.
inline std::mt19937_64 derived_rng(uint64_t master_seed, uint64_t sample_index) {
  uint64_t s = splitmix64(master_seed ^ splitmix64(sample_index + 1));
  std::seed_seq seq{static_cast<uint32_t>(s), static_cast<uint32_t>(s >> 32),
                    static_cast<uint32_t>(sample_index),
                    static_cast<uint32_t>(master_seed)};
  return std::mt19937_64(seq);
}

}  // namespace qmagic
