//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_UTIL_RANDOM_H_
#define BRS_UTIL_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace brs {

// Raw engine output is fully specified by the standard; distributions and
// std::shuffle are not. Everything seeded in this project goes through the
// helpers below so that outputs agree across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream seed derived from a master seed and a list of integers.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p));
  return h;
}

// Index in [0, n).
inline std::size_t random_index(Rng &rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

template <class T>
void seeded_shuffle(std::vector<T> &v, Rng &rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = random_index(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace brs

#endif  // BRS_UTIL_RANDOM_H_
