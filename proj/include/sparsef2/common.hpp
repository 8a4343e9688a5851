#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace sparsef2 {

// Selects the serial reference path or the OpenMP kernel. Both return
// identical results; the serial path is kept as the testing oracle.
enum class Exec { kSerial, kParallel };

// Default caps: number of enumerated states, and table entries held in memory.
inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000'000ULL;
inline constexpr std::uint64_t kDefaultMemoryCap = 60'000'000ULL;

using Rng = std::mt19937_64;

// Portable draws: std distributions are implementation-defined, and outputs
// must be reproducible from the seed alone.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// Saturating binomial coefficient; returns UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// sum_{i <= k} C(n, i), saturating.
std::uint64_t binomial_prefix(std::uint64_t n, std::uint64_t k);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// Advances c (strictly increasing indices in [0, n)) to the next
// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n);

// 64-bit FNV-1a over a byte string, used for provenance hashes.
std::uint64_t fnv1a(const void* data, std::size_t len);

}  // namespace sparsef2
