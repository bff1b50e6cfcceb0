#include "l2lab/kernels.hpp"

#include <bit>
#include <random>

namespace l2lab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

namespace {

inline bool all_even(const std::vector<std::uint32_t>& rows, std::uint32_t x) {
  for (std::uint32_t r : rows)
    if (std::popcount(x & r) & 1) return false;
  return true;
}

constexpr std::uint64_t kChunk = 1u << 14;

inline std::uint64_t mc_chunk(const std::vector<std::uint64_t>& basis,
                              std::uint64_t seed, std::uint64_t chunk_index,
                              std::uint64_t count,
                              const std::function<bool(std::uint64_t)>& event) {
  std::mt19937_64 rng(mix64(seed ^ mix64(chunk_index)));
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t coeffs = rng();
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((coeffs >> b) & 1) mask ^= basis[b];
    if (event(mask)) ++hits;
  }
  return hits;
}

}  // namespace

std::uint64_t count_even_parity_serial(const std::vector<std::uint32_t>& rows, int nbits) {
  std::uint64_t total = std::uint64_t(1) << nbits;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x)
    if (all_even(rows, static_cast<std::uint32_t>(x))) ++count;
  return count;
}

std::uint64_t count_even_parity_parallel(const std::vector<std::uint32_t>& rows, int nbits) {
  std::uint64_t total = std::uint64_t(1) << nbits;
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(total); ++x)
    if (all_even(rows, static_cast<std::uint32_t>(x))) ++count;
  return count;
}

std::uint64_t mc_hits_serial(const std::vector<std::uint64_t>& basis,
                             std::uint64_t samples, std::uint64_t seed,
                             const std::function<bool(std::uint64_t)>& event) {
  if (basis.size() > 64) return 0;
  std::uint64_t hits = 0;
  std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t n = std::min(kChunk, samples - c * kChunk);
    hits += mc_chunk(basis, seed, c, n, event);
  }
  return hits;
}

std::uint64_t mc_hits_parallel(const std::vector<std::uint64_t>& basis,
                               std::uint64_t samples, std::uint64_t seed,
                               const std::function<bool(std::uint64_t)>& event) {
  if (basis.size() > 64) return 0;
  std::uint64_t hits = 0;
  std::int64_t chunks = static_cast<std::int64_t>((samples + kChunk - 1) / kChunk);
#pragma omp parallel for reduction(+ : hits) schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t n = std::min(kChunk, samples - static_cast<std::uint64_t>(c) * kChunk);
    hits += mc_chunk(basis, seed, static_cast<std::uint64_t>(c), n, event);
  }
  return hits;
}

}  // namespace l2lab
