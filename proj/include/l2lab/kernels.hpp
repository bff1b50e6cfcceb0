#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace l2lab {

/// splitmix64; used to derive independent per-chunk RNG streams.
std::uint64_t mix64(std::uint64_t x);

/// Number of assignments x in [0, 2^nbits) with popcount(x & row) even for
/// every row. Serial reference and OpenMP kernel compute identical values.
std::uint64_t count_even_parity_serial(const std::vector<std::uint32_t>& rows, int nbits);
std::uint64_t count_even_parity_parallel(const std::vector<std::uint32_t>& rows, int nbits);

/// Monte-Carlo driver: draws `samples` uniform solutions of a GF(2) system
/// given by a kernel basis over <= 64 window bits and counts event hits.
/// Sampling is chunked and each chunk reseeded from (seed, chunk), so the
/// result is identical for the serial and parallel versions and independent
/// of the thread count.
std::uint64_t mc_hits_serial(const std::vector<std::uint64_t>& basis,
                             std::uint64_t samples, std::uint64_t seed,
                             const std::function<bool(std::uint64_t)>& event);
std::uint64_t mc_hits_parallel(const std::vector<std::uint64_t>& basis,
                               std::uint64_t samples, std::uint64_t seed,
                               const std::function<bool(std::uint64_t)>& event);

}  // namespace l2lab
