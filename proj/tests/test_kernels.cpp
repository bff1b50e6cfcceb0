#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "l2lab/kernels.hpp"
#include "l2lab/measure.hpp"

using namespace l2lab;

TEST_CASE("parity counting: parallel kernel equals the serial reference") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    int nbits = 10 + static_cast<int>(rng() % 9);
    std::vector<std::uint32_t> rows;
    for (int r = 0, n = static_cast<int>(rng() % 10); r < n; ++r)
      rows.push_back(static_cast<std::uint32_t>(rng()) & ((1u << nbits) - 1));
    CHECK(count_even_parity_serial(rows, nbits) == count_even_parity_parallel(rows, nbits));
  }
  // no rows: every assignment counts
  CHECK(count_even_parity_parallel({}, 12) == (1u << 12));
  // one full row: exactly half
  CHECK(count_even_parity_parallel({(1u << 12) - 1}, 12) == (1u << 11));
}

TEST_CASE("monte-carlo driver: parallel equals serial and is seed-deterministic") {
  std::vector<std::uint64_t> basis;
  std::mt19937_64 rng(103);
  for (int i = 0; i < 17; ++i) basis.push_back(rng());
  auto event = [](std::uint64_t m) { return (m & 0xff) == 0x2a; };

  for (std::uint64_t seed : {1ull, 42ull, 999ull}) {
    std::uint64_t a = mc_hits_serial(basis, 300000, seed, event);
    std::uint64_t b = mc_hits_parallel(basis, 300000, seed, event);
    CHECK(a == b);
    CHECK(b == mc_hits_parallel(basis, 300000, seed, event));
  }
  CHECK(mc_hits_parallel(basis, 300000, 1, event) != mc_hits_parallel(basis, 300000, 2, event));
}

TEST_CASE("brute counting via both kernels on a real window") {
  GroupId g = GroupId::Free2;
  auto sys = RelationSystem::hook_system(g, 2, 2, IndexSetSpec::explicit_set({Integer(2)}));
  // same residual system, counted serially
  BitMatrix rows = relation_rows(sys, sys.window);
  std::vector<std::uint32_t> masks;
  for (int r = 0; r < rows.rows(); ++r) {
    std::uint32_t m = 0;
    for (std::size_t c = 0; c < sys.window.size(); ++c)
      if (rows.get(r, static_cast<int>(c))) m |= 1u << c;
    if (m) masks.push_back(m);
  }
  int n = static_cast<int>(sys.window.size());
  CHECK(count_even_parity_serial(masks, n) == count_even_parity_parallel(masks, n));
  CHECK(count_even_parity_serial(masks, n) == brute_count_extendable(sys));
}
