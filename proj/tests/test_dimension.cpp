#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2lab/dimension.hpp"
#include "l2lab/measure.hpp"

using namespace l2lab;

namespace {

IndexSetSpec iset(std::vector<std::int64_t> els) {
  std::vector<Integer> v(els.begin(), els.end());
  return IndexSetSpec::explicit_set(std::move(v));
}

}  // namespace

TEST_CASE("series constants") {
  auto [b1, b2] = beta_constants();
  CHECK(b1 == Rational(3, 261121));
  CHECK(b2 == Rational(6144, 261121));
  CHECK(b2 / b1 == rational_pow2(11));

  auto [c1, c2] = closed_form_constants();
  CHECK(c1 == Rational(257, 16711744));
  CHECK(c2 == Rational(48, 261121));
}

TEST_CASE("closed form values for small index sets") {
  auto [c1, c2] = closed_form_constants();

  auto e2 = dimension_closed_form(iset({2}), 8);
  CHECK(e2.is_point());
  CHECK(e2.lower == c1);

  auto e25 = dimension_closed_form(iset({2, 5}), 8);
  CHECK(e25.is_point());
  CHECK(e25.lower == c1 + c2 * rational_pow2(-29));

  // malformed index sets are rejected
  CHECK_THROWS_AS(dimension_closed_form(iset({2, 6}), 4), usage_error);
  CHECK_THROWS_AS(dimension_closed_form(iset({3}), 4), usage_error);
  CHECK_THROWS_AS(dimension_closed_form(iset({2, 8, 5}), 4), usage_error);
}

TEST_CASE("factorial-rule enclosures shrink with more terms") {
  IndexSetSpec f = IndexSetSpec::factorial_rule(6);
  auto e3 = dimension_closed_form(f, 3);
  auto e4 = dimension_closed_form(f, 4);
  CHECK(!e3.is_point());
  CHECK(e3.lower <= e4.lower);
  CHECK(e4.upper <= e3.upper);
  CHECK(e3.contains(e4));
  // stated tail majorant: width < 2^{-6 n_5 + 10} at 4 terms (n_5 = 122)
  CHECK(e4.width() < rational_pow2(-6 * 122 + 10));
}

TEST_CASE("direct sum: hand-countable truncation and tail") {
  // L = 2 keeps exactly the hooks (1,2) and (2,1)
  auto e = dimension_direct_sum(iset({2}), 2);
  CHECK(e.lower == Rational(2) * rational_pow2(-17));
  CHECK(e.upper - e.lower == rational_pow2(-16) * Rational(8, 21));
}

TEST_CASE("summand audit bridges the two modules") {
  IndexSetSpec I2 = iset({2});
  CHECK(summand_audit(I2, 1, 2) == Dyadic::power_of_two(-17));
  CHECK(summand_audit(I2, 2, 2) == Dyadic());
  CHECK(summand_audit(I2, 2, 4) == Dyadic::power_of_two(-25));
  CHECK(summand_audit(I2, 2, 4) == hook_measure(2, 4, I2));
}

TEST_CASE("route agreement at L = 80") {
  for (auto els : {std::vector<std::int64_t>{2}, {2, 5}, {2, 5, 8}, {2, 11, 20}}) {
    IndexSetSpec I = iset(els);
    auto closed = dimension_closed_form(I, 16);
    auto direct = dimension_direct_sum(I, 80);
    REQUIRE(closed.is_point());
    CHECK(direct.contains(closed.lower));
    CHECK(direct.width() <= rational_pow2(-200));
  }
}

TEST_CASE("single-box identity") {
  for (std::int64_t n : {2, 5}) {
    auto enc = u_box_truncated(n, 80);
    CHECK(enc.contains(u_box_closed_form(n)));
    CHECK(enc.width() <= rational_pow2(-150));
  }
}

TEST_CASE("monotonicity in the index set") {
  auto base = dimension_closed_form(iset({2, 8}), 8).lower;
  CHECK(dimension_closed_form(iset({2, 5, 8}), 8).lower > base);
  CHECK(dimension_closed_form(iset({2, 8, 11}), 8).lower > base);
  auto d_base = dimension_direct_sum(iset({2, 8}), 40);
  auto d_more = dimension_direct_sum(iset({2, 5, 8}), 40);
  CHECK(d_more.lower > d_base.lower);
}

TEST_CASE("dimension values lie in (0,1)") {
  for (auto els : {std::vector<std::int64_t>{2}, {2, 5}, {2, 5, 8, 11, 14, 17, 20}}) {
    auto e = dimension_closed_form(iset(els), 16);
    CHECK(e.lower > 0);
    CHECK(e.upper < 1);
  }
  IndexSetSpec f = IndexSetSpec::factorial_rule(8);
  auto e = dimension_closed_form(f, 6);
  CHECK(e.lower > 0);
  CHECK(e.upper < 1);
}

TEST_CASE("liouville audit on the factorial rule") {
  IndexSetSpec f = IndexSetSpec::factorial_rule(6);
  auto witnesses = liouville_audit(f, 5);
  REQUIRE(witnesses.size() == 5);
  for (const auto& w : witnesses) {
    CHECK(w.ok);
    CHECK(w.K >= 1);
  }
  // the audit needs an unbounded set
  CHECK_THROWS_AS(liouville_audit(iset({2, 5}), 3), usage_error);
}
