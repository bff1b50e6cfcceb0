#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "l2lab/closure.hpp"

using namespace l2lab;

namespace {

Rational digit_sum(const std::vector<Integer>& I, int D) {
  Rational s(0);
  for (const Integer& n : I)
    s += rational_pow2(-D * static_cast<std::int64_t>(n));
  return s;
}

IndexSetSpec iset(std::vector<std::int64_t> els) {
  std::vector<Integer> v(els.begin(), els.end());
  return IndexSetSpec::explicit_set(std::move(v));
}

}  // namespace

TEST_CASE("split_digits on the worked examples") {
  auto one = split_digits({Integer(1)}, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0].value() == rational_pow2(-2));
  CHECK(one[1].is_zero());

  auto three = split_digits({Integer(1), Integer(2), Integer(3)}, 2);
  REQUIRE(three.size() == 2);
  CHECK(three[0].value() == rational_pow2(-2) + 2 * rational_pow2(-8));
  CHECK(three[1].value() == rational_pow2(-4) + 2 * rational_pow2(-8));
  CHECK(three[0].value() + three[1].value() ==
        rational_pow2(-2) + rational_pow2(-4) + rational_pow2(-6));
}

TEST_CASE("split_digits: exact sum and well-formedness on random digit sets") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    int D = 2 + static_cast<int>(rng() % 4);
    std::set<std::int64_t> raw;
    int size = static_cast<int>(rng() % 65);
    while (static_cast<int>(raw.size()) < size) raw.insert(static_cast<std::int64_t>(rng() % 90));
    std::vector<Integer> I(raw.begin(), raw.end());

    auto parts = split_digits(I, D);
    CHECK(parts.size() == (std::size_t(1) << (D - 1)));
    Rational total(0);
    for (const auto& f : parts) {
      CHECK(f.well_formed());
      total += f.value();
    }
    CHECK(total == digit_sum(I, D));
  }
}

TEST_CASE("interval arithmetic on recipes") {
  DimValue a = make_atom(iset({2}), 4);
  DimValue b = make_atom(iset({2, 5}), 4);
  auto [c1, c2] = closed_form_constants();

  DimValue s = combine_sum(a, a);
  CHECK(s.value.is_point());
  CHECK(s.value.lower == 2 * c1);

  DimValue p = combine_product(a, a);
  CHECK(p.value.lower == c1 * c1);

  DimValue z = zero_value();
  CHECK(combine_sum(z, b).value.lower == b.value.lower);
  CHECK(combine_product(make_atom(iset({2}), 1), b).value.lower == c1 * b.value.lower);

  // widths add under sums
  IndexSetSpec f = IndexSetSpec::factorial_rule(5);
  DimValue wide = make_atom(f, 3);
  DimValue sum2 = combine_sum(wide, wide);
  CHECK(sum2.value.width() == 2 * wide.value.width());

  CHECK_THROWS_AS(rational_scale(Rational(-1), a), usage_error);
}

TEST_CASE("evaluate_recipe reproduces every constructed value") {
  DimValue a = make_atom(iset({2, 5, 8}), 8);
  DimValue v = rational_shift(Rational(1, 3),
                              rational_scale(Rational(7, 2), combine_sum(a, a)));
  CHECK(evaluate_recipe(*v.recipe) == v.value.lower);
  DimValue w = combine_product(a, v);
  CHECK(evaluate_recipe(*w.recipe) == w.value.lower);
}

TEST_CASE("form-exist numbers realize as atom chains") {
  CHECK(default_digit_spacing() == 18);
  const int D = 18;

  // single digit: the scaled atom chain hits 2^{-D n0} exactly
  for (std::int64_t n0 : {0, 1, 5}) {
    FormExistNumber fen{D, {Integer(n0)}};
    DimValue v = realize_form_exist(fen);
    CHECK(v.value.is_point());
    CHECK(v.value.lower == rational_pow2(-D * n0));
    CHECK(evaluate_recipe(*v.recipe) == v.value.lower);
  }

  // longer chains, including the coefficient-2 patch digit
  for (auto exps : std::vector<std::vector<std::int64_t>>{
           {0, 1}, {1, 3}, {0, 1, 2}, {2, 4, 5, 9}, {0, 2, 3, 4, 5}}) {
    FormExistNumber fen{D, {}};
    for (auto e : exps) fen.exponents.push_back(Integer(e));
    DimValue v = realize_form_exist(fen);
    CHECK(v.value.is_point());
    CHECK(v.value.lower == fen.value());
    CHECK(evaluate_recipe(*v.recipe) == fen.value());
  }

  CHECK_THROWS_AS(realize_form_exist(FormExistNumber{4, {Integer(1)}}), usage_error);
}

TEST_CASE("realize_target") {
  // r = 0: empty recipe
  DimValue zero = realize_target(Dyadic(), 8, 18);
  CHECK(zero.value.is_point());
  CHECK(zero.value.lower == Rational(0));

  // r = 2^-18 at D = 18: a single scaled atom chain sits inside
  DimValue unit = realize_target(Dyadic(Integer(1), -18), 18, 18);
  CHECK(unit.value.lower == rational_pow2(-18));

  // r = 0.101 in binary at p = 3: exactly 5/8
  DimValue r101 = realize_target(Dyadic(Integer(5), -3), 3, 18);
  CHECK(r101.value.is_point());
  CHECK(r101.value.lower == Rational(5, 8));
  CHECK(evaluate_recipe(*r101.recipe) == Rational(5, 8));

  // truncation: digits beyond p are dropped
  DimValue trunc = realize_target(Dyadic(Integer(0b10110111), -8), 4, 18);
  CHECK(trunc.value.lower == Rational(0b1011, 16));

  // small D goes through rational leaves; the value is still exact
  DimValue small = realize_target(Dyadic(Integer(0b110101), -6), 6, 3);
  CHECK(small.value.lower == Rational(0b110101, 64));
  CHECK(evaluate_recipe(*small.recipe) == small.value.lower);

  CHECK_THROWS_AS(realize_target(Dyadic(Integer(3), -1), 4, 18), usage_error);
}

TEST_CASE("realize_target idempotence") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 1 + static_cast<int>(rng() % 40);
    Integer m = Integer(rng() % (std::uint64_t(1) << std::min(p, 60)));
    Dyadic r(m, -p);
    if (!(r.to_rational() < 1)) continue;
    DimValue v = realize_target(r, p, 18);
    // the realized value is already p digits, so realizing it again is exact
    Rational val = v.value.lower;
    Dyadic again(boost::multiprecision::numerator(val),
                 0);
    // rebuild the dyadic from the rational
    Integer den = boost::multiprecision::denominator(val);
    std::int64_t e = 0;
    while (den > 1) {
      den >>= 1;
      --e;
    }
    DimValue v2 = realize_target(Dyadic(boost::multiprecision::numerator(val), e), p, 18);
    CHECK(v2.value.lower == val);
  }
}

TEST_CASE("closure-hypothesis conformance: atoms match the dimension engine") {
  for (auto els : {std::vector<std::int64_t>{2}, {2, 5}, {2, 8, 17}}) {
    IndexSetSpec I = iset(els);
    DimValue a = make_atom(I, 8);
    CHECK(a.value.lower == dimension_closed_form(I, 8).lower);
    CHECK(a.value.upper == dimension_closed_form(I, 8).upper);
  }
}
