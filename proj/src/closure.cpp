#include "l2lab/closure.hpp"

#include <algorithm>

namespace l2lab {

bool FormExistNumber::well_formed() const {
  if (D < 1) return false;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0) return false;
    if (k > 0 && !(exponents[k - 1] < exponents[k])) return false;
  }
  return true;
}

Rational FormExistNumber::value() const {
  Rational v(0);
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] > Integer(1) << 40)
      throw resource_error("FormExistNumber: exponent too large to evaluate");
    v += rational_pow2(static_cast<std::int64_t>(k) -
                       D * static_cast<std::int64_t>(exponents[k]));
  }
  return v;
}

namespace {

std::vector<FormExistNumber> split_core(const std::vector<Integer>& I, int D,
                                        bool materialize_all) {
  if (D < 1) throw usage_error("split_digits: D must be >= 1");
  for (std::size_t i = 0; i + 1 < I.size(); ++i)
    if (!(I[i] < I[i + 1])) throw usage_error("split_digits: digit set must be increasing");
  for (const Integer& n : I)
    if (n < 0) throw usage_error("split_digits: digits must be naturals");

  const std::uint64_t total = std::uint64_t(1) << (D - 1);
  bool needs_all = I.size() > total;  // rounds past the first touch every number
  if ((materialize_all || needs_all) && D > 16)
    throw resource_error("split_digits: D too large to materialize all outputs");

  std::vector<FormExistNumber> numbers(
      materialize_all || needs_all ? total : std::min<std::uint64_t>(total, I.size()));
  for (auto& f : numbers) f.D = D;

  std::size_t pos = 0;
  for (int round = 0; pos < I.size(); ++round) {
    int level = round == 0 ? D - 1 : (round - 1) % D;
    Integer shift = round == 0 ? 0 : (round - 1) / D + 1;
    std::uint64_t batch = std::uint64_t(1) << level;
    std::uint64_t group = total >> level;
    for (std::uint64_t b = 0; b < batch && pos < I.size(); ++b, ++pos) {
      Integer exponent = I[pos] + shift;
      for (std::uint64_t i = b * group; i < (b + 1) * group; ++i) {
        if (i >= numbers.size()) break;  // untouched zero outputs not materialized
        numbers[i].exponents.push_back(exponent);
      }
    }
  }
  return numbers;
}

}  // namespace

std::vector<FormExistNumber> split_digits(const std::vector<Integer>& I, int D) {
  return split_core(I, D, true);
}

std::vector<FormExistNumber> split_digits_nonzero(const std::vector<Integer>& I, int D) {
  auto all = split_core(I, D, false);
  std::vector<FormExistNumber> out;
  for (auto& f : all)
    if (!f.is_zero()) out.push_back(std::move(f));
  return out;
}

DimValue make_atom(const IndexSetSpec& I, int terms) {
  auto r = std::make_shared<Recipe>();
  r->op = Recipe::Op::Atom;
  r->spec = I;
  r->terms = terms;
  DimValue v;
  v.value = dimension_closed_form(I, terms);
  v.recipe = std::move(r);
  return v;
}

DimValue zero_value() {
  auto r = std::make_shared<Recipe>();
  r->op = Recipe::Op::Sum;
  DimValue v;
  v.value = {Rational(0), Rational(0), DimensionEnclosure::Route::ClosedForm};
  v.recipe = std::move(r);
  return v;
}

DimValue combine_sum(const DimValue& a, const DimValue& b) {
  auto r = std::make_shared<Recipe>();
  r->op = Recipe::Op::Sum;
  r->children = {a.recipe, b.recipe};
  DimValue v;
  v.value = {a.value.lower + b.value.lower, a.value.upper + b.value.upper,
             DimensionEnclosure::Route::ClosedForm};
  v.recipe = std::move(r);
  return v;
}

DimValue combine_product(const DimValue& a, const DimValue& b) {
  if (a.value.lower < 0 || b.value.lower < 0)
    throw usage_error("combine_product: enclosures must be non-negative");
  auto r = std::make_shared<Recipe>();
  r->op = Recipe::Op::Product;
  r->children = {a.recipe, b.recipe};
  DimValue v;
  v.value = {a.value.lower * b.value.lower, a.value.upper * b.value.upper,
             DimensionEnclosure::Route::ClosedForm};
  v.recipe = std::move(r);
  return v;
}

DimValue rational_scale(const Rational& q, const DimValue& v) {
  if (q < 0) throw usage_error("rational_scale: factor must be non-negative");
  auto r = std::make_shared<Recipe>();
  r->op = Recipe::Op::Scale;
  r->q = q;
  r->children = {v.recipe};
  DimValue out;
  out.value = {q * v.value.lower, q * v.value.upper,
               DimensionEnclosure::Route::ClosedForm};
  out.recipe = std::move(r);
  return out;
}

DimValue rational_shift(const Rational& a, const DimValue& v) {
  if (a < 0) throw usage_error("rational_shift: offset must be non-negative");
  auto r = std::make_shared<Recipe>();
  r->op = Recipe::Op::Shift;
  r->q = a;
  r->children = {v.recipe};
  DimValue out;
  out.value = {a + v.value.lower, a + v.value.upper,
               DimensionEnclosure::Route::ClosedForm};
  out.recipe = std::move(r);
  return out;
}

Rational evaluate_recipe(const Recipe& r) {
  switch (r.op) {
    case Recipe::Op::Atom: {
      DimensionEnclosure e = dimension_closed_form(r.spec, r.terms);
      if (!e.is_point())
        throw usage_error("evaluate_recipe: atom with non-point enclosure");
      return e.lower;
    }
    case Recipe::Op::Sum: {
      Rational v(0);
      for (const auto& c : r.children) v += evaluate_recipe(*c);
      return v;
    }
    case Recipe::Op::Product: {
      Rational v(1);
      for (const auto& c : r.children) v *= evaluate_recipe(*c);
      return v;
    }
    case Recipe::Op::Scale:
      return r.q * evaluate_recipe(*r.children.at(0));
    case Recipe::Op::Shift:
      return r.q + evaluate_recipe(*r.children.at(0));
  }
  throw internal_error("evaluate_recipe: bad op");
}

int default_digit_spacing() { return 18; }

DimValue realize_form_exist(const FormExistNumber& fen) {
  if (!fen.well_formed()) throw usage_error("realize_form_exist: malformed number");
  if (fen.D < 18 || fen.D % 18 != 0)
    throw usage_error("realize_form_exist: D must be a positive multiple of 18");
  if (fen.is_zero()) return zero_value();

  const auto& v = fen.exponents;
  if (v.back() > Integer(1) << 20)
    throw resource_error("realize_form_exist: exponent too large");
  const int D = fen.D;
  const Integer step = Integer(D) / 6;  // multiple of 3, so 2 + step*w stays 2 mod 3

  std::vector<Integer> atom_elements = {2};
  for (std::size_t k = 2; k < v.size(); ++k)
    atom_elements.push_back(2 + step * (v[k] - v[0] - 1));

  auto [a, q] = closed_form_constants();
  Rational q_rebased = q * rational_pow2(-12);
  Rational b = rational_pow2(D - 1) * q_rebased;
  if (!(b > a)) throw internal_error("realize_form_exist: normalization shift not positive");

  DimValue chain = make_atom(IndexSetSpec::explicit_set(atom_elements),
                             static_cast<int>(atom_elements.size()));
  chain = rational_shift(b - a, chain);
  chain = rational_scale(Rational(2) / q_rebased, chain);
  chain = rational_scale(rational_pow2(-D * (1 + static_cast<std::int64_t>(v[0]))), chain);
  if (v.size() >= 2)
    chain = rational_shift(rational_pow2(1 - D * static_cast<std::int64_t>(v[1])), chain);

  if (!chain.value.is_point() || chain.value.lower != fen.value())
    throw internal_error("realize_form_exist: chain value mismatch");
  return chain;
}

DimValue realize_target(const Dyadic& r, int precision, int D) {
  if (r.mantissa() < 0 || !(r.to_rational() < 1))
    throw usage_error("realize_target: r must lie in [0, 1)");
  if (precision < 0 || precision > 4096)
    throw usage_error("realize_target: precision out of range");
  if (D < 1) throw usage_error("realize_target: D must be >= 1");

  // digits of r at positions 1..precision
  std::vector<int> digits(static_cast<std::size_t>(precision) + 1, 0);
  if (!r.is_zero()) {
    std::int64_t E = -r.exponent();  // r = m / 2^E with E >= 1
    for (std::int64_t j = 1; j <= precision; ++j) {
      if (j > E) break;
      digits[static_cast<std::size_t>(j)] =
          static_cast<int>((r.mantissa() >> static_cast<unsigned>(E - j)) & 1);
    }
  }

  Rational truncated(0);
  auto total = std::make_shared<Recipe>();
  total->op = Recipe::Op::Sum;
  DimValue result;
  result.value = {Rational(0), Rational(0), DimensionEnclosure::Route::ClosedForm};
  result.recipe = total;

  for (int c = 0; c < D; ++c) {
    std::vector<Integer> I_c;
    for (int n = c == 0 ? 1 : 0; D * n + c <= precision; ++n)
      if (digits[static_cast<std::size_t>(D * n + c)]) I_c.push_back(n);
    if (I_c.empty()) continue;
    for (const Integer& n : I_c)
      truncated += rational_pow2(-(D * static_cast<std::int64_t>(n) + c));

    DimValue class_sum = zero_value();
    for (const auto& fen : split_digits_nonzero(I_c, D)) {
      DimValue piece = (D % 18 == 0) ? realize_form_exist(fen)
                                     : rational_shift(fen.value(), zero_value());
      class_sum = combine_sum(class_sum, piece);
    }
    result = combine_sum(result, rational_scale(rational_pow2(-c), class_sum));
  }

  if (!result.value.is_point() || result.value.lower != truncated)
    throw internal_error("realize_target: recipe value mismatch");
  return result;
}

}  // namespace l2lab
