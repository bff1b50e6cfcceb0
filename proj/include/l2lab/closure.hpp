#pragma once

#include <memory>

#include "l2lab/dimension.hpp"

namespace l2lab {

/// A number of the shape sum_{k=0}^{len-1} 2^k 2^{-D n_k} with strictly
/// increasing exponents n_k >= 0.
struct FormExistNumber {
  int D = 2;
  std::vector<Integer> exponents;

  bool is_zero() const { return exponents.empty(); }
  bool well_formed() const;
  Rational value() const;
};

/// The digit-splitting construction: decomposes sum_{n in I} 2^{-Dn} into
/// 2^{D-1} well-formed FormExistNumbers with exactly that sum. Listed
/// elements of I are consumed in order: the first 2^{D-1} one per number,
/// the next one into all numbers, the next two into halves, the next four
/// into quarters, and so on cyclically.
std::vector<FormExistNumber> split_digits(const std::vector<Integer>& I, int D);
/// Same construction, zero outputs omitted (usable for large D).
std::vector<FormExistNumber> split_digits_nonzero(const std::vector<Integer>& I, int D);

struct Recipe {
  enum class Op { Atom, Sum, Product, Scale, Shift };
  Op op = Op::Sum;
  // Atom payload
  IndexSetSpec spec;
  int terms = 0;
  // Scale factor / Shift offset (non-negative rationals)
  Rational q;
  std::vector<std::shared_ptr<const Recipe>> children;
};

/// An enclosure together with the symbolic recipe that produces it.
struct DimValue {
  DimensionEnclosure value;
  std::shared_ptr<const Recipe> recipe;
};

DimValue make_atom(const IndexSetSpec& I, int terms);
DimValue zero_value();
DimValue combine_sum(const DimValue& a, const DimValue& b);
/// Requires both enclosures inside [0, inf).
DimValue combine_product(const DimValue& a, const DimValue& b);
DimValue rational_scale(const Rational& q, const DimValue& v);
DimValue rational_shift(const Rational& a, const DimValue& v);

/// Re-evaluates a recipe tree from scratch (exactness oracle).
Rational evaluate_recipe(const Recipe& r);

/// Default digit spacing: the congruence class n_k = 2 + 3 w_k turns the
/// base-6 series into an unrestricted base-18 one, and the least power making
/// the normalization shift positive is 2^{17}, so D = 18.
int default_digit_spacing();

/// Realizes a FormExistNumber whose D is a positive multiple of 18 as a
/// shift/scale chain on a single atom (plus one rational shift patching the
/// coefficient-2 digit). Exact.
DimValue realize_form_exist(const FormExistNumber& fen);

/// Recipe with exact value equal to the p-digit truncation of r in [0, 1).
/// Digit positions split into D residue classes; each class splits into
/// FormExistNumbers; each of those becomes an atom chain when 18 | D and an
/// exact rational leaf otherwise.
DimValue realize_target(const Dyadic& r, int precision, int D);

}  // namespace l2lab
