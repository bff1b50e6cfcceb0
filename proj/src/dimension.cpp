#include "l2lab/dimension.hpp"

#include <algorithm>

#include "l2lab/measure.hpp"

namespace l2lab {

namespace {

// Exponents below this produce rationals with megabit denominators; tail
// bounds are clamped here (clamping only weakens an upper bound).
constexpr std::int64_t kMaxTailExponent = 1 << 17;

Rational one_minus_2_9_inv_sq() {
  // (1 - 2^-9)^{-2} = (512/511)^2
  return Rational(512 * 512, 511 * 511);
}

std::int64_t to_i64_exponent(const Integer& e) {
  if (e > Integer(std::numeric_limits<std::int64_t>::max() / 8))
    throw resource_error("dimension: index-set element too large for exact powers");
  return static_cast<std::int64_t>(e);
}

}  // namespace

std::pair<Rational, Rational> beta_constants() {
  Rational base = Rational(3) * one_minus_2_9_inv_sq();
  return {base * rational_pow2(-6) * rational_pow2(-12), base * rational_pow2(-7)};
}

std::pair<Rational, Rational> closed_form_constants() {
  // c1 = 2^-8 * Q + 3 (1-2^-9)^{-2} 2^{-26} with Q the full-quadrant sum
  // x(2+x)/(1-x)^2 at x = 2^-9; c2 = 3 (1-2^-9)^{-2} 2^{-14}.
  Rational x(1, 512);
  Rational Q = x * (2 + x) / ((1 - x) * (1 - x));
  Rational c1 = rational_pow2(-8) * Q +
                Rational(3) * one_minus_2_9_inv_sq() * rational_pow2(-26);
  Rational c2 = Rational(3) * one_minus_2_9_inv_sq() * rational_pow2(-14);
  return {c1, c2};
}

void validate_theorem_index_set(const IndexSetSpec& I, int upto) {
  if (I.count() == 0) throw usage_error("index set: empty; need leading 2");
  if (I.element(0) != 2) throw usage_error("index set: least element must be 2");
  Integer prev = 2;
  int last = I.is_unbounded() ? upto : std::min(upto, I.count() - 1);
  for (int k = 1; k <= last; ++k) {
    Integer e = I.element(k);
    if (e <= prev) throw usage_error("index set: not strictly increasing");
    if (e % 3 != 2) throw usage_error("index set: elements must be congruent 2 mod 3");
    prev = e;
  }
}

DimensionEnclosure dimension_closed_form(const IndexSetSpec& I, int terms) {
  if (terms < 0) throw usage_error("dimension_closed_form: terms must be >= 0");
  validate_theorem_index_set(I, terms + 1);
  auto [c1, c2] = closed_form_constants();

  int available = I.is_unbounded() ? terms : I.count() - 1;
  int T = std::min(terms, available);
  Rational partial = c1;
  for (int k = 1; k <= T; ++k) {
    std::int64_t nk = to_i64_exponent(I.element(k));
    partial += c2 * rational_pow2(-6 * nk + k);
  }

  DimensionEnclosure enc;
  enc.route = DimensionEnclosure::Route::ClosedForm;
  enc.lower = partial;
  bool has_more = I.is_unbounded() || T + 1 <= I.count() - 1;
  if (!has_more) {
    enc.upper = partial;
    return enc;
  }
  // tail <= c2 * 2^{-6 n_{T+1} + T + 1} * (1 - 2^-5)^{-1}; the ratio between
  // consecutive terms is at most 2^{-17} since n_{k+1} >= n_k + 3.
  Integer next = I.element(T + 1);
  Integer exp_big = Integer(-6) * next + (T + 1);
  std::int64_t e = exp_big < -Integer(kMaxTailExponent)
                       ? -kMaxTailExponent
                       : static_cast<std::int64_t>(exp_big);
  enc.upper = partial + c2 * rational_pow2(e) * Rational(32, 31);
  return enc;
}

DimensionEnclosure dimension_direct_sum(const IndexSetSpec& I, int L) {
  if (L < 2) throw usage_error("dimension_direct_sum: L must be >= 2");
  validate_theorem_index_set(I, 4);

  // materialize the elements <= L once
  std::vector<std::int64_t> small;
  for (int k = 0;; ++k) {
    if (!I.is_unbounded() && k >= I.count()) break;
    Integer e = I.element(k);
    if (e > L) break;
    small.push_back(static_cast<std::int64_t>(e));
  }

  Dyadic sum;
  for (int l1 = 1; l1 <= L; ++l1)
    for (int l2 = 1; l2 <= L; ++l2) {
      if ((l1 + l2) % 3 != 0) continue;
      int lo = std::min(l1, l2);
      int K = static_cast<int>(std::count_if(small.begin(), small.end(),
                                             [lo](std::int64_t e) { return e >= 1 && e <= lo; }));
      sum = sum + Dyadic::power_of_two(-3 * (static_cast<std::int64_t>(l1) + l2) - 8 + K);
    }

  DimensionEnclosure enc;
  enc.route = DimensionEnclosure::Route::DirectSum;
  enc.lower = sum.to_rational();
  enc.upper = enc.lower + rational_pow2(-3 * static_cast<std::int64_t>(L) - 10) * Rational(8, 21);
  return enc;
}

Dyadic summand_audit(const IndexSetSpec& I, int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw usage_error("summand_audit: legs must be >= 1");
  if ((l1 + l2) % 3 != 0) return Dyadic();
  return hook_measure(l1, l2, I);
}

Rational u_box_closed_form(std::int64_t n) {
  return Rational(3) * rational_pow2(-6 * n - 6) * one_minus_2_9_inv_sq();
}

DimensionEnclosure u_box_truncated(std::int64_t n, int L) {
  if (n < 1 || L < n) throw usage_error("u_box_truncated: need 1 <= n <= L");
  Dyadic sum;
  for (std::int64_t l1 = n; l1 <= L; ++l1)
    for (std::int64_t l2 = n; l2 <= L; ++l2)
      if ((l1 + l2) % 3 == 0) sum = sum + Dyadic::power_of_two(-3 * (l1 + l2));
  DimensionEnclosure enc;
  enc.route = DimensionEnclosure::Route::DirectSum;
  enc.lower = sum.to_rational();
  // tail: pairs with max > L, bounded by 2 * (8/7)^2 * 2^{-3(L+1)-3n}
  enc.upper = enc.lower + Rational(128, 49) * rational_pow2(-3 * (static_cast<std::int64_t>(L) + 1) - 3 * n);
  return enc;
}

std::vector<LiouvilleWitness> liouville_audit(const IndexSetSpec& I, int n_max, int cap) {
  if (!I.is_unbounded())
    throw usage_error("liouville_audit: needs an unbounded index set");
  validate_theorem_index_set(I, std::min(cap, 40));
  std::vector<LiouvilleWitness> out;
  for (int n = 1; n <= n_max; ++n) {
    LiouvilleWitness w;
    w.n = n;
    for (int K = 1; K <= cap; ++K) {
      // 0 < x - p/q < 2^{-6 n_{K+1} + K + 2} and q^{-n} = 2^{-n (6 n_K - K)};
      // the strict inequality holds when
      //   6 n_{K+1} - K - 2 >= n (6 n_K - K) + 1.
      Integer lhs = Integer(6) * I.element(K + 1) - (K + 2);
      Integer rhs = Integer(n) * (Integer(6) * I.element(K) - K) + 1;
      if (lhs >= rhs) {
        w.K = K;
        w.ok = true;
        break;
      }
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace l2lab
