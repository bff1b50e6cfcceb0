#pragma once

#include "l2lab/group.hpp"
#include "l2lab/numbers.hpp"

namespace l2lab {

struct DimensionEnclosure {
  enum class Route { ClosedForm, DirectSum };
  Rational lower, upper;
  Route route = Route::ClosedForm;

  Rational width() const { return upper - lower; }
  bool is_point() const { return lower == upper; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  bool contains(const DimensionEnclosure& o) const {
    return lower <= o.lower && o.upper <= upper;
  }
};

/// (3/261121, 6144/261121): exact value of the two coefficients of the
/// expression 3/(2^6 (1-2^-9)^2) * 2^-12 and 3/(2^7 (1-2^-9)^2).
std::pair<Rational, Rational> beta_constants();

/// (257/16711744, 48/261121): the coefficients c1, c2 for which the hook
/// double sum equals c1 + c2 * sum_{k>=1} 2^{-6 n_k + k}. These are the
/// constants the two evaluation routes agree on; see README for how they
/// relate to beta_constants().
std::pair<Rational, Rational> closed_form_constants();

/// Throws usage_error unless I = {2 = n_0 < n_1 < ...} with every element
/// congruent 2 mod 3 (checked on the first `upto` elements).
void validate_theorem_index_set(const IndexSetSpec& I, int upto);

/// Closed-form route: exact partial sum c1 + c2*sum_{k=1}^{terms} 2^{-6n_k+k}
/// as the lower bound; the upper bound adds the geometric tail majorant
/// c2 * 2^{-6 n_{terms+1} + terms + 1} * (1 - 2^-5)^{-1}. Point value when I
/// is exhausted by `terms`.
DimensionEnclosure dimension_closed_form(const IndexSetSpec& I, int terms);

/// Direct route: exact truncated hook sum over 1 <= l1, l2 <= L with
/// 3 | (l1+l2) of 2^{-3(l1+l2)-8+|I cap {1..min}|}, plus the rigorous tail
/// bound 2^{-3L-10} * 8/21 obtained from K <= min(l1,l2).
DimensionEnclosure dimension_direct_sum(const IndexSetSpec& I, int L);

/// Contribution of the hook class with legs (l1, l2): hook_measure if
/// 3 | (l1+l2), else 0.
Dyadic summand_audit(const IndexSetSpec& I, int l1, int l2);

/// Exact value of sum over l1,l2 >= n, 3|(l1+l2) of 2^{-3(l1+l2)}:
/// 3 * 2^{-6n-6} * (1-2^-9)^{-2}.
Rational u_box_closed_form(std::int64_t n);
/// The same sum truncated at L with a rigorous tail bound.
DimensionEnclosure u_box_truncated(std::int64_t n, int L);

/// Exponent-level check of the rational-approximation inequality
/// 0 < x - p/q < q^{-n} for q = 2^{6 n_K - K}, p/q the K-term partial sum.
/// For each n the smallest witnessing K <= cap is reported.
struct LiouvilleWitness {
  int n = 0;
  int K = -1;  // -1 when no witness was found below the cap
  bool ok = false;
};
std::vector<LiouvilleWitness> liouville_audit(const IndexSetSpec& I, int n_max,
                                              int cap = 200);

}  // namespace l2lab
