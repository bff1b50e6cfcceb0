#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l2lab/group.hpp"

namespace l2lab::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// dim ker(A^{l,1,1}+2) = [l = 1 mod 3] and dim ker(A^{l,i,2}+2) = 0, 2<=l<=lmax.
CheckResult models_parity(int lmax);

/// brute_count_extendable == 2^{|E|-K} on `windows` generated horizontally
/// connected windows with |E| <= 20 and I inside {1..5}, both groups.
CheckResult counting_law(int windows, std::uint64_t seed);

/// Monte-Carlo frequency of the hook cylinder with legs (n,m), I = {2},
/// within 4 sigma of the exact measure.
CheckResult hook_mc(int n, int m, std::uint64_t samples, std::uint64_t seed);

/// beta constants from the symbolic evaluation of the closed-form expression.
CheckResult beta_symbolic();

/// ClosedForm and DirectSum enclosures agree (containment) with DirectSum
/// width <= 2^{-width_exp} at the given L.
CheckResult route_agreement(const IndexSetSpec& I, int terms, int L, int width_exp);

/// Truncated box sum over l1,l2 >= n converges into the closed form
/// 3*2^{-6n-6}(1-2^-9)^{-2} with width <= 2^{-width_exp}.
CheckResult ubox_identity(std::int64_t n, int L, int width_exp);

/// The (class, class) -> (F_s, F_{s^-1}) table: constructed witnesses plus
/// `samples` random completions, zero mismatches, all nonzero rows realized.
CheckResult table_exhaustive(int samples, std::uint64_t seed);

/// Windowed operator on clean hooks with n+m <= max_total equals the path
/// model; on contributing hooks the kernel vector is annihilated.
CheckResult windowed_models(int max_total);

/// split_digits: `trials` random digit sets, D in {2..5}: exact sums and
/// well-formed outputs.
CheckResult digit_splitting(int trials, std::uint64_t seed);

/// `members` random members accepted with replaying certificates; w_{t_b}
/// rejected for all b outside I up to 30.
CheckResult word_problem_roundtrip(int members, std::uint64_t seed);

/// Window bound for the vertical-spine event: <= 2^{-2N} for 1 <= N <= nmax,
/// Monte-Carlo frequencies below bound within 4 sigma.
CheckResult null_bound(int nmax, std::uint64_t samples, std::uint64_t seed);

/// Liouville inequality witnesses for the factorial rule, n <= nmax.
CheckResult liouville(int nmax);

}  // namespace l2lab::verify
