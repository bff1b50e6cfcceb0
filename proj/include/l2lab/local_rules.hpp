#pragma once

#include <map>
#include <optional>
#include <utility>

#include "l2lab/pattern.hpp"

namespace l2lab {

enum class LocalClass { NotOneGood, OneGoodNotLocallyGood, GoodEnd, InteriorGood };

const char* to_string(LocalClass c);

/// A hook: left leg of n edges hanging below base, one s1 step, right leg of
/// m edges hanging below base*s1. Vertical segments reuse the struct with
/// vertical=true, base = top point, n = edge count, m = 0.
struct Hook {
  GroupElement base;
  int left_leg = 0;
  int right_leg = 0;
  bool vertical = false;

  /// Path vertices in order, left end to right end (top to bottom if vertical).
  std::vector<GroupElement> vertices() const;
};

/// Path vertices of the hook with base e and legs (n, m).
std::vector<GroupElement> hook_vertices(GroupId g, int n, int m);

struct ConfigClass {
  enum class Kind { C0, Finite, Infinite };
  Kind kind = Kind::C0;
  // Finite: fates sorted so i <= j; walker paths merged into one chain.
  int i = 0, j = 0;
  std::optional<Hook> hook;
  std::vector<GroupElement> P;  // operator support path
  std::vector<GroupElement> R;  // full walked path including fate-2 stops
  std::optional<Pattern> psi;   // chi restricted to B(R,1)
  // Infinite: fate of the walker that finished (1 or 2), 0 if both exhausted.
  int finished_fate = 0;
};

struct WalkResult {
  int fate = 0;  // 1, 2, or 0 = window exhausted
  std::vector<GroupElement> R;
  std::vector<GroupElement> P;
};

/// Precomputed neighbour index table for one window; all classifier queries
/// against patterns sharing that window are O(1) index arithmetic.
class LocalAnalyzer {
 public:
  explicit LocalAnalyzer(const Pattern& reference);

  bool bound_to(const Pattern& p) const { return window_ == p.window_ptr(); }

  /// Needs B(center,1) in the window.
  std::optional<bool> try_one_good(const Pattern& p, int center) const;
  /// Needs B(center,2) in the window.
  std::optional<LocalClass> try_classify(const Pattern& p, int center) const;

  /// F_s of the pattern viewed from window[center]; needs B(center,2) and
  /// B(center*s,2).
  std::optional<Rational> try_f(const Pattern& p, int center, Letter s) const;
  /// G_s = F_s + F_{s^-1} of the s^-1-translate; needs the 3-ball.
  std::optional<Rational> try_g(const Pattern& p, int center, Letter s) const;

  int step(int idx, Letter s) const { return table_[static_cast<std::size_t>(idx)][s]; }
  int index_of(const GroupElement& g) const;

 private:
  std::shared_ptr<const std::vector<GroupElement>> window_;
  std::vector<std::array<int, 4>> table_;
};

/// Classification of chi around center per the 1-good / locally good /
/// good end / interior good definitions. Window must contain B(center,2).
LocalClass classify_local(const Pattern& chi, const GroupElement& center);

/// F_s(chi) at the origin e. Window must contain B(e,2) and s*B(e,2).
Rational f_s(const Pattern& chi, Letter s);

/// G_s(chi) = F_s(chi) + F_{s^-1}(s^-1 chi) at the origin. Window must
/// contain B(e,3).
Rational g_s(const Pattern& chi, Letter s);

/// Follows the path greedily from start in the given initial direction.
WalkResult walker_fate(const Pattern& chi, const GroupElement& start,
                       const GroupElement& first_step);

/// The Borel-partition classifier at the origin.
ConfigClass classify_configuration(const Pattern& chi);

struct SparseSymMatrix {
  std::vector<GroupElement> domain;  // sorted
  std::map<std::pair<int, int>, Rational> entries;  // keys with i < j

  Rational at(int i, int j) const;
  std::size_t dim() const { return domain.size(); }
};

/// Matrix of the operator on the given positions: entry between p and p*s is
/// G_{s^-1} evaluated at the view from p*s. Window must contain B(domain,3).
SparseSymMatrix windowed_operator(const Pattern& chi,
                                  const std::vector<GroupElement>& domain);

}  // namespace l2lab
