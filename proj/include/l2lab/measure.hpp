#pragma once

#include <functional>

#include "l2lab/gf2.hpp"
#include "l2lab/pattern.hpp"

namespace l2lab {

/// The data defining V_{F,Lambda} restricted to a window E: the translate
/// shape F (default F_l = {s1^-1, e, s1}), the index set generating Lambda,
/// and the finite window.
struct RelationSystem {
  GroupId group = GroupId::Free2;
  std::vector<GroupElement> F;
  IndexSetSpec lambda;
  std::vector<GroupElement> window;

  static std::vector<GroupElement> default_F(GroupId g);
  /// System on E = B(R,1) for the hook R with legs (n, m) based at e.
  static RelationSystem hook_system(GroupId g, int n, int m, IndexSetSpec I);
  /// System on an arbitrary window with F = F_l.
  static RelationSystem on_window(GroupId g, std::vector<GroupElement> window,
                                  IndexSetSpec I);
};

/// Translates gF inside the window and their classes under gF ~ g'F iff
/// g^-1 g' in Lambda_I.
struct OmegaClasses {
  std::vector<GroupElement> translates;  // the g's, canonically sorted
  std::vector<int> class_of;             // translate index -> class id
  int class_count = 0;
  int K() const { return static_cast<int>(translates.size()) - class_count; }
};

/// True iff every coset line g<s1> meets E in consecutive points.
bool is_horizontally_connected(const std::vector<GroupElement>& E, GroupId g);

OmegaClasses omega_classes(const RelationSystem& sys);

/// Is the extension property certified for this system? (window horizontally
/// connected and F inside the s1-line.)
bool extension_certified(const RelationSystem& sys);

/// 2^{|E|-K}: the number of window patterns extendable to the dual group.
/// Requires the certification above; use brute_count_extendable otherwise.
Dyadic count_extendable(const RelationSystem& sys);

/// Independent oracle: enlarges E by `enlarge_radius`, collects all in-window
/// relation rows, eliminates the extra points, then exhaustively enumerates
/// the 2^{|E|} patterns and counts the ones satisfying every residual row.
/// Capped at |E| <= 24.
std::uint64_t brute_count_extendable(const RelationSystem& sys, int enlarge_radius = 1);

/// Relation rows of the system restricted to the given window, as a GF(2)
/// matrix over the window's canonical index order.
BitMatrix relation_rows(const RelationSystem& sys,
                        const std::vector<GroupElement>& window);

/// 0 if psi violates an in-window relation, else 2^{-(|E|-K)}.
Dyadic cylinder_measure(const Pattern& psi, const RelationSystem& sys);

/// 2^{-3(n+m)-8+K} with K = |I cap {1..min(n,m)}|.
Dyadic hook_measure(int n, int m, const IndexSetSpec& I);

/// Characteristic function of the hook with legs (n, m) on its
/// radius-neighbourhood (radius 1 gives the cylinder template on B(R,1)).
Pattern hook_pattern(GroupId g, int n, int m, int radius = 1);

/// Uniform sampler over the solution set of the window relation system.
class CharacterSampler {
 public:
  explicit CharacterSampler(const RelationSystem& sys);
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  /// Deterministic in (seed); independent draws for different seeds.
  Pattern sample(std::uint64_t seed) const;
  const Pattern& window_pattern() const { return scratch_; }

 private:
  RelationSystem sys_;
  Pattern scratch_;
  std::vector<std::uint64_t> basis_;
};

Pattern sample_character(const RelationSystem& sys, std::uint64_t seed);

struct EventEstimate {
  Rational frequency;
  Rational sigma_sq;  // frequency*(1-frequency)/samples
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

EventEstimate estimate_event(const RelationSystem& sys,
                             const std::function<bool(const Pattern&)>& predicate,
                             std::uint64_t samples, std::uint64_t seed);
/// Fast path: the predicate sees the sample as a bit mask over the window
/// order (window must fit in 64 bits).
EventEstimate estimate_event_mask(const RelationSystem& sys,
                                  const std::function<bool(std::uint64_t)>& predicate,
                                  std::uint64_t samples, std::uint64_t seed);

/// Exact check |frequency - p| <= k * sqrt(p(1-p)/n), squared to stay rational.
bool within_k_sigma(const EventEstimate& est, const Rational& p, int k);

/// The window of the one-sided vertical event: spine s2^-k with both s1-sides,
/// 0 <= k <= N.
std::vector<GroupElement> dg_window(int N, GroupId g);
/// Its prescribed pattern: 1 on the spine, 0 on the sides.
Pattern dg_pattern(int N, GroupId g);
/// Window-computed bound 2^{-(3N - K_N)} for the event's measure.
Dyadic dg_bound(int N, const IndexSetSpec& I, GroupId g);

/// Constructive extension of psi to the target window, adding one point at a
/// time while keeping horizontal connectivity; forced values come from the
/// in-window relations, free values are 0.
Pattern extend_pattern(const Pattern& psi, const RelationSystem& sys,
                       const std::vector<GroupElement>& target_window);

}  // namespace l2lab
