#pragma once

#include <set>

#include "l2lab/group.hpp"

namespace l2lab {

/// A finitely supported Z2-vector on the group, kept as its support set.
struct GF2Vector {
  GroupId group = GroupId::Free2;
  std::set<GroupElement> support;

  bool is_zero() const { return support.empty(); }
  void toggle(const GroupElement& g);
  GF2Vector& operator^=(const GF2Vector& o);
};

/// w_t = 1_{F_l} - 1_{t F_l}, the generating vector attached to t.
GF2Vector generator_w(const GroupElement& t);
/// The translate g * w_t (support g F_l xor g t F_l).
GF2Vector w_block(const GroupElement& g, const GroupElement& t);

struct CertStep {
  GroupElement g, t;
};

struct MembershipResult {
  bool member = false;
  std::vector<CertStep> certificate;       // accepted: blocks summing to x
  std::vector<std::size_t> interval_mass;  // total interval mass after each step
};

/// Decision procedure for x in V_{F_l, I}: per coset support interval, reject
/// when the interval is shorter than 3 points, otherwise search t in Lambda_I
/// moving the left-end block onto the interior of another interval, subtract
/// the corresponding w-translate and repeat; accept at empty support.
MembershipResult is_in_V(const GF2Vector& x, const IndexSetSpec& I);

/// Replays a certificate; returns the xor of its blocks.
GF2Vector replay_certificate(GroupId g, const std::vector<CertStep>& steps);

/// Support intervals per coset line g<s1>: (canonical line key, lo, hi).
struct SupportInterval {
  GroupElement line_key;
  std::int64_t lo = 0, hi = 0;
  std::size_t points() const { return static_cast<std::size_t>(hi - lo + 1); }
};
std::vector<SupportInterval> support_intervals(const GF2Vector& x);

/// One element of the recursive presentation stream.
struct Relation {
  enum class Family { TauSquare, Commutator, WRelation, WreathRelator };
  Family family = Family::TauSquare;
  GroupElement g, h;  // commutator: [delta_g, delta_h]; w-relation: translate g
  Integer n = 0;      // w-relation: index n; wreath relator: conjugation depth
  std::string text;   // rendered word over {s1, s2, tau}
};

/// Deterministic prefix of the presentation stream: tau^2, the delta
/// commutators, the products prod_{x in F_l} delta_{gx} delta_{g t_n x} for
/// n in I, and (for WreathZZ) the relators [s2^n s1 s2^-n, s1].
std::vector<Relation> enumerate_relations(const IndexSetSpec& I, int count, GroupId g);

}  // namespace l2lab
