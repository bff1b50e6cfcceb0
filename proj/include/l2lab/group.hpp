#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "l2lab/numbers.hpp"

namespace l2lab {

enum class GroupId { Free2, WreathZZ };

/// Generator letters. s1/s2 are the two group generators; the wreath group is
/// the quotient of the free group by [s2^k s1 s2^-k, s1].
enum Letter : int { S1 = 0, S1Inv = 1, S2 = 2, S2Inv = 3 };

inline Letter inverse_letter(Letter s) { return static_cast<Letter>(s ^ 1); }
constexpr std::array<Letter, 4> kGenerators = {S1, S1Inv, S2, S2Inv};

/// An element of Free2 (reduced word) or WreathZZ (lamp map + shift), always
/// in canonical normal form. Comparison is shortlex for Free2 and
/// (shift, lamp) lexicographic for WreathZZ, so sets enumerate deterministically.
class GroupElement {
 public:
  GroupElement() : group_(GroupId::Free2) {}
  explicit GroupElement(GroupId g) : group_(g) {}

  static GroupElement identity(GroupId g) { return GroupElement(g); }
  static GroupElement generator(GroupId g, Letter s);
  /// t_n = s2^n s1 s2^-n.
  static GroupElement t_generator(std::int64_t n, GroupId g);
  /// s1^a for a in Z.
  static GroupElement s1_power(std::int64_t a, GroupId g);
  static GroupElement s2_power(std::int64_t a, GroupId g);

  GroupId group() const { return group_; }
  bool is_identity() const { return word_.empty() && lamp_.empty() && shift_ == 0; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement times(Letter s) const { return *this * generator(group_, s); }

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;

  std::size_t hash() const;

  /// Reduced word, Free2 only.
  const std::vector<Letter>& word() const { return word_; }
  /// WreathZZ accessors; lamp is sorted by position with no zero values.
  const std::vector<std::pair<std::int64_t, std::int64_t>>& lamp() const { return lamp_; }
  std::int64_t shift() const { return shift_; }

  std::string str() const;
  static GroupElement parse(GroupId g, const std::string& text);

  /// Word length of the normal form (letters; for WreathZZ the normal word).
  std::size_t length() const;

 private:
  GroupId group_;
  std::vector<Letter> word_;                                    // Free2
  std::vector<std::pair<std::int64_t, std::int64_t>> lamp_;     // WreathZZ
  std::int64_t shift_ = 0;                                      // WreathZZ
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// Default cap for ball enumeration; override per call or via the
/// L2LAB_MAX_BALL_RADIUS environment variable.
int max_ball_radius();

/// All elements at word distance <= radius from e, canonically sorted.
std::vector<GroupElement> ball(int radius, GroupId g, int cap = -1);
/// Union of B(x,1) over x in base, canonically sorted.
std::vector<GroupElement> ball_of_set(const std::vector<GroupElement>& base, int radius);

/// The index set I of the t_n generators. Explicit lists, the factorial rule
/// (values >= k! adjusted upward into the 2 mod 3 class, with the mandatory
/// leading 2) or a custom generator.
class IndexSetSpec {
 public:
  enum class Kind { Explicit, Factorial, Custom };

  static IndexSetSpec explicit_set(std::vector<Integer> elements);
  static IndexSetSpec factorial_rule(int count, bool congruence_adjust = true);
  static IndexSetSpec custom(std::function<Integer(int)> kth, int count);

  Kind kind() const { return kind_; }
  int count() const;
  bool congruence_adjust() const { return congruence_adjust_; }
  /// Factorial-rule sets extend beyond their declared count on demand.
  bool is_unbounded() const { return kind_ == Kind::Factorial; }

  /// k-th element, 0-based; for the factorial rule any k is available.
  Integer element(int k) const;
  /// Exact elements (strictly increasing).
  std::vector<Integer> elements() const;
  /// Elements as machine integers; throws resource_error on overflow.
  std::vector<std::int64_t> elements_i64() const;
  bool contains(const Integer& n) const;
  bool empty() const { return count() == 0; }

 private:
  Kind kind_ = Kind::Explicit;
  std::vector<Integer> explicit_;
  int count_ = 0;
  bool congruence_adjust_ = true;
  std::function<Integer(int)> kth_;
};

/// Membership in Lambda_I = <t_i : i in I>. For WreathZZ this reads the
/// normal form (shift 0, lamp supported in I); for Free2 it strips t-letters
/// greedily from the left, which is valid because {t_i} is a free basis.
bool lambda_membership(const GroupElement& x, const IndexSetSpec& I);

/// Splits x as (line key, c) with x = key * s1^c; elements share the key
/// exactly when they lie on one coset line g<s1>.
std::pair<GroupElement, std::int64_t> s1_line_coordinate(const GroupElement& x);

}  // namespace l2lab
