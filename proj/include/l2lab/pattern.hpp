#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "l2lab/group.hpp"

namespace l2lab {

/// A Z2-valued function on a finite window of group elements. Queries outside
/// the window throw window_error; nothing is ever assumed zero silently.
class Pattern {
 public:
  Pattern() = default;
  Pattern(GroupId g, std::vector<GroupElement> window);
  static Pattern from_support(GroupId g, std::vector<GroupElement> window,
                              const std::vector<GroupElement>& support);

  GroupId group() const { return group_; }
  const std::vector<GroupElement>& window() const { return *window_; }
  std::shared_ptr<const std::vector<GroupElement>> window_ptr() const { return window_; }
  std::size_t size() const { return window_->size(); }

  /// Index in the sorted window, or -1.
  int index_of(const GroupElement& p) const;
  bool in_window(const GroupElement& p) const { return index_of(p) >= 0; }

  bool value(const GroupElement& p) const;
  bool value_at(int index) const { return bits_[static_cast<std::size_t>(index)]; }
  void set(const GroupElement& p, bool v);
  void set_at(int index, bool v) { bits_[static_cast<std::size_t>(index)] = v; }
  void clear();

  std::vector<GroupElement> support() const;
  std::uint64_t mask64() const;
  void load_mask64(std::uint64_t m);

  /// Left translation by g: the new pattern has window g*window and
  /// value(g*x) = old value(x).
  Pattern translated(const GroupElement& g) const;
  /// Restriction to a subwindow (must be contained in the window).
  Pattern restricted(const std::vector<GroupElement>& subwindow) const;

  bool operator==(const Pattern& o) const;

 private:
  GroupId group_ = GroupId::Free2;
  std::shared_ptr<const std::vector<GroupElement>> window_ =
      std::make_shared<const std::vector<GroupElement>>();
  std::vector<bool> bits_;
};

/// Does the window contain the full ball B(center, radius)?
bool window_contains_ball(const Pattern& p, const GroupElement& center, int radius);

}  // namespace l2lab
