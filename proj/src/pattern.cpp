#include "l2lab/pattern.hpp"

#include <algorithm>

namespace l2lab {

Pattern::Pattern(GroupId g, std::vector<GroupElement> window) : group_(g) {
  std::sort(window.begin(), window.end());
  window.erase(std::unique(window.begin(), window.end()), window.end());
  window_ = std::make_shared<const std::vector<GroupElement>>(std::move(window));
  bits_.assign(window_->size(), false);
}

Pattern Pattern::from_support(GroupId g, std::vector<GroupElement> window,
                              const std::vector<GroupElement>& support) {
  Pattern p(g, std::move(window));
  for (const auto& s : support) {
    int i = p.index_of(s);
    if (i < 0) throw window_error("Pattern: support point outside window");
    p.set_at(i, true);
  }
  return p;
}

int Pattern::index_of(const GroupElement& p) const {
  auto it = std::lower_bound(window_->begin(), window_->end(), p);
  if (it == window_->end() || !(*it == p)) return -1;
  return static_cast<int>(it - window_->begin());
}

bool Pattern::value(const GroupElement& p) const {
  int i = index_of(p);
  if (i < 0) throw window_error("Pattern: query outside window");
  return bits_[static_cast<std::size_t>(i)];
}

void Pattern::set(const GroupElement& p, bool v) {
  int i = index_of(p);
  if (i < 0) throw window_error("Pattern: set outside window");
  bits_[static_cast<std::size_t>(i)] = v;
}

void Pattern::clear() { std::fill(bits_.begin(), bits_.end(), false); }

std::vector<GroupElement> Pattern::support() const {
  std::vector<GroupElement> s;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s.push_back((*window_)[i]);
  return s;
}

std::uint64_t Pattern::mask64() const {
  if (size() > 64) throw resource_error("Pattern: window too large for mask64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) m |= std::uint64_t(1) << i;
  return m;
}

void Pattern::load_mask64(std::uint64_t m) {
  if (size() > 64) throw resource_error("Pattern: window too large for mask64");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    bits_[i] = (m >> i) & 1;
}

Pattern Pattern::translated(const GroupElement& g) const {
  std::vector<GroupElement> w;
  w.reserve(window_->size());
  for (const auto& x : *window_) w.push_back(g * x);
  Pattern out(group_, std::move(w));
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.set(g * (*window_)[i], true);
  return out;
}

Pattern Pattern::restricted(const std::vector<GroupElement>& subwindow) const {
  Pattern out(group_, subwindow);
  for (const auto& x : out.window()) out.set(x, value(x));
  return out;
}

bool Pattern::operator==(const Pattern& o) const {
  return group_ == o.group_ && *window_ == *o.window_ && bits_ == o.bits_;
}

bool window_contains_ball(const Pattern& p, const GroupElement& center, int radius) {
  for (const auto& x : ball(radius, p.group(), std::max(radius, max_ball_radius())))
    if (!p.in_window(center * x)) return false;
  return true;
}

}  // namespace l2lab
