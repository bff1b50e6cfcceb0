#include "l2lab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace l2lab {

namespace {

// s1 -> 0, s1^-1 -> 1, s2 -> 2, s2^-1 -> 3 already matches the canonical
// letter order s1 < s1^-1 < s2 < s2^-1.
void append_reduced(std::vector<Letter>& w, Letter s) {
  if (!w.empty() && w.back() == inverse_letter(s)) {
    w.pop_back();
  } else {
    w.push_back(s);
  }
}

void lamp_add(std::vector<std::pair<std::int64_t, std::int64_t>>& lamp,
              std::int64_t pos, std::int64_t delta) {
  if (delta == 0) return;
  auto it = std::lower_bound(lamp.begin(), lamp.end(), pos,
                             [](const auto& p, std::int64_t v) { return p.first < v; });
  if (it != lamp.end() && it->first == pos) {
    it->second += delta;
    if (it->second == 0) lamp.erase(it);
  } else {
    lamp.insert(it, {pos, delta});
  }
}

}  // namespace

GroupElement GroupElement::generator(GroupId g, Letter s) {
  GroupElement e(g);
  if (g == GroupId::Free2) {
    e.word_.push_back(s);
    return e;
  }
  switch (s) {
    case S1: e.lamp_.push_back({0, 1}); break;
    case S1Inv: e.lamp_.push_back({0, -1}); break;
    case S2: e.shift_ = 1; break;
    case S2Inv: e.shift_ = -1; break;
  }
  return e;
}

GroupElement GroupElement::t_generator(std::int64_t n, GroupId g) {
  if (n < 0) throw usage_error("t_generator: n must be >= 0");
  if (g == GroupId::WreathZZ) {
    GroupElement e(g);
    e.lamp_.push_back({n, 1});
    return e;
  }
  GroupElement e(g);
  e.word_.reserve(2 * static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i < n; ++i) e.word_.push_back(S2);
  e.word_.push_back(S1);
  for (std::int64_t i = 0; i < n; ++i) e.word_.push_back(S2Inv);
  return e;
}

GroupElement GroupElement::s1_power(std::int64_t a, GroupId g) {
  GroupElement e(g);
  if (g == GroupId::WreathZZ) {
    if (a != 0) e.lamp_.push_back({0, a});
    return e;
  }
  Letter s = a >= 0 ? S1 : S1Inv;
  for (std::int64_t i = 0, n = a >= 0 ? a : -a; i < n; ++i) e.word_.push_back(s);
  return e;
}

GroupElement GroupElement::s2_power(std::int64_t a, GroupId g) {
  GroupElement e(g);
  if (g == GroupId::WreathZZ) {
    e.shift_ = a;
    return e;
  }
  Letter s = a >= 0 ? S2 : S2Inv;
  for (std::int64_t i = 0, n = a >= 0 ? a : -a; i < n; ++i) e.word_.push_back(s);
  return e;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (group_ != o.group_) throw usage_error("mul: mixed groups");
  GroupElement r(group_);
  if (group_ == GroupId::Free2) {
    r.word_ = word_;
    for (Letter s : o.word_) append_reduced(r.word_, s);
    return r;
  }
  // (f, k)(g, l) = (f + g(. - k), k + l)
  r.lamp_ = lamp_;
  for (const auto& [pos, val] : o.lamp_) lamp_add(r.lamp_, pos + shift_, val);
  r.shift_ = shift_ + o.shift_;
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r(group_);
  if (group_ == GroupId::Free2) {
    r.word_.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
      r.word_.push_back(inverse_letter(*it));
    return r;
  }
  // (f, k)^-1 = (-f(. + k), -k)
  r.shift_ = -shift_;
  r.lamp_.reserve(lamp_.size());
  for (const auto& [pos, val] : lamp_) r.lamp_.push_back({pos - shift_, -val});
  return r;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return group_ == o.group_ && word_ == o.word_ && lamp_ == o.lamp_ &&
         shift_ == o.shift_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (group_ != o.group_) throw usage_error("compare: mixed groups");
  if (group_ == GroupId::Free2) {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }
  if (shift_ != o.shift_) return shift_ < o.shift_;
  return lamp_ < o.lamp_;
}

std::size_t GroupElement::hash() const {
  std::size_t h = group_ == GroupId::Free2 ? 0x9e3779b97f4a7c15ull : 0xc2b2ae3d27d4eb4full;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (Letter s : word_) mix(static_cast<std::size_t>(s) + 1);
  for (const auto& [pos, val] : lamp_) {
    mix(static_cast<std::size_t>(pos) * 2654435761u);
    mix(static_cast<std::size_t>(val));
  }
  mix(static_cast<std::size_t>(shift_));
  return h;
}

std::size_t GroupElement::length() const {
  if (group_ == GroupId::Free2) return word_.size();
  // length of the canonical word s2^{k1} s1^{c1} s2^{k2-k1} ... s2^{shift-km}
  std::size_t len = 0;
  std::int64_t at = 0;
  for (const auto& [pos, val] : lamp_) {
    len += static_cast<std::size_t>(pos > at ? pos - at : at - pos);
    len += static_cast<std::size_t>(val > 0 ? val : -val);
    at = pos;
  }
  len += static_cast<std::size_t>(shift_ > at ? shift_ - at : at - shift_);
  return len;
}

std::string GroupElement::str() const {
  std::vector<std::pair<char, std::int64_t>> runs;  // ('1' or '2', signed exponent)
  auto push_run = [&runs](char gen, std::int64_t exp) {
    if (exp == 0) return;
    if (!runs.empty() && runs.back().first == gen)
      runs.back().second += exp;
    else
      runs.push_back({gen, exp});
  };
  if (group_ == GroupId::Free2) {
    for (Letter s : word_) {
      switch (s) {
        case S1: push_run('1', 1); break;
        case S1Inv: push_run('1', -1); break;
        case S2: push_run('2', 1); break;
        case S2Inv: push_run('2', -1); break;
      }
    }
  } else {
    std::int64_t at = 0;
    for (const auto& [pos, val] : lamp_) {
      push_run('2', pos - at);
      push_run('1', val);
      at = pos;
    }
    push_run('2', shift_ - at);
  }
  if (runs.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& [gen, exp] : runs) {
    if (!first) os << ' ';
    first = false;
    os << 's' << gen;
    if (exp != 1) os << '^' << exp;
  }
  return os.str();
}

GroupElement GroupElement::parse(GroupId g, const std::string& text) {
  GroupElement result = identity(g);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '*' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] == 'e') {
      ++i;
      skip_ws();
      continue;
    }
    if (text[i] != 's' && text[i] != 't')
      throw usage_error("parse: unexpected character in '" + text + "'");
    bool is_t = text[i] == 't';
    ++i;
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      throw usage_error("parse: generator index expected in '" + text + "'");
    std::int64_t idx = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
      idx = idx * 10 + (text[i++] - '0');
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
        throw usage_error("parse: exponent expected in '" + text + "'");
      exp = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        exp = exp * 10 + (text[i++] - '0');
      if (neg) exp = -exp;
    }
    GroupElement base;
    if (is_t) {
      base = t_generator(idx, g);
    } else if (idx == 1) {
      base = s1_power(1, g);
    } else if (idx == 2) {
      base = s2_power(1, g);
    } else {
      throw usage_error("parse: only s1/s2/tN generators exist");
    }
    if (exp < 0) {
      base = base.inverse();
      exp = -exp;
    }
    for (std::int64_t k = 0; k < exp; ++k) result = result * base;
    skip_ws();
  }
  return result;
}

int max_ball_radius() {
  static int cached = [] {
    if (const char* env = std::getenv("L2LAB_MAX_BALL_RADIUS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 12;
  }();
  return cached;
}

std::vector<GroupElement> ball(int radius, GroupId g, int cap) {
  if (cap < 0) cap = max_ball_radius();
  if (radius < 0) throw usage_error("ball: negative radius");
  if (radius > cap)
    throw resource_error("ball: radius " + std::to_string(radius) +
                         " exceeds cap " + std::to_string(cap));
  std::set<GroupElement> seen;
  std::vector<GroupElement> frontier = {GroupElement::identity(g)};
  seen.insert(frontier.front());
  for (int r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (Letter s : kGenerators) {
        GroupElement y = x.times(s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<GroupElement> ball_of_set(const std::vector<GroupElement>& base, int radius) {
  if (base.empty()) return {};
  std::set<GroupElement> seen(base.begin(), base.end());
  std::vector<GroupElement> frontier(base.begin(), base.end());
  for (int r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (Letter s : kGenerators) {
        GroupElement y = x.times(s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

IndexSetSpec IndexSetSpec::explicit_set(std::vector<Integer> elements) {
  for (std::size_t i = 0; i + 1 < elements.size(); ++i)
    if (!(elements[i] < elements[i + 1]))
      throw usage_error("IndexSetSpec: elements must be strictly increasing");
  for (const auto& e : elements)
    if (e < 0) throw usage_error("IndexSetSpec: elements must be naturals");
  IndexSetSpec s;
  s.kind_ = Kind::Explicit;
  s.count_ = static_cast<int>(elements.size());
  s.explicit_ = std::move(elements);
  return s;
}

IndexSetSpec IndexSetSpec::factorial_rule(int count, bool congruence_adjust) {
  if (count < 0) throw usage_error("IndexSetSpec: negative count");
  IndexSetSpec s;
  s.kind_ = Kind::Factorial;
  s.count_ = count;
  s.congruence_adjust_ = congruence_adjust;
  return s;
}

IndexSetSpec IndexSetSpec::custom(std::function<Integer(int)> kth, int count) {
  if (!kth) throw usage_error("IndexSetSpec: null generator");
  IndexSetSpec s;
  s.kind_ = Kind::Custom;
  s.count_ = count;
  s.kth_ = std::move(kth);
  return s;
}

int IndexSetSpec::count() const {
  if (kind_ == Kind::Explicit) return static_cast<int>(explicit_.size());
  if (kind_ == Kind::Factorial) return count_ + 1;  // leading 2 plus m_1..m_count
  return count_;
}

namespace {

std::vector<Integer> factorial_elements(int upto, bool congruence_adjust) {
  std::vector<Integer> out;
  out.push_back(2);
  Integer fact = 1;
  for (int k = 1; k <= upto; ++k) {
    fact *= k;
    Integer m = fact;
    if (m <= out.back()) m = out.back() + 1;
    if (congruence_adjust)
      while (m % 3 != 2) ++m;
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<Integer> IndexSetSpec::elements() const {
  if (kind_ == Kind::Explicit) return explicit_;
  if (kind_ == Kind::Factorial) return factorial_elements(count_, congruence_adjust_);
  std::vector<Integer> out;
  for (int k = 0; k < count_; ++k) {
    Integer v = kth_(k);
    if (!out.empty() && v <= out.back())
      throw usage_error("IndexSetSpec: custom generator must be strictly increasing");
    out.push_back(v);
  }
  return out;
}

Integer IndexSetSpec::element(int k) const {
  if (k < 0) throw usage_error("IndexSetSpec: negative index");
  if (kind_ == Kind::Factorial)
    return factorial_elements(k, congruence_adjust_)[static_cast<std::size_t>(k)];
  if (kind_ == Kind::Explicit) {
    if (k >= static_cast<int>(explicit_.size()))
      throw usage_error("IndexSetSpec: index past the end of an explicit set");
    return explicit_[static_cast<std::size_t>(k)];
  }
  if (k >= count_) throw usage_error("IndexSetSpec: index past the end of a custom set");
  return kth_(k);
}

std::vector<std::int64_t> IndexSetSpec::elements_i64() const {
  std::vector<std::int64_t> out;
  for (const Integer& e : elements()) {
    if (e > std::numeric_limits<std::int64_t>::max())
      throw resource_error("IndexSetSpec: element too large to materialize");
    out.push_back(static_cast<std::int64_t>(e));
  }
  return out;
}

bool IndexSetSpec::contains(const Integer& n) const {
  if (kind_ == Kind::Factorial) {
    for (int k = 0;; ++k) {
      Integer e = element(k);
      if (e == n) return true;
      if (e > n) return false;
    }
  }
  for (const Integer& e : elements()) {
    if (e == n) return true;
    if (e > n) return false;
  }
  return false;
}

namespace {

// Strips t-generator letters greedily off the front of a reduced Free2 word.
// Each step removes the first s1-letter, so the loop terminates.
bool free2_lambda_membership(const GroupElement& x, const IndexSetSpec& I) {
  GroupElement w = x;
  while (!w.is_identity()) {
    const auto& letters = w.word();
    std::int64_t run = 0;
    std::size_t i = 0;
    while (i < letters.size() && (letters[i] == S2 || letters[i] == S2Inv)) {
      run += letters[i] == S2 ? 1 : -1;
      ++i;
    }
    if (run < 0 || i == letters.size()) return false;  // no t-prefix possible
    if (!I.contains(Integer(run))) return false;
    bool positive = letters[i] == S1;
    GroupElement t = GroupElement::t_generator(run, GroupId::Free2);
    w = (positive ? t.inverse() : t) * w;
  }
  return true;
}

}  // namespace

bool lambda_membership(const GroupElement& x, const IndexSetSpec& I) {
  if (x.group() == GroupId::WreathZZ) {
    if (x.shift() != 0) return false;
    for (const auto& [pos, val] : x.lamp()) {
      if (pos < 0 || !I.contains(Integer(pos))) return false;
    }
    return true;
  }
  return free2_lambda_membership(x, I);
}

std::pair<GroupElement, std::int64_t> s1_line_coordinate(const GroupElement& x) {
  if (x.group() == GroupId::Free2) {
    const auto& w = x.word();
    std::int64_t run = 0;
    std::size_t end = w.size();
    while (end > 0 && (w[end - 1] == S1 || w[end - 1] == S1Inv)) {
      run += w[end - 1] == S1 ? 1 : -1;
      --end;
    }
    return {x * GroupElement::s1_power(-run, x.group()), run};
  }
  std::int64_t coord = 0;
  for (const auto& [pos, val] : x.lamp())
    if (pos == x.shift()) coord = val;
  return {x * GroupElement::s1_power(-coord, x.group()), coord};
}

}  // namespace l2lab
