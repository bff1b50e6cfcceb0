#include "l2lab/local_rules.hpp"

#include <algorithm>

namespace l2lab {

const char* to_string(LocalClass c) {
  switch (c) {
    case LocalClass::NotOneGood: return "not-1-good";
    case LocalClass::OneGoodNotLocallyGood: return "1-good-not-locally-good";
    case LocalClass::GoodEnd: return "good-end";
    case LocalClass::InteriorGood: return "interior-good";
  }
  return "?";
}

std::vector<GroupElement> Hook::vertices() const {
  std::vector<GroupElement> v;
  GroupId g = base.group();
  if (vertical) {
    for (int k = 0; k <= left_leg; ++k)
      v.push_back(base * GroupElement::s2_power(-k, g));
    return v;
  }
  for (int k = left_leg; k >= 0; --k)
    v.push_back(base * GroupElement::s2_power(-k, g));
  GroupElement right = base * GroupElement::generator(g, S1);
  for (int k = 0; k <= right_leg; ++k)
    v.push_back(right * GroupElement::s2_power(-k, g));
  return v;
}

std::vector<GroupElement> hook_vertices(GroupId g, int n, int m) {
  Hook h{GroupElement::identity(g), n, m, false};
  return h.vertices();
}

LocalAnalyzer::LocalAnalyzer(const Pattern& reference)
    : window_(reference.window_ptr()) {
  const auto& w = *window_;
  table_.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (Letter s : kGenerators)
      table_[i][s] = reference.index_of(w[i].times(s));
}

int LocalAnalyzer::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(window_->begin(), window_->end(), g);
  if (it == window_->end() || !(*it == g)) return -1;
  return static_cast<int>(it - window_->begin());
}

namespace {

// Occupied-neighbour masks (bit = Letter) realizable as hook slices:
// endpoint {s2}, leg interior {s2, s2^-1}, left bend {s2^-1, s1},
// right bend {s1^-1, s2^-1}.
constexpr unsigned kEndpointMask = 1u << S2;
constexpr bool admissible_mask(unsigned m) {
  return m == (1u << S2) || m == ((1u << S2) | (1u << S2Inv)) ||
         m == ((1u << S2Inv) | (1u << S1)) || m == ((1u << S1Inv) | (1u << S2Inv));
}

}  // namespace

std::optional<bool> LocalAnalyzer::try_one_good(const Pattern& p, int center) const {
  if (center < 0) return std::nullopt;
  if (!p.value_at(center)) return false;
  unsigned mask = 0;
  for (Letter s : kGenerators) {
    int n = step(center, s);
    if (n < 0) return std::nullopt;
    if (p.value_at(n)) mask |= 1u << s;
  }
  return admissible_mask(mask);
}

std::optional<LocalClass> LocalAnalyzer::try_classify(const Pattern& p, int center) const {
  auto og = try_one_good(p, center);
  if (!og) return std::nullopt;
  if (!*og) return LocalClass::NotOneGood;
  unsigned mask = 0;
  bool locally = true;
  for (Letter s : kGenerators) {
    int n = step(center, s);
    if (p.value_at(n)) {
      mask |= 1u << s;
      auto nog = try_one_good(p, n);
      if (!nog) return std::nullopt;
      if (!*nog) locally = false;
    }
  }
  if (!locally) return LocalClass::OneGoodNotLocallyGood;
  return mask == kEndpointMask ? LocalClass::GoodEnd : LocalClass::InteriorGood;
}

std::optional<Rational> LocalAnalyzer::try_f(const Pattern& p, int center, Letter s) const {
  auto c0 = try_classify(p, center);
  if (!c0) return std::nullopt;
  if (*c0 != LocalClass::InteriorGood) return Rational(0);
  int n = step(center, s);
  if (n < 0) return std::nullopt;
  auto c1 = try_classify(p, n);
  if (!c1) return std::nullopt;
  switch (*c1) {
    case LocalClass::InteriorGood: return Rational(1);
    case LocalClass::GoodEnd: return Rational(2);
    case LocalClass::OneGoodNotLocallyGood: return Rational(1, 2);
    case LocalClass::NotOneGood: return Rational(0);
  }
  return Rational(0);
}

std::optional<Rational> LocalAnalyzer::try_g(const Pattern& p, int center, Letter s) const {
  auto a = try_f(p, center, s);
  if (!a) return std::nullopt;
  int n = step(center, s);
  if (n < 0) return std::nullopt;
  auto b = try_f(p, n, inverse_letter(s));
  if (!b) return std::nullopt;
  return *a + *b;
}

LocalClass classify_local(const Pattern& chi, const GroupElement& center) {
  if (!window_contains_ball(chi, center, 2))
    throw window_error("classify_local: window must contain B(center,2)");
  LocalAnalyzer an(chi);
  auto c = an.try_classify(chi, an.index_of(center));
  if (!c) throw window_error("classify_local: window insufficient");
  return *c;
}

Rational f_s(const Pattern& chi, Letter s) {
  GroupElement e = GroupElement::identity(chi.group());
  if (!window_contains_ball(chi, e, 2) ||
      !window_contains_ball(chi, GroupElement::generator(chi.group(), s), 2))
    throw window_error("f_s: window must contain B(e,2) and s*B(e,2)");
  LocalAnalyzer an(chi);
  auto v = an.try_f(chi, an.index_of(e), s);
  if (!v) throw window_error("f_s: window insufficient");
  return *v;
}

Rational g_s(const Pattern& chi, Letter s) {
  GroupElement e = GroupElement::identity(chi.group());
  if (!window_contains_ball(chi, e, 3))
    throw window_error("g_s: window must contain B(e,3)");
  LocalAnalyzer an(chi);
  auto v = an.try_g(chi, an.index_of(e), s);
  if (!v) throw window_error("g_s: window insufficient");
  return *v;
}

namespace {

struct WalkIndices {
  int fate = 0;
  std::vector<int> R, P;
};

// Greedy walk from start through first. Continues through 1-good points; a
// point that is not 1-good stops the walk with fate 2, a good end with fate 1.
WalkIndices run_walker(const LocalAnalyzer& an, const Pattern& chi, int start, int first) {
  WalkIndices out;
  out.R.push_back(start);
  int prev = start, cur = first;
  for (;;) {
    auto cls = an.try_classify(chi, cur);
    if (!cls) {
      out.fate = 0;
      out.P = out.R;
      return out;
    }
    if (*cls == LocalClass::NotOneGood) {
      out.fate = 2;
      out.P = out.R;
      out.R.push_back(cur);
      return out;
    }
    out.R.push_back(cur);
    if (*cls == LocalClass::GoodEnd) {
      out.fate = 1;
      out.P = out.R;
      return out;
    }
    // interior-shaped: exactly one occupied neighbour besides prev
    int next = -1;
    for (Letter s : kGenerators) {
      int n = an.step(cur, s);
      if (n >= 0 && n != prev && chi.value_at(n)) {
        if (next >= 0) throw internal_error("walker: ambiguous continuation");
        next = n;
      }
    }
    if (next < 0) throw internal_error("walker: no continuation from 1-good point");
    if (std::find(out.R.begin(), out.R.end(), next) != out.R.end())
      throw internal_error("walker: cycle");
    prev = cur;
    cur = next;
  }
}

}  // namespace

WalkResult walker_fate(const Pattern& chi, const GroupElement& start,
                       const GroupElement& first_step) {
  LocalAnalyzer an(chi);
  int s = an.index_of(start), f = an.index_of(first_step);
  if (s < 0 || f < 0) throw window_error("walker_fate: start outside window");
  WalkIndices w = run_walker(an, chi, s, f);
  WalkResult out;
  out.fate = w.fate;
  for (int i : w.R) out.R.push_back(chi.window()[static_cast<std::size_t>(i)]);
  for (int i : w.P) out.P.push_back(chi.window()[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

// Orders the merged two-walker chain and reads off the hook geometry.
Hook chain_to_hook(const std::vector<GroupElement>& chain, GroupId g) {
  int horiz = -1;
  bool forward = true;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    GroupElement d = chain[k].inverse() * chain[k + 1];
    if (d == GroupElement::generator(g, S1) || d == GroupElement::generator(g, S1Inv)) {
      if (horiz >= 0) throw internal_error("chain_to_hook: two horizontal edges");
      horiz = static_cast<int>(k);
      forward = d == GroupElement::generator(g, S1);
    }
  }
  Hook h;
  if (horiz < 0) {
    // vertical segment: base = top point
    GroupElement top = chain.front(), bottom = chain.back();
    if (!chain.empty() && chain.size() >= 2) {
      GroupElement d = chain.front().inverse() * chain[1];
      if (d == GroupElement::generator(g, S2)) std::swap(top, bottom);
    }
    h.base = top;
    h.left_leg = static_cast<int>(chain.size()) - 1;
    h.right_leg = 0;
    h.vertical = true;
    return h;
  }
  std::size_t k = static_cast<std::size_t>(horiz);
  GroupElement base = forward ? chain[k] : chain[k + 1];
  int left = forward ? static_cast<int>(k) : static_cast<int>(chain.size() - k - 2);
  int right = forward ? static_cast<int>(chain.size() - k - 2) : static_cast<int>(k);
  h.base = base;
  h.left_leg = left;
  h.right_leg = right;
  h.vertical = false;
  return h;
}

}  // namespace

ConfigClass classify_configuration(const Pattern& chi) {
  GroupId g = chi.group();
  GroupElement e = GroupElement::identity(g);
  if (!window_contains_ball(chi, e, 2))
    throw window_error("classify_configuration: window must contain B(e,2)");
  LocalAnalyzer an(chi);
  int ei = an.index_of(e);

  ConfigClass out;
  if (!chi.value_at(ei)) return out;  // C0
  auto og = an.try_one_good(chi, ei);
  if (!*og) return out;  // C0

  auto ecls = an.try_classify(chi, ei);
  if (!ecls) throw window_error("classify_configuration: window insufficient");

  std::vector<int> dirs;
  for (Letter s : kGenerators) {
    int n = an.step(ei, s);
    if (n >= 0 && chi.value_at(n)) dirs.push_back(n);
  }

  // C0 test: F_s(chi) = 0 and F_{s^-1}(s^-1 chi) = 0 for all s. Nonzero terms
  // need chi interior good with a 1-good neighbour view, or an interior good
  // neighbour view. An unclassifiable direction leaves C0 open; the walker
  // toward it then exhausts the window instead.
  bool any_action = false, undecided = false;
  for (int d : dirs) {
    auto dcls = an.try_classify(chi, d);
    if (!dcls) {
      undecided = true;
      continue;
    }
    if (*dcls == LocalClass::InteriorGood) any_action = true;
    if (*ecls == LocalClass::InteriorGood && *dcls != LocalClass::NotOneGood)
      any_action = true;
  }
  if (!any_action && !undecided) return out;  // C0

  std::vector<WalkIndices> walks;
  if (dirs.size() == 2) {
    walks.push_back(run_walker(an, chi, ei, dirs[0]));
    walks.push_back(run_walker(an, chi, ei, dirs[1]));
  } else {
    // e is a lower endpoint; the second walker stays put and finishes with
    // fate 1 exactly when e is certified as a good end.
    walks.push_back(run_walker(an, chi, ei, dirs[0]));
    WalkIndices stay;
    stay.fate = *ecls == LocalClass::GoodEnd ? 1 : 0;
    stay.R = {ei};
    stay.P = {ei};
    walks.push_back(stay);
  }

  if (walks[0].fate == 0 || walks[1].fate == 0) {
    out.kind = ConfigClass::Kind::Infinite;
    out.finished_fate = std::max(walks[0].fate, walks[1].fate);
    return out;
  }

  out.kind = ConfigClass::Kind::Finite;
  out.i = std::min(walks[0].fate, walks[1].fate);
  out.j = std::max(walks[0].fate, walks[1].fate);

  auto to_elems = [&chi](const std::vector<int>& idx) {
    std::vector<GroupElement> v;
    for (int i : idx) v.push_back(chi.window()[static_cast<std::size_t>(i)]);
    return v;
  };
  // merged chain: walker 0 reversed (dropping its copy of e) + walker 1
  std::vector<GroupElement> chainR;
  {
    auto r0 = to_elems(walks[0].R);
    std::reverse(r0.begin(), r0.end());
    chainR = r0;
    auto r1 = to_elems(walks[1].R);
    chainR.insert(chainR.end(), r1.begin() + 1, r1.end());
  }
  std::vector<GroupElement> chainP;
  {
    auto p0 = to_elems(walks[0].P);
    std::reverse(p0.begin(), p0.end());
    chainP = p0;
    auto p1 = to_elems(walks[1].P);
    chainP.insert(chainP.end(), p1.begin() + 1, p1.end());
  }
  out.R = chainR;
  out.P = chainP;
  out.hook = chain_to_hook(chainR, g);

  std::vector<GroupElement> br1 = ball_of_set(chainR, 1);
  for (const auto& x : br1)
    if (!chi.in_window(x))
      throw window_error("classify_configuration: window must contain B(R,1)");
  out.psi = chi.restricted(br1);
  return out;
}

Rational SparseSymMatrix::at(int i, int j) const {
  if (i == j) return Rational(0);
  auto key = std::minmax(i, j);
  auto it = entries.find({key.first, key.second});
  return it == entries.end() ? Rational(0) : it->second;
}

SparseSymMatrix windowed_operator(const Pattern& chi,
                                  const std::vector<GroupElement>& domain) {
  SparseSymMatrix m;
  m.domain = domain;
  std::sort(m.domain.begin(), m.domain.end());
  m.domain.erase(std::unique(m.domain.begin(), m.domain.end()), m.domain.end());
  for (const auto& p : m.domain)
    if (!window_contains_ball(chi, p, 3))
      throw window_error("windowed_operator: window must contain B(domain,3)");

  LocalAnalyzer an(chi);
  auto idx_in_domain = [&m](const GroupElement& x) {
    auto it = std::lower_bound(m.domain.begin(), m.domain.end(), x);
    if (it == m.domain.end() || !(*it == x)) return -1;
    return static_cast<int>(it - m.domain.begin());
  };

  for (int i = 0; i < static_cast<int>(m.domain.size()); ++i) {
    const GroupElement& p = m.domain[static_cast<std::size_t>(i)];
    for (Letter s : {S1, S2}) {
      GroupElement q = p.times(s);
      int j = idx_in_domain(q);
      if (j < 0) continue;
      // coupling between p and q = p*s has weight G_{s^-1}(view from q)
      auto w = an.try_g(chi, an.index_of(q), inverse_letter(s));
      if (!w) throw window_error("windowed_operator: window insufficient");
      if (*w != 0) m.entries[{std::min(i, j), std::max(i, j)}] = *w;
    }
  }
  return m;
}

}  // namespace l2lab
