#include "l2lab/measure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "l2lab/kernels.hpp"
#include "l2lab/local_rules.hpp"

namespace l2lab {

std::vector<GroupElement> RelationSystem::default_F(GroupId g) {
  return {GroupElement::s1_power(-1, g), GroupElement::identity(g),
          GroupElement::s1_power(1, g)};
}

RelationSystem RelationSystem::hook_system(GroupId g, int n, int m, IndexSetSpec I) {
  RelationSystem sys;
  sys.group = g;
  sys.F = default_F(g);
  sys.lambda = std::move(I);
  sys.window = ball_of_set(hook_vertices(g, n, m), 1);
  return sys;
}

RelationSystem RelationSystem::on_window(GroupId g, std::vector<GroupElement> window,
                                         IndexSetSpec I) {
  RelationSystem sys;
  sys.group = g;
  sys.F = default_F(g);
  sys.lambda = std::move(I);
  std::sort(window.begin(), window.end());
  window.erase(std::unique(window.begin(), window.end()), window.end());
  sys.window = std::move(window);
  return sys;
}

bool is_horizontally_connected(const std::vector<GroupElement>& E, GroupId) {
  std::map<GroupElement, std::vector<std::int64_t>> lines;
  for (const auto& x : E) {
    auto [key, c] = s1_line_coordinate(x);
    lines[key].push_back(c);
  }
  for (auto& [key, coords] : lines) {
    std::sort(coords.begin(), coords.end());
    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
      if (coords[i + 1] != coords[i] + 1) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

OmegaClasses omega_on(const RelationSystem& sys, const std::vector<GroupElement>& window) {
  std::set<GroupElement> in_window(window.begin(), window.end());
  std::set<GroupElement> gs;
  for (const auto& p : window)
    for (const auto& f : sys.F) gs.insert(p * f.inverse());
  OmegaClasses out;
  for (const auto& g : gs) {
    bool all = true;
    for (const auto& f : sys.F)
      if (!in_window.count(g * f)) { all = false; break; }
    if (all) out.translates.push_back(g);
  }
  int t = static_cast<int>(out.translates.size());
  UnionFind uf(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      GroupElement d = out.translates[i].inverse() * out.translates[j];
      if (lambda_membership(d, sys.lambda)) uf.unite(i, j);
    }
  std::map<int, int> roots;
  out.class_of.resize(t);
  for (int i = 0; i < t; ++i) {
    int r = uf.find(i);
    auto [it, fresh] = roots.insert({r, static_cast<int>(roots.size())});
    out.class_of[i] = it->second;
  }
  out.class_count = static_cast<int>(roots.size());
  return out;
}

}  // namespace

OmegaClasses omega_classes(const RelationSystem& sys) {
  return omega_on(sys, sys.window);
}

bool extension_certified(const RelationSystem& sys) {
  if (!is_horizontally_connected(sys.window, sys.group)) return false;
  GroupElement e = GroupElement::identity(sys.group);
  auto [ekey, ec] = s1_line_coordinate(e);
  for (const auto& f : sys.F) {
    auto [key, c] = s1_line_coordinate(f);
    if (!(key == ekey)) return false;
  }
  return true;
}

Dyadic count_extendable(const RelationSystem& sys) {
  if (!extension_certified(sys))
    throw usage_error("count_extendable: extension property not certified for E");
  int K = omega_classes(sys).K();
  return Dyadic::power_of_two(static_cast<std::int64_t>(sys.window.size()) - K);
}

BitMatrix relation_rows(const RelationSystem& sys,
                        const std::vector<GroupElement>& window) {
  OmegaClasses om = omega_on(sys, window);
  auto index_of = [&window](const GroupElement& x) {
    auto it = std::lower_bound(window.begin(), window.end(), x);
    return static_cast<int>(it - window.begin());
  };
  std::map<int, int> first_of_class;
  BitMatrix rows(static_cast<int>(window.size()));
  for (std::size_t i = 0; i < om.translates.size(); ++i) {
    auto [it, fresh] = first_of_class.insert({om.class_of[i], static_cast<int>(i)});
    if (fresh) continue;
    const GroupElement& a = om.translates[static_cast<std::size_t>(it->second)];
    const GroupElement& b = om.translates[i];
    std::vector<int> bits;
    for (const auto& f : sys.F) bits.push_back(index_of(a * f));
    for (const auto& f : sys.F) bits.push_back(index_of(b * f));
    rows.add_row(bits);  // duplicates cancel mod 2
  }
  return rows;
}

std::uint64_t brute_count_extendable(const RelationSystem& sys, int enlarge_radius) {
  int n = static_cast<int>(sys.window.size());
  if (n > 24) throw resource_error("brute_count_extendable: |E| > 24");
  std::vector<GroupElement> big = ball_of_set(sys.window, enlarge_radius);
  BitMatrix rows = relation_rows(sys, big);

  std::vector<int> inner_index(big.size(), -1);
  std::set<GroupElement> inner(sys.window.begin(), sys.window.end());
  std::vector<int> eliminate;
  int pos = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (inner.count(big[i]))
      inner_index[i] = pos++;
    else
      eliminate.push_back(static_cast<int>(i));
  }
  BitMatrix reduced = rows.eliminate_columns(eliminate);

  std::vector<std::uint32_t> masks;
  for (int r = 0; r < reduced.rows(); ++r) {
    std::uint32_t m = 0;
    for (std::size_t c = 0; c < big.size(); ++c)
      if (reduced.get(r, static_cast<int>(c))) {
        if (inner_index[c] < 0)
          throw internal_error("brute_count_extendable: elimination left an outer bit");
        m |= std::uint32_t(1) << inner_index[c];
      }
    if (m) masks.push_back(m);
  }
  return count_even_parity_parallel(masks, n);
}

Dyadic cylinder_measure(const Pattern& psi, const RelationSystem& sys) {
  if (!(psi.window() == sys.window))
    throw usage_error("cylinder_measure: pattern window differs from system window");
  if (!extension_certified(sys))
    throw usage_error("cylinder_measure: extension property not certified");
  OmegaClasses om = omega_classes(sys);
  auto parity = [&](const GroupElement& g) {
    bool p = false;
    for (const auto& f : sys.F) p ^= psi.value(g * f);
    return p;
  };
  std::map<int, bool> class_parity;
  for (std::size_t i = 0; i < om.translates.size(); ++i) {
    bool p = parity(om.translates[i]);
    auto [it, fresh] = class_parity.insert({om.class_of[i], p});
    if (!fresh && it->second != p) return Dyadic();  // violated relation
  }
  return Dyadic::power_of_two(-(static_cast<std::int64_t>(sys.window.size()) - om.K()));
}

Dyadic hook_measure(int n, int m, const IndexSetSpec& I) {
  if (n < 1 || m < 1) throw usage_error("hook_measure: legs must be >= 1");
  int lo = std::min(n, m);
  int K = 0;
  for (const Integer& e : I.elements()) {
    if (e > lo) break;
    if (e >= 1) ++K;
  }
  return Dyadic::power_of_two(-3 * (static_cast<std::int64_t>(n) + m) - 8 + K);
}

Pattern hook_pattern(GroupId g, int n, int m, int radius) {
  auto R = hook_vertices(g, n, m);
  return Pattern::from_support(g, ball_of_set(R, radius), R);
}

CharacterSampler::CharacterSampler(const RelationSystem& sys) : sys_(sys) {
  if (sys.window.size() > 64)
    throw resource_error("CharacterSampler: window larger than 64 points");
  scratch_ = Pattern(sys.group, sys.window);
  BitMatrix rows = relation_rows(sys, sys.window);
  for (const auto& v : rows.kernel_basis()) basis_.push_back(v.empty() ? 0 : v[0]);
}

Pattern CharacterSampler::sample(std::uint64_t seed) const {
  std::mt19937_64 rng(mix64(seed));
  std::uint64_t coeffs = rng();
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if ((coeffs >> b) & 1) mask ^= basis_[b];
  Pattern p = scratch_;
  p.load_mask64(mask);
  return p;
}

Pattern sample_character(const RelationSystem& sys, std::uint64_t seed) {
  return CharacterSampler(sys).sample(seed);
}

EventEstimate estimate_event_mask(const RelationSystem& sys,
                                  const std::function<bool(std::uint64_t)>& predicate,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw usage_error("estimate_event: samples must be >= 1");
  CharacterSampler sampler(sys);
  std::uint64_t hits = mc_hits_parallel(sampler.basis(), samples, seed, predicate);
  EventEstimate est;
  est.hits = hits;
  est.samples = samples;
  est.frequency = Rational(Integer(hits), Integer(samples));
  est.sigma_sq = est.frequency * (1 - est.frequency) / Rational(Integer(samples));
  return est;
}

EventEstimate estimate_event(const RelationSystem& sys,
                             const std::function<bool(const Pattern&)>& predicate,
                             std::uint64_t samples, std::uint64_t seed) {
  CharacterSampler sampler(sys);
  const Pattern& tmpl = sampler.window_pattern();
  auto mask_pred = [&tmpl, &predicate](std::uint64_t mask) {
    Pattern p = tmpl;
    p.load_mask64(mask);
    return predicate(p);
  };
  return estimate_event_mask(sys, mask_pred, samples, seed);
}

bool within_k_sigma(const EventEstimate& est, const Rational& p, int k) {
  Rational d = est.frequency - p;
  Rational lhs = d * d;
  Rational rhs = Rational(k) * Rational(k) * p * (1 - p) / Rational(Integer(est.samples));
  return lhs <= rhs;
}

std::vector<GroupElement> dg_window(int N, GroupId g) {
  std::vector<GroupElement> w;
  for (int k = 0; k <= N; ++k) {
    GroupElement spine = GroupElement::s2_power(-k, g);
    w.push_back(spine);
    w.push_back(spine * GroupElement::s1_power(1, g));
    w.push_back(spine * GroupElement::s1_power(-1, g));
  }
  std::sort(w.begin(), w.end());
  return w;
}

Pattern dg_pattern(int N, GroupId g) {
  std::vector<GroupElement> spine;
  for (int k = 0; k <= N; ++k) spine.push_back(GroupElement::s2_power(-k, g));
  return Pattern::from_support(g, dg_window(N, g), spine);
}

Dyadic dg_bound(int N, const IndexSetSpec& I, GroupId g) {
  if (N < 1) throw usage_error("dg_bound: N must be >= 1");
  RelationSystem sys = RelationSystem::on_window(g, dg_window(N, g), I);
  int K = omega_classes(sys).K();
  if (K > N) throw internal_error("dg_bound: K_N exceeded N");
  return Dyadic::power_of_two(-(3 * static_cast<std::int64_t>(N) - K));
}

Pattern extend_pattern(const Pattern& psi, const RelationSystem& sys,
                       const std::vector<GroupElement>& target_window) {
  std::set<GroupElement> target(target_window.begin(), target_window.end());
  for (const auto& x : psi.window())
    if (!target.count(x))
      throw usage_error("extend_pattern: target does not contain the pattern window");

  std::vector<GroupElement> cur_window = psi.window();
  std::map<GroupElement, bool> values;
  for (const auto& x : cur_window) values[x] = psi.value(x);

  std::set<GroupElement> remaining;
  for (const auto& x : target)
    if (!values.count(x)) remaining.insert(x);

  while (!remaining.empty()) {
    // pick the first adjacent point keeping horizontal connectivity
    GroupElement chosen;
    bool found = false;
    for (const auto& h : remaining) {
      bool adjacent = false;
      for (Letter s : kGenerators)
        if (values.count(h.times(s))) { adjacent = true; break; }
      if (!adjacent) continue;
      std::vector<GroupElement> trial = cur_window;
      trial.push_back(h);
      if (!is_horizontally_connected(trial, sys.group)) continue;
      chosen = h;
      found = true;
      break;
    }
    if (!found) throw internal_error("extend_pattern: no connectivity-preserving step");

    // forced value: some translate gF ends at chosen while a Lambda-partner
    // g t F already lies inside the known region
    std::set<GroupElement> known;
    for (const auto& [x, v] : values) known.insert(x);
    known.insert(chosen);
    bool forced = false, value = false;
    for (const auto& f : sys.F) {
      GroupElement g = chosen * f.inverse();
      bool inside = true;
      for (const auto& f2 : sys.F)
        if (!known.count(g * f2)) { inside = false; break; }
      if (!inside) continue;
      // partners
      for (const auto& [x, v] : values) {
        (void)v;
        for (const auto& f2 : sys.F) {
          GroupElement g2 = x * f2.inverse();
          GroupElement d = g.inverse() * g2;
          if (d.is_identity() || !lambda_membership(d, sys.lambda)) continue;
          bool partner_inside = true;
          bool partner_parity = false;
          for (const auto& f3 : sys.F) {
            auto it = values.find(g2 * f3);
            if (it == values.end()) { partner_inside = false; break; }
            partner_parity ^= it->second;
          }
          if (!partner_inside) continue;
          bool rest_parity = false;
          for (const auto& f3 : sys.F) {
            GroupElement y = g * f3;
            if (y == chosen) continue;
            auto it = values.find(y);
            if (it == values.end()) { partner_inside = false; break; }
            rest_parity ^= it->second;
          }
          if (!partner_inside) continue;
          bool v_forced = partner_parity ^ rest_parity;
          if (forced && value != v_forced)
            throw internal_error("extend_pattern: inconsistent forced values");
          forced = true;
          value = v_forced;
        }
      }
    }
    values[chosen] = forced ? value : false;
    cur_window.push_back(chosen);
    remaining.erase(chosen);
  }

  std::vector<GroupElement> support;
  for (const auto& [x, v] : values)
    if (v) support.push_back(x);
  return Pattern::from_support(sys.group, target_window, support);
}

}  // namespace l2lab
