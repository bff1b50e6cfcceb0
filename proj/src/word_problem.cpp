#include "l2lab/word_problem.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace l2lab {

void GF2Vector::toggle(const GroupElement& g) {
  auto it = support.find(g);
  if (it == support.end())
    support.insert(g);
  else
    support.erase(it);
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& o) {
  for (const auto& g : o.support) toggle(g);
  return *this;
}

GF2Vector w_block(const GroupElement& g, const GroupElement& t) {
  GF2Vector v;
  v.group = g.group();
  GroupElement gt = g * t;
  for (const auto& f : {GroupElement::s1_power(-1, g.group()),
                        GroupElement::identity(g.group()),
                        GroupElement::s1_power(1, g.group())}) {
    v.toggle(g * f);
    v.toggle(gt * f);
  }
  return v;
}

GF2Vector generator_w(const GroupElement& t) {
  return w_block(GroupElement::identity(t.group()), t);
}

std::vector<SupportInterval> support_intervals(const GF2Vector& x) {
  std::map<GroupElement, std::pair<std::int64_t, std::int64_t>> lines;
  for (const auto& p : x.support) {
    auto [key, c] = s1_line_coordinate(p);
    auto it = lines.find(key);
    if (it == lines.end())
      lines[key] = {c, c};
    else {
      it->second.first = std::min(it->second.first, c);
      it->second.second = std::max(it->second.second, c);
    }
  }
  std::vector<SupportInterval> out;
  for (const auto& [key, range] : lines)
    out.push_back({key, range.first, range.second});
  return out;
}

namespace {

// Support organized per coset line; points are reconstructed as key * s1^c.
using LineMap = std::map<GroupElement, std::set<std::int64_t>>;

LineMap to_lines(const GF2Vector& x) {
  LineMap lines;
  for (const auto& p : x.support) {
    auto [key, c] = s1_line_coordinate(p);
    lines[key].insert(c);
  }
  return lines;
}

void toggle_line(LineMap& lines, const GroupElement& p) {
  auto [key, c] = s1_line_coordinate(p);
  auto& coords = lines[key];
  auto it = coords.find(c);
  if (it == coords.end())
    coords.insert(c);
  else
    coords.erase(it);
  if (coords.empty()) lines.erase(key);
}

std::size_t total_interval_mass(const LineMap& lines) {
  std::size_t mass = 0;
  for (const auto& [key, coords] : lines)
    mass += static_cast<std::size_t>(*coords.rbegin() - *coords.begin() + 1);
  return mass;
}

}  // namespace

MembershipResult is_in_V(const GF2Vector& x, const IndexSetSpec& I) {
  MembershipResult res;
  GroupId grp = x.group;
  LineMap lines = to_lines(x);

  std::size_t mass = total_interval_mass(lines);
  std::size_t guard = mass + 4;
  while (!lines.empty()) {
    if (guard-- == 0) throw internal_error("is_in_V: interval mass stopped decreasing");

    // work on the canonically smallest nonempty line
    const auto& [key, coords] = *lines.begin();
    std::int64_t lo = *coords.begin(), hi = *coords.rbegin();
    if (hi - lo < 2) return res;  // interval shorter than 3 points

    GroupElement g = key * GroupElement::s1_power(lo + 1, grp);

    // candidates: t = g^-1 q over strict-interior points q of the nonempty
    // intervals, tested for Lambda_I membership
    GroupElement chosen_t;
    bool found = false;
    for (const auto& [key2, coords2] : lines) {
      std::int64_t lo2 = *coords2.begin(), hi2 = *coords2.rbegin();
      for (std::int64_t c = lo2 + 1; c < hi2 && !found; ++c) {
        GroupElement q = key2 * GroupElement::s1_power(c, grp);
        GroupElement t = g.inverse() * q;
        if (t.is_identity()) continue;
        if (lambda_membership(t, I)) {
          chosen_t = t;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) return res;

    GF2Vector block = w_block(g, chosen_t);
    for (const auto& p : block.support) toggle_line(lines, p);
    res.certificate.push_back({g, chosen_t});

    std::size_t new_mass = total_interval_mass(lines);
    if (new_mass >= mass)
      throw internal_error("is_in_V: interval mass did not decrease");
    mass = new_mass;
    res.interval_mass.push_back(mass);
  }
  res.member = true;
  return res;
}

GF2Vector replay_certificate(GroupId g, const std::vector<CertStep>& steps) {
  GF2Vector v;
  v.group = g;
  for (const auto& s : steps) v ^= w_block(s.g, s.t);
  return v;
}

namespace {

std::string delta_str(const GroupElement& g) {
  if (g.is_identity()) return "tau";
  return "tau^(" + g.str() + ")";
}

std::vector<GroupElement> enumeration_prefix(GroupId g, std::size_t need) {
  int radius = 0;
  std::vector<GroupElement> elems;
  for (;;) {
    elems = ball(radius, g, std::max(radius, max_ball_radius()));
    if (elems.size() >= need || radius >= max_ball_radius()) break;
    ++radius;
  }
  std::stable_sort(elems.begin(), elems.end(),
                   [](const GroupElement& a, const GroupElement& b) {
                     if (a.length() != b.length()) return a.length() < b.length();
                     return a < b;
                   });
  if (elems.size() > need) elems.resize(need);
  return elems;
}

Relation make_w_relation(const GroupElement& g, const Integer& n, GroupId grp) {
  Relation r;
  r.family = Relation::Family::WRelation;
  r.g = g;
  r.n = n;
  GroupElement t = GroupElement::t_generator(static_cast<std::int64_t>(n), grp);
  std::ostringstream os;
  for (const auto& f : {GroupElement::s1_power(-1, grp), GroupElement::identity(grp),
                        GroupElement::s1_power(1, grp)}) {
    os << delta_str(g * f) << ' ' << delta_str(g * t * f) << ' ';
  }
  r.text = os.str();
  r.text.pop_back();
  return r;
}

}  // namespace

std::vector<Relation> enumerate_relations(const IndexSetSpec& I, int count, GroupId g) {
  std::vector<Relation> out;
  if (count <= 0) return out;

  {
    Relation r;
    r.family = Relation::Family::TauSquare;
    r.text = "tau^2";
    out.push_back(r);
  }

  std::vector<GroupElement> gamma = enumeration_prefix(g, static_cast<std::size_t>(count) + 2);
  auto gamma_at = [&gamma](std::size_t i) -> const GroupElement* {
    return i < gamma.size() ? &gamma[i] : nullptr;
  };

  for (int d = 1; static_cast<int>(out.size()) < count; ++d) {
    // commutators [delta_{gamma_a}, delta_{gamma_d}], a < d
    for (int a = 0; a < d && static_cast<int>(out.size()) < count; ++a) {
      const GroupElement* pa = gamma_at(static_cast<std::size_t>(a));
      const GroupElement* pd = gamma_at(static_cast<std::size_t>(d));
      if (!pa || !pd) break;
      Relation r;
      r.family = Relation::Family::Commutator;
      r.g = *pa;
      r.h = *pd;
      r.text = "[" + delta_str(*pa) + ", " + delta_str(*pd) + "]";
      out.push_back(r);
    }
    // w-relations with k + j = d - 1
    for (int k = 0; k < d && static_cast<int>(out.size()) < count; ++k) {
      int j = d - 1 - k;
      if (!I.is_unbounded() && k >= I.count()) continue;
      const GroupElement* pj = gamma_at(static_cast<std::size_t>(j));
      if (!pj) continue;
      out.push_back(make_w_relation(*pj, I.element(k), g));
    }
    // wreath relators at depths d and -d
    if (g == GroupId::WreathZZ) {
      for (int sign = 0; sign < 2 && static_cast<int>(out.size()) < count; ++sign) {
        int n = sign == 0 ? d : -d;
        Relation r;
        r.family = Relation::Family::WreathRelator;
        r.n = n;
        std::ostringstream os;
        os << "[s2^" << n << " s1 s2^" << -n << ", s1]";
        r.text = os.str();
        out.push_back(r);
      }
    }
    if (d > 4 * count + 8) break;  // safety; streams above always progress
  }
  if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
  return out;
}

}  // namespace l2lab
