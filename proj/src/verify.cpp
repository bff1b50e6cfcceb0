#include "l2lab/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "l2lab/closure.hpp"
#include "l2lab/dimension.hpp"
#include "l2lab/finite_models.hpp"
#include "l2lab/kernels.hpp"
#include "l2lab/local_rules.hpp"
#include "l2lab/measure.hpp"
#include "l2lab/word_problem.hpp"

namespace l2lab::verify {

namespace {

CheckResult pass(std::string name, std::string detail = "") {
  return {std::move(name), true, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

GroupElement random_element(GroupId g, int len, std::mt19937_64& rng) {
  GroupElement x = GroupElement::identity(g);
  for (int i = 0; i < len; ++i) x = x.times(kGenerators[rng() % 4]);
  return x;
}

}  // namespace

CheckResult models_parity(int lmax) {
  const std::string name = "eigenvalue -2 parity law, l <= " + std::to_string(lmax);
  auto rows = models_table(lmax);
  for (const auto& r : rows) {
    int expect = r.i == 1 && r.j == 1 && r.l % 3 == 1 ? 1 : 0;
    if (r.dim != expect)
      return fail(name, "mismatch at l=" + std::to_string(r.l) + " scenario (" +
                            std::to_string(r.i) + "," + std::to_string(r.j) + ")");
  }
  return pass(name, std::to_string(rows.size()) + " scenarios checked");
}

CheckResult counting_law(int windows, std::uint64_t seed) {
  const std::string name =
      "counting law 2^{|E|-K} vs brute enumeration on " + std::to_string(windows) + " windows";
  std::mt19937_64 rng(mix64(seed));
  int done = 0;
  while (done < windows) {
    GroupId g = done % 2 ? GroupId::WreathZZ : GroupId::Free2;
    std::vector<GroupElement> E;
    if (done % 4 < 2) {
      // hook neighbourhoods with |E| <= 20
      static const std::pair<int, int> legs[] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}};
      auto [n, m] = legs[rng() % 5];
      E = ball_of_set(hook_vertices(g, n, m), 1);
    } else {
      // grown horizontally connected window
      E = {GroupElement::identity(g)};
      std::size_t target = 8 + rng() % 13;
      int guard = 0;
      while (E.size() < target && guard++ < 500) {
        GroupElement h = E[rng() % E.size()].times(kGenerators[rng() % 4]);
        if (std::find(E.begin(), E.end(), h) != E.end()) continue;
        E.push_back(h);
        if (!is_horizontally_connected(E, g)) E.pop_back();
      }
      std::sort(E.begin(), E.end());
    }
    if (E.size() > 20) continue;
    std::vector<Integer> els;
    for (int i = 1; i <= 5; ++i)
      if (rng() % 2) els.push_back(i);
    auto sys = RelationSystem::on_window(g, E, IndexSetSpec::explicit_set(els));
    Dyadic closed = count_extendable(sys);
    std::uint64_t brute = brute_count_extendable(sys);
    if (Dyadic(Integer(brute), 0) != closed) {
      std::ostringstream os;
      os << "window " << done << ": brute " << brute << " vs closed " << closed.str();
      return fail(name, os.str());
    }
    ++done;
  }
  return pass(name, "all equal");
}

CheckResult hook_mc(int n, int m, std::uint64_t samples, std::uint64_t seed) {
  std::ostringstream label;
  label << "hook (" << n << "," << m << ") cylinder frequency, I={2}, " << samples
        << " samples";
  GroupId g = GroupId::Free2;
  IndexSetSpec I2 = IndexSetSpec::explicit_set({Integer(2)});
  auto sys = RelationSystem::hook_system(g, n, m, I2);
  std::uint64_t target = hook_pattern(g, n, m, 1).mask64();
  auto est = estimate_event_mask(
      sys, [target](std::uint64_t mask) { return mask == target; }, samples, seed);
  Rational p = hook_measure(n, m, I2).to_rational();
  if (!within_k_sigma(est, p, 4)) {
    std::ostringstream os;
    os << est.hits << "/" << est.samples << " outside 4 sigma of " << p;
    return fail(label.str(), os.str());
  }
  std::ostringstream os;
  os << est.hits << " hits, expected about "
     << boost::multiprecision::numerator(p * Rational(Integer(est.samples))) /
            boost::multiprecision::denominator(p * Rational(Integer(est.samples)));
  return pass(label.str(), os.str());
}

CheckResult beta_symbolic() {
  const std::string name = "series constants from the symbolic closed-form expression";
  Rational x = rational_pow2(-9);
  Rational pref = Rational(3) / ((1 - x) * (1 - x));
  Rational b1 = pref / rational_pow2(6) * rational_pow2(-12);
  Rational b2 = pref / rational_pow2(7);
  auto [e1, e2] = beta_constants();
  if (b1 != e1 || b1 != Rational(3, 261121))
    return fail(name, "beta1 mismatch");
  if (b2 != e2 || b2 != Rational(6144, 261121))
    return fail(name, "beta2 mismatch");
  return pass(name, "beta1 = 3/261121, beta2 = 6144/261121");
}

CheckResult route_agreement(const IndexSetSpec& I, int terms, int L, int width_exp) {
  std::ostringstream label;
  label << "route agreement (closed vs direct) at L=" << L;
  auto closed = dimension_closed_form(I, terms);
  auto direct = dimension_direct_sum(I, L);
  if (direct.width() > rational_pow2(-width_exp))
    return fail(label.str(), "direct-sum width above 2^-" + std::to_string(width_exp));
  if (!(direct.lower <= closed.lower && closed.upper <= direct.upper))
    return fail(label.str(), "closed-form enclosure not contained in the direct sum");
  return pass(label.str());
}

CheckResult ubox_identity(std::int64_t n, int L, int width_exp) {
  std::ostringstream label;
  label << "box sum closed form at n=" << n << ", L=" << L;
  auto enc = u_box_truncated(n, L);
  if (enc.width() > rational_pow2(-width_exp))
    return fail(label.str(), "width above 2^-" + std::to_string(width_exp));
  if (!enc.contains(u_box_closed_form(n)))
    return fail(label.str(), "closed form outside the enclosure");
  return pass(label.str());
}

namespace {

int class_index(LocalClass c) {
  switch (c) {
    case LocalClass::InteriorGood: return 0;
    case LocalClass::GoodEnd: return 1;
    case LocalClass::OneGoodNotLocallyGood: return 2;
    case LocalClass::NotOneGood: return 3;
  }
  return 3;
}

std::pair<Rational, Rational> table_entry(LocalClass chi_cls, LocalClass view_cls) {
  const Rational vals[4] = {Rational(1), Rational(2), Rational(1, 2), Rational(0)};
  Rational f = chi_cls == LocalClass::InteriorGood ? vals[class_index(view_cls)] : Rational(0);
  Rational fr = view_cls == LocalClass::InteriorGood ? vals[class_index(chi_cls)] : Rational(0);
  return {f, fr};
}

}  // namespace

CheckResult table_exhaustive(int samples, std::uint64_t seed) {
  const std::string name =
      "local F-table with transpose law, " + std::to_string(samples) + " random completions";
  GroupId g = GroupId::Free2;
  GroupElement e = GroupElement::identity(g);
  Pattern p(g, ball(3, g));
  LocalAnalyzer an(p);
  int ei = an.index_of(e);

  // witnesses covering every nonzero table entry
  const std::vector<std::pair<std::vector<std::string>, Letter>> witnesses = {
      {{"s2^-1", "e", "s2", "s2^2", "s2^3"}, S2},
      {{"s2^2", "s2", "e", "s2^-1"}, S2Inv},
      {{"e", "s2", "s2^2", "s2^3"}, S2},
      {{"s2^-1", "e", "s2", "s2^2", "s2^3", "s2^2 s1"}, S2},
      {{"s2^-1", "e", "s2", "s2^2", "s2^3", "s2^-1 s1"}, S2},
  };

  bool nonzero_rows_hit[3] = {false, false, false};  // entries 1, 2, 1/2 seen
  std::mt19937_64 rng(mix64(seed));
  long checked = 0;

  auto check_current = [&](Letter s) -> bool {
    int si = an.step(ei, s);
    auto chi_cls = an.try_classify(p, ei);
    auto view_cls = an.try_classify(p, si);
    if (!chi_cls || !view_cls) return true;
    auto [f, fr] = table_entry(*chi_cls, *view_cls);
    auto got_f = an.try_f(p, ei, s);
    auto got_fr = an.try_f(p, si, inverse_letter(s));
    if (!got_f || !got_fr) return true;
    ++checked;
    if (*got_f != f || *got_fr != fr) return false;
    auto [tf, tfr] = table_entry(*view_cls, *chi_cls);
    if (tf != fr || tfr != f) return false;  // transpose law
    for (auto val : {f, fr}) {
      if (val == Rational(1)) nonzero_rows_hit[0] = true;
      if (val == Rational(2)) nonzero_rows_hit[1] = true;
      if (val == Rational(1, 2)) nonzero_rows_hit[2] = true;
    }
    return true;
  };

  for (const auto& [support, s] : witnesses) {
    p.clear();
    for (const auto& w : support) p.set(GroupElement::parse(g, w), true);
    if (!check_current(s)) return fail(name, "witness mismatch");
  }
  for (int trial = 0; trial < samples; ++trial) {
    p.clear();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (rng() % 3 == 0) p.set_at(static_cast<int>(i), true);
    if (rng() % 2) p.set(e, true);
    for (Letter s : kGenerators)
      if (!check_current(s))
        return fail(name, "random completion mismatch at trial " + std::to_string(trial));
  }
  if (!nonzero_rows_hit[0] || !nonzero_rows_hit[1] || !nonzero_rows_hit[2])
    return fail(name, "not all nonzero table entries realized");
  return pass(name, std::to_string(checked) + " (pattern, generator) pairs checked");
}

CheckResult windowed_models(int max_total) {
  const std::string name = "windowed operator vs path models, hooks with n+m <= " +
                           std::to_string(max_total);
  GroupId g = GroupId::Free2;
  for (int n = 1; n < max_total; ++n)
    for (int m = 1; n + m <= max_total; ++m) {
      Pattern chi = hook_pattern(g, n, m, 3);
      std::vector<GroupElement> path = hook_vertices(g, n, m);
      auto M = windowed_operator(chi, path);
      int l = n + m + 1;
      std::vector<int> order;
      for (const auto& v : path) {
        auto it = std::lower_bound(M.domain.begin(), M.domain.end(), v);
        order.push_back(static_cast<int>(it - M.domain.begin()));
      }
      PathModel model = build_model(l, 1, 1);
      for (int k = 0; k < l; ++k)
        if (M.at(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k + 1)]) !=
            model.edge_weight(k))
          return fail(name, "edge weight mismatch on legs (" + std::to_string(n) + "," +
                                std::to_string(m) + ")");
      if (M.entries.size() != static_cast<std::size_t>(l))
        return fail(name, "off-path coupling on legs (" + std::to_string(n) + "," +
                              std::to_string(m) + ")");
      if ((n + m) % 3 == 0) {
        auto kv = kernel_vector(l, Rational(2), Rational(2));
        for (int r = 0; r <= l; ++r) {
          Rational acc = 2 * kv[static_cast<std::size_t>(r)];
          for (int c = 0; c <= l; ++c)
            acc += M.at(order[static_cast<std::size_t>(r)],
                        order[static_cast<std::size_t>(c)]) *
                   kv[static_cast<std::size_t>(c)];
          if (acc != Rational(0))
            return fail(name, "kernel vector not annihilated on legs (" + std::to_string(n) +
                                  "," + std::to_string(m) + ")");
        }
      }
    }
  return pass(name);
}

CheckResult digit_splitting(int trials, std::uint64_t seed) {
  const std::string name =
      "digit splitting into 2^{D-1} well-formed numbers, " + std::to_string(trials) + " digit sets";
  std::mt19937_64 rng(mix64(seed));
  for (int trial = 0; trial < trials; ++trial) {
    int D = 2 + static_cast<int>(rng() % 4);
    std::set<std::int64_t> raw;
    int size = static_cast<int>(rng() % 65);
    while (static_cast<int>(raw.size()) < size)
      raw.insert(static_cast<std::int64_t>(rng() % 80));
    std::vector<Integer> I(raw.begin(), raw.end());
    auto parts = split_digits(I, D);
    if (parts.size() != (std::size_t(1) << (D - 1)))
      return fail(name, "wrong output count");
    Rational total(0), expect(0);
    for (const auto& f : parts) {
      if (!f.well_formed()) return fail(name, "malformed output at trial " + std::to_string(trial));
      total += f.value();
    }
    for (const Integer& n : I) expect += rational_pow2(-D * static_cast<std::int64_t>(n));
    if (total != expect) return fail(name, "sum mismatch at trial " + std::to_string(trial));
  }
  return pass(name);
}

CheckResult word_problem_roundtrip(int members, std::uint64_t seed) {
  const std::string name = "word problem: " + std::to_string(members) +
                           " member round-trips plus out-of-I rejections";
  std::vector<std::int64_t> I = {2, 5, 11};
  IndexSetSpec spec = IndexSetSpec::explicit_set({Integer(2), Integer(5), Integer(11)});
  std::mt19937_64 rng(mix64(seed));
  for (int trial = 0; trial < members; ++trial) {
    GroupId g = trial % 2 ? GroupId::Free2 : GroupId::WreathZZ;
    GF2Vector x;
    x.group = g;
    int blocks = 1 + static_cast<int>(rng() % 20);
    for (int b = 0; b < blocks; ++b) {
      GroupElement u = random_element(g, static_cast<int>(rng() % 9), rng);
      GroupElement t = GroupElement::t_generator(I[rng() % I.size()], g);
      if (rng() % 2) t = t.inverse();
      x ^= w_block(u, t);
    }
    auto res = is_in_V(x, spec);
    if (!res.member) return fail(name, "member rejected at trial " + std::to_string(trial));
    if (!(replay_certificate(g, res.certificate).support == x.support))
      return fail(name, "certificate replay mismatch at trial " + std::to_string(trial));
  }
  for (std::int64_t b = 0; b <= 30; ++b) {
    bool inside = b == 2 || b == 5 || b == 11;
    for (GroupId g : {GroupId::Free2, GroupId::WreathZZ})
      if (is_in_V(generator_w(GroupElement::t_generator(b, g)), spec).member != inside)
        return fail(name, "w_{t_" + std::to_string(b) + "} verdict wrong");
  }
  return pass(name);
}

CheckResult null_bound(int nmax, std::uint64_t samples, std::uint64_t seed) {
  const std::string name = "vertical-spine null bound <= 2^{-2N}, N <= " + std::to_string(nmax);
  IndexSetSpec I = IndexSetSpec::explicit_set({Integer(2), Integer(5)});
  for (int N = 1; N <= nmax; ++N)
    for (GroupId g : {GroupId::Free2, GroupId::WreathZZ}) {
      Dyadic bound = dg_bound(N, I, g);
      if (!(bound <= Dyadic::power_of_two(-2 * N)))
        return fail(name, "bound above 2^{-2N} at N=" + std::to_string(N));
      auto sys = RelationSystem::on_window(g, dg_window(N, g), I);
      std::uint64_t target = dg_pattern(N, g).mask64();
      auto est = estimate_event_mask(
          sys, [target](std::uint64_t mask) { return mask == target; }, samples,
          seed + static_cast<std::uint64_t>(N));
      // frequency must respect the bound within 4 sigma
      Rational b = bound.to_rational();
      Rational overshoot = est.frequency - b;
      if (overshoot > 0) {
        Rational sigma_sq = b * (1 - b) / Rational(Integer(est.samples));
        if (overshoot * overshoot > Rational(16) * sigma_sq)
          return fail(name, "frequency exceeds the bound at N=" + std::to_string(N));
      }
    }
  return pass(name);
}

CheckResult liouville(int nmax) {
  const std::string name =
      "rational-approximation audit on factorial-rule partial sums, n <= " + std::to_string(nmax);
  auto ws = liouville_audit(IndexSetSpec::factorial_rule(4), nmax);
  for (const auto& w : ws)
    if (!w.ok) return fail(name, "no witness for n=" + std::to_string(w.n));
  std::ostringstream os;
  os << "witness depths:";
  for (const auto& w : ws) os << ' ' << w.K;
  return pass(name, os.str());
}

}  // namespace l2lab::verify
