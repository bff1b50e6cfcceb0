#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "l2lab/group.hpp"
#include "oracles.hpp"

using namespace l2lab;

namespace {

GroupElement random_element(GroupId g, int len, std::mt19937_64& rng) {
  GroupElement x = GroupElement::identity(g);
  for (int i = 0; i < len; ++i)
    x = x.times(kGenerators[rng() % 4]);
  return x;
}

}  // namespace

TEST_CASE("free reduction and identities") {
  for (GroupId g : {GroupId::Free2, GroupId::WreathZZ}) {
    GroupElement s1 = GroupElement::generator(g, S1);
    CHECK((s1 * s1.inverse()).is_identity());
    GroupElement a = GroupElement::parse(g, "s1 s2");
    GroupElement b = GroupElement::parse(g, "s2^-1 s1");
    CHECK(a * b == GroupElement::parse(g, "s1^2"));
  }
}

TEST_CASE("normal form idempotence and reducedness") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    GroupElement x = random_element(GroupId::Free2, 12, rng);
    const auto& w = x.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      CHECK(w[i + 1] != inverse_letter(w[i]));
    // rebuilding from the printed normal form is a fixed point
    CHECK(GroupElement::parse(GroupId::Free2, x.str()) == x);
    CHECK(x * GroupElement::identity(GroupId::Free2) == x);
  }
}

TEST_CASE("parse/print round trip in the wreath product") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    GroupElement x = random_element(GroupId::WreathZZ, 10, rng);
    CHECK(GroupElement::parse(GroupId::WreathZZ, x.str()) == x);
  }
}

TEST_CASE("quotient consistency: Free2 equality implies WreathZZ equality") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 4000; ++trial) {
    std::vector<Letter> letters;
    for (int i = 0; i < 8; ++i) letters.push_back(kGenerators[rng() % 4]);
    std::size_t cut = rng() % letters.size();
    GroupElement f1 = GroupElement::identity(GroupId::Free2);
    GroupElement f2 = GroupElement::identity(GroupId::Free2);
    GroupElement w1 = GroupElement::identity(GroupId::WreathZZ);
    GroupElement w2 = GroupElement::identity(GroupId::WreathZZ);
    for (std::size_t i = 0; i < cut; ++i) {
      f1 = f1.times(letters[i]);
      w1 = w1.times(letters[i]);
    }
    for (std::size_t i = cut; i < letters.size(); ++i) {
      f2 = f2.times(letters[i]);
      w2 = w2.times(letters[i]);
    }
    if (f1 == f2) CHECK(w1 == w2);
  }
}

TEST_CASE("t generators") {
  CHECK(GroupElement::t_generator(0, GroupId::Free2) ==
        GroupElement::generator(GroupId::Free2, S1));
  CHECK(GroupElement::t_generator(2, GroupId::Free2) ==
        GroupElement::parse(GroupId::Free2, "s2 s2 s1 s2^-1 s2^-1"));
  GroupElement t3 = GroupElement::t_generator(3, GroupId::WreathZZ);
  CHECK(t3.shift() == 0);
  REQUIRE(t3.lamp().size() == 1);
  CHECK(t3.lamp()[0] == std::pair<std::int64_t, std::int64_t>{3, 1});
}

TEST_CASE("t_m, t_n commute in the wreath product but not in Free2") {
  for (int m : {1, 5, 12, 20})
    for (int n : {2, 7, 20}) {
      GroupElement a = GroupElement::t_generator(m, GroupId::WreathZZ);
      GroupElement b = GroupElement::t_generator(n, GroupId::WreathZZ);
      CHECK(a * b == b * a);
      if (m != n) {
        GroupElement fa = GroupElement::t_generator(m, GroupId::Free2);
        GroupElement fb = GroupElement::t_generator(n, GroupId::Free2);
        CHECK(fa * fb != fb * fa);
      }
    }
  GroupElement t2 = GroupElement::t_generator(2, GroupId::WreathZZ);
  GroupElement t5 = GroupElement::t_generator(5, GroupId::WreathZZ);
  CHECK(t2 * t5 == t5 * t2);
}

TEST_CASE("ball sizes") {
  CHECK(ball(0, GroupId::Free2).size() == 1);
  CHECK(ball(1, GroupId::Free2).size() == 5);
  CHECK(ball(2, GroupId::WreathZZ).size() == 17);
  std::size_t expect = 1, prev_f = 0, prev_w = 0;
  std::size_t pow3 = 1;
  for (int r = 1; r <= 6; ++r) {
    expect += 4 * pow3;
    pow3 *= 3;
    auto bf = ball(r, GroupId::Free2);
    CHECK(bf.size() == expect);
    CHECK(bf.size() > prev_f);
    prev_f = bf.size();
    auto bw = ball(r, GroupId::WreathZZ);
    CHECK(bw.size() > prev_w);
    prev_w = bw.size();
  }
  CHECK_THROWS_AS(ball(13, GroupId::Free2), resource_error);
}

TEST_CASE("mixed-group multiplication is a usage error") {
  GroupElement a = GroupElement::generator(GroupId::Free2, S1);
  GroupElement b = GroupElement::generator(GroupId::WreathZZ, S1);
  CHECK_THROWS_AS(a * b, usage_error);
}

TEST_CASE("index sets: factorial rule and element access") {
  IndexSetSpec f = IndexSetSpec::factorial_rule(5);
  auto els = f.elements_i64();
  CHECK(els == std::vector<std::int64_t>{2, 5, 8, 11, 26, 122});
  CHECK(f.element(6) == 722);
  CHECK(f.contains(Integer(26)));
  CHECK(!f.contains(Integer(27)));

  IndexSetSpec raw = IndexSetSpec::factorial_rule(5, false);
  CHECK(raw.elements_i64() == std::vector<std::int64_t>{2, 3, 4, 6, 24, 120});

  CHECK_THROWS_AS(IndexSetSpec::explicit_set({Integer(5), Integer(2)}), usage_error);
}

TEST_CASE("lambda membership in the wreath product") {
  IndexSetSpec I = IndexSetSpec::explicit_set({Integer(2), Integer(5)});
  GroupId g = GroupId::WreathZZ;
  GroupElement t2 = GroupElement::t_generator(2, g);
  GroupElement t5 = GroupElement::t_generator(5, g);
  CHECK(lambda_membership(t2 * t5, I));
  CHECK(lambda_membership(t5 * t2.inverse() * t2 * t2, I));
  CHECK(!lambda_membership(GroupElement::t_generator(3, g), I));
  CHECK(lambda_membership(GroupElement::identity(g), I));
  CHECK(!lambda_membership(GroupElement::generator(g, S2), I));
}

TEST_CASE("lambda membership in Free2 agrees with Stallings folding") {
  IndexSetSpec I = IndexSetSpec::explicit_set({Integer(1), Integer(2), Integer(5)});
  GroupId g = GroupId::Free2;
  std::vector<GroupElement> gens;
  for (std::int64_t i : {1, 2, 5}) gens.push_back(GroupElement::t_generator(i, g));
  oracle::FoldedGraph fold(gens);

  std::mt19937_64 rng(17);
  int members_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // random words in the t-generators are members
    GroupElement w = GroupElement::identity(g);
    for (int k = 0, len = 1 + static_cast<int>(rng() % 5); k < len; ++k) {
      GroupElement t = gens[rng() % gens.size()];
      w = w * (rng() % 2 ? t : t.inverse());
    }
    CHECK(lambda_membership(w, I) == fold.accepts(w));
    if (lambda_membership(w, I)) ++members_seen;
    // random words usually are not
    GroupElement r = random_element(g, 9, rng);
    CHECK(lambda_membership(r, I) == fold.accepts(r));
  }
  CHECK(members_seen > 300);
  CHECK(lambda_membership(GroupElement::t_generator(2, g), I));
  CHECK(!lambda_membership(GroupElement::t_generator(3, g), I));
}

TEST_CASE("s1 line coordinates") {
  std::mt19937_64 rng(19);
  for (GroupId g : {GroupId::Free2, GroupId::WreathZZ})
    for (int trial = 0; trial < 500; ++trial) {
      GroupElement x = random_element(g, 8, rng);
      auto [key, c] = s1_line_coordinate(x);
      CHECK(key * GroupElement::s1_power(c, g) == x);
      auto [key2, c2] = s1_line_coordinate(x * GroupElement::s1_power(3, g));
      CHECK(key2 == key);
      CHECK(c2 == c + 3);
    }
}
