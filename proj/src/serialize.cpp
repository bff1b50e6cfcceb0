#include "l2lab/serialize.hpp"

#include <fstream>

namespace l2lab {

json to_json(const Dyadic& d) {
  return json{{"mantissa", d.mantissa().str()}, {"exponent", d.exponent()}};
}

Dyadic dyadic_from_json(const json& j) {
  Integer m(j.at("mantissa").get<std::string>());
  return Dyadic(m, j.at("exponent").get<std::int64_t>());
}

json to_json(const Rational& r) {
  return json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

json to_json(const IndexSetSpec& I) {
  if (I.kind() == IndexSetSpec::Kind::Factorial) {
    json j{{"kind", "factorial"}, {"count", I.count() - 1}};
    if (!I.congruence_adjust()) j["congruence_adjust"] = false;
    return j;
  }
  json elems = json::array();
  for (const Integer& e : I.elements()) elems.push_back(e.str());
  return json{{"kind", "explicit"}, {"elements", elems}};
}

IndexSetSpec index_set_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") {
    std::vector<Integer> elems;
    for (const auto& e : j.at("elements")) {
      if (e.is_string())
        elems.push_back(Integer(e.get<std::string>()));
      else
        elems.push_back(Integer(e.get<std::int64_t>()));
    }
    return IndexSetSpec::explicit_set(std::move(elems));
  }
  if (kind == "factorial") {
    bool adjust = j.value("congruence_adjust", true);
    return IndexSetSpec::factorial_rule(j.at("count").get<int>(), adjust);
  }
  throw usage_error("index set: unknown kind '" + kind + "'");
}

IndexSetSpec index_set_from_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[') {
    std::ifstream in(arg);
    if (!in) throw usage_error("index set: cannot open file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return index_set_from_json(json::parse(text));
}

json to_json(const Pattern& p) {
  json window = json::array();
  for (const auto& x : p.window()) window.push_back(x.str());
  json values = json::array();
  for (const auto& x : p.window())
    values.push_back(json::array({x.str(), p.value(x) ? 1 : 0}));
  return json{{"window", window}, {"values", values}};
}

Pattern pattern_from_json(GroupId g, const json& j) {
  std::vector<GroupElement> window;
  for (const auto& w : j.at("window"))
    window.push_back(GroupElement::parse(g, w.get<std::string>()));
  Pattern p(g, window);
  for (const auto& v : j.at("values")) {
    GroupElement x = GroupElement::parse(g, v.at(0).get<std::string>());
    p.set(x, v.at(1).get<int>() != 0);
  }
  return p;
}

json to_json(const DimensionEnclosure& e) {
  return json{{"route", e.route == DimensionEnclosure::Route::ClosedForm
                            ? "closed-form"
                            : "direct-sum"},
              {"lower", to_json(e.lower)},
              {"upper", to_json(e.upper)},
              {"width", to_json(e.width())},
              {"point", e.is_point()}};
}

json to_json(const Recipe& r) {
  switch (r.op) {
    case Recipe::Op::Atom:
      return json{{"op", "atom"}, {"index_set", to_json(r.spec)}, {"terms", r.terms}};
    case Recipe::Op::Sum: {
      json kids = json::array();
      for (const auto& c : r.children) kids.push_back(to_json(*c));
      return json{{"op", "sum"}, {"children", kids}};
    }
    case Recipe::Op::Product: {
      json kids = json::array();
      for (const auto& c : r.children) kids.push_back(to_json(*c));
      return json{{"op", "product"}, {"children", kids}};
    }
    case Recipe::Op::Scale:
      return json{{"op", "scale"}, {"q", to_json(r.q)}, {"child", to_json(*r.children.at(0))}};
    case Recipe::Op::Shift:
      return json{{"op", "shift"}, {"a", to_json(r.q)}, {"child", to_json(*r.children.at(0))}};
  }
  throw internal_error("recipe to_json: bad op");
}

std::string binary_digits(const Rational& x, int bits) {
  if (x < 0) throw usage_error("binary_digits: negative value");
  Integer ip = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  Rational frac = x - Rational(ip);
  std::string out = ip.str() + ".";
  for (int i = 0; i < bits; ++i) {
    frac *= 2;
    if (frac >= 1) {
      out += '1';
      frac -= 1;
    } else {
      out += '0';
    }
  }
  return out;
}

GroupId group_from_string(const std::string& s) {
  if (s == "free2") return GroupId::Free2;
  if (s == "wreath") return GroupId::WreathZZ;
  throw usage_error("group: expected 'free2' or 'wreath'");
}

std::string to_string(GroupId g) { return g == GroupId::Free2 ? "free2" : "wreath"; }

}  // namespace l2lab
