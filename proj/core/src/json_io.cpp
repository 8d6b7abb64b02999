#include "akchar/json_io.hpp"

#include <limits>

#include "akchar/errors.hpp"

namespace akchar {

using nlohmann::json;

json integer_to_json(const Integer& c) {
  if (c.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer c;
    if (c.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.get<std::string>());
    return c;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json eu(std::vector<int>(t.exps.begin() + 1, t.exps.end()));
    terms.push_back({{"c", integer_to_json(t.coeff)}, {"eq", t.exps[0]}, {"eu", std::move(eu)}});
  }
  return {{"m", p.num_u()}, {"terms", std::move(terms)}};
}

MultiPoly multipoly_from_json(const json& j) {
  try {
    const auto m = j.at("m").get<std::size_t>();
    MultiPolyBuilder b(m);
    for (const auto& t : j.at("terms")) {
      Exponents e{t.at("eq").get<int>()};
      const auto eu = t.at("eu").get<std::vector<int>>();
      if (eu.size() != m) throw ParseError("term has " + std::to_string(eu.size()) + " u-exponents, expected " + std::to_string(m));
      for (int x : eu) {
        if (x < 0) throw ParseError("negative u-exponent");
      }
      e.insert(e.end(), eu.begin(), eu.end());
      b.add(e, integer_from_json(t.at("c")));
    }
    return std::move(b).build();
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

json to_json(const CycloElem& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(integer_to_json(x));
  return {{"modulus", c.modulus()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const TruncSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const CharValue& v) {
  struct Visitor {
    json operator()(const MultiPoly& p) const {
      json j = to_json(p);
      j["ring"] = "generic";
      j["text"] = p.to_string();
      return j;
    }
    json operator()(const CycloElem& c) const {
      json j = to_json(c);
      j["ring"] = "group";
      j["text"] = c.to_string();
      return j;
    }
    json operator()(const TruncSeries& s) const {
      json j = to_json(s);
      j["ring"] = "t-adic";
      j["text"] = s.to_string();
      return j;
    }
  };
  return std::visit(Visitor{}, v);
}

json to_json(const MultiPartition& mu) {
  json out = json::array();
  for (const auto& c : mu.components()) out.push_back(c.parts());
  return out;
}

json to_json(const RelationResult& r) {
  json witness = nullptr;
  if (r.witness) {
    witness = json::array();
    for (auto letter : *r.witness) witness.push_back(static_cast<int>(letter) + 1);
  }
  return {{"relation", r.relation}, {"status", r.passed ? "pass" : "fail"}, {"witness", std::move(witness)}};
}

}  // namespace akchar
