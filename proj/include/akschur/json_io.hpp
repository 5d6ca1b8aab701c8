#pragma once

// Machine formats. Integers that may exceed 64 bits (polynomial
// coefficients, rational parts) are written as decimal strings.

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "akschur/combinatorics.hpp"
#include "akschur/polynomial.hpp"
#include "akschur/schur.hpp"

namespace akschur {

using json = nlohmann::json;

inline json to_json(const Partition& lambda) { return json(lambda.parts()); }

inline json to_json(const MultiPartition& lambda) {
  json out = json::array();
  for (const auto& c : lambda.components()) out.push_back(to_json(c));
  return out;
}

/// Accepts `[[4,1],[],[2,1]]`: an array of arrays of positive integers, each
/// inner array weakly decreasing.
inline MultiPartition multipartition_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("multipartition must be a nonempty array of arrays");
  std::vector<Partition> comps;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("each component must be an array");
    std::vector<int> parts;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() <= 0)
        throw std::invalid_argument("partition parts must be positive integers");
      if (v.get<long long>() > 1'000'000) throw std::invalid_argument("partition part too large");
      parts.push_back(v.get<int>());
    }
    comps.emplace_back(std::move(parts));
  }
  return MultiPartition(std::move(comps));
}

inline MultiPartition parse_multipartition(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed multipartition JSON: ") + e.what());
  }
  return multipartition_from_json(j);
}

inline json to_json(const Rational& x) {
  return json{{"num", numerator(x).str()}, {"den", denominator(x).str()}};
}

inline json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) {
    std::vector<int> eQ;
    for (int s = 0; s < k.arity(); ++s) eQ.push_back(k.e_Q(s));
    out.push_back(json{{"coeff", c.str()}, {"e_q", k.e_q()}, {"e_Q", eQ}});
  }
  return out;
}

inline LaurentPoly polynomial_from_json(const json& j, int arity,
                                        VarContext ctx = VarContext::params) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    auto eQ = t.at("e_Q").get<std::vector<int>>();
    if (static_cast<int>(eQ.size()) != arity) throw std::invalid_argument("term arity mismatch");
    terms.emplace_back(MonomialKey(t.at("e_q").get<int>(), eQ),
                       Integer(t.at("coeff").get<std::string>()));
  }
  return LaurentPoly::from_terms(arity, std::move(terms), ctx);
}

inline json to_json(const SchurFactor& f) {
  return json{{"h", f.h}, {"s", f.s}, {"t", f.t}};
}

inline json to_json(const SchurFactored& sf) {
  json factors = json::array();
  for (const auto& f : sf.factors) factors.push_back(to_json(f));
  return json{{"sign", sf.sign}, {"q_exp", sf.q_exp}, {"qm1_exp", sf.qm1_exp},
              {"factors", factors}};
}

inline json to_json(const VanishingReport& rep) {
  json vanishing = json::array();
  for (const auto& f : rep.vanishing_factors) vanishing.push_back(to_json(f));
  return json{{"value", rep.value == 0 ? json("zero") : to_json(rep.value)},
              {"vanishing_factors", vanishing},
              {"irreducible", rep.irreducible}};
}

}  // namespace akschur
