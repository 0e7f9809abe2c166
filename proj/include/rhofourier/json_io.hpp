#pragma once

#include <string>

#include <json.hpp>

#include "section.hpp"
#include "wd.hpp"

namespace rhofourier {

using json = nlohmann::json;

inline const char* kSchema = "rho-fourier/1";

inline json to_json(const SymLaurent& P) {
  json terms = json::array();
  for (const auto& [e, c] : P.terms()) terms.push_back({{"coeff", c.to_string()}, {"exp", e}});
  return terms;
}

inline SymLaurent sym_laurent_from_json(const json& j, int n) {
  SymLaurent P(n);
  for (const auto& t : j) {
    std::vector<int> e = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n) throw ParseError("sym_laurent: exponent arity");
    P.add_term(e, ExactScalar::parse(t.at("coeff").get<std::string>()));
  }
  return P;
}

inline json to_json(const SphericalFunction& f) {
  json cells = json::array();
  for (const auto& [mu, c] : f.cells) cells.push_back({{"coeff", c.to_string()}, {"mu", mu}});
  return {{"schema", kSchema},
          {"group", f.group == Group::GL1 ? "GL1" : "GL2"},
          {"cells", cells}};
}

inline SphericalFunction spherical_from_json(const json& j) {
  SphericalFunction f;
  std::string g = j.at("group").get<std::string>();
  if (g == "GL1")
    f.group = Group::GL1;
  else if (g == "GL2")
    f.group = Group::GL2;
  else
    throw ParseError("spherical function: unknown group " + g);
  for (const auto& cell : j.at("cells"))
    f.add_cell(cell.at("mu").get<std::vector<int>>(),
               ExactScalar::parse(cell.at("coeff").get<std::string>()));
  return f;
}

inline json to_json(const UnramWDRep& rep) {
  json blocks = json::array();
  for (const auto& b : rep.blocks) blocks.push_back({{"a", b.a}, {"x", b.x.to_string()}});
  return {{"schema", kSchema}, {"blocks", blocks}};
}

inline UnramWDRep wd_from_json(const json& j) {
  UnramWDRep rep;
  for (const auto& b : j.at("blocks"))
    rep.blocks.push_back(
        {ExactScalar::parse(b.at("x").get<std::string>()), b.at("a").get<int>()});
  return rep;
}

inline json to_json(const AlgebraicRep& rho) {
  json out = {{"schema", kSchema}};
  switch (rho.group) {
    case Group::GL1:
      out["group"] = "GL1";
      out["weights"] = rho.weights;
      break;
    case Group::GL2: {
      out["group"] = "GL2";
      json s = json::array();
      for (const auto& g : rho.gl2) s.push_back({{"m", g.m}, {"r", g.r}});
      out["summands"] = s;
      break;
    }
    case Group::GL1n:
      out["group"] = "GL1n";
      out["weights"] = rho.weights;
      break;
  }
  return out;
}

inline AlgebraicRep algebraic_rep_from_json(const json& j) {
  AlgebraicRep rho;
  std::string g = j.at("group").get<std::string>();
  if (g == "GL2") {
    rho.group = Group::GL2;
    rho.n = 2;
    for (const auto& s : j.at("summands"))
      rho.gl2.push_back({s.at("m").get<int>(), s.value("r", 0)});
  } else if (g == "GL1" || g == "GL1n") {
    rho.group = g == "GL1" ? Group::GL1 : Group::GL1n;
    rho.weights = j.at("weights").get<std::vector<std::vector<int>>>();
    rho.n = rho.weights.empty() ? 1 : static_cast<int>(rho.weights[0].size());
  } else {
    throw ParseError("algebraic rep: unknown group " + g);
  }
  return rho;
}

/// Named representation shorthands used by the command line.
inline AlgebraicRep named_rep(const std::string& group, const std::string& rho) {
  if (group == "GL1") {
    if (rho == "std") return AlgebraicRep::gl1_std();
    if (rho == "trivial") return AlgebraicRep::gl1_trivial();
    throw ParseError("unknown GL1 representation: " + rho);
  }
  if (group == "GL2") {
    if (rho == "std") return AlgebraicRep::gl2_std();
    if (rho == "det") return AlgebraicRep::gl2_det();
    if (rho == "sym2") return AlgebraicRep::gl2_sym(2);
    if (rho == "sym2det") return AlgebraicRep::gl2_sym(2, 1);
    if (rho.rfind("sym", 0) == 0) return AlgebraicRep::gl2_sym(std::stoi(rho.substr(3)));
    throw ParseError("unknown GL2 representation: " + rho);
  }
  throw ParseError("unknown group: " + group);
}

}  // namespace rhofourier
