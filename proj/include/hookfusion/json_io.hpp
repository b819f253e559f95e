#ifndef HOOKFUSION_JSON_IO_HPP
#define HOOKFUSION_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "hookfusion/hecke.hpp"
#include "hookfusion/ribbon.hpp"

namespace hookfusion {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"schema":1,"n":3,"terms":[{"perm":[2,1,3],"coeff":"-1"},...]}, terms
// sorted by one-line images so output is byte-stable.
inline json element_to_json(const AlgebraElement<Rat>& e) {
  json terms = json::array();
  for (const Perm& p : e.support_sorted())
    terms.push_back({{"perm", p.one_line()}, {"coeff", e.coeff(p).str()}});
  return {{"schema", kSchemaVersion}, {"n", e.n()}, {"terms", terms}};
}

inline AlgebraElement<Rat> element_from_json(const json& j) {
  AlgebraElement<Rat> e(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Perm p(t.at("perm").get<std::vector<int>>());
    e.add_term(p, Rat::parse(t.at("coeff").get<std::string>()));
  }
  return e;
}

// Same layout with Q(q) coefficient strings; the key denotes T_sigma.
inline json hecke_to_json(const HeckeElt<QRat>& e) {
  json terms = json::array();
  for (const Perm& p : e.support_sorted())
    terms.push_back({{"perm", p.one_line()}, {"coeff", e.coeff(p).str({"q"})}});
  return {{"schema", kSchemaVersion}, {"n", e.n()}, {"basis", "T"}, {"terms", terms}};
}

inline HeckeElt<QRat> hecke_from_json(const json& j) {
  HeckeElt<QRat> e(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Perm p(t.at("perm").get<std::vector<int>>());
    e.add_term(p, QRat::parse(t.at("coeff").get<std::string>(), {"q"}));
  }
  return e;
}

// Human form: cycle notation with exact coefficients, identity last-sorted
// support order, e.g. "1 - (1,2) + 1/2*(1,3)".
inline std::string pretty_element(const AlgebraElement<Rat>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const Perm& p : e.support_sorted()) {
    Rat c = e.coeff(p);
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    std::string term;
    if (p.is_identity()) term = c.str();
    else if (c.is_one()) term = p.cycles_str();
    else term = c.str() + "*" + p.cycles_str();
    if (out.empty()) out = neg ? "-" + term : term;
    else out += neg ? " - " + term : " + " + term;
  }
  return out;
}

inline std::string pretty_hecke(const HeckeElt<QRat>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const Perm& p : e.support_sorted()) {
    const QRat c = e.coeff(p);
    std::string cs = c.str({"q"});
    if (FieldIO<QRat>::needs_parens(c)) cs = "(" + cs + ")";
    std::string term = p.is_identity() ? cs : cs + "*T[" + p.cycles_str() + "]";
    if (c.is_one() && !p.is_identity()) term = "T[" + p.cycles_str() + "]";
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

// {"shape":[3,3],"tableau":[[1,3,5],[2,4,6]],"edges":[[[1,1],[2,1]],...]}
inline json diagram_to_json(const ConnectionDiagram& d) {
  json edges = json::array();
  for (const auto& [a, b] : d.edges())
    edges.push_back({{a.row, a.col}, {b.row, b.col}});
  return {{"shape", d.tableau().shape().parts()},
          {"tableau", d.tableau().rows()},
          {"edges", edges}};
}

inline ConnectionDiagram diagram_from_json(const json& j) {
  Partition shape(j.at("shape").get<std::vector<int>>());
  StandardTableau t(shape, j.at("tableau").get<std::vector<std::vector<int>>>());
  ConnectionDiagram d(t);
  for (const auto& e : j.at("edges")) {
    Box a{e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()};
    Box b{e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()};
    d.add_edge(a, b);
  }
  return d;
}

// --tableau values: a named filling or an explicit row list
inline StandardTableau tableau_from_flag(const Partition& shape, const std::string& flag) {
  if (flag == "hook") return hook_tableau(shape);
  if (flag == "row") return row_tableau(shape);
  if (flag == "column") return column_tableau(shape);
  json j = json::parse(flag);
  return StandardTableau(shape, j.get<std::vector<std::vector<int>>>());
}

}  // namespace hookfusion

#endif
