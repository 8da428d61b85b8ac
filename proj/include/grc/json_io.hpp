#pragma once

#include <string>

#include "json.hpp"

#include "grc/brackets.hpp"
#include "grc/gl11.hpp"
#include "grc/singular.hpp"

namespace grc {

using Json = nlohmann::ordered_json;

inline std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parse_parity(std::string_view s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw Error("unknown parity '" + std::string(s) + "'");
}

inline Json to_json(const ModVec& v) {
  Json terms = Json::array();
  for (const auto& [m, c] : v.terms)
    terms.push_back({{"i1", m.left.even_power},
                     {"e1", m.left.odd_flag},
                     {"i2", m.right.even_power},
                     {"e2", m.right.odd_flag},
                     {"coeff", to_string(c)}});
  return {{"algebra", algebra_name(v.algebra)}, {"mu1", to_string(v.mu1)}, {"mu2", to_string(v.mu2)}, {"terms", terms}};
}

inline ModVec modvec_from_json(const Json& j) {
  ModVec v{parse_algebra(j.at("algebra").get<std::string>()), parse_rat(j.at("mu1").get<std::string>()),
           parse_rat(j.at("mu2").get<std::string>()), {}};
  for (const auto& t : j.at("terms")) {
    auto flag = [&t](const char* k) {
      unsigned x = t.at(k).get<unsigned>();
      if (x > 1) throw Error("odd flag must be 0 or 1");
      return x;
    };
    v.add({{t.at("i1").get<unsigned>(), flag("e1")}, {t.at("i2").get<unsigned>(), flag("e2")}},
          parse_rat(t.at("coeff").get<std::string>()));
  }
  return v;
}

inline Json to_json(const SingularSpace& s) {
  Json even = Json::array(), odd = Json::array();
  for (const auto& v : s.even_basis) even.push_back(to_json(v)["terms"]);
  for (const auto& v : s.odd_basis) odd.push_back(to_json(v)["terms"]);
  return {{"algebra", algebra_name(s.algebra)},
          {"mu1", to_string(s.mu1)},
          {"mu2", to_string(s.mu2)},
          {"level", s.level},
          {"dim_even", s.dim_even()},
          {"dim_odd", s.dim_odd()},
          {"even_basis", even},
          {"odd_basis", odd}};
}

inline Json to_json(const CoefficientFamily& f) {
  Json coeffs = Json::object();
  for (const auto& [k, c] : f.coefficients) coeffs[k] = to_string(c);
  return {{"kind", family_kind_name(f.kind)},
          {"label", f.label},
          {"parameter", f.parameter},
          {"coefficients", coeffs}};
}

inline Json to_json(const SectorComparison& s) {
  Json fams = Json::array();
  for (const auto& f : s.families)
    fams.push_back({{"label", f.label}, {"parameter", f.parameter}, {"nonzero", f.nonzero}, {"in_kernel", f.in_kernel}});
  return {{"sector", parity_name(s.sector)},
          {"kernel_dim", s.kernel_dim},
          {"predicted_dim", s.predicted_dim},
          {"families", fams},
          {"families_span", s.families_span}};
}

inline Json to_json(const ComparisonReport& r) {
  Json disc = Json::array();
  for (const auto& d : r.discrepancies) disc.push_back({{"kind", d.kind}, {"detail", d.detail}});
  return {{"algebra", algebra_name(r.algebra)},
          {"mu1", to_string(r.mu1)},
          {"mu2", to_string(r.mu2)},
          {"level", r.level},
          {"case", r.case_label},
          {"even", to_json(r.even)},
          {"odd", to_json(r.odd)},
          {"closed_form", closed_status_name(r.closed_status())},
          {"discrepancies", disc}};
}

inline Json to_json(const BilinOp& b) {
  Json terms = to_json(ModVec{b.algebra, 0, 0, b.terms})["terms"];
  Json j = {{"algebra", algebra_name(b.algebra)},
            {"order", b.order},
            {"parity", parity_name(b.parity)},
            {"lambda1", to_string(b.lambda1)},
            {"lambda2", to_string(b.lambda2)},
            {"lambda", to_string(b.lambda)}};
  if (b.algebra == Algebra::vect) j["chi2"] = to_string(b.chi2);
  j["convention"] = b.convention.str();
  j["terms"] = terms;
  j["formula"] = b.formula();
  return j;
}

inline Json to_json(const EquivarianceReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"generator", f.generator}, {"phi", f.phi}, {"psi", f.psi}, {"defect", f.defect}});
  return {{"subalgebra", subalgebra_name(r.subalgebra)},
          {"degree_bound", r.degree_bound},
          {"checks", r.checks},
          {"pass", r.pass()},
          {"failures", fails}};
}

inline Json to_json(const CaseId& c) {
  Json j = {{"case", case_name(c.kind)}};
  Json summands = Json::array();
  for (const auto& s : c.summands)
    summands.push_back({{"lambda", to_string(s.lambda)},
                        {"mu", to_string(s.mu)},
                        {"parity", parity_name(s.parity)},
                        {"dimension", s.dimension}});
  j["summands"] = summands;
  if (c.kind == CaseKind::case_iv) {
    j["layers"] = c.layers;
    Json arrows = Json::array();
    for (const auto& a : c.arrows)
      arrows.push_back({{"op", a.op}, {"from", a.from}, {"to", a.to}, {"coefficient", to_string(a.coefficient)}});
    j["arrows"] = arrows;
  }
  return j;
}

inline Json to_json(const DisplayCheck& d) {
  Json j = {{"display", d.id},
            {"coefficient", d.coefficient},
            {"matches", d.matches},
            {"monomials_checked", d.monomials_checked},
            {"mismatches", d.mismatches}};
  if (!d.matches) j["corrected_coefficient"] = d.corrected;
  return j;
}

}  // namespace grc
