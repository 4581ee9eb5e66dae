#pragma once

// JSON and CSV forms of the engine's values. Object keys are sorted
// (nlohmann::json uses an ordered map), and integers outside the signed
// 64-bit range are written as {"bigint": true, "value": "<decimal>"}.

#include "symprod/cohomology_ring.hpp"
#include "symprod/duality.hpp"
#include "symprod/homology_ring.hpp"
#include "symprod/invariants.hpp"
#include "symprod/oracle.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace symprod {

using json = nlohmann::json;

inline json to_json(const Integer& x) {
  if (fits_int64(x)) return json(static_cast<std::int64_t>(x));
  return json{{"bigint", true}, {"value", x.str()}};
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_object() && j.value("bigint", false) && j.contains("value") && j["value"].is_string())
    return Integer(j["value"].get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

inline json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline json to_json(const HomologyClass& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back({{"coeff", to_json(c)}, {"e", m.indices()}, {"gamma", m.gamma}});
  return out;
}

inline json to_json(const CohomologyClass& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back({{"coeff", to_json(c)}, {"estar", m.indices()}, {"bstar", m.bstar}});
  return out;
}

inline HomologyClass homology_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("homology class must be a JSON array");
  HomologyClass out;
  for (const auto& t : j)
    out.add(HomologyMonomial::make(t.at("e").get<std::vector<int>>(), t.at("gamma").get<int>()),
            integer_from_json(t.at("coeff")));
  return out;
}

inline CohomologyClass cohomology_from_json(const json& j, const CurveContext& ctx) {
  if (!j.is_array()) throw InvalidArgument("cohomology class must be a JSON array");
  CohomologyClass out(ctx);
  for (const auto& t : j)
    out.add(CohomologyMonomial::make(t.at("estar").get<std::vector<int>>(), t.at("bstar").get<int>()),
            integer_from_json(t.at("coeff")));
  return out;
}

inline std::vector<std::string> basis_labels(const IntersectionMatrix& im) {
  std::vector<std::string> out;
  for (const auto& m : im.basis) out.push_back(m.label());
  return out;
}

inline json to_json(const IntersectionMatrix& im) {
  json rows = json::array();
  for (const auto& r : im.entries) rows.push_back(to_json(r));
  return {{"g", im.context.g}, {"n", im.context.n}, {"basis", basis_labels(im)}, {"matrix", rows}};
}

/// Header row of basis labels, then one labelled row per basis element.
inline std::string to_csv(const IntersectionMatrix& im) {
  std::ostringstream os;
  os << "basis";
  for (const auto& l : basis_labels(im)) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < im.size(); ++i) {
    os << im.basis[i].label();
    for (const auto& x : im.entries[i]) os << ',' << x;
    os << '\n';
  }
  return os.str();
}

inline json to_json(const ObstructionReport& r) {
  return {{"g", r.g},
          {"n", r.n},
          {"k", to_json(r.k)},
          {"characteristic", r.is_characteristic},
          {"self_intersection", to_json(r.self_intersection)},
          {"signature", to_json(r.signature)},
          {"km_congruent", r.km_congruent},
          {"notes", r.notes}};
}

inline json to_json(const CliffordBound& c) {
  return {{"g", c.g},
          {"n", c.n},
          {"m_max", c.m_max},
          {"branch", c.below_2g ? "n < 2g" : "n >= 2g"},
          {"certificate", c.certificate},
          {"certificate_vanishes", c.certificate_vanishes},
          {"sharp_product_nonzero", c.sharp_product_nonzero}};
}

namespace oracle {

/// {basis:[{label, degree}], products:[{left, right, result:[{coeff, label}]}]}
/// Coefficients are integers or "p/q" strings. The ring is validated.
inline GradedRingSpec ring_spec_from_json(const json& j) {
  GradedRingSpec spec;
  for (const auto& b : j.at("basis")) spec.add_basis(b.at("label").get<std::string>(), b.at("degree").get<int>());
  for (const auto& p : j.value("products", json::array())) {
    GradedRingSpec::Product prod;
    for (const auto& t : p.at("result")) {
      const json& c = t.at("coeff");
      Rational coeff = c.is_string() ? Rational(c.get<std::string>()) : Rational(integer_from_json(c));
      prod.push_back({coeff, spec.index_of(t.at("label").get<std::string>())});
    }
    spec.set_product(spec.index_of(p.at("left").get<std::string>()), spec.index_of(p.at("right").get<std::string>()),
                     std::move(prod));
  }
  spec.validate();
  return spec;
}

}  // namespace oracle

}  // namespace symprod
