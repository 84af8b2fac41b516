#pragma once

#include <json.hpp>
#include <string>

#include "cones.hpp"
#include "format.hpp"
#include "grassmann.hpp"
#include "kinematic.hpp"
#include "lefschetz.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "valuation.hpp"

namespace uval {

using Json = nlohmann::ordered_json;

// [{"pi": e, "num": "...", "den": "..."}], ascending pi
inline Json to_json(const Scalar& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms())
    out.push_back({{"pi", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return out;
}

inline Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("scalar JSON must be an array");
  Scalar s;
  for (const auto& t : j) {
    const Integer num(t.at("num").get<std::string>()), den(t.at("den").get<std::string>());
    if (den <= 0) throw DomainError("scalar JSON: denominator must be positive");
    s += Scalar::monomial(make_rational(num, den), t.at("pi").get<int>());
  }
  return s;
}

inline Json to_json(const GradedPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"t", m.a}, {"u", m.b}, {"coeff", to_json(c)}});
  return out;
}

inline GradedPoly poly_from_json(const Json& j) {
  GradedPoly p(Chart::TU);
  for (const auto& t : j)
    p.add(Monomial{t.at("t").get<int>(), t.at("u").get<int>()}, scalar_from_json(t.at("coeff")));
  return p;
}

inline Json to_json(const Valuation& v) {
  Json comps = Json::object();
  for (const auto& [k, c] : v.components()) {
    Json list = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) list.push_back({{"q", q_min(v.n(), k) + int(i)}, {"coeff", to_json(c[i])}});
    comps[std::to_string(k)] = list;
  }
  return {{"n", v.n()}, {"components", comps}};
}

inline Valuation valuation_from_json(const Json& j) {
  Valuation v(j.at("n").get<int>());
  for (const auto& [key, list] : j.at("components").items()) {
    const int k = std::stoi(key);
    check_degree(v.n(), k);
    for (const auto& t : list) v.add(k, t.at("q").get<int>(), scalar_from_json(t.at("coeff")));
  }
  return v;
}

inline Json to_json(const Matrix<Scalar>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline Matrix<Scalar> matrix_from_json(const Json& j) {
  const std::size_t r = j.size(), c = r ? j[0].size() : 0;
  Matrix<Scalar> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j[i].size() != c) throw DimensionMismatch("ragged matrix JSON");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

inline Json to_json(const TasakiMatrix& t) {
  return {{"n", t.n}, {"k", t.k}, {"matrix", to_json(t.entries)}, {"pretty", format_matrix(t.entries)}};
}

inline Json to_json(const KinematicTensor& t) {
  Json blocks = Json::array();
  for (const auto& [key, m] : t.blocks)
    blocks.push_back({{"a", key.first},
                      {"b", key.second},
                      {"left_basis", canonical_basis_labels(t.n, key.first)},
                      {"right_basis", canonical_basis_labels(t.n, key.second)},
                      {"matrix", to_json(m)}});
  return {{"n", t.n}, {"mu", to_json(t.mu)}, {"cpn", t.cpn}, {"blocks", blocks}};
}

inline KinematicTensor tensor_from_json(const Json& j) {
  KinematicTensor t;
  t.n = j.at("n").get<int>();
  t.mu = valuation_from_json(j.at("mu"));
  t.cpn = j.value("cpn", false);
  for (const auto& b : j.at("blocks"))
    t.blocks[{b.at("a").get<int>(), b.at("b").get<int>()}] = matrix_from_json(b.at("matrix"));
  return t;
}

inline Json to_json(const McResult& r) {
  Json out = {{"estimate", r.estimate},
              {"stderr", r.std_error},
              {"prediction_float", r.prediction_float},
              {"prediction_exact", r.prediction_exact ? to_json(*r.prediction_exact) : Json(nullptr)},
              {"sigma", r.sigma},
              {"samples", r.samples}};
  return out;
}

inline Json to_json(const ConeVerdict& v, const std::string& test) {
  Json out = {{"test", test}, {"member", v.member}};
  if (v.witness)
    out["witness"] = {{"inequality", v.witness->inequality}, {"k", v.witness->k}, {"q", v.witness->q}};
  else
    out["witness"] = nullptr;
  return out;
}

inline Json to_json(const std::vector<LefschetzTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back({{"k", t.k}, {"r", t.r}, {"coeff", to_json(t.coeff)}});
  return out;
}

}  // namespace uval
