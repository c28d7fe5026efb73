#ifndef ALTKIT_IO_HPP
#define ALTKIT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "altkit/algebra.hpp"
#include "altkit/error.hpp"
#include "altkit/identities.hpp"
#include "altkit/lie.hpp"
#include "altkit/structure.hpp"
#include "altkit/units.hpp"

namespace altkit {

using Json = nlohmann::ordered_json;

// Rationals serialize as strings ("3/2") so values survive a round trip;
// doubles serialize as numbers.
inline Json scalar_json(const Rational& x) { return format_rational(x); }
inline Json scalar_json(double x) { return x; }

template <class S>
Json vector_json(const Vector<S>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json<S>(m.row(r)));
  return out;
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return parse_rational(j.dump());
  throw ParseError("expected a number or a numeric string, got " + j.dump());
}

template <class S>
Json algebra_json(const Algebra<S>& A) {
  const std::size_t n = A.dim();
  Json sc = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(ScalarTraits<S>::to_string(A.sc(i, j, k)));
      row.push_back(std::move(cell));
    }
    sc.push_back(std::move(row));
  }
  Json out;
  out["dim"] = n;
  out["labels"] = A.labels();
  if (A.unital()) {
    Json u = Json::array();
    for (const auto& x : *A.unit()) u.push_back(ScalarTraits<S>::to_string(x));
    out["unit"] = u;
  } else {
    out["unit"] = nullptr;
  }
  out["sc"] = sc;
  return out;
}

inline Algebra<Rational> algebra_from_json(const Json& j, double eps = default_eps()) {
  try {
    if (!j.is_object()) throw ParseError("algebra JSON must be an object");
    if (!j.contains("dim") || !j.contains("sc")) throw ParseError("algebra JSON needs \"dim\" and \"sc\"");
    const long dim = j.at("dim").get<long>();
    if (dim <= 0) throw ParseError("\"dim\" must be positive");
    const auto n = static_cast<std::size_t>(dim);
    const Json& sc = j.at("sc");
    std::vector<Rational> flat;
    flat.reserve(n * n * n);
    if (!sc.is_array() || sc.size() != n) throw DimensionError("\"sc\" must be an n x n x n array");
    for (const auto& row : sc) {
      if (!row.is_array() || row.size() != n) throw DimensionError("\"sc\" must be an n x n x n array");
      for (const auto& cell : row) {
        if (!cell.is_array() || cell.size() != n) throw DimensionError("\"sc\" must be an n x n x n array");
        for (const auto& x : cell) flat.push_back(rational_from_json(x));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) labels = j.at("labels").get<std::vector<std::string>>();
    std::optional<Vector<Rational>> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) {
      Vector<Rational> u;
      for (const auto& x : j.at("unit")) u.push_back(rational_from_json(x));
      unit = std::move(u);
    }
    return Algebra<Rational>(n, std::move(flat), std::move(labels), std::move(unit), eps);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

inline Algebra<Rational> algebra_from_string(const std::string& text, double eps = default_eps()) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j, eps);
}

inline Algebra<Rational> load_algebra(const std::string& path, double eps = default_eps()) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return algebra_from_string(buf.str(), eps);
}

template <class S>
Json identity_report_json(const IdentityReport<S>& r) {
  Json out;
  out["kind"] = identity_name(r.kind);
  out["holds"] = r.holds;
  if (r.witness) {
    Json w;
    w["x"] = vector_json(r.witness->x);
    w["y"] = vector_json(r.witness->y);
    w["z"] = r.witness->z.empty() ? Json(nullptr) : vector_json(r.witness->z);
    w["defect"] = vector_json(r.witness->defect);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["method"] = r.method.to_string();
  return out;
}

inline Json locus_json(const UnitLocus& L, std::size_t max_points = 50) {
  Json out;
  out["kind"] = locus_kind_name(L.kind);
  if (L.equation) {
    const QuadricEquation e = L.equation->normalized();
    out["equation"] = {{"x2", format_rational(e.x2)},
                       {"y2", format_rational(e.y2)},
                       {"z2", format_rational(e.z2)},
                       {"rhs", format_rational(e.rhs)},
                       {"text", e.text()}};
  } else {
    out["equation"] = nullptr;
  }
  out["ambient"] = L.ambient;
  Json pts = Json::array();
  for (std::size_t k = 0; k < L.points.size() && k < max_points; ++k) pts.push_back(vector_json(L.points[k]));
  out["point_count"] = L.points.size();
  out["points"] = pts;
  return out;
}

template <class S>
Json decomposition_json(const ReflectionDecomposition<S>& d) {
  Json out;
  Json B = Json::array(), C = Json::array(), tp = Json::array();
  for (const auto& b : d.B_basis) B.push_back(vector_json(b));
  for (const auto& c : d.C_basis) C.push_back(vector_json(c));
  for (const auto& t : d.tp_basis) tp.push_back(vector_json(t));
  out["B_basis"] = B;
  out["C_basis"] = C;
  out["tp_basis"] = tp;
  Json params;
  for (std::size_t k = 0; k < 8; ++k) params[tp_param_names()[k]] = scalar_json(d.tp_params[k]);
  out["tp_params"] = params;
  Json inv;
  for (const auto& [name, ok] : d.invariants) inv[name] = ok;
  out["invariants"] = inv;
  out["all_invariants_hold"] = d.all_invariants_hold();
  return out;
}

inline Json lie_classification_json(const LieClassification& c) {
  Json out;
  out["type"] = lie_type_name(c.type);
  out["parameter"] = c.parameter;
  out["alpha"] = format_rational(c.alpha);
  out["beta"] = format_rational(c.beta);
  out["witness"] = matrix_json(c.witness);
  out["exact"] = c.exact;
  out["witness_verified"] = c.witness_verified;
  out["derived_dims"] = c.derived_dims;
  out["killing_inertia"] = {c.killing.positive, c.killing.negative, c.killing.zero};
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

inline Json middle_c_json(const MiddleCClassification& c) {
  Json out;
  out["type"] = middle_c_target_name(c.target);
  out["witness"] = c.target == MiddleCTarget::Unclassified ? Json(nullptr) : matrix_json(c.witness);
  out["exact"] = c.exact;
  out["witness_verified"] = c.witness_verified;
  out["units_checked"] = c.units_checked;
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

}  // namespace altkit

#endif  // ALTKIT_IO_HPP
