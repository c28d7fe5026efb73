#ifndef ALTKIT_CATALOG_HPP
#define ALTKIT_CATALOG_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "altkit/algebra.hpp"
#include "altkit/error.hpp"
#include "altkit/scalar.hpp"

namespace altkit {

// Named algebras and parametric families. All tables are exact.
enum class Family { Ak, Tn, Tc, Tp, Mplus, Mzero, H, C };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Ak: return "ak";
    case Family::Tn: return "tn";
    case Family::Tc: return "tc";
    case Family::Tp: return "tp";
    case Family::Mplus: return "mplus";
    case Family::Mzero: return "mzero";
    case Family::H: return "quaternions";
    case Family::C: return "complex";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"ak", Family::Ak},       {"tn", Family::Tn},       {"tc", Family::Tc},
      {"tp", Family::Tp},       {"mplus", Family::Mplus}, {"mzero", Family::Mzero},
      {"quaternions", Family::H}, {"h", Family::H},       {"complex", Family::C},
      {"c", Family::C}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

struct FamilyParams {
  Family family;
  std::map<std::string, Rational> params;

  Rational get(const std::string& name, const Rational& fallback = Rational(0)) const {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
  }
};

namespace detail {

// Sparse table filler; products never set stay zero.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t dim) : dim_(dim), sc_(dim * dim * dim, Rational(0)) {}

  void set(std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, Rational>> terms) {
    for (std::size_t k = 0; k < dim_; ++k) at(i, j, k) = 0;
    for (auto& [k, c] : terms) at(i, j, k) += c;
  }

  // e_0 is the unit.
  void unit_row_and_column() {
    for (std::size_t j = 0; j < dim_; ++j) {
      set(0, j, {{j, 1}});
      set(j, 0, {{j, 1}});
    }
  }

  Algebra<Rational> finish(std::vector<std::string> labels) {
    Vector<Rational> unit(dim_, Rational(0));
    unit[0] = 1;
    return Algebra<Rational>(dim_, std::move(sc_), std::move(labels), std::move(unit));
  }

 private:
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return sc_[(i * dim_ + j) * dim_ + k]; }
  std::size_t dim_;
  std::vector<Rational> sc_;
};

inline void check_known_params(const FamilyParams& p, const std::set<std::string>& allowed) {
  for (const auto& [name, value] : p.params)
    if (!allowed.count(name))
      throw ParameterError("unknown parameter '" + name + "' for family " + family_name(p.family));
}

// Basis indices shared by the 4-dimensional tables.
constexpr std::size_t kOne = 0, kI = 1, kJ = 2, kK = 3;

inline Algebra<Rational> build_tn(const FamilyParams& p) {
  check_known_params(p, {"a", "b", "c", "d", "f", "g", "h", "e"});
  Rational a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d");
  Rational f = p.get("f"), g = p.get("g"), h = p.get("h"), e = p.get("e");
  TableBuilder t(4);
  t.unit_row_and_column();
  t.set(kI, kI, {{kOne, -1}});
  t.set(kI, kJ, {{kK, 1}});
  t.set(kI, kK, {{kJ, -1}});
  t.set(kJ, kI, {{kK, -1}});
  t.set(kK, kI, {{kJ, 1}});
  t.set(kJ, kJ, {{kOne, a}, {kI, b}, {kJ, c}, {kK, d}});
  t.set(kK, kK, {{kOne, a}, {kI, b}, {kJ, c}, {kK, d}});
  t.set(kJ, kK, {{kOne, f}, {kI, g}, {kJ, h}, {kK, e}});
  t.set(kK, kJ, {{kOne, -f}, {kI, -g}, {kJ, -h}, {kK, -e}});
  return t.finish({"1", "i", "j", "k"});
}

inline Algebra<Rational> build_tc(const FamilyParams& p) {
  check_known_params(p, {"a", "b", "f", "g", "h"});
  Rational a = p.get("a"), b = p.get("b"), f = p.get("f"), g = p.get("g"), h = p.get("h");
  if (h != 0 && h != 1) throw ParameterError("tc requires h = 0 or h = 1");
  TableBuilder t(4);
  t.unit_row_and_column();
  t.set(kI, kI, {{kOne, -1}});
  t.set(kI, kJ, {{kK, 1}});
  t.set(kI, kK, {{kJ, -1}});
  t.set(kJ, kI, {{kK, 1}});
  t.set(kK, kI, {{kJ, -1}});
  t.set(kJ, kJ, {{kOne, a}, {kI, b}});
  t.set(kK, kK, {{kOne, -a}, {kI, -b}});
  t.set(kJ, kK, {{kOne, f}, {kI, g}, {kJ, h}});
  t.set(kK, kJ, {{kOne, f}, {kI, g}, {kJ, h}});
  return t.finish({"1", "i", "j", "k"});
}

inline Algebra<Rational> build_tp(const FamilyParams& p) {
  check_known_params(p, {"alpha1", "alpha2", "beta1", "beta2", "delta1", "delta2", "gamma1", "gamma2"});
  constexpr std::size_t one = 0, i = 1, w = 2, v = 3;
  TableBuilder t(4);
  t.unit_row_and_column();
  t.set(i, i, {{one, -1}});
  t.set(i, w, {{v, -1}});
  t.set(i, v, {{w, 1}});
  t.set(w, i, {{v, 1}});
  t.set(v, i, {{w, -1}});
  t.set(w, w, {{one, p.get("alpha1")}, {i, p.get("alpha2")}});
  t.set(w, v, {{one, p.get("beta1")}, {i, p.get("beta2")}});
  t.set(v, w, {{one, p.get("delta1")}, {i, p.get("delta2")}});
  t.set(v, v, {{one, p.get("gamma1")}, {i, p.get("gamma2")}});
  return t.finish({"1", "i", "w", "v"});
}

inline Algebra<Rational> build_ak(const FamilyParams& p) {
  Rational kq = p.get("k", Rational(0));
  if (kq.get_den() != 1 || kq < 1 || kq > 64)
    throw ParameterError("ak requires an integer k with 1 <= k <= 64");
  const std::size_t k = kq.get_num().get_ui();
  std::set<std::string> allowed = {"k"};
  for (std::size_t blk = 1; blk <= k; ++blk)
    for (int s = 1; s <= 2; ++s) allowed.insert("a" + std::to_string(blk) + std::to_string(s));
  check_known_params(p, allowed);

  const std::size_t n = 2 * k + 2;
  TableBuilder t(n);
  t.unit_row_and_column();
  constexpr std::size_t e1 = 1;
  t.set(e1, e1, {{0, -1}});
  std::vector<std::string> labels = {"1", "e1"};
  for (std::size_t blk = 1; blk <= k; ++blk) {
    const std::size_t v1 = 2 * blk, v2 = 2 * blk + 1;
    labels.push_back("v" + std::to_string(blk) + "1");
    labels.push_back("v" + std::to_string(blk) + "2");
    // e1 is central: e1 v = v e1.
    t.set(e1, v1, {{v2, 1}});
    t.set(v1, e1, {{v2, 1}});
    t.set(e1, v2, {{v1, -1}});
    t.set(v2, e1, {{v1, -1}});
    for (int s = 1; s <= 2; ++s) {
      std::string name = "a" + std::to_string(blk) + std::to_string(s);
      Rational a = p.get(name, Rational(1));
      if (sgn(a) <= 0) throw ParameterError(name + " must be a positive real");
      const std::size_t idx = s == 1 ? v1 : v2;
      t.set(idx, idx, {{0, a}});
    }
  }
  return t.finish(std::move(labels));
}

inline Algebra<Rational> build_fixed(Family f) {
  TableBuilder t(f == Family::C ? 2 : 4);
  t.unit_row_and_column();
  t.set(kI, kI, {{kOne, -1}});
  if (f == Family::C) return t.finish({"1", "i"});
  t.set(kI, kJ, {{kK, 1}});
  t.set(kI, kK, {{kJ, -1}});
  t.set(kJ, kI, {{kK, -1}});
  t.set(kK, kI, {{kJ, 1}});
  if (f == Family::Mplus) {
    t.set(kJ, kJ, {{kOne, 1}});
    t.set(kJ, kK, {{kI, -1}});
    t.set(kK, kJ, {{kI, 1}});
    t.set(kK, kK, {{kOne, 1}});
  } else if (f == Family::H) {
    t.set(kJ, kJ, {{kOne, -1}});
    t.set(kJ, kK, {{kI, 1}});
    t.set(kK, kJ, {{kI, -1}});
    t.set(kK, kK, {{kOne, -1}});
  }
  return t.finish({"1", "i", "j", "k"});
}

}  // namespace detail

// Build the algebra of a family at the given parameters.
inline Algebra<Rational> build(const FamilyParams& p) {
  switch (p.family) {
    case Family::Ak: return detail::build_ak(p);
    case Family::Tn: return detail::build_tn(p);
    case Family::Tc: return detail::build_tc(p);
    case Family::Tp: return detail::build_tp(p);
    case Family::Mplus:
    case Family::Mzero:
    case Family::H:
    case Family::C:
      detail::check_known_params(p, {});
      return detail::build_fixed(p.family);
  }
  throw ParameterError("unknown family");
}

inline Algebra<Rational> build(Family f, std::map<std::string, Rational> params = {}) {
  return build(FamilyParams{f, std::move(params)});
}

// The T_n slice c = d = e = h = 0, f = b, g = -a.
inline FamilyParams tn_special_case_params(const Rational& a, const Rational& b) {
  return {Family::Tn, {{"a", a}, {"b", b}, {"f", b}, {"g", -a}}};
}

inline Algebra<Rational> tn_special_case(const Rational& a, const Rational& b) {
  return build(tn_special_case_params(a, b));
}

// T_n coordinates of the three associative targets.
inline FamilyParams tn_point(Family target) {
  switch (target) {
    case Family::Mplus: return {Family::Tn, {{"a", 1}, {"g", -1}}};
    case Family::Mzero: return {Family::Tn, {}};
    case Family::H: return {Family::Tn, {{"a", -1}, {"g", 1}}};
    default: throw ParameterError("only mplus, mzero and quaternions have T_n coordinates");
  }
}

}  // namespace altkit

#endif  // ALTKIT_CATALOG_HPP
