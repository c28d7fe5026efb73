#ifndef ALTKIT_IDENTITIES_HPP
#define ALTKIT_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altkit/algebra.hpp"
#include "altkit/error.hpp"
#include "altkit/matrix.hpp"
#include "altkit/random.hpp"

namespace altkit {

enum class IdentityKind {
  LeftAlt,
  RightAlt,
  Flexible,
  PartialLeftAlt,
  PartialRightAlt,
  PartialFlexible,
  LeftCAssoc,
  MiddleCAssoc,
  RightCAssoc,
  Commutative,
  Associative,
};

inline const std::vector<std::pair<IdentityKind, std::string>>& identity_names() {
  static const std::vector<std::pair<IdentityKind, std::string>> names = {
      {IdentityKind::LeftAlt, "left-alt"},
      {IdentityKind::RightAlt, "right-alt"},
      {IdentityKind::Flexible, "flexible"},
      {IdentityKind::PartialLeftAlt, "partial-left-alt"},
      {IdentityKind::PartialRightAlt, "partial-right-alt"},
      {IdentityKind::PartialFlexible, "partial-flexible"},
      {IdentityKind::LeftCAssoc, "left-c-assoc"},
      {IdentityKind::MiddleCAssoc, "middle-c-assoc"},
      {IdentityKind::RightCAssoc, "right-c-assoc"},
      {IdentityKind::Commutative, "commutative"},
      {IdentityKind::Associative, "associative"},
  };
  return names;
}

inline std::string identity_name(IdentityKind k) {
  for (const auto& [kind, name] : identity_names())
    if (kind == k) return name;
  return "?";
}

inline std::optional<IdentityKind> identity_from_name(const std::string& s) {
  for (const auto& [kind, name] : identity_names())
    if (name == s) return kind;
  return std::nullopt;
}

inline bool is_partial(IdentityKind k) {
  return k == IdentityKind::PartialLeftAlt || k == IdentityKind::PartialRightAlt ||
         k == IdentityKind::PartialFlexible;
}

inline bool needs_c_span(IdentityKind k) {
  return k == IdentityKind::LeftCAssoc || k == IdentityKind::MiddleCAssoc ||
         k == IdentityKind::RightCAssoc;
}

template <class S>
struct IdentityContext {
  std::vector<Element<S>> units;  // imaginary units for the Partial* kinds
  bool units_sampled = false;     // units are draws from a continuous locus
  std::optional<std::pair<Element<S>, Element<S>>> c_span;
};

// A failing instance. For Commutative, z is empty and defect = xy - yx.
template <class S>
struct Witness {
  Vector<S> x, y, z;
  Vector<S> defect;
};

struct CheckMethod {
  bool sampled = false;
  std::size_t samples = 0;

  std::string to_string() const {
    return sampled ? "sampled(" + std::to_string(samples) + ")" : "exhaustive-basis";
  }
};

template <class S>
struct IdentityReport {
  IdentityKind kind;
  bool holds = true;
  std::optional<Witness<S>> witness;
  CheckMethod method;
};

namespace detail {

template <class S>
Vector<S> assoc_raw(const Algebra<S>& A, const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) {
  Vector<S> left = A.mul(A.mul(x, y), z);
  Vector<S> right = A.mul(x, A.mul(y, z));
  for (std::size_t k = 0; k < left.size(); ++k) left[k] -= right[k];
  return left;
}

template <class S>
Vector<S> add_raw(Vector<S> a, const Vector<S>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// Basis indices ordered by distance from `center`, upward first on ties, so a
// reported witness stays close to the direction of the repeated argument.
inline std::vector<std::size_t> indices_around(std::size_t center, std::size_t n) {
  std::vector<std::size_t> order = {center};
  for (std::size_t d = 1; order.size() < n; ++d) {
    if (center + d < n) order.push_back(center + d);
    if (d <= center) order.push_back(center - d);
  }
  return order;
}

template <class S>
std::size_t dominant_index(const Vector<S>& v) {
  std::size_t best = 0;
  double mag = -1.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    double m = ScalarTraits<S>::magnitude(v[k]);
    if (m > mag) {
      mag = m;
      best = k;
    }
  }
  return best;
}

// Which slots repeat the distinguished argument: (x,x,y), (y,x,x) or (x,y,x).
enum class Pattern { LeftRepeat, RightRepeat, OuterRepeat };

template <class S>
Vector<S> pattern_defect(const Algebra<S>& A, Pattern p, const Vector<S>& x, const Vector<S>& y) {
  switch (p) {
    case Pattern::LeftRepeat: return assoc_raw(A, x, x, y);
    case Pattern::RightRepeat: return assoc_raw(A, y, x, x);
    case Pattern::OuterRepeat: return assoc_raw(A, x, y, x);
  }
  return {};
}

template <class S>
Witness<S> pattern_witness(Pattern p, const Vector<S>& x, const Vector<S>& y, Vector<S> defect) {
  switch (p) {
    case Pattern::LeftRepeat: return {x, x, y, std::move(defect)};
    case Pattern::RightRepeat: return {y, x, x, std::move(defect)};
    case Pattern::OuterRepeat: return {x, y, x, std::move(defect)};
  }
  return {};
}

// Quadratic identity in x, decided over all x by polarization:
// q(x) = 0 for all x  <=>  q(e_i) = 0 and q(e_i + e_j) - q(e_i) - q(e_j) = 0.
template <class S>
std::optional<Witness<S>> check_quadratic_all(const Algebra<S>& A, Pattern p) {
  const std::size_t n = A.dim();
  const double eps = A.eps();
  for (std::size_t i = 0; i < n; ++i) {
    Vector<S> x = A.unit_vector(i);
    for (std::size_t j : indices_around(i, n)) {
      Vector<S> y = A.unit_vector(j);
      Vector<S> d = pattern_defect(A, p, x, y);
      if (!is_zero_vector<S>(d, eps)) return pattern_witness(p, x, y, std::move(d));
    }
  }
  // Diagonal terms vanish, so the defect at e_i + e_j equals the polarized sum.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<S> x = add_raw(A.unit_vector(i), A.unit_vector(j));
      for (std::size_t l : indices_around(i, n)) {
        Vector<S> y = A.unit_vector(l);
        Vector<S> d = pattern_defect(A, p, x, y);
        if (!is_zero_vector<S>(d, eps)) return pattern_witness(p, x, y, std::move(d));
      }
    }
  return std::nullopt;
}

// Quadratic identity restricted to the supplied x values; linear in y, so
// the basis suffices for y.
template <class S>
std::optional<Witness<S>> check_quadratic_at(const Algebra<S>& A, Pattern p,
                                             const std::vector<Element<S>>& xs) {
  const std::size_t n = A.dim();
  for (const auto& xe : xs) {
    const Vector<S>& x = xe.coords();
    for (std::size_t j : indices_around(dominant_index(x), n)) {
      Vector<S> y = A.unit_vector(j);
      Vector<S> d = pattern_defect(A, p, x, y);
      if (!is_zero_vector<S>(d, A.eps())) return pattern_witness(p, x, y, std::move(d));
    }
  }
  return std::nullopt;
}

template <class S>
void require_parent(const Algebra<S>& A, const Element<S>& e, const char* what) {
  if (!e.parent().same_as(A)) throw DimensionError(std::string(what) + " belongs to another algebra");
}

// Validates the designated two-dimensional subalgebra and returns its basis.
template <class S>
std::vector<Vector<S>> c_span_basis(const Algebra<S>& A, const IdentityContext<S>& ctx) {
  if (!ctx.c_span) throw ContextError("C-associativity needs a designated subalgebra span");
  const auto& [c1, c2] = *ctx.c_span;
  require_parent(A, c1, "C span element");
  require_parent(A, c2, "C span element");
  std::vector<Vector<S>> basis = {c1.coords(), c2.coords()};
  if (span_basis(basis, A.dim(), A.eps()).size() != 2)
    throw ContextError("C span elements are linearly dependent");
  if (A.unital() && !in_span(basis, *A.unit(), A.eps()))
    throw ContextError("C span must contain the unit");
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!in_span(basis, A.mul(a, b), A.eps())) throw ContextError("C span is not closed under the product");
  return basis;
}

}  // namespace detail

// Decides one identity class on A. Multilinear identities and the full
// alternative laws are decided exactly on basis tuples; Partial* kinds are
// exact over the supplied unit set.
template <class S>
IdentityReport<S> check_identity(const Algebra<S>& A, IdentityKind kind, const IdentityContext<S>& ctx = {}) {
  using detail::assoc_raw;
  using detail::Pattern;
  const std::size_t n = A.dim();
  const double eps = A.eps();
  IdentityReport<S> report{kind, true, std::nullopt, {}};
  auto fail = [&](Witness<S> w) {
    report.holds = false;
    report.witness = std::move(w);
  };

  if (is_partial(kind)) {
    if (ctx.units.empty()) throw ContextError(identity_name(kind) + " needs a nonempty set of imaginary units");
    for (const auto& u : ctx.units) detail::require_parent(A, u, "imaginary unit");
    Pattern p = kind == IdentityKind::PartialLeftAlt    ? Pattern::LeftRepeat
                : kind == IdentityKind::PartialRightAlt ? Pattern::RightRepeat
                                                        : Pattern::OuterRepeat;
    if (auto w = detail::check_quadratic_at(A, p, ctx.units)) fail(std::move(*w));
    if (ctx.units_sampled) report.method = {true, ctx.units.size()};
    return report;
  }

  switch (kind) {
    case IdentityKind::LeftAlt:
      if (auto w = detail::check_quadratic_all(A, Pattern::LeftRepeat)) fail(std::move(*w));
      break;
    case IdentityKind::RightAlt:
      if (auto w = detail::check_quadratic_all(A, Pattern::RightRepeat)) fail(std::move(*w));
      break;
    case IdentityKind::Flexible:
      if (auto w = detail::check_quadratic_all(A, Pattern::OuterRepeat)) fail(std::move(*w));
      break;
    case IdentityKind::Commutative:
      for (std::size_t i = 0; i < n && report.holds; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Vector<S> x = A.unit_vector(i), y = A.unit_vector(j);
          Vector<S> d = A.mul(x, y);
          Vector<S> yx = A.mul(y, x);
          for (std::size_t k = 0; k < n; ++k) d[k] -= yx[k];
          if (!is_zero_vector<S>(d, eps)) {
            fail({x, y, {}, std::move(d)});
            break;
          }
        }
      break;
    case IdentityKind::Associative:
      for (std::size_t i = 0; i < n && report.holds; ++i)
        for (std::size_t j = 0; j < n && report.holds; ++j)
          for (std::size_t l = 0; l < n; ++l) {
            Vector<S> x = A.unit_vector(i), y = A.unit_vector(j), z = A.unit_vector(l);
            Vector<S> d = assoc_raw(A, x, y, z);
            if (!is_zero_vector<S>(d, eps)) {
              fail({x, y, z, std::move(d)});
              break;
            }
          }
      break;
    case IdentityKind::LeftCAssoc:
    case IdentityKind::MiddleCAssoc:
    case IdentityKind::RightCAssoc: {
      auto cs = detail::c_span_basis(A, ctx);
      std::vector<std::array<Vector<S>, 3>> triples;
      if (kind == IdentityKind::MiddleCAssoc) {
        // C-bimodule part: (z, z', x) and (x, z, z').
        for (const auto& z1 : cs)
          for (const auto& z2 : cs)
            for (std::size_t i = 0; i < n; ++i) {
              triples.push_back({z1, z2, A.unit_vector(i)});
              triples.push_back({A.unit_vector(i), z1, z2});
            }
      }
      for (const auto& z : cs)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Vector<S> x = A.unit_vector(i), y = A.unit_vector(j);
            if (kind == IdentityKind::LeftCAssoc) triples.push_back({z, x, y});
            if (kind == IdentityKind::MiddleCAssoc) triples.push_back({x, z, y});
            if (kind == IdentityKind::RightCAssoc) triples.push_back({x, y, z});
          }
      for (auto& [x, y, z] : triples) {
        Vector<S> d = assoc_raw(A, x, y, z);
        if (!is_zero_vector<S>(d, eps)) {
          fail({x, y, z, std::move(d)});
          break;
        }
      }
      break;
    }
    default:
      break;
  }
  return report;
}

template <class S>
struct StrictnessReport {
  bool strict = false;
  std::optional<IdentityKind> failing_side;  // LeftCAssoc or RightCAssoc
  std::optional<Witness<S>> witness;
};

// Strictly middle C-associative: the middle condition holds but the left or
// the right one fails.
template <class S>
StrictnessReport<S> is_strictly_middle(const Algebra<S>& A, const Element<S>& c1, const Element<S>& c2) {
  IdentityContext<S> ctx;
  ctx.c_span = std::make_pair(c1, c2);
  auto middle = check_identity(A, IdentityKind::MiddleCAssoc, ctx);
  if (!middle.holds) throw NotApplicableError("algebra is not middle C-associative for this span");
  StrictnessReport<S> out;
  for (auto side : {IdentityKind::LeftCAssoc, IdentityKind::RightCAssoc}) {
    auto r = check_identity(A, side, ctx);
    if (!r.holds) {
      out.strict = true;
      out.failing_side = side;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  return out;
}

template <class S>
struct DivisionReport {
  bool no_zero_divisor_found = true;  // sampled verdict, never a proof
  std::optional<Vector<S>> witness;   // a nonzero a with L_a or R_a singular
  std::optional<Side> singular_side;
  std::size_t candidates = 0;
  std::size_t samples = 0;
};

// Searches basis elements, pairwise sums e_i + e_j and `samples` random
// elements for a singular multiplication operator.
template <class S>
DivisionReport<S> is_division_sampled(const Algebra<S>& A, std::size_t samples = 200, std::uint64_t seed = 0) {
  if (samples == 0) throw ParameterError("division sampling needs at least one sample");
  const std::size_t n = A.dim();
  std::vector<Vector<S>> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(A.unit_vector(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(detail::add_raw(A.unit_vector(i), A.unit_vector(j)));
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) candidates.push_back(random_vector<S>(rng, n));

  DivisionReport<S> out;
  out.samples = samples;
  for (const auto& a : candidates) {
    if (is_zero_vector<S>(a, A.eps())) continue;
    ++out.candidates;
    for (Side side : {Side::Left, Side::Right}) {
      MulOperator<S> op{side, operator_matrix<S>(A, a, side)};
      if (!op.invertible(A.eps())) {
        out.no_zero_divisor_found = false;
        out.witness = a;
        out.singular_side = side;
        return out;
      }
    }
  }
  return out;
}

}  // namespace altkit

#endif  // ALTKIT_IDENTITIES_HPP
