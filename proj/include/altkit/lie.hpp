#ifndef ALTKIT_LIE_HPP
#define ALTKIT_LIE_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altkit/algebra.hpp"
#include "altkit/catalog.hpp"
#include "altkit/error.hpp"
#include "altkit/matrix.hpp"

namespace altkit {

// Brackets [e_i, e_j] = sum_k b[i][j][k] e_k, antisymmetric by construction.
template <class S>
class LieAlgebra {
 public:
  using Traits = ScalarTraits<S>;

  LieAlgebra(std::size_t dim, std::vector<S> brackets, std::vector<std::string> labels = {},
             double eps = kDefaultEps)
      : dim_(dim), b_(std::move(brackets)), labels_(std::move(labels)), eps_(eps) {
    if (dim_ == 0) throw DimensionError("Lie algebra dimension must be positive");
    if (b_.size() != dim_ * dim_ * dim_) throw DimensionError("bracket tensor must be dim x dim x dim");
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != dim_) throw DimensionError("label count differs from dimension");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!Traits::is_zero(at(i, j, k) + at(j, i, k), eps_))
            throw ParameterError("brackets are not antisymmetric");
  }

  std::size_t dim() const { return dim_; }
  double eps() const { return eps_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<S>& brackets() const { return b_; }
  const S& at(std::size_t i, std::size_t j, std::size_t k) const { return b_[(i * dim_ + j) * dim_ + k]; }

  Vector<S> unit_vector(std::size_t i) const {
    Vector<S> v(dim_, Traits::zero());
    v.at(i) = Traits::one();
    return v;
  }

  Vector<S> bracket(std::span<const S> x, std::span<const S> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("coordinate length mismatch");
    Vector<S> out(dim_, Traits::zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (Traits::is_zero(x[i], 0.0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (Traits::is_zero(y[j], 0.0)) continue;
        S xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!Traits::is_zero(at(i, j, k), 0.0)) out[k] += xy * at(i, j, k);
      }
    }
    return out;
  }

  // ad(x): column j is [x, e_j].
  Matrix<S> ad(std::span<const S> x) const {
    Matrix<S> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vector<S> col = bracket(x, unit_vector(j));
      for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
    }
    return m;
  }

  bool close(std::span<const S> a, std::span<const S> b) const {
    Vector<S> d(a.begin(), a.end());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] -= b[k];
    return is_zero_vector<S>(d, eps_);
  }

  template <class T>
  LieAlgebra<T> convert(double eps) const {
    std::vector<T> b;
    for (const auto& c : b_) b.push_back(scalar_cast<T>(c));
    return LieAlgebra<T>(dim_, std::move(b), labels_, eps);
  }

 private:
  std::size_t dim_;
  std::vector<S> b_;
  std::vector<std::string> labels_;
  double eps_;
};

// Commutator algebra: b[i][j][k] = c[i][j][k] - c[j][i][k].
template <class S>
LieAlgebra<S> lieify(const Algebra<S>& A) {
  const std::size_t n = A.dim();
  std::vector<S> b(n * n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b[(i * n + j) * n + k] = A.sc(i, j, k) - A.sc(j, i, k);
  return LieAlgebra<S>(n, std::move(b), A.labels(), A.eps());
}

template <class S>
struct JacobiReport {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> witness;
  Vector<S> defect;
};

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] on all basis triples.
template <class S>
JacobiReport<S> check_jacobi(const LieAlgebra<S>& L) {
  const std::size_t n = L.dim();
  JacobiReport<S> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector<S> x = L.unit_vector(i), y = L.unit_vector(j), z = L.unit_vector(k);
        Vector<S> t1 = L.bracket(x, L.bracket(y, z));
        Vector<S> t2 = L.bracket(y, L.bracket(z, x));
        Vector<S> t3 = L.bracket(z, L.bracket(x, y));
        for (std::size_t r = 0; r < n; ++r) t1[r] += t2[r] + t3[r];
        if (!is_zero_vector<S>(t1, L.eps())) {
          out.holds = false;
          out.witness = std::array<std::size_t, 3>{i, j, k};
          out.defect = std::move(t1);
          return out;
        }
      }
  return out;
}

// L^(0) = L, L^(k+1) = [L^(k), L^(k)], until the dimension stops changing
// (the repeated term is kept) or reaches 0.
template <class S>
std::vector<std::vector<Vector<S>>> derived_series(const LieAlgebra<S>& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Vector<S>>> series;
  std::vector<Vector<S>> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(L.unit_vector(i));
  series.push_back(current);
  while (!current.empty()) {
    std::vector<Vector<S>> brackets;
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) brackets.push_back(L.bracket(current[a], current[b]));
    auto next = span_basis(brackets, n, L.eps());
    const bool stable = next.size() == current.size();
    series.push_back(next);
    current = std::move(next);
    if (stable) break;
  }
  return series;
}

template <class S>
std::vector<std::size_t> derived_dims(const LieAlgebra<S>& L) {
  std::vector<std::size_t> dims;
  for (const auto& s : derived_series(L)) dims.push_back(s.size());
  return dims;
}

enum class LieType { G1PlusG35, G1PlusG37, G49Zero, G1PlusSl2R, Unrecognized };

inline std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::G1PlusG35: return "g1_plus_g35";
    case LieType::G1PlusG37: return "g1_plus_g37";
    case LieType::G49Zero: return "g49_zero";
    case LieType::G1PlusSl2R: return "g1_plus_sl2r";
    case LieType::Unrecognized: return "unrecognized";
  }
  return "?";
}

inline std::optional<LieType> lie_type_from_name(const std::string& s) {
  for (auto t : {LieType::G1PlusG35, LieType::G1PlusG37, LieType::G49Zero, LieType::G1PlusSl2R, LieType::Unrecognized})
    if (lie_type_name(t) == s) return t;
  return std::nullopt;
}

// Canonical 4-dimensional tables. For the decomposable types the central
// g1 generator comes first, followed by e1, e2, e3 of the 3-dimensional part:
//   g3,5(b'):  [e1,e3] = b' e1 - e2, [e2,e3] = e1 + b' e2
//   g3,7:      [e2,e3] = e1, [e3,e1] = e2, [e1,e2] = e3
//   sl(2,R):   [e2,e3] = -e1, [e3,e1] = e2, [e1,e2] = e3
//   g4,9(a'):  [e2,e3] = e1, [e1,e4] = 2a' e1, [e2,e4] = a' e2 - e3, [e3,e4] = e2 + a' e3
template <class S>
LieAlgebra<S> canonical_lie(LieType type, const S& param = ScalarTraits<S>::zero(), double eps = kDefaultEps) {
  const std::size_t n = 4;
  std::vector<S> b(n * n * n, ScalarTraits<S>::zero());
  auto set = [&](std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, S>> terms) {
    for (auto& [k, c] : terms) {
      b[(i * n + j) * n + k] += c;
      b[(j * n + i) * n + k] -= c;
    }
  };
  const S one = ScalarTraits<S>::one();
  std::vector<std::string> labels;
  switch (type) {
    case LieType::G1PlusG35:
      set(1, 3, {{1, param}, {2, -one}});
      set(2, 3, {{1, one}, {2, param}});
      labels = {"f", "e1", "e2", "e3"};
      break;
    case LieType::G1PlusG37:
      set(2, 3, {{1, one}});
      set(3, 1, {{2, one}});
      set(1, 2, {{3, one}});
      labels = {"f", "e1", "e2", "e3"};
      break;
    case LieType::G1PlusSl2R:
      set(2, 3, {{1, -one}});
      set(3, 1, {{2, one}});
      set(1, 2, {{3, one}});
      labels = {"f", "e1", "e2", "e3"};
      break;
    case LieType::G49Zero:
      set(1, 2, {{0, one}});
      set(0, 3, {{0, S(2) * param}});
      set(1, 3, {{1, param}, {2, -one}});
      set(2, 3, {{1, one}, {2, param}});
      labels = {"e1", "e2", "e3", "e4"};
      break;
    case LieType::Unrecognized:
      throw ParameterError("no canonical table for an unrecognized type");
  }
  return LieAlgebra<S>(n, std::move(b), std::move(labels), eps);
}

template <class S>
struct MatchReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_difference;
  Vector<S> expected, actual;
};

// Transports L's brackets to the basis given by the witness columns and
// compares with the canonical table of `type`.
template <class S>
MatchReport<S> match_canonical(const LieAlgebra<S>& L, LieType type, const Matrix<S>& witness,
                               const S& param = ScalarTraits<S>::zero()) {
  MatchReport<S> out;
  if (type == LieType::Unrecognized) {
    out.ok = false;
    return out;
  }
  const std::size_t n = L.dim();
  if (n != 4 || witness.rows() != n || witness.cols() != n) {
    out.ok = false;
    return out;
  }
  auto winv = inverse(witness, L.eps());
  if (!winv) {
    out.ok = false;
    return out;
  }
  const LieAlgebra<S> canon = canonical_lie<S>(type, param, L.eps());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vector<S> actual = winv->apply(L.bracket(witness.column(p), witness.column(q)));
      Vector<S> expected = canon.bracket(canon.unit_vector(p), canon.unit_vector(q));
      if (!L.close(actual, expected)) {
        out.ok = false;
        out.first_difference = std::make_pair(p, q);
        out.expected = std::move(expected);
        out.actual = std::move(actual);
        return out;
      }
    }
  return out;
}

// Inertia (positive, negative, zero counts) of the Killing form
// K(x, y) = tr(ad x ad y); a basis-independent invariant.
struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <class S>
Matrix<S> killing_form(const LieAlgebra<S>& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix<S>> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(L.unit_vector(i)));
  Matrix<S> K(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<S> prod = ads[i] * ads[j];
      S tr = ScalarTraits<S>::zero();
      for (std::size_t r = 0; r < n; ++r) tr += prod(r, r);
      K(i, j) = tr;
    }
  return K;
}

template <class S>
Inertia killing_inertia(const LieAlgebra<S>& L) {
  const Matrix<S> K = killing_form(L);
  const std::size_t n = K.rows();
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ScalarTraits<S>::to_double(K(r, c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const double tol = 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff());
  Inertia out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double ev = es.eigenvalues()(k);
    if (ev > tol) ++out.positive;
    else if (ev < -tol) ++out.negative;
    else ++out.zero;
  }
  return out;
}

struct LieClassification {
  LieType type = LieType::Unrecognized;
  double parameter = 0.0;  // b' for g3,5, a' for g4,9
  Rational alpha, beta;    // [v, w] = alpha 1 + beta i
  Matrix<double> witness;  // columns: canonical basis in (1, i, w, v) coordinates
  bool exact = false;      // witness verified in rational arithmetic
  bool witness_verified = false;
  std::vector<std::size_t> derived_dims;
  Inertia killing;
  std::string reason;
};

// The commutator algebra of T_p depends only on (alpha, beta).
inline LieAlgebra<Rational> tp_lie(const Rational& alpha, const Rational& beta) {
  return lieify(build(Family::Tp, {{"delta1", alpha}, {"delta2", beta}}));
}

namespace detail {

// Reads (alpha, beta) if L has the T_p bracket pattern on (1, i, w, v):
// 1 central, [i, w] = -2v, [i, v] = 2w, [v, w] in span{1, i}.
inline std::optional<std::pair<Rational, Rational>> tp_bracket_form(const LieAlgebra<Rational>& L) {
  if (L.dim() != 4) return std::nullopt;
  constexpr std::size_t one = 0, i = 1, w = 2, v = 3;
  auto br = [&](std::size_t a, std::size_t b) { return L.bracket(L.unit_vector(a), L.unit_vector(b)); };
  auto eq = [](const Vector<Rational>& a, std::vector<Rational> b) { return a == Vector<Rational>(b); };
  for (std::size_t k = 0; k < 4; ++k)
    if (!is_zero_vector<Rational>(br(one, k), 0.0)) return std::nullopt;
  if (!eq(br(i, w), {0, 0, 0, -2}) || !eq(br(i, v), {0, 0, 2, 0})) return std::nullopt;
  Vector<Rational> vw = br(v, w);
  if (sgn(vw[2]) != 0 || sgn(vw[3]) != 0) return std::nullopt;
  return std::make_pair(vw[0], vw[1]);
}

// Witness column scales, exact when every square root is rational.
struct ScaledColumns {
  std::vector<Vector<Rational>> exact;
  std::vector<Vector<double>> approx;
  bool is_exact = true;
};

}  // namespace detail

// Classifies the T_p commutator algebra by the four (alpha, beta) cases and
// emits a verified change of basis to the canonical table.
//   alpha = beta = 0        -> g1 + g3,5 with b' from ad(i) on L^(1)
//   beta != 0               -> g1 + g3,7 when beta > 0; g1 + sl(2,R) when beta < 0
//   alpha != 0, beta = 0    -> g4,9 with zero parameter
inline LieClassification classify_tp_lie(const LieAlgebra<Rational>& L, double eps = kDefaultEps) {
  LieClassification out;
  out.derived_dims = derived_dims(L);
  out.killing = killing_inertia(L);
  auto form = detail::tp_bracket_form(L);
  if (!form) {
    out.reason = "brackets are not of T_p form";
    return out;
  }
  const auto [alpha, beta] = *form;
  out.alpha = alpha;
  out.beta = beta;

  // Columns of the witness as (coefficient vectors, scale) pairs; a scale of
  // 1/sqrt(s) is kept exact when s is a rational square.
  using Col = Vector<Rational>;
  const Col one = {1, 0, 0, 0}, i = {0, 1, 0, 0}, w = {0, 0, 1, 0}, v = {0, 0, 0, 1};
  auto scaled = [](Col c, const Rational& s) {
    for (auto& x : c) x *= s;
    return c;
  };
  std::vector<Col> cols;
  std::vector<std::optional<Rational>> root_den;  // column divided by sqrt(root_den) when set
  Rational param = 0;

  if (sgn(alpha) == 0 && sgn(beta) == 0) {
    // ad(i) on span{v, w}: v -> 2w, w -> -2v; eigenvalues t/2 +- i*sqrt(d - t^2/4).
    const Rational t = 0, d = 4;
    auto im = exact_sqrt(d - t * t / 4);
    if (!im) throw InexactError("ad(i) eigenvalue is irrational");
    param = (t / 2) / *im;
    const Col e3 = scaled(i, 1 / *im);
    const Col e1 = w;
    const Col br = L.bracket(e1, e3);
    Col e2 = scaled(e1, param);
    for (std::size_t k = 0; k < 4; ++k) e2[k] -= br[k];
    cols = {one, e1, e2, e3};
    root_den = {std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    out.type = LieType::G1PlusG35;
  } else if (sgn(beta) != 0) {
    // E = alpha 1 + beta i; (E/(2 beta), v/sqrt(2|beta|), w/sqrt(2|beta|)).
    Col E = {alpha, beta, 0, 0};
    cols = {one, scaled(E, 1 / (2 * beta)), v, w};
    const Rational s = 2 * abs(beta);
    root_den = {std::nullopt, std::nullopt, s, s};
    out.type = sgn(beta) > 0 ? LieType::G1PlusG37 : LieType::G1PlusSl2R;
  } else {
    // (sign(alpha)/2 * 1, v/sqrt(2|alpha|), w/sqrt(2|alpha|), i/2).
    cols = {scaled(one, Rational(sgn(alpha), 2)), v, w, scaled(i, Rational(1, 2))};
    const Rational s = 2 * abs(alpha);
    root_den = {std::nullopt, s, s, std::nullopt};
    out.type = LieType::G49Zero;
  }
  out.parameter = param.get_d();

  bool exact = true;
  Matrix<Rational> Wq(4, 4);
  Matrix<double> Wd(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    std::optional<Rational> root;
    if (root_den[c]) {
      root = exact_sqrt(*root_den[c]);
      if (!root) exact = false;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (root_den[c]) {
        Wd(r, c) = cols[c][r].get_d() / std::sqrt(root_den[c]->get_d());
        if (root) Wq(r, c) = cols[c][r] / *root;
      } else {
        Wd(r, c) = cols[c][r].get_d();
        Wq(r, c) = cols[c][r];
      }
    }
  }
  out.exact = exact;
  if (exact) {
    out.witness = Wq.cast<double>();
    out.witness_verified = match_canonical(L, out.type, Wq, param).ok;
  } else {
    out.witness = Wd;
    out.witness_verified = match_canonical(L.convert<double>(eps), out.type, Wd, param.get_d()).ok;
  }
  if (!out.witness_verified) out.reason = "witness does not reproduce the canonical table";
  return out;
}

inline LieClassification classify_tp_lie(const Rational& alpha, const Rational& beta, double eps = kDefaultEps) {
  return classify_tp_lie(tp_lie(alpha, beta), eps);
}

}  // namespace altkit

#endif  // ALTKIT_LIE_HPP
