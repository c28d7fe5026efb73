#ifndef ALTKIT_UNITS_HPP
#define ALTKIT_UNITS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "altkit/algebra.hpp"
#include "altkit/catalog.hpp"
#include "altkit/error.hpp"
#include "altkit/random.hpp"

namespace altkit {

enum class LocusKind { FiniteSet, Sphere, HyperboloidTwoSheets, ParallelPlanes, QuadricGeneral, SampledCloud };

inline std::string locus_kind_name(LocusKind k) {
  switch (k) {
    case LocusKind::FiniteSet: return "finite-set";
    case LocusKind::Sphere: return "sphere";
    case LocusKind::HyperboloidTwoSheets: return "hyperboloid-two-sheets";
    case LocusKind::ParallelPlanes: return "parallel-planes";
    case LocusKind::QuadricGeneral: return "quadric";
    case LocusKind::SampledCloud: return "sampled-cloud";
  }
  return "?";
}

// x2*x^2 + y2*y^2 + z2*z^2 = rhs in the coordinates (x, y, z) of xi + yj + zk.
struct QuadricEquation {
  Rational x2, y2, z2, rhs;

  // Sign convention: multiply through by -1 when no coefficient is positive.
  QuadricEquation normalized() const {
    if (sgn(x2) > 0 || sgn(y2) > 0 || sgn(z2) > 0) return *this;
    return {-x2, -y2, -z2, -rhs};
  }

  // Human-readable form, e.g. "-x^2+y^2+z^2=-1".
  std::string text() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, const char* var) {
      if (sgn(c) == 0) return;
      if (sgn(c) < 0) os << "-";
      else if (!first) os << "+";
      Rational m = abs(c);
      if (m != 1) os << format_rational(m) << "*";
      os << var << "^2";
      first = false;
    };
    term(x2, "x");
    term(y2, "y");
    term(z2, "z");
    if (first) os << "0";
    os << "=" << format_rational(rhs);
    return os.str();
  }

  double residual(double x, double y, double z) const {
    return x2.get_d() * x * x + y2.get_d() * y * y + z2.get_d() * z * z - rhs.get_d();
  }

  friend bool operator==(const QuadricEquation& a, const QuadricEquation& b) {
    return a.x2 == b.x2 && a.y2 == b.y2 && a.z2 == b.z2 && a.rhs == b.rhs;
  }
};

// The set {x : x^2 = -1}, symbolically where a family is recognized.
struct UnitLocus {
  LocusKind kind = LocusKind::SampledCloud;
  std::vector<Vector<double>> points;
  std::optional<QuadricEquation> equation;  // raw form -x^2 + a(y^2+z^2) = -1
  std::vector<std::size_t> ambient;         // basis indices spanning the locus
};

template <class S>
bool verify_unit(const Algebra<S>& A, std::span<const S> q, double tol) {
  if (!A.unital()) return false;
  Vector<S> sq = A.mul(q, q);
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] += (*A.unit())[k];
  if constexpr (ScalarTraits<S>::exact) {
    return tol >= 0.0 ? norm<S>(sq) <= tol : false;
  } else {
    return norm<S>(sq) <= tol;
  }
}

template <class S>
bool verify_unit(const Algebra<S>& A, const Element<S>& q, double tol) {
  if (!q.parent().same_as(A)) throw DimensionError("element belongs to another algebra");
  return verify_unit<S>(A, q.coords(), tol);
}

struct NewtonOptions {
  std::size_t seeds = 200;
  std::uint64_t seed = 0;
  double tol = kDefaultEps;
  std::size_t max_iterations = 100;
  double seed_scale = 1.0;
};

namespace detail {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

// Newton on F(x) = x^2 + 1 with Jacobian L_x + R_x. On continuous loci the
// Jacobian is rank-deficient at every root, so the step is the minimum-norm
// least-squares solution.
inline std::optional<Vector<double>> newton_unit(const Algebra<double>& A, Vector<double> x,
                                                 const NewtonOptions& opt) {
  const std::size_t n = A.dim();
  const Vector<double>& one = *A.unit();
  auto residual = [&](const Vector<double>& v) {
    Vector<double> f = A.mul(v, v);
    for (std::size_t k = 0; k < n; ++k) f[k] += one[k];
    return f;
  };
  // Past the tolerance, keep polishing while the residual still shrinks:
  // degenerate roots (singular Jacobian) converge only linearly.
  double last = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    Vector<double> f = residual(x);
    double fn = norm<double>(f), xn = norm<double>(x);
    if (!std::isfinite(fn) || xn > 1e8) return std::nullopt;
    if (fn <= 1e-3 * opt.tol * std::max(1.0, xn * xn) && fn >= 0.9 * last) break;
    last = fn;
    Eigen::MatrixXd J = to_eigen(operator_matrix<double>(A, x, Side::Left) + operator_matrix<double>(A, x, Side::Right));
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(J);
    cod.setThreshold(1e-12);
    if (cod.rank() == 0) return std::nullopt;
    Eigen::VectorXd rhs(n);
    for (std::size_t k = 0; k < n; ++k) rhs(k) = -f[k];
    Eigen::VectorXd step = cod.solve(rhs);
    for (std::size_t k = 0; k < n; ++k) x[k] += step(k);
    if (step.norm() <= 1e-16 * (1.0 + xn)) break;
  }
  if (!verify_unit<double>(A, x, opt.tol)) return std::nullopt;
  return x;
}

inline bool near_any(const std::vector<Vector<double>>& pts, const Vector<double>& p, double radius) {
  for (const auto& q : pts) {
    double sq = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) sq += (p[k] - q[k]) * (p[k] - q[k]);
    if (std::sqrt(sq) <= radius) return true;
  }
  return false;
}

}  // namespace detail

// Newton sampling of the imaginary units of an arbitrary unital algebra.
// Converged points are re-verified and deduplicated at distance 10*sqrt(tol):
// at a degenerate root a residual of tol only pins the point to ~sqrt(tol).
inline UnitLocus solve_units_sampled(const Algebra<double>& A, const NewtonOptions& opt = {}) {
  if (!A.unital()) throw ParameterError("imaginary units need a unital algebra");
  UnitLocus out;
  out.kind = LocusKind::SampledCloud;
  for (std::size_t k = 0; k < A.dim(); ++k) out.ambient.push_back(k);
  Rng rng(opt.seed);
  std::normal_distribution<double> normal(0.0, opt.seed_scale);
  for (std::size_t s = 0; s < opt.seeds; ++s) {
    Vector<double> x0(A.dim());
    for (auto& c : x0) c = normal(rng);
    auto root = detail::newton_unit(A, std::move(x0), opt);
    if (root && !detail::near_any(out.points, *root, 10.0 * std::sqrt(opt.tol))) out.points.push_back(std::move(*root));
  }
  return out;
}

template <class S>
UnitLocus solve_units_sampled(const Algebra<S>& A, const NewtonOptions& opt) {
  return solve_units_sampled(A.to_float(A.eps()), opt);
}

// Exact description of the unit set of a T_n algebra.
//   b = c = d = 0: the quadric -x^2 + a(y^2+z^2) = -1 in span{i, j, k};
//   otherwise a finite set: +-i, plus +-q with nonzero real part when
//   c^2 + d^2 > 0 and 1 + 4a/D - 4b^2/D^2 < 0 (D = c^2 + d^2).
inline UnitLocus classify_locus_tn(const FamilyParams& p, std::size_t sample_count = 50, std::uint64_t seed = 0) {
  if (p.family != Family::Tn) throw ParameterError("classify_locus_tn expects T_n parameters");
  const Rational a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d");
  UnitLocus out;
  if (sgn(b) != 0 || sgn(c) != 0 || sgn(d) != 0) {
    out.kind = LocusKind::FiniteSet;
    out.ambient = {0, 1, 2, 3};
    out.points.push_back({0.0, 1.0, 0.0, 0.0});
    out.points.push_back({0.0, -1.0, 0.0, 0.0});
    const Rational D = c * c + d * d;
    if (sgn(D) > 0) {
      const Rational kappa = 1 + 4 * a / D - 4 * b * b / (D * D);
      if (sgn(kappa) < 0) {
        const double r = 1.0 / std::sqrt(-kappa.get_d());
        const double Dd = D.get_d();
        for (double sign : {1.0, -1.0}) {
          const double rr = sign * r;
          out.points.push_back({rr, -2.0 * rr * b.get_d() / Dd, -2.0 * rr * c.get_d() / Dd,
                                -2.0 * rr * d.get_d() / Dd});
        }
      }
    }
    return out;
  }

  out.ambient = {1, 2, 3};
  out.equation = QuadricEquation{Rational(-1), a, a, Rational(-1)};
  out.kind = sgn(a) > 0   ? LocusKind::HyperboloidTwoSheets
             : sgn(a) < 0 ? LocusKind::Sphere
                          : LocusKind::ParallelPlanes;

  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double ad = a.get_d();
  for (std::size_t s = 0; s < sample_count; ++s) {
    const double sheet = (s % 2 == 0) ? 1.0 : -1.0;
    double x = 0, y = 0, z = 0;
    if (out.kind == LocusKind::HyperboloidTwoSheets) {
      y = normal(rng);
      z = normal(rng);
      x = sheet * std::sqrt(1.0 + ad * (y * y + z * z));
    } else if (out.kind == LocusKind::ParallelPlanes) {
      x = sheet;
      y = normal(rng);
      z = normal(rng);
    } else {
      double u0 = normal(rng), u1 = normal(rng), u2 = normal(rng);
      double len = std::sqrt(u0 * u0 + u1 * u1 + u2 * u2);
      if (len == 0.0) {
        u0 = 1.0;
        len = 1.0;
      }
      const double scale = 1.0 / std::sqrt(-ad);
      x = u0 / len;
      y = u1 / len * scale;
      z = u2 / len * scale;
    }
    out.points.push_back({0.0, x, y, z});
  }
  return out;
}

namespace detail {

struct Interval {
  double lo, hi;
  friend Interval operator+(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator*(Interval a, Interval b) {
    double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  friend Interval operator*(double c, Interval a) {
    return c >= 0 ? Interval{c * a.lo, c * a.hi} : Interval{c * a.hi, c * a.lo};
  }
  Interval square() const {
    if (lo >= 0) return {lo * lo, hi * hi};
    if (hi <= 0) return {hi * hi, lo * lo};
    return {0.0, std::max(lo * lo, hi * hi)};
  }
};

}  // namespace detail

// Every point of the grid {lo + step*t}^n with |(x^2 + 1)_m| <= tol for all m.
// Equivalent to testing each grid point; boxes whose interval enclosure of
// some component of x^2 + 1 excludes [-tol, tol] are pruned whole.
inline std::vector<Vector<double>> grid_search_units(const Algebra<double>& A, double lo, double hi, double step,
                                                     double tol) {
  if (!A.unital()) throw ParameterError("imaginary units need a unital algebra");
  if (!(step > 0.0) || hi < lo) throw ParameterError("invalid grid");
  const std::size_t n = A.dim();
  const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  const Vector<double>& one = *A.unit();

  // Quadratic form of each component: diagonal and symmetrized off-diagonal parts.
  std::vector<std::vector<double>> diag(n, std::vector<double>(n)), off(n, std::vector<double>(n * n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      diag[m][i] = A.sc(i, i, m);
      for (std::size_t j = i + 1; j < n; ++j) off[m][i * n + j] = A.sc(i, j, m) + A.sc(j, i, m);
    }

  struct Box {
    std::vector<long> lo, hi;
  };
  std::vector<Box> stack = {{std::vector<long>(n, 0), std::vector<long>(n, count - 1)}};
  std::vector<Vector<double>> found;
  std::vector<detail::Interval> X(n);
  while (!stack.empty()) {
    Box box = std::move(stack.back());
    stack.pop_back();
    for (std::size_t d = 0; d < n; ++d) X[d] = {lo + step * box.lo[d], lo + step * box.hi[d]};
    bool excluded = false;
    for (std::size_t m = 0; m < n && !excluded; ++m) {
      detail::Interval acc{one[m], one[m]};
      for (std::size_t i = 0; i < n; ++i) {
        if (diag[m][i] != 0.0) acc = acc + diag[m][i] * X[i].square();
        for (std::size_t j = i + 1; j < n; ++j)
          if (off[m][i * n + j] != 0.0) acc = acc + off[m][i * n + j] * (X[i] * X[j]);
      }
      excluded = acc.lo > tol || acc.hi < -tol;
    }
    if (excluded) continue;
    std::size_t widest = 0;
    long width = -1;
    for (std::size_t d = 0; d < n; ++d)
      if (box.hi[d] - box.lo[d] > width) {
        width = box.hi[d] - box.lo[d];
        widest = d;
      }
    if (width == 0) {
      Vector<double> x(n);
      for (std::size_t d = 0; d < n; ++d) x[d] = lo + step * box.lo[d];
      Vector<double> f = A.mul(x, x);
      bool ok = true;
      for (std::size_t m = 0; m < n; ++m) ok = ok && std::fabs(f[m] + one[m]) <= tol;
      if (ok) found.push_back(std::move(x));
      continue;
    }
    long mid = box.lo[widest] + width / 2;
    Box upper = box;
    upper.lo[widest] = mid + 1;
    box.hi[widest] = mid;
    stack.push_back(std::move(upper));
    stack.push_back(std::move(box));
  }
  return found;
}

}  // namespace altkit

#endif  // ALTKIT_UNITS_HPP
