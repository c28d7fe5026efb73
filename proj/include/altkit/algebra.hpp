#ifndef ALTKIT_ALGEBRA_HPP
#define ALTKIT_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altkit/error.hpp"
#include "altkit/matrix.hpp"
#include "altkit/scalar.hpp"

namespace altkit {

template <class S>
class Element;

namespace detail {

template <class S>
struct AlgebraData {
  std::size_t dim = 0;
  std::vector<S> sc;  // sc[(i * dim + j) * dim + k]: e_i e_j = sum_k sc e_k
  std::vector<std::string> labels;
  std::optional<Vector<S>> unit;
  double eps = kDefaultEps;
  // Nonzero (k, c) pairs for each (i, j), used by the product kernel.
  std::vector<std::vector<std::pair<std::size_t, S>>> terms;
};

}  // namespace detail

// A finite-dimensional real algebra given by structure constants
// e_i e_j = sum_k c[i][j][k] e_k. Immutable once built; copies share storage
// and therefore share the parent tag carried by elements.
template <class S>
class Algebra {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;

  Algebra(std::size_t dim, std::vector<S> sc, std::vector<std::string> labels = {},
          std::optional<Vector<S>> unit = std::nullopt, double eps = kDefaultEps) {
    if (dim == 0) throw DimensionError("algebra dimension must be positive");
    if (sc.size() != dim * dim * dim)
      throw DimensionError("structure constants must have shape dim x dim x dim");
    if (labels.empty())
      for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    if (labels.size() != dim) throw DimensionError("label count differs from dimension");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != dim)
      throw ParameterError("basis labels must be unique");
    if (unit && unit->size() != dim) throw DimensionError("unit has wrong length");
    if (!(eps > 0.0)) throw ParameterError("tolerance must be positive");

    auto data = std::make_shared<detail::AlgebraData<S>>();
    data->dim = dim;
    data->sc = std::move(sc);
    data->labels = std::move(labels);
    data->unit = std::move(unit);
    data->eps = eps;
    data->terms.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
          const S& c = data->sc[(i * dim + j) * dim + k];
          if (!Traits::is_zero(c, 0.0)) data->terms[i * dim + j].emplace_back(k, c);
        }
    data_ = std::move(data);

    if (data_->unit) {
      const auto& u = *data_->unit;
      for (std::size_t j = 0; j < dim; ++j) {
        Vector<S> ej = unit_vector(j);
        Vector<S> left = mul(u, ej), right = mul(ej, u);
        if (!close(left, ej) || !close(right, ej))
          throw ParameterError("declared unit does not act as identity on " + data_->labels[j]);
      }
    }
  }

  std::size_t dim() const { return data_->dim; }
  double eps() const { return data_->eps; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::optional<Vector<S>>& unit() const { return data_->unit; }
  bool unital() const { return data_->unit.has_value(); }
  const std::vector<S>& structure_constants() const { return data_->sc; }

  const S& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->sc[(i * dim() + j) * dim() + k];
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (data_->labels[i] == label) return i;
    return std::nullopt;
  }

  Vector<S> unit_vector(std::size_t i) const {
    Vector<S> v(dim(), Traits::zero());
    v.at(i) = Traits::one();
    return v;
  }

  // Bilinear product on raw coordinates.
  Vector<S> mul(std::span<const S> a, std::span<const S> b) const {
    const std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw DimensionError("coordinate length mismatch");
    Vector<S> out(n, Traits::zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (Traits::is_zero(a[i], 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (Traits::is_zero(b[j], 0.0)) continue;
        const auto& ts = data_->terms[i * n + j];
        if (ts.empty()) continue;
        S ab = a[i] * b[j];
        for (const auto& [k, c] : ts) out[k] += ab * c;
      }
    }
    return out;
  }

  Element<S> element(Vector<S> coords) const;
  Element<S> basis(std::size_t i) const;
  Element<S> basis(const std::string& label) const;
  Element<S> zero() const;
  Element<S> one() const;

  bool close(std::span<const S> a, std::span<const S> b) const {
    if (a.size() != b.size()) return false;
    Vector<S> d(a.begin(), a.end());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return is_zero_vector<S>(d, eps());
  }

  bool same_as(const Algebra& other) const { return data_ == other.data_; }

  // Same structure in another scalar mode (a new parent).
  template <class T>
  Algebra<T> convert(double eps) const {
    std::vector<T> sc;
    sc.reserve(data_->sc.size());
    for (const auto& c : data_->sc) sc.push_back(scalar_cast<T>(c));
    std::optional<Vector<T>> unit;
    if (data_->unit) {
      unit.emplace();
      for (const auto& c : *data_->unit) unit->push_back(scalar_cast<T>(c));
    }
    return Algebra<T>(dim(), std::move(sc), labels(), std::move(unit), eps);
  }

  Algebra<double> to_float(double eps = kDefaultEps) const { return convert<double>(eps); }

  // The same algebra written in the basis given by the columns of p.
  Algebra change_basis(const Matrix<S>& p, std::vector<std::string> new_labels = {}) const {
    const std::size_t n = dim();
    if (p.rows() != n || p.cols() != n) throw DimensionError("change of basis must be n x n");
    auto pinv = inverse(p, eps());
    if (!pinv) throw DimensionError("change of basis is singular");
    std::vector<Vector<S>> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(p.column(c));
    std::vector<S> sc(n * n * n, Traits::zero());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vector<S> prod = pinv->apply(mul(cols[a], cols[b]));
        for (std::size_t k = 0; k < n; ++k) sc[(a * n + b) * n + k] = prod[k];
      }
    std::optional<Vector<S>> unit;
    if (data_->unit) unit = pinv->apply(*data_->unit);
    if (new_labels.empty()) new_labels = labels();
    return Algebra(n, std::move(sc), std::move(new_labels), std::move(unit), eps());
  }

  const detail::AlgebraData<S>* tag() const { return data_.get(); }

 private:
  friend class Element<S>;
  std::shared_ptr<const detail::AlgebraData<S>> data_;
};

// A coordinate vector tied to its parent algebra.
template <class S>
class Element {
 public:
  using Traits = ScalarTraits<S>;

  const Vector<S>& coords() const { return coords_; }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dim() const { return coords_.size(); }
  const Algebra<S>& parent() const { return parent_; }

  bool is_zero() const { return is_zero_vector<S>(coords_, parent_.eps()); }
  double norm() const { return altkit::norm<S>(coords_); }

  void require_same_parent(const Element& other) const {
    if (!parent_.same_as(other.parent_))
      throw DimensionError("elements belong to different algebras");
  }

  friend Element operator+(const Element& a, const Element& b) {
    a.require_same_parent(b);
    Vector<S> c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return Element(a.parent_, std::move(c));
  }

  friend Element operator-(const Element& a, const Element& b) {
    a.require_same_parent(b);
    Vector<S> c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return Element(a.parent_, std::move(c));
  }

  friend Element operator-(const Element& a) {
    Vector<S> c = a.coords_;
    for (auto& x : c) x = -x;
    return Element(a.parent_, std::move(c));
  }

  friend Element operator*(const S& s, const Element& a) {
    Vector<S> c = a.coords_;
    for (auto& x : c) x *= s;
    return Element(a.parent_, std::move(c));
  }

  // Algebra product.
  friend Element operator*(const Element& a, const Element& b) {
    a.require_same_parent(b);
    return Element(a.parent_, a.parent_.mul(a.coords_, b.coords_));
  }

  // Equality up to the parent's tolerance (exact in rational mode).
  friend bool operator==(const Element& a, const Element& b) {
    return a.parent_.same_as(b.parent_) && a.parent_.close(a.coords_, b.coords_);
  }

 private:
  friend class Algebra<S>;
  Element(Algebra<S> parent, Vector<S> coords) : parent_(std::move(parent)), coords_(std::move(coords)) {}

  Algebra<S> parent_;
  Vector<S> coords_;
};

template <class S>
Element<S> Algebra<S>::element(Vector<S> coords) const {
  if (coords.size() != dim()) throw DimensionError("element length differs from algebra dimension");
  return Element<S>(*this, std::move(coords));
}

template <class S>
Element<S> Algebra<S>::basis(std::size_t i) const {
  if (i >= dim()) throw DimensionError("basis index out of range");
  return Element<S>(*this, unit_vector(i));
}

template <class S>
Element<S> Algebra<S>::basis(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) throw DimensionError("no basis element labelled '" + label + "'");
  return basis(*idx);
}

template <class S>
Element<S> Algebra<S>::zero() const {
  return Element<S>(*this, Vector<S>(dim(), Traits::zero()));
}

template <class S>
Element<S> Algebra<S>::one() const {
  if (!unital()) throw ParameterError("algebra has no unit");
  return Element<S>(*this, *data_->unit);
}

template <class S>
Element<S> multiply(const Element<S>& a, const Element<S>& b) {
  return a * b;
}

// (xy)z - x(yz)
template <class S>
Element<S> associator(const Element<S>& x, const Element<S>& y, const Element<S>& z) {
  return (x * y) * z - x * (y * z);
}

// xy - yx
template <class S>
Element<S> commutator(const Element<S>& x, const Element<S>& y) {
  return x * y - y * x;
}

enum class Side { Left, Right };

template <class S>
struct MulOperator {
  Side side;
  Matrix<S> matrix;

  S determinant(double eps = kDefaultEps) const { return altkit::determinant(matrix, eps); }
  bool invertible(double eps = kDefaultEps) const {
    if constexpr (ScalarTraits<S>::exact) {
      return sgn(determinant(eps)) != 0;
    } else {
      return rank(matrix, eps) == matrix.rows();
    }
  }
};

// L_a (column j = a e_j) or R_a (column j = e_j a).
template <class S>
Matrix<S> operator_matrix(const Algebra<S>& alg, std::span<const S> a, Side side) {
  const std::size_t n = alg.dim();
  Matrix<S> m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector<S> ej = alg.unit_vector(j);
    Vector<S> col = side == Side::Left ? alg.mul(a, ej) : alg.mul(ej, a);
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

template <class S>
MulOperator<S> mul_operator(const Element<S>& a, Side side) {
  return {side, operator_matrix<S>(a.parent(), a.coords(), side)};
}

}  // namespace altkit

#endif  // ALTKIT_ALGEBRA_HPP
