#ifndef ALTKIT_RANDOM_HPP
#define ALTKIT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "altkit/matrix.hpp"
#include "altkit/scalar.hpp"

namespace altkit {

using Rng = std::mt19937_64;

// Small random rationals p/q with |p| <= 12, 1 <= q <= 6; never degenerate
// enough to matter for the sampled checks, cheap enough for exact arithmetic.
inline Rational random_rational(Rng& rng, int max_num = 12, int max_den = 6) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive_rational(Rng& rng, int max_num = 12, int max_den = 6) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

template <class S>
S random_scalar(Rng& rng) {
  if constexpr (ScalarTraits<S>::exact) {
    return random_rational(rng);
  } else {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(rng);
  }
}

template <class S>
Vector<S> random_vector(Rng& rng, std::size_t n) {
  Vector<S> v(n);
  for (auto& x : v) x = random_scalar<S>(rng);
  return v;
}

}  // namespace altkit

#endif  // ALTKIT_RANDOM_HPP
