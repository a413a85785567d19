#pragma once

#include <random>

#include "g2cubics/octonion.hpp"
#include "g2cubics/scalar.hpp"

namespace g2cubics {

/// Random norm-3 complex vector: uniform box coefficients, rejecting
/// near-isotropic draws (|n(v)| < 0.1) before scaling by a square root of
/// 3/n(v) to keep the scaling well conditioned.
inline Vector7<Cplx> random_norm3(std::mt19937& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (;;) {
    Vector7<Cplx> v;
    for (int i = 0; i < 7; ++i) v.c[i] = Cplx(box(rng), box(rng));
    const Cplx n = oct_norm(v);
    if (std::abs(n) < 0.1) continue;
    const Cplx scale = std::sqrt(Cplx(3.0) / n);
    return scale * v;
  }
}

/// Small random rational with denominator in 1..max_den.
inline Rat random_rational(std::mt19937& rng, int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng), den(rng));
}

/// Nonzero variant, for torus coordinates and similar.
inline Rat random_nonzero_rational(std::mt19937& rng, int max_num = 9, int max_den = 5) {
  for (;;) {
    Rat r = random_rational(rng, max_num, max_den);
    if (r != 0) return r;
  }
}

inline Cplx random_cplx(std::mt19937& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> box(-radius, radius);
  return Cplx(box(rng), box(rng));
}

}  // namespace g2cubics
