#pragma once

// Shared helpers for the unit and acceptance suites.

#include <Eigen/Dense>
#include <array>
#include <random>
#include <vector>

#include "g2cubics/fricke.hpp"
#include "g2cubics/octonion.hpp"
#include "g2cubics/sampling.hpp"
#include "g2cubics/sl2d4.hpp"

namespace g2cubics::testing {

inline PInvariants<Rat> random_p(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng),
          random_rational(rng)};
}

inline SurfacePoint<Rat> random_xyz(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

/// Random exact SL2(Z) matrix: product of elementary shears, so det = 1 by
/// construction.
inline SL2Matrix<Rat> random_sl2(std::mt19937& rng, int factors = 4) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> which(0, 1);
  SL2Matrix<Rat> m = SL2Matrix<Rat>::identity();
  for (int i = 0; i < factors; ++i) {
    const Rat r(small(rng));
    SL2Matrix<Rat> e = which(rng) ? SL2Matrix<Rat>{{Rat(1), r, Rat(0), Rat(1)}}
                                  : SL2Matrix<Rat>{{Rat(1), Rat(0), r, Rat(1)}};
    m = m * e;
  }
  return m;
}

inline Eigen::Matrix<Cplx, 7, 7> to_eigen(const Matrix7<Cplx>& m) {
  Eigen::Matrix<Cplx, 7, 7> e;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) e(i, j) = m(i, j);
  return e;
}

/// Monic characteristic polynomial coefficients (low degree first, length 8
/// including the leading 1) built from the eigenvalues.
inline std::array<Cplx, 8> charpoly(const Matrix7<Cplx>& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix<Cplx, 7, 7>> es(to_eigen(m), false);
  std::array<Cplx, 8> c{};
  c[0] = 1.0;  // running product of (x - lambda), low degree first
  int deg = 0;
  for (int k = 0; k < 7; ++k) {
    const Cplx lam = es.eigenvalues()(k);
    ++deg;
    for (int i = deg; i >= 1; --i) c[i] = c[i - 1] - lam * c[i];
    c[0] = -lam * c[0];
  }
  return c;
}

/// Remainder coefficients of poly (low first, monic) divided by divisor
/// (low first, monic).
inline std::vector<Cplx> poly_remainder(std::vector<Cplx> poly,
                                        const std::vector<Cplx>& divisor) {
  const std::size_t dn = divisor.size() - 1;
  while (poly.size() > dn) {
    const Cplx lead = poly.back();
    const std::size_t off = poly.size() - 1 - dn;
    for (std::size_t i = 0; i <= dn; ++i) poly[off + i] -= lead * divisor[i];
    poly.pop_back();
  }
  return poly;
}

/// Best residual of the Fricke gradient system over a Gauss-Newton
/// multistart: small iff the surface with parameters (b, c) is singular.
inline double singular_search(const Cplx& b, const Cplx& c, std::mt19937& rng,
                              int starts = 40, int iters = 60) {
  auto F = [&](const Eigen::Vector3cd& v) {
    const Cplx x = v(0), y = v(1), z = v(2);
    Eigen::Vector4cd f;
    f << x * y + 2.0 * z + b, y * z + 2.0 * x + b, x * z + 2.0 * y + b,
        x * y * z + x * x + y * y + z * z + b * (x + y + z) + c;
    return f;
  };
  auto J = [&](const Eigen::Vector3cd& v) {
    const Cplx x = v(0), y = v(1), z = v(2);
    Eigen::Matrix<Cplx, 4, 3> j;
    j << y, x, Cplx(2.0), Cplx(2.0), z, y, z, Cplx(2.0), x,
        y * z + 2.0 * x + b, x * z + 2.0 * y + b, x * y + 2.0 * z + b;
    return j;
  };
  double best = 1e300;
  for (int s = 0; s < starts; ++s) {
    Eigen::Vector3cd v(random_cplx(rng, 3.0), random_cplx(rng, 3.0),
                       random_cplx(rng, 3.0));
    for (int it = 0; it < iters; ++it) {
      const Eigen::Vector4cd f = F(v);
      const Eigen::Vector3cd step =
          J(v).completeOrthogonalDecomposition().solve(f);
      v -= step;
      if (step.norm() < 1e-14) break;
    }
    best = std::min(best, F(v).norm());
  }
  return best;
}

}  // namespace g2cubics::testing
