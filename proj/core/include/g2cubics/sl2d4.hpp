#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "g2cubics/fricke.hpp"
#include "g2cubics/scalar.hpp"

namespace g2cubics {

template <class S>
struct SL2Matrix {
  std::array<S, 4> a{};  // row major

  S det() const { return a[0] * a[3] - a[1] * a[2]; }
  S trace() const { return a[0] + a[3]; }

  static SL2Matrix identity() {
    auto k = [](long n) { return scalar_traits<S>::from_int(n); };
    return {{k(1), k(0), k(0), k(1)}};
  }

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
             x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
  }
};

template <class S>
struct TraceSeven {
  S x, y, z, m1, m2, m3, m4;
};

/// The seven generating trace functions of SL2(C)^3 // SL2(C).
template <class S>
TraceSeven<S> seven_functions(const SL2Matrix<S>& M1, const SL2Matrix<S>& M2,
                              const SL2Matrix<S>& M3, double tol = 1e-9) {
  const S one = scalar_traits<S>::from_int(1);
  for (const auto* M : {&M1, &M2, &M3})
    if (!scalar_traits<S>::close(M->det(), one, tol)) throw NotUnimodular();
  return {(M2 * M3).trace(), (M1 * M3).trace(), (M1 * M2).trace(),
          M1.trace(),        M2.trace(),        M3.trace(),
          (M1 * M2 * M3).trace()};
}

/// Fricke parameters of the relation satisfied by the seven trace functions.
template <class S>
AsymParams<S> fricke_params(const S& m1, const S& m2, const S& m3, const S& m4) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  return {-(m1 * m4 + m2 * m3), -(m2 * m4 + m1 * m3), -(m3 * m4 + m1 * m2),
          m1 * m2 * m3 * m4 - k(4) + m1 * m1 + m2 * m2 + m3 * m3 + m4 * m4};
}

template <class S>
AsymParams<S> fricke_params(const TraceSeven<S>& t) {
  return fricke_params(t.m1, t.m2, t.m3, t.m4);
}

using ThetaParams = std::array<Cplx, 4>;

/// Eigenvalues exp(+- pi i theta_i) give m_i = 2 cos(pi theta_i).
inline std::array<Cplx, 4> theta_to_m(const ThetaParams& th) {
  std::array<Cplx, 4> m;
  for (int i = 0; i < 4; ++i) m[i] = 2.0 * std::cos(std::numbers::pi * th[i]);
  return m;
}

inline AsymParams<Cplx> fricke_of_theta(const ThetaParams& th) {
  const auto m = theta_to_m(th);
  return fricke_params(m[0], m[1], m[2], m[3]);
}

/// Triality: cycles theta1, theta2, theta3 and fixes theta4.
inline ThetaParams triality(const ThetaParams& th) {
  return {th[2], th[0], th[1], th[3]};
}

using Root = std::array<Rat, 4>;

struct RootSystem {
  std::vector<Root> roots;              // the 24 norm-one D4^- vectors
  std::array<Root, 4> simple_roots{};   // alpha1..alpha4
};

/// D4^- = {+-eps_i} united with {(+-e1 +-e2 +-e3 +-e4)/2}.
inline RootSystem d4_roots() {
  RootSystem rs;
  for (int i = 0; i < 4; ++i) {
    for (int s : {1, -1}) {
      Root r{0, 0, 0, 0};
      r[i] = s;
      rs.roots.push_back(r);
    }
  }
  const Rat half(1, 2);
  for (int mask = 0; mask < 16; ++mask) {
    Root r;
    for (int i = 0; i < 4; ++i) r[i] = (mask >> i & 1) ? -half : half;
    rs.roots.push_back(r);
  }
  rs.simple_roots[0] = {1, 0, 0, 0};
  rs.simple_roots[1] = {0, 1, 0, 0};
  rs.simple_roots[2] = {0, 0, 1, 0};
  rs.simple_roots[3] = {-half, -half, -half, half};
  return rs;
}

inline Rat root_norm(const Root& r) {
  Rat n = 0;
  for (const Rat& c : r) n += c * c;
  return n;
}

/// Reflection in a norm-1 root: theta - 2 (theta . rho) rho.
inline ThetaParams reflect(const ThetaParams& th, const Root& rho) {
  if (root_norm(rho) != 1) throw NotARoot();
  Cplx dot = 0;
  for (int i = 0; i < 4; ++i) dot += th[i] * to_cplx(rho[i]);
  ThetaParams out = th;
  for (int i = 0; i < 4; ++i) out[i] -= 2.0 * dot * to_cplx(rho[i]);
  return out;
}

inline ThetaParams translate(const ThetaParams& th, const Root& rho) {
  ThetaParams out = th;
  for (int i = 0; i < 4; ++i) out[i] += 2.0 * to_cplx(rho[i]);
  return out;
}

struct AffineWeylReport {
  double max_reflection_residual = 0;
  double max_translation_residual = 0;
};

/// Invariance of the parameter map theta -> (b1,b2,b3,c) under the D4^-
/// affine Weyl group: reflections in all 24 roots and translations by twice
/// each root.
inline AffineWeylReport affine_weyl_check(const ThetaParams& th) {
  const AsymParams<Cplx> base = fricke_of_theta(th);
  auto residual = [&base](const ThetaParams& other) {
    const AsymParams<Cplx> p = fricke_of_theta(other);
    return std::max({std::abs(p.b1 - base.b1), std::abs(p.b2 - base.b2),
                     std::abs(p.b3 - base.b3), std::abs(p.c - base.c)});
  };
  AffineWeylReport rep;
  for (const Root& rho : d4_roots().roots) {
    rep.max_reflection_residual =
        std::max(rep.max_reflection_residual, residual(reflect(th, rho)));
    rep.max_translation_residual =
        std::max(rep.max_translation_residual, residual(translate(th, rho)));
  }
  return rep;
}

}  // namespace g2cubics
