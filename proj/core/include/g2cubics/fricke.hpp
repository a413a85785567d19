#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "g2cubics/g2class.hpp"
#include "g2cubics/octonion.hpp"

namespace g2cubics {

/// Coordinates (p1,p2,p3,p4) on M = C^3/G2.
template <class S>
struct PInvariants {
  S p1, p2, p3, p4;

  S s1() const { return p1 + p2 + p3; }
  S s2() const { return p1 * p2 + p2 * p3 + p3 * p1; }
  S s3() const { return p1 * p2 * p3; }
};

template <class S>
struct SurfacePoint {
  S x, y, z;
};

template <class S>
struct SurfaceParams {
  S b, c;
};

template <class S>
struct AsymParams {
  S b1, b2, b3, c;
};

/// p1 = <v2,v3>, p2 = <v1,v3>, p3 = <v1,v2>, p4 = <v1, v2 v3>.
template <class S>
PInvariants<S> p_invariants(const Vector7<S>& v1, const Vector7<S>& v2,
                            const Vector7<S>& v3, double tol = 1e-9) {
  require_norm_three(v1, tol);
  require_norm_three(v2, tol);
  require_norm_three(v3, tol);
  const Octonion<S> v2v3 = oct_mul(v2, v3);
  return {oct_form(v2, v3), oct_form(v1, v3), oct_form(v1, v2),
          oct_form(v1.embed(), v2v3)};
}

/// The invariants (alpha, beta) of the product g1 g2 g3 as polynomials in
/// (p4, s1, s2, s3).
template <class S>
AlphaBeta<S> alpha_beta_from_p(const PInvariants<S>& p) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S p4 = p.p4, s1 = p.s1(), s2 = p.s2(), s3 = p.s3();
  const S alpha8 = p4 * s1 - s1 * s1 + k(3) * p4 + k(3) * s1 + k(3) * s2 + s3 - k(6);
  const S beta64 = -p4 * p4 * p4 + k(3) * p4 * p4 * s1 - k(3) * p4 * s1 * s1 -
                   k(7) * s1 * s1 * s1 + k(9) * p4 * p4 - k(12) * p4 * s1 +
                   k(18) * p4 * s2 + k(6) * p4 * s3 + k(39) * s1 * s1 +
                   k(18) * s1 * s2 + k(6) * s1 * s3 - k(9) * p4 - k(9) * s1 -
                   k(90) * s2 - k(30) * s3 - k(183);
  return {alpha8 / k(8), beta64 / k(64)};
}

/// The affine change of coordinates from (p1,p2,p3,p4) to (x,y,z,b):
/// p_i = 1 - 2{x,y,z} and p1+p2+p3+p4 = 4b+5.
template <class S>
std::pair<SurfacePoint<S>, S> phi(const PInvariants<S>& p) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S half = k(1) / k(2);
  SurfacePoint<S> pt{half * (k(1) - p.p1), half * (k(1) - p.p2), half * (k(1) - p.p3)};
  const S b = (p.p1 + p.p2 + p.p3 + p.p4 - k(5)) / k(4);
  return {pt, b};
}

template <class S>
PInvariants<S> phi_inv(const SurfacePoint<S>& pt, const S& b) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  PInvariants<S> p;
  p.p1 = k(1) - k(2) * pt.x;
  p.p2 = k(1) - k(2) * pt.y;
  p.p3 = k(1) - k(2) * pt.z;
  p.p4 = k(4) * b + k(5) - p.p1 - p.p2 - p.p3;
  return p;
}

/// Solves the symmetric Fricke equation for c at a given point.
template <class S>
S c_from_surface(const SurfacePoint<S>& pt, const S& b) {
  return -(pt.x * pt.y * pt.z + pt.x * pt.x + pt.y * pt.y + pt.z * pt.z +
           b * (pt.x + pt.y + pt.z));
}

template <class S>
S fricke_residual(const SurfacePoint<S>& pt, const AsymParams<S>& prm) {
  return pt.x * pt.y * pt.z + pt.x * pt.x + pt.y * pt.y + pt.z * pt.z +
         prm.b1 * pt.x + prm.b2 * pt.y + prm.b3 * pt.z + prm.c;
}

template <class S>
S fricke_residual(const SurfacePoint<S>& pt, const SurfaceParams<S>& prm) {
  return fricke_residual(pt, AsymParams<S>{prm.b, prm.b, prm.b, prm.c});
}

/// alpha = c + 2 + 3b, beta = -b^3 + 3b^2 + 3bc + 3b - 2.
template <class S>
AlphaBeta<S> pr(const SurfaceParams<S>& prm) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S b = prm.b, c = prm.c;
  return {c + k(2) + k(3) * b,
          -b * b * b + k(3) * b * b + k(3) * b * c + k(3) * b - k(2)};
}

/// Discriminant loci in the (alpha, beta) plane:
/// d1 = 4a^3 - 12ab - b^2 - 36a - 24b - 36 (fibres of pr degenerate),
/// d2 = a^2 - 4b - 12 (second component of the Weyl discriminant).
template <class S>
std::pair<S, S> locus_values_ab(const AlphaBeta<S>& ab) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S a = ab.alpha, b = ab.beta;
  const S d1 = k(4) * a * a * a - k(12) * a * b - b * b - k(36) * a - k(24) * b - k(36);
  const S d2 = a * a - k(4) * b - k(12);
  return {d1, d2};
}

template <class S>
struct LocusValuesBC {
  S sing1, sing2, dbl;
};

/// Singular-surface loci in the (b,c) plane plus the extra component of
/// pr^-1(d1): sing1 = b^2-8b-4c-16, sing2 = 4b^3-3b^2-6bc+c^2+4c,
/// dbl = b^2+b-c-1.
template <class S>
LocusValuesBC<S> locus_values_bc(const SurfaceParams<S>& prm) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S b = prm.b, c = prm.c;
  return {b * b - k(8) * b - k(4) * c - k(16),
          k(4) * b * b * b - k(3) * b * b - k(6) * b * c + c * c + k(4) * c,
          b * b + b - c - k(1)};
}

/// Parameters with all four local monodromies conjugate in the SL2 picture:
/// b = -2m^2, c = m^4 - 4 + 4m^2; always on sing1 = 0.
template <class S>
SurfaceParams<S> very_symmetric(const S& m) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  return {-k(2) * m * m, m * m * m * m - k(4) + k(4) * m * m};
}

/// Degree-four covering of the very-symmetric family by the once-punctured
/// torus family: with c = b^2/4 - 2b - 4, d = -4 - b/2 and x = 2 - X^2 etc.,
/// f(x,y,z) = g(X,Y,Z) g(-X,Y,Z) identically.
template <class S>
std::pair<S, S> covering_check(const S& b, const S& X, const S& Y, const S& Z) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S c = b * b / k(4) - k(2) * b - k(4);
  const S d = -k(4) - b / k(2);
  const S x = k(2) - X * X, y = k(2) - Y * Y, z = k(2) - Z * Z;
  const S lhs = fricke_residual(SurfacePoint<S>{x, y, z}, SurfaceParams<S>{b, c});
  auto g = [&](const S& u, const S& v, const S& w) {
    return u * v * w + u * u + v * v + w * w + d;
  };
  return {lhs, g(X, Y, Z) * g(-X, Y, Z)};
}

template <class S>
struct FiberPoint {
  S b, c;
  int multiplicity;
};

/// Numeric fibre of pr over (alpha, beta): roots of
/// b^3 + 6b^2 - 3(alpha-1)b + beta + 2 = 0, with c = alpha - 2 - 3b.
/// Roots closer than merge_tol are reported once with multiplicity.
inline std::vector<FiberPoint<Cplx>> pr_fiber(const AlphaBeta<Cplx>& ab,
                                              double merge_tol = 1e-8) {
  const Cplx a1 = -3.0 * (ab.alpha - 1.0);  // coefficient of b
  const Cplx a0 = ab.beta + 2.0;
  Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
  comp(1, 0) = 1.0;
  comp(2, 1) = 1.0;
  comp(0, 2) = -a0;
  comp(1, 2) = -a1;
  comp(2, 2) = -6.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp, false);
  std::vector<Cplx> roots{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
  std::vector<FiberPoint<Cplx>> out;
  for (const Cplx& r : roots) {
    bool merged = false;
    for (auto& fp : out) {
      if (std::abs(fp.b - r) < merge_tol) {
        ++fp.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({r, ab.alpha - 2.0 - 3.0 * r, 1});
  }
  return out;
}

/// Exact fibre of pr.  Rational roots are extracted via the rational root
/// theorem; a leftover quadratic with perfect-square discriminant is split,
/// otherwise its monic coefficients are reported in `unresolved`.
struct RatFiber {
  std::vector<FiberPoint<Rat>> points;
  std::vector<Rat> unresolved;  // monic coefficients, low degree first
};

RatFiber pr_fiber_exact(const AlphaBeta<Rat>& ab);

/// Discriminant of the monic cubic x^3 + px^2 + qx + r.
template <class S>
S cubic_discriminant(const S& p, const S& q, const S& r) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  return k(18) * p * q * r - k(4) * p * p * p * r + p * p * q * q -
         k(4) * q * q * q - k(27) * r * r;
}

/// Numeric section of the quotient map: produces a norm-3 triple with the
/// requested invariants.  Deterministic closed-form construction; throws
/// RealizationFailed with the residual if the invariants are inconsistent
/// (e.g. p3 = +-3 with p4 != 0).
std::tuple<Vector7<Cplx>, Vector7<Cplx>, Vector7<Cplx>> realize_triple(
    const PInvariants<Cplx>& p, double tol = 1e-8);

}  // namespace g2cubics
