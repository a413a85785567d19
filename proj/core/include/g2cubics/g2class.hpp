#pragma once

#include <utility>
#include <vector>

#include "g2cubics/matrix.hpp"
#include "g2cubics/octonion.hpp"

namespace g2cubics {

template <class S>
struct AlphaBeta {
  S alpha, beta;
};

/// Matrix of q -> a(v) q a(v)^-1 restricted to V, for norm-3 v.  The result
/// is an order-3 algebra automorphism fixing v, i.e. an element of the six
/// dimensional semisimple conjugacy class of G2(C).
template <class S>
Matrix7<S> conj_map(const Vector7<S>& v, double tol = 1e-9) {
  require_norm_three(v, tol);
  const S half = scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
  const Octonion<S> a = half * (Octonion<S>::one() + v.embed());
  const Octonion<S> ainv = oct_conj(a);  // a * conj(a) = 1 when n(v) = 3
  Matrix7<S> m;
  for (int j = 1; j <= 7; ++j) {
    // Bracketing is irrelevant: the subalgebra generated by {a, e_j} is
    // associative, and a, a^-1 generate the same subalgebra.
    const Octonion<S> img = oct_mul(oct_mul(a, Octonion<S>::unit(j)), ainv);
    for (int i = 0; i < 7; ++i) m(i, j - 1) = img.c[i + 1];
  }
  return m;
}

/// True iff the linear map on V, extended to fix 1, is an algebra
/// automorphism: m(ei) m(ej) must equal Tr(ei ej) + m(Im(ei ej)) for all i,j.
template <class S>
bool is_automorphism(const Matrix7<S>& m, double tol = 1e-9) {
  std::array<Vector7<S>, 8> img;  // img[k] = m(e_k), 1-based
  for (int k = 1; k <= 7; ++k) img[k] = m * Vector7<S>::unit(k);
  const UnitTable& t = unit_table();
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const Octonion<S> lhs = oct_mul(img[i], img[j]);
      Octonion<S> rhs;
      const int k = t[i - 1][j - 1];
      if (k == 0) {
        rhs.c[0] = scalar_traits<S>::from_int(-1);
      } else {
        const int sign = k > 0 ? 1 : -1;
        rhs = (scalar_traits<S>::from_int(sign) * img[std::abs(k)]).embed();
      }
      for (int n = 0; n < 8; ++n)
        if (!scalar_traits<S>::close(lhs.c[n], rhs.c[n], tol)) return false;
    }
  }
  return true;
}

/// The two basic conjugation invariants of g in G2, from Tr(g) and Tr(g^2):
/// alpha = Tr(g) - 1, 2 beta = alpha^2 - 2 alpha - Tr(g^2) - 5.
template <class S>
AlphaBeta<S> alpha_beta_of(const Matrix7<S>& m) {
  const S tr = m.trace();
  const S tr2 = (m * m).trace();
  const S one = scalar_traits<S>::from_int(1);
  const S two = scalar_traits<S>::from_int(2);
  const S five = scalar_traits<S>::from_int(5);
  const S alpha = tr - one;
  const S beta = (alpha * alpha - two * alpha - tr2 - five) / two;
  return {alpha, beta};
}

/// Point of the maximal torus, via the diagonal coordinates (a1, a2);
/// a3 = 1/(a1 a2).
template <class S>
struct TorusPoint {
  S a1, a2;

  TorusPoint(S a1_, S a2_) : a1(std::move(a1_)), a2(std::move(a2_)) {
    if (scalar_traits<S>::is_zero(a1, 1e-300) || scalar_traits<S>::is_zero(a2, 1e-300))
      throw ZeroTorusCoordinate();
  }
  S a3() const { return scalar_traits<S>::from_int(1) / (a1 * a2); }
};

template <class S>
AlphaBeta<S> torus_alpha_beta(const TorusPoint<S>& t) {
  const S one = scalar_traits<S>::from_int(1);
  const S a1 = t.a1, a2 = t.a2;
  const S alpha = a1 + one / a1 + a2 + one / a2 + a1 * a2 + one / (a1 * a2);
  const S beta = a1 / a2 + a2 / a1 + a1 * a1 * a2 + a1 * a2 * a2 +
                 one / (a1 * a1 * a2) + one / (a1 * a2 * a2);
  return {alpha, beta};
}

enum class WeylGen { r1, r2 };

/// r1(a1,a2) = (1/a1, a1 a2), r2(a1,a2) = (a2, a1); these generate the
/// dihedral Weyl group of order 12.
template <class S>
TorusPoint<S> weyl_act(WeylGen gen, const TorusPoint<S>& t) {
  const S one = scalar_traits<S>::from_int(1);
  if (gen == WeylGen::r1) return TorusPoint<S>(one / t.a1, t.a1 * t.a2);
  return TorusPoint<S>(t.a2, t.a1);
}

/// The two factors of the squared Weyl denominator, corresponding to the
/// long and short roots.
template <class S>
std::pair<S, S> weyl_denominator(const TorusPoint<S>& t) {
  const S a1 = t.a1, a2 = t.a2, a3 = t.a3();
  const S l = (a1 - a2) * (a2 - a3) * (a3 - a1);
  const S s = a1 * a2 + a2 * a3 + a3 * a1 - a1 - a2 - a3;
  return {l * l, s * s};
}

/// Expected dimension of the four-puncture character variety:
/// sum of class dimensions minus twice dim(G/Z).
inline long expected_dim(const std::vector<long>& class_dims, long dim_g, long dim_center) {
  long s = 0;
  for (long d : class_dims) s += d;
  return s - 2 * (dim_g - dim_center);
}

}  // namespace g2cubics
