#pragma once

#include <array>
#include <cstdlib>

#include "g2cubics/errors.hpp"
#include "g2cubics/scalar.hpp"

namespace g2cubics {

/// Signed multiplication table for the imaginary units.  Entry (i,j),
/// 0-based, encodes e_{i+1} * e_{j+1}: a value k in 1..7 means +e_k,
/// -k means -e_k, and 0 means the product is the scalar -1 (i == j).
using UnitTable = std::array<std::array<int, 7>, 7>;

/// The table frozen at build time.
const UnitTable& unit_table();

/// Regenerates the table from the seven Fano lines; the result must agree
/// with unit_table() (checked in the test suite).
UnitTable generate_unit_table();

template <class S>
struct Vector7;

/// Element of the complex Cayley algebra: c[0] is the coefficient of 1,
/// c[1..7] the coefficients of e1..e7.
template <class S>
struct Octonion {
  std::array<S, 8> c{};

  Octonion() {
    for (auto& x : c) x = scalar_traits<S>::from_int(0);
  }
  static Octonion one() {
    Octonion q;
    q.c[0] = scalar_traits<S>::from_int(1);
    return q;
  }
  static Octonion unit(int k) {  // e_k, k in 1..7
    Octonion q;
    q.c[static_cast<std::size_t>(k)] = scalar_traits<S>::from_int(1);
    return q;
  }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Octonion operator*(const S& s, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a) {
    return scalar_traits<S>::from_int(-1) * a;
  }

  S trace() const { return c[0]; }
  Vector7<S> imaginary() const;
};

/// Imaginary octonion, an element of V = span(e1..e7); c[0] holds the
/// coefficient of e1.
template <class S>
struct Vector7 {
  std::array<S, 7> c{};

  Vector7() {
    for (auto& x : c) x = scalar_traits<S>::from_int(0);
  }
  static Vector7 unit(int k) {  // e_k, k in 1..7
    Vector7 v;
    v.c[static_cast<std::size_t>(k - 1)] = scalar_traits<S>::from_int(1);
    return v;
  }

  Octonion<S> embed() const {
    Octonion<S> q;
    for (int i = 0; i < 7; ++i) q.c[i + 1] = c[i];
    return q;
  }

  friend Vector7 operator+(const Vector7& a, const Vector7& b) {
    Vector7 r;
    for (int i = 0; i < 7; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Vector7 operator-(const Vector7& a, const Vector7& b) {
    Vector7 r;
    for (int i = 0; i < 7; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Vector7 operator*(const S& s, const Vector7& a) {
    Vector7 r;
    for (int i = 0; i < 7; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend Vector7 operator-(const Vector7& a) {
    return scalar_traits<S>::from_int(-1) * a;
  }
};

template <class S>
Vector7<S> Octonion<S>::imaginary() const {
  Vector7<S> v;
  for (int i = 0; i < 7; ++i) v.c[i] = c[i + 1];
  return v;
}

/// Product under the Fano-plane table; bilinear, non-associative, 1 central.
template <class S>
Octonion<S> oct_mul(const Octonion<S>& a, const Octonion<S>& b) {
  Octonion<S> r;
  // 1 * q and q * 1 terms.
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[0] * b.c[i];
  for (int i = 1; i < 8; ++i) r.c[i] = r.c[i] + a.c[i] * b.c[0];
  // e_i * e_j terms.
  const UnitTable& t = unit_table();
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const S prod = a.c[i] * b.c[j];
      const int k = t[i - 1][j - 1];
      if (k == 0) {
        r.c[0] = r.c[0] - prod;
      } else if (k > 0) {
        r.c[k] = r.c[k] + prod;
      } else {
        r.c[-k] = r.c[-k] - prod;
      }
    }
  }
  return r;
}

template <class S>
Octonion<S> oct_mul(const Vector7<S>& a, const Vector7<S>& b) {
  return oct_mul(a.embed(), b.embed());
}

/// Conjugation: fixes 1, negates V; an anti-automorphism.
template <class S>
Octonion<S> oct_conj(const Octonion<S>& q) {
  Octonion<S> r;
  r.c[0] = q.c[0];
  for (int i = 1; i < 8; ++i) r.c[i] = scalar_traits<S>::from_int(-1) * q.c[i];
  return r;
}

/// <q1,q2> = Tr(q1 * conj(q2)); the basis {1, e1..e7} is orthonormal, so
/// this is just the coefficient dot product.
template <class S>
S oct_form(const Octonion<S>& q1, const Octonion<S>& q2) {
  S r = scalar_traits<S>::from_int(0);
  for (int i = 0; i < 8; ++i) r = r + q1.c[i] * q2.c[i];
  return r;
}

template <class S>
S oct_form(const Vector7<S>& v1, const Vector7<S>& v2) {
  S r = scalar_traits<S>::from_int(0);
  for (int i = 0; i < 7; ++i) r = r + v1.c[i] * v2.c[i];
  return r;
}

template <class S>
S oct_norm(const Octonion<S>& q) {
  return oct_form(q, q);
}

template <class S>
S oct_norm(const Vector7<S>& v) {
  return oct_form(v, v);
}

template <class S>
void require_norm_three(const Vector7<S>& v, double tol = 1e-9) {
  const S three = scalar_traits<S>::from_int(3);
  if (!scalar_traits<S>::close(oct_norm(v), three, tol)) throw NormNotThree();
}

/// a(v) = (1+v)/2 for norm-3 v; satisfies a(v)^3 = -1 and a(v)*conj(a(v)) = 1.
template <class S>
Octonion<S> half_unit(const Vector7<S>& v, double tol = 1e-9) {
  require_norm_three(v, tol);
  const S half = scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
  return half * (Octonion<S>::one() + v.embed());
}

}  // namespace g2cubics
