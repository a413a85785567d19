#pragma once

#include <array>

#include "g2cubics/octonion.hpp"
#include "g2cubics/scalar.hpp"

namespace g2cubics {

/// Dense 7x7 matrix over the scalar ring, acting on V in the e1..e7 basis.
template <class S>
struct Matrix7 {
  std::array<S, 49> a{};

  Matrix7() {
    for (auto& x : a) x = scalar_traits<S>::from_int(0);
  }
  static Matrix7 identity() {
    Matrix7 m;
    for (int i = 0; i < 7; ++i) m(i, i) = scalar_traits<S>::from_int(1);
    return m;
  }

  S& operator()(int r, int c) { return a[static_cast<std::size_t>(7 * r + c)]; }
  const S& operator()(int r, int c) const { return a[static_cast<std::size_t>(7 * r + c)]; }

  friend Matrix7 operator*(const Matrix7& x, const Matrix7& y) {
    Matrix7 r;
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < 7; ++k) {
        const S& xik = x(i, k);
        for (int j = 0; j < 7; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }

  friend Vector7<S> operator*(const Matrix7& m, const Vector7<S>& v) {
    Vector7<S> r;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) r.c[i] = r.c[i] + m(i, j) * v.c[j];
    return r;
  }

  friend Matrix7 operator-(const Matrix7& x, const Matrix7& y) {
    Matrix7 r;
    for (int i = 0; i < 49; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }

  Matrix7 transpose() const {
    Matrix7 r;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  S trace() const {
    S t = scalar_traits<S>::from_int(0);
    for (int i = 0; i < 7; ++i) t = t + (*this)(i, i);
    return t;
  }

  bool close_to(const Matrix7& o, double tol = 1e-9) const {
    for (int i = 0; i < 49; ++i)
      if (!scalar_traits<S>::close(a[i], o.a[i], tol)) return false;
    return true;
  }

  double distance_to(const Matrix7& o) const {
    double d = 0;
    for (int i = 0; i < 49; ++i) {
      const double m = scalar_traits<S>::magnitude(a[i] - o.a[i]);
      if (m > d) d = m;
    }
    return d;
  }
};

}  // namespace g2cubics
