#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <string>

#include "g2cubics/errors.hpp"

namespace g2cubics {

/// Exact scalar regime: arbitrary-precision rationals, always normalized
/// (reduced fraction, canonical sign) by boost::multiprecision.
using Rat = boost::multiprecision::cpp_rational;

/// Floating scalar regime: double-precision complex numbers.
using Cplx = std::complex<double>;

/// Global default comparison tolerance for the floating regime.
inline double default_tolerance() { return 1e-9; }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_exact = true;
  static Rat from_int(long n) { return Rat(n); }
  static bool is_zero(const Rat& x, double /*tol*/ = 0) { return x == 0; }
  static bool close(const Rat& a, const Rat& b, double /*tol*/ = 0) { return a == b; }
  static double magnitude(const Rat& x) {
    return std::abs(static_cast<double>(x));
  }
};

template <>
struct scalar_traits<Cplx> {
  static constexpr bool is_exact = false;
  static Cplx from_int(long n) { return Cplx(static_cast<double>(n), 0.0); }
  static bool is_zero(const Cplx& x, double tol = 1e-9) { return std::abs(x) < tol; }
  static bool close(const Cplx& a, const Cplx& b, double tol = 1e-9) {
    return std::abs(a - b) < tol;
  }
  static double magnitude(const Cplx& x) { return std::abs(x); }
};

inline Cplx to_cplx(const Rat& x) { return Cplx(static_cast<double>(x), 0.0); }
inline Cplx to_cplx(const Cplx& x) { return x; }

/// Parses "p/q" (or a plain integer) into an exact rational.
inline Rat parse_rational(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw ParseError("cannot parse rational: " + s);
  }
}

std::string to_string(const Rat& x);
std::string to_string(const Cplx& x);

inline std::string to_string(const Rat& x) { return x.str(); }
inline std::string to_string(const Cplx& x) {
  return "(" + std::to_string(x.real()) + (x.imag() < 0 ? "-" : "+") +
         std::to_string(std::abs(x.imag())) + "i)";
}

}  // namespace g2cubics
