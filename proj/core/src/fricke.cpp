#include "g2cubics/fricke.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace g2cubics {

using boost::multiprecision::cpp_int;

namespace {

// Divisors of |n| by trial division.  A cofactor surviving the bound is
// treated as prime; good enough for the coefficient sizes seen here.
std::vector<cpp_int> divisors(cpp_int n) {
  if (n < 0) n = -n;
  std::vector<cpp_int> divs{1};
  if (n <= 1) return divs;
  auto push_power = [&divs](const cpp_int& p, int e) {
    const std::size_t base = divs.size();
    cpp_int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  };
  for (cpp_int p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      push_power(p, e);
    }
    if (divs.size() > 4096) break;  // defensive cap
  }
  if (n > 1) push_power(n, 1);
  return divs;
}

Rat eval_monic(const std::vector<Rat>& low_first, const Rat& x) {
  // low_first holds the non-leading coefficients of a monic polynomial.
  Rat acc = 1;
  for (auto it = low_first.rbegin(); it != low_first.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides the monic polynomial by (x - root); remainder must be zero.
std::vector<Rat> deflate(const std::vector<Rat>& low_first, const Rat& root) {
  const std::size_t n = low_first.size();
  std::vector<Rat> out(n - 1);
  Rat carry = 1;  // leading coefficient
  for (std::size_t i = n; i-- > 1;) {
    carry = low_first[i] + root * carry;
    out[i - 1] = carry;
  }
  return out;
}

bool rational_sqrt(const Rat& x, Rat& out) {
  if (x < 0) return false;
  const cpp_int num = numerator(x), den = denominator(x);
  const cpp_int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  out = Rat(sn, sd);
  return true;
}

}  // namespace

RatFiber pr_fiber_exact(const AlphaBeta<Rat>& ab) {
  // Monic cubic in b: b^3 + 6 b^2 - 3(alpha-1) b + beta + 2.
  std::vector<Rat> poly{ab.beta + 2, -3 * (ab.alpha - 1), Rat(6)};

  RatFiber result;
  auto record = [&](const Rat& root) {
    for (auto& fp : result.points) {
      if (fp.b == root) {
        ++fp.multiplicity;
        return;
      }
    }
    result.points.push_back({root, ab.alpha - 2 - 3 * root, 1});
  };

  // Peel off rational roots.  For the monic integerized polynomial
  // y^3 + c2 M y^2 + c1 M^2 y + c0 M^3 (y = M b) every rational root of the
  // original is y0 / M with y0 an integer divisor of the constant term.
  while (poly.size() >= 2) {
    if (poly[0] == 0) {
      record(Rat(0));
      poly = deflate(poly, Rat(0));
      continue;
    }
    cpp_int M = 1;
    for (const Rat& c : poly) M = lcm(M, denominator(c));
    cpp_int constant = numerator(poly[0]);
    cpp_int Mpow = 1;
    for (std::size_t i = 0; i < poly.size(); ++i) Mpow *= M;
    constant = constant * (Mpow / denominator(poly[0]));
    bool found = false;
    for (const cpp_int& d : divisors(constant)) {
      for (int sign : {1, -1}) {
        const Rat cand = Rat(sign * d, M);
        if (eval_monic(poly, cand) == 0) {
          record(cand);
          poly = deflate(poly, cand);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }

  if (poly.size() == 1) {  // monic linear x + c0
    record(-poly[0]);
    poly.clear();
  }
  if (poly.size() == 2) {
    // Monic quadratic x^2 + px + q; split only if the discriminant is a
    // perfect rational square.
    const Rat p = poly[1], q = poly[0];
    const Rat disc = p * p - 4 * q;
    Rat s;
    if (rational_sqrt(disc, s)) {
      record((-p + s) / 2);
      record((-p - s) / 2);
      poly.clear();
    }
  }
  if (poly.size() >= 2) result.unresolved = poly;

  std::sort(result.points.begin(), result.points.end(),
            [](const FiberPoint<Rat>& a, const FiberPoint<Rat>& b) { return a.b < b.b; });
  return result;
}

std::tuple<Vector7<Cplx>, Vector7<Cplx>, Vector7<Cplx>> realize_triple(
    const PInvariants<Cplx>& p, double tol) {
  const Cplx sqrt3 = std::sqrt(Cplx(3.0, 0.0));
  auto unit_branch = [](Cplx w) {  // nonnegative imaginary part
    return (w.imag() < 0) ? -w : w;
  };

  Vector7<Cplx> v1;
  v1.c[0] = sqrt3;

  // v2 in span(e1, e2): mu e1 + nu e2 with sqrt(3) mu = p3, mu^2 + nu^2 = 3.
  const Cplx mu = p.p3 / sqrt3;
  const Cplx nu = unit_branch(std::sqrt(Cplx(3.0) - mu * mu));
  Vector7<Cplx> v2, v3;

  if (std::abs(nu) < 1e-12) {
    // Degenerate branch: v2 = +-sqrt(3) e1; requires p1 = mu c1 and p4 = 0.
    v2.c[0] = mu;
    const Cplx c1 = p.p2 / sqrt3;
    const double residual =
        std::max(std::abs(p.p1 - mu * c1), std::abs(p.p4));
    if (residual > tol) throw RealizationFailed(residual);
    v3.c[0] = c1;
    v3.c[2] = std::sqrt(Cplx(3.0) - c1 * c1);
  } else {
    v2.c[0] = mu;
    v2.c[1] = nu;
    // <v1,v3> = sqrt(3) c1, <v2,v3> = mu c1 + nu c2,
    // <v1, v2 v3> = sqrt(3) nu c4 (only e2 e4 = e1 contributes).
    const Cplx c1 = p.p2 / sqrt3;
    const Cplx c2 = (p.p1 - mu * c1) / nu;
    const Cplx c4 = p.p4 / (sqrt3 * nu);
    v3.c[0] = c1;
    v3.c[1] = c2;
    v3.c[3] = c4;
    v3.c[2] = std::sqrt(Cplx(3.0) - c1 * c1 - c2 * c2 - c4 * c4);
  }

  const PInvariants<Cplx> check = p_invariants(v1, v2, v3, 1e-6);
  const double residual = std::max(
      {std::abs(check.p1 - p.p1), std::abs(check.p2 - p.p2),
       std::abs(check.p3 - p.p3), std::abs(check.p4 - p.p4),
       std::abs(oct_norm(v1) - Cplx(3.0)), std::abs(oct_norm(v2) - Cplx(3.0)),
       std::abs(oct_norm(v3) - Cplx(3.0))});
  if (!(residual < tol)) throw RealizationFailed(residual);
  return {v1, v2, v3};
}

}  // namespace g2cubics
