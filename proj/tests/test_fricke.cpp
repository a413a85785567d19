#include <doctest.h>

#include <random>

#include "g2cubics/fano.hpp"
#include "g2cubics/fricke.hpp"
#include "g2cubics/g2class.hpp"
#include "g2cubics/sampling.hpp"
#include "helpers.hpp"

using namespace g2cubics;
using g2cubics::testing::random_p;
using g2cubics::testing::random_xyz;
using g2cubics::testing::singular_search;

namespace {

Vector7<Rat> line_vec(int a, int b, int c) {
  return Vector7<Rat>::unit(a) + Vector7<Rat>::unit(b) + Vector7<Rat>::unit(c);
}

}  // namespace

TEST_SUITE_BEGIN("fricke");

TEST_CASE("p_invariants of distinguished triples") {
  const PInvariants<Rat> klein =
      p_invariants(line_vec(1, 3, 7), line_vec(2, 6, 7), line_vec(4, 5, 7));
  CHECK(klein.p1 == 1);
  CHECK(klein.p2 == 1);
  CHECK(klein.p3 == 1);
  CHECK(klein.p4 == -2);

  const Vector7<Rat> v = line_vec(1, 2, 4);
  const PInvariants<Rat> diag = p_invariants(v, v, v);
  CHECK(diag.p1 == 3);
  CHECK(diag.p2 == 3);
  CHECK(diag.p3 == 3);
  CHECK(diag.p4 == 0);

  CHECK_THROWS_AS(p_invariants(Vector7<Rat>::unit(1), v, v), NormNotThree);
}

TEST_CASE("p_invariants match brute-force form evaluations") {
  std::mt19937 rng(41);
  for (int n = 0; n < 20; ++n) {
    const Vector7<Cplx> v1 = random_norm3(rng), v2 = random_norm3(rng),
                        v3 = random_norm3(rng);
    const PInvariants<Cplx> p = p_invariants(v1, v2, v3);
    // Recompute each pairing from raw coefficient products.
    Cplx p1 = 0, p2 = 0, p3 = 0;
    for (int i = 0; i < 7; ++i) {
      p1 += v2.c[i] * v3.c[i];
      p2 += v1.c[i] * v3.c[i];
      p3 += v1.c[i] * v2.c[i];
    }
    const Octonion<Cplx> prod = oct_mul(v2, v3);
    Cplx p4 = 0;
    for (int i = 0; i < 7; ++i) p4 += v1.c[i] * prod.c[i + 1];
    CHECK(std::abs(p.p1 - p1) < 1e-12);
    CHECK(std::abs(p.p2 - p2) < 1e-12);
    CHECK(std::abs(p.p3 - p3) < 1e-12);
    CHECK(std::abs(p.p4 - p4) < 1e-12);
  }
}

TEST_CASE("alpha_beta_from_p at the distinguished points") {
  const AlphaBeta<Rat> klein =
      alpha_beta_from_p(PInvariants<Rat>{Rat(1), Rat(1), Rat(1), Rat(-2)});
  CHECK(klein.alpha == -1);
  CHECK(klein.beta == -1);

  const AlphaBeta<Rat> diag =
      alpha_beta_from_p(PInvariants<Rat>{Rat(3), Rat(3), Rat(3), Rat(0)});
  CHECK(diag.alpha == 6);
  CHECK(diag.beta == 6);
}

TEST_CASE("alpha_beta_from_p agrees with the matrix-product oracle") {
  std::mt19937 rng(43);
  for (int n = 0; n < 50; ++n) {
    const Vector7<Cplx> v1 = random_norm3(rng), v2 = random_norm3(rng),
                        v3 = random_norm3(rng);
    const Matrix7<Cplx> g = conj_map(v1) * conj_map(v2) * conj_map(v3);
    const AlphaBeta<Cplx> direct = alpha_beta_of(g);
    const AlphaBeta<Cplx> via_p = alpha_beta_from_p(p_invariants(v1, v2, v3));
    CHECK(std::abs(direct.alpha - via_p.alpha) < 1e-7);
    CHECK(std::abs(direct.beta - via_p.beta) < 1e-7);
  }
}

TEST_CASE("phi, phi_inv and c_from_surface") {
  const auto [kpt, kb] = phi(PInvariants<Rat>{Rat(1), Rat(1), Rat(1), Rat(-2)});
  CHECK(kpt.x == 0);
  CHECK(kpt.y == 0);
  CHECK(kpt.z == 0);
  CHECK(kb == -1);
  CHECK(c_from_surface(kpt, kb) == 0);

  const auto [dpt, db] = phi(PInvariants<Rat>{Rat(3), Rat(3), Rat(3), Rat(0)});
  CHECK(dpt.x == -1);
  CHECK(dpt.y == -1);
  CHECK(dpt.z == -1);
  CHECK(db == 1);
  CHECK(c_from_surface(dpt, db) == 1);

  std::mt19937 rng(47);
  for (int n = 0; n < 20; ++n) {
    const PInvariants<Rat> p = random_p(rng);
    const auto [pt, b] = phi(p);
    const PInvariants<Rat> back = phi_inv(pt, b);
    CHECK(back.p1 == p.p1);
    CHECK(back.p2 == p.p2);
    CHECK(back.p3 == p.p3);
    CHECK(back.p4 == p.p4);
  }

  // ((2,2,2), b) -> c = -(20 + 6b).
  const Rat b = random_rational(rng);
  CHECK(c_from_surface(SurfacePoint<Rat>{Rat(2), Rat(2), Rat(2)}, b) == -(20 + 6 * b));
}

TEST_CASE("fricke_residual") {
  CHECK(fricke_residual(SurfacePoint<Rat>{Rat(1), Rat(1), Rat(0)},
                        SurfaceParams<Rat>{Rat(-1), Rat(0)}) == 0);
  CHECK(fricke_residual(SurfacePoint<Rat>{Rat(0), Rat(0), Rat(0)},
                        SurfaceParams<Rat>{Rat(0), Rat(0)}) == 0);
  CHECK(fricke_residual(SurfacePoint<Rat>{Rat(0), Rat(0), Rat(0)},
                        SurfaceParams<Rat>{Rat(0), Rat(-4)}) == -4);
}

TEST_CASE("pr at distinguished parameters") {
  auto at = [](long b, long c) { return pr(SurfaceParams<Rat>{Rat(b), Rat(c)}); };
  CHECK(at(-1, 0).alpha == -1);
  CHECK(at(-1, 0).beta == -1);
  CHECK(at(-8, 28).alpha == 6);
  CHECK(at(-8, 28).beta == 6);
  CHECK(at(1, 1).alpha == 6);
  CHECK(at(1, 1).beta == 6);
}

TEST_CASE("exact fibres of pr") {
  const RatFiber f66 = pr_fiber_exact({Rat(6), Rat(6)});
  REQUIRE(f66.points.size() == 2);
  CHECK(f66.unresolved.empty());
  CHECK(f66.points[0].b == -8);
  CHECK(f66.points[0].c == 28);
  CHECK(f66.points[0].multiplicity == 1);
  CHECK(f66.points[1].b == 1);
  CHECK(f66.points[1].c == 1);
  CHECK(f66.points[1].multiplicity == 2);

  // (-1,-1): cubic (b+1)(b^2+5b+1); the quadratic has no rational roots.
  const RatFiber fk = pr_fiber_exact({Rat(-1), Rat(-1)});
  REQUIRE(fk.points.size() == 1);
  CHECK(fk.points[0].b == -1);
  CHECK(fk.points[0].c == 0);
  REQUIRE(fk.unresolved.size() == 2);
  CHECK(fk.unresolved[0] == 1);
  CHECK(fk.unresolved[1] == 5);

  // pr_fiber(pr(b,c)) contains (b,c) for random exact parameters.
  std::mt19937 rng(53);
  for (int n = 0; n < 20; ++n) {
    const SurfaceParams<Rat> prm{random_rational(rng), random_rational(rng)};
    const RatFiber f = pr_fiber_exact(pr(prm));
    bool found = false;
    for (const auto& fp : f.points)
      if (fp.b == prm.b && fp.c == prm.c) found = true;
    CHECK(found);
  }
}

TEST_CASE("numeric fibres of pr") {
  // At a double root the eigensolver splits the pair by about sqrt(eps),
  // so merge with a looser tolerance than the generic default.
  const auto f = pr_fiber(AlphaBeta<Cplx>{Cplx(6.0), Cplx(6.0)}, 1e-6);
  REQUIRE(f.size() == 2);
  int total_mult = 0;
  bool saw_double = false, saw_minus8 = false;
  for (const auto& fp : f) {
    total_mult += fp.multiplicity;
    if (fp.multiplicity == 2 && std::abs(fp.b - Cplx(1.0)) < 1e-6) saw_double = true;
    if (fp.multiplicity == 1 && std::abs(fp.b - Cplx(-8.0)) < 1e-6 &&
        std::abs(fp.c - Cplx(28.0)) < 1e-6)
      saw_minus8 = true;
  }
  CHECK(total_mult == 3);
  CHECK(saw_double);
  CHECK(saw_minus8);

  // Generic parameters away from d1 = 0 give three distinct points.
  std::mt19937 rng(59);
  for (int n = 0; n < 20; ++n) {
    const AlphaBeta<Cplx> ab{random_cplx(rng, 3.0), random_cplx(rng, 3.0)};
    const auto [d1, d2] = locus_values_ab(ab);
    if (std::abs(d1) < 1e-3) continue;
    CHECK(pr_fiber(ab).size() == 3);
  }
}

TEST_CASE("locus values in the (alpha, beta) plane") {
  const auto [d1a, d2a] = locus_values_ab(AlphaBeta<Rat>{Rat(6), Rat(6)});
  CHECK(d1a == 0);
  CHECK(d2a == 0);
  // Klein parameters avoid both loci: d1 = 7, d2 = 1 + 4 - 12 = -7.
  const auto [d1b, d2b] = locus_values_ab(AlphaBeta<Rat>{Rat(-1), Rat(-1)});
  CHECK(d1b == 7);
  CHECK(d2b == -7);
}

TEST_CASE("d1 agrees with the discriminant of the fibre cubic") {
  std::mt19937 rng(61);
  int on_locus = 0;
  for (int n = 0; n < 30; ++n) {
    AlphaBeta<Rat> ab;
    if (n % 2 == 0) {
      // On the locus: parameters of a cubic with a double root at u.
      const Rat u = random_rational(rng);
      ab = {1 + u * u + 4 * u, 6 * u * u + 2 * u * u * u - 2};
      ++on_locus;
    } else {
      ab = {random_rational(rng), random_rational(rng)};
    }
    const Rat disc =
        cubic_discriminant(Rat(6), Rat(-3 * (ab.alpha - 1)), Rat(ab.beta + 2));
    const auto [d1, d2] = locus_values_ab(ab);
    CHECK((disc == 0) == (d1 == 0));
    if (n % 2 == 0) CHECK(d1 == 0);
  }
  CHECK(on_locus == 15);
}

TEST_CASE("locus values in the (b, c) plane") {
  const auto l1 = locus_values_bc(SurfaceParams<Rat>{Rat(-8), Rat(28)});
  CHECK(l1.sing1 == 0);
  const auto l2 = locus_values_bc(SurfaceParams<Rat>{Rat(1), Rat(1)});
  CHECK(l2.sing2 == 0);
  const auto l3 = locus_values_bc(SurfaceParams<Rat>{Rat(-1), Rat(0)});
  CHECK(l3.sing1 == -7);
  CHECK(l3.sing2 == -7);
  CHECK(l3.dbl == -1);
}

TEST_CASE("singular and double loci map into the discriminant loci") {
  std::mt19937 rng(67);
  for (int n = 0; n < 100; ++n) {
    // sing1 = 0: solve for c.
    const Cplx b = random_cplx(rng, 3.0);
    const Cplx c = (b * b - 8.0 * b - 16.0) / 4.0;
    const auto [d1, d2] = locus_values_ab(pr(SurfaceParams<Cplx>{b, c}));
    CHECK(std::abs(d1) < 1e-8);
  }
  for (int n = 0; n < 100; ++n) {
    // sing2 = 0: rational parametrization b = 1-t^2, c = 1-3t^2+2t^3.
    const Cplx t = random_cplx(rng, 2.0);
    const SurfaceParams<Cplx> prm{1.0 - t * t, 1.0 - 3.0 * t * t + 2.0 * t * t * t};
    CHECK(std::abs(locus_values_bc(prm).sing2) < 1e-9);
    const auto [d1, d2] = locus_values_ab(pr(prm));
    CHECK(std::abs(d2) < 1e-8);
  }
  for (int n = 0; n < 100; ++n) {
    // dbl = 0: c = b^2 + b - 1, exactly into d1 = 0.
    const Rat b = random_rational(rng);
    const SurfaceParams<Rat> prm{b, b * b + b - 1};
    CHECK(locus_values_bc(prm).dbl == 0);
    const auto [d1, d2] = locus_values_ab(pr(prm));
    CHECK(d1 == 0);
  }
}

TEST_CASE("Weyl-denominator factors map to the two discriminant components") {
  std::mt19937 rng(71);
  for (int n = 0; n < 30; ++n) {
    const Rat a1 = random_nonzero_rational(rng);
    // Long factor zero: a2 = a1.
    const auto [dl1, dl2] =
        locus_values_ab(torus_alpha_beta(TorusPoint<Rat>(a1, a1)));
    CHECK(dl1 == 0);
    // Short factor zero: a2 = 1.
    const auto [ds1, ds2] =
        locus_values_ab(torus_alpha_beta(TorusPoint<Rat>(a1, Rat(1))));
    CHECK(ds2 == 0);
  }
}

TEST_CASE("very_symmetric parameters and their singular point") {
  const SurfaceParams<Rat> cayley = very_symmetric(Rat(0));
  CHECK(cayley.b == 0);
  CHECK(cayley.c == -4);
  const SurfaceParams<Rat> m1 = very_symmetric(Rat(1));
  CHECK(m1.b == -2);
  CHECK(m1.c == 1);

  std::mt19937 rng(73);
  for (int n = 0; n < 30; ++n) {
    const Rat m = random_rational(rng);
    const SurfaceParams<Rat> prm = very_symmetric(m);
    CHECK(locus_values_bc(prm).sing1 == 0);
    // (2, 2, m^2 - 2) is an exact singular point of the surface.
    const SurfacePoint<Rat> s{Rat(2), Rat(2), m * m - 2};
    CHECK(fricke_residual(s, prm) == 0);
    CHECK(s.x * s.y + 2 * s.z + prm.b == 0);
    CHECK(s.y * s.z + 2 * s.x + prm.b == 0);
    CHECK(s.x * s.z + 2 * s.y + prm.b == 0);
  }
}

TEST_CASE("numeric singular-point search distinguishes loci") {
  std::mt19937 rng(79);
  // On sing1 = 0 (very symmetric) and sing2 = 0: a singular point exists.
  const SurfaceParams<Cplx> vs{Cplx(-2.0), Cplx(1.0)};  // m = 1
  CHECK(singular_search(vs.b, vs.c, rng) < 1e-8);
  const Cplx t(0.7, 0.3);
  const SurfaceParams<Cplx> s2{1.0 - t * t, 1.0 - 3.0 * t * t + 2.0 * t * t * t};
  CHECK(singular_search(s2.b, s2.c, rng) < 1e-8);
  // The Klein surface is smooth: no solution within tolerance.
  CHECK(singular_search(Cplx(-1.0), Cplx(0.0), rng) > 1e-4);
}

TEST_CASE("covering identity") {
  std::mt19937 rng(83);
  for (int n = 0; n < 100; ++n) {
    const Rat b = random_rational(rng), X = random_rational(rng),
              Y = random_rational(rng), Z = random_rational(rng);
    const auto [lhs, rhs] = covering_check(b, X, Y, Z);
    CHECK(lhs == rhs);
  }
  // b = 0: endomorphism of the Cayley surface, c = d = -4.
  const auto [l0, r0] = covering_check(Rat(0), Rat(2), Rat(3), Rat(5));
  CHECK(l0 == r0);
  // X=Y=Z=0: both sides reduce to d^2 = (4 + b/2)^2.
  const Rat b(6);
  const auto [l1, r1] = covering_check(b, Rat(0), Rat(0), Rat(0));
  CHECK(l1 == r1);
  CHECK(l1 == 16 + 4 * b + b * b / 4);
}

TEST_CASE("diagram commutativity on random numeric triples") {
  std::mt19937 rng(89);
  for (int n = 0; n < 100; ++n) {
    const Vector7<Cplx> v1 = random_norm3(rng), v2 = random_norm3(rng),
                        v3 = random_norm3(rng);
    const PInvariants<Cplx> p = p_invariants(v1, v2, v3);
    const auto [pt, b] = phi(p);
    const Cplx c = c_from_surface(pt, b);
    const AlphaBeta<Cplx> via_pr = pr(SurfaceParams<Cplx>{b, c});
    const AlphaBeta<Cplx> via_poly = alpha_beta_from_p(p);
    const AlphaBeta<Cplx> via_mat =
        alpha_beta_of(conj_map(v1) * conj_map(v2) * conj_map(v3));
    CHECK(std::abs(via_pr.alpha - via_poly.alpha) < 1e-7);
    CHECK(std::abs(via_pr.beta - via_poly.beta) < 1e-7);
    CHECK(std::abs(via_mat.alpha - via_poly.alpha) < 1e-7);
    CHECK(std::abs(via_mat.beta - via_poly.beta) < 1e-7);
  }
}

TEST_CASE("realize_triple") {
  // Equal-triple point.
  const auto [a1, a2, a3] =
      realize_triple({Cplx(3.0), Cplx(3.0), Cplx(3.0), Cplx(0.0)});
  const PInvariants<Cplx> pa = p_invariants(a1, a2, a3);
  CHECK(std::abs(pa.p4) < 1e-8);

  // Klein point: forward check through p_invariants.
  const auto [k1, k2, k3] =
      realize_triple({Cplx(1.0), Cplx(1.0), Cplx(1.0), Cplx(-2.0)});
  const PInvariants<Cplx> pk = p_invariants(k1, k2, k3);
  CHECK(std::abs(pk.p1 - Cplx(1.0)) < 1e-8);
  CHECK(std::abs(pk.p2 - Cplx(1.0)) < 1e-8);
  CHECK(std::abs(pk.p3 - Cplx(1.0)) < 1e-8);
  CHECK(std::abs(pk.p4 - Cplx(-2.0)) < 1e-8);

  // Random targets round-trip.
  std::mt19937 rng(97);
  for (int n = 0; n < 20; ++n) {
    const PInvariants<Cplx> target{random_cplx(rng, 2.0), random_cplx(rng, 2.0),
                                   random_cplx(rng, 2.0), random_cplx(rng, 2.0)};
    const auto [w1, w2, w3] = realize_triple(target);
    const PInvariants<Cplx> got = p_invariants(w1, w2, w3);
    CHECK(std::abs(got.p1 - target.p1) < 1e-7);
    CHECK(std::abs(got.p4 - target.p4) < 1e-7);
  }
}

TEST_SUITE_END();
