#include <doctest.h>

#include <algorithm>
#include <random>

#include "g2cubics/braid.hpp"
#include "g2cubics/fano.hpp"
#include "g2cubics/sampling.hpp"
#include "helpers.hpp"

using namespace g2cubics;
using g2cubics::testing::random_p;
using g2cubics::testing::random_xyz;

namespace {

template <class State, class Act>
State apply_word(const std::vector<int>& word, State s, Act act) {
  for (int g : word) s = act(g, s);
  return s;
}

OctTriple<Cplx> random_oct_triple(std::mt19937& rng) {
  return {random_norm3(rng), random_norm3(rng), random_norm3(rng)};
}

}  // namespace

TEST_SUITE_BEGIN("braid");

TEST_CASE("word reduction") {
  CHECK(BraidWord{{1, -1, 2}}.reduced().tokens == std::vector<int>{2});
  CHECK(BraidWord{{1, 2, -2, -1}}.reduced().tokens.empty());
  CHECK(BraidWord{{1, 2, 1}}.reduced().tokens == std::vector<int>{1, 2, 1});
}

TEST_CASE("braid relation at the p and xyz levels, exactly") {
  std::mt19937 rng(101);
  auto pact = [](int g, const PInvariants<Rat>& p) { return braid_p(g, p); };
  for (int n = 0; n < 100; ++n) {
    const PInvariants<Rat> p = random_p(rng);
    const PInvariants<Rat> lhs = apply_word({1, 2, 1}, p, pact);
    const PInvariants<Rat> rhs = apply_word({2, 1, 2}, p, pact);
    CHECK(lhs.p1 == rhs.p1);
    CHECK(lhs.p2 == rhs.p2);
    CHECK(lhs.p3 == rhs.p3);
    CHECK(lhs.p4 == rhs.p4);
  }
  for (int n = 0; n < 100; ++n) {
    const Rat b = random_rational(rng);
    auto xact = [&b](int g, const SurfacePoint<Rat>& pt) {
      return braid_xyz(g, pt, b);
    };
    const SurfacePoint<Rat> pt = random_xyz(rng);
    const SurfacePoint<Rat> lhs = apply_word({1, 2, 1}, pt, xact);
    const SurfacePoint<Rat> rhs = apply_word({2, 1, 2}, pt, xact);
    CHECK(lhs.x == rhs.x);
    CHECK(lhs.y == rhs.y);
    CHECK(lhs.z == rhs.z);
  }
}

TEST_CASE("braid relation at the matrix and octonion levels, numerically") {
  std::mt19937 rng(103);
  const OctTriple<Cplx> v = random_oct_triple(rng);
  auto oact = [](int g, const OctTriple<Cplx>& t) { return braid_oct(g, t); };
  const OctTriple<Cplx> ol = apply_word({1, 2, 1}, v, oact);
  const OctTriple<Cplx> orr = apply_word({2, 1, 2}, v, oact);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 7; ++j) CHECK(std::abs(ol[i].c[j] - orr[i].c[j]) < 1e-8);

  const Triple<Cplx> g{conj_map(v[0]), conj_map(v[1]), conj_map(v[2])};
  auto tact = [](int gen, const Triple<Cplx>& t) { return braid_triple(gen, t); };
  const Triple<Cplx> tl = apply_word({1, 2, 1}, g, tact);
  const Triple<Cplx> tr = apply_word({2, 1, 2}, g, tact);
  for (int i = 0; i < 3; ++i) CHECK(tl[i].close_to(tr[i], 1e-8));
}

TEST_CASE("generators are invertible at every level") {
  std::mt19937 rng(107);
  const PInvariants<Rat> p = random_p(rng);
  for (int g : {1, 2}) {
    const PInvariants<Rat> q = braid_p(-g, braid_p(g, p));
    CHECK(q.p1 == p.p1);
    CHECK(q.p2 == p.p2);
    CHECK(q.p3 == p.p3);
    CHECK(q.p4 == p.p4);
  }
  const Rat b = random_rational(rng);
  const SurfacePoint<Rat> pt = random_xyz(rng);
  for (int g : {1, 2}) {
    const SurfacePoint<Rat> q = braid_xyz(-g, braid_xyz(g, pt, b), b);
    CHECK(q.x == pt.x);
    CHECK(q.y == pt.y);
    CHECK(q.z == pt.z);
  }
  const OctTriple<Cplx> v = random_oct_triple(rng);
  for (int g : {1, 2}) {
    const OctTriple<Cplx> w = braid_oct(-g, braid_oct(g, v));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 7; ++j) CHECK(std::abs(w[i].c[j] - v[i].c[j]) < 1e-8);
  }
}

TEST_CASE("braid_triple basics") {
  std::mt19937 rng(109);
  const Vector7<Cplx> v = random_norm3(rng);
  const Matrix7<Cplx> g = conj_map(v);
  const Triple<Cplx> eq{g, g, g};
  for (int gen : {1, 2}) {
    const Triple<Cplx> im = braid_triple(gen, eq);
    for (int i = 0; i < 3; ++i) CHECK(im[i].close_to(g, 1e-9));
  }
  // The product g1 g2 g3 is preserved.
  const Triple<Cplx> t{conj_map(random_norm3(rng)), conj_map(random_norm3(rng)),
                       conj_map(random_norm3(rng))};
  const Matrix7<Cplx> prod = t[0] * t[1] * t[2];
  for (int gen : {1, -1, 2, -2}) {
    const Triple<Cplx> im = braid_triple(gen, t);
    CHECK((im[0] * im[1] * im[2]).close_to(prod, 1e-8));
  }
}

TEST_CASE("braid_p examples and conservation") {
  const PInvariants<Rat> klein{Rat(1), Rat(1), Rat(1), Rat(-2)};
  const PInvariants<Rat> im = braid_p(1, klein);
  CHECK(im.p1 == -1);
  CHECK(im.p2 == 1);
  CHECK(im.p3 == 1);
  CHECK(im.p4 == 0);
  CHECK(im.p1 + im.p2 + im.p3 + im.p4 == 1);

  const PInvariants<Rat> diag{Rat(3), Rat(3), Rat(3), Rat(0)};
  const PInvariants<Rat> fixed = braid_p(1, diag);
  CHECK(fixed.p1 == 3);
  CHECK(fixed.p2 == 3);
  CHECK(fixed.p3 == 3);
  CHECK(fixed.p4 == 0);

  std::mt19937 rng(113);
  for (int n = 0; n < 50; ++n) {
    const PInvariants<Rat> p = random_p(rng);
    const Rat sum = p.p1 + p.p2 + p.p3 + p.p4;
    for (int g : {1, -1, 2, -2}) {
      const PInvariants<Rat> q = braid_p(g, p);
      CHECK(q.p1 + q.p2 + q.p3 + q.p4 == sum);
    }
  }
}

TEST_CASE("braid_xyz examples and conservation of the residual") {
  const SurfacePoint<Rat> im =
      braid_xyz(1, SurfacePoint<Rat>{Rat(0), Rat(0), Rat(0)}, Rat(-1));
  CHECK(im.x == 0);
  CHECK(im.y == 1);
  CHECK(im.z == 0);

  std::mt19937 rng(127);
  for (int n = 0; n < 50; ++n) {
    const SurfacePoint<Rat> pt = random_xyz(rng);
    const SurfaceParams<Rat> prm{random_rational(rng), random_rational(rng)};
    const Rat res = fricke_residual(pt, prm);
    for (int g : {1, -1, 2, -2})
      CHECK(fricke_residual(braid_xyz(g, pt, prm.b), prm) == res);
  }
}

TEST_CASE("level compatibility squares commute") {
  std::mt19937 rng(131);
  for (int n = 0; n < 10; ++n) {
    const OctTriple<Cplx> v = random_oct_triple(rng);
    for (int g : {1, -1, 2, -2}) {
      const OctTriple<Cplx> w = braid_oct(g, v);
      // p_invariants o braid_oct = braid_p o p_invariants.
      const PInvariants<Cplx> lhs = p_invariants(w[0], w[1], w[2]);
      const PInvariants<Cplx> rhs = braid_p(g, p_invariants(v[0], v[1], v[2]));
      CHECK(std::abs(lhs.p1 - rhs.p1) < 1e-7);
      CHECK(std::abs(lhs.p2 - rhs.p2) < 1e-7);
      CHECK(std::abs(lhs.p3 - rhs.p3) < 1e-7);
      CHECK(std::abs(lhs.p4 - rhs.p4) < 1e-7);
      // conj_map o braid_oct = braid_triple o conj_map.
      const Triple<Cplx> tm = braid_triple(
          g, Triple<Cplx>{conj_map(v[0]), conj_map(v[1]), conj_map(v[2])});
      for (int i = 0; i < 3; ++i) CHECK(conj_map(w[i]).close_to(tm[i], 1e-7));
    }
  }
}

TEST_CASE("orbit enumeration") {
  // Klein xyz orbit: exactly the seven listed points.
  const auto xyz = braid_orbit_xyz({Rat(0), Rat(0), Rat(0)}, Rat(-1), 100);
  const std::vector<XyzKey> expect{
      {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)},
      {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(1)},
      {Rat(1), Rat(1), Rat(0)}};
  CHECK(xyz.size == 7);
  CHECK(xyz.points == expect);

  const auto porb = braid_orbit_p({Rat(1), Rat(1), Rat(1), Rat(-2)}, 100);
  CHECK(porb.size == 7);

  const auto fixed = braid_orbit_p({Rat(3), Rat(3), Rat(3), Rat(0)}, 100);
  CHECK(fixed.size == 1);

  CHECK_THROWS_AS(braid_orbit_p({Rat(1), Rat(1), Rat(1), Rat(-2)}, 3),
                  OrbitTruncated);
}

TEST_CASE("class-level orbit of the Fano triple through e7 has size 7") {
  OctTriple<Cplx> start;
  int idx = 0;
  for (const FanoLine& l : lines_through(7)) {
    Vector7<Cplx> v;
    for (int p : l) v.c[p - 1] = 1.0;
    start[idx++] = v;
  }
  const auto orbit = braid_orbit_class(start, 100);
  CHECK(orbit.size == 7);
}

TEST_CASE("equivariance dictionary") {
  const DictionaryReport rep = equivariance_dictionary();
  CHECK(rep.all_verified);
  CHECK(rep.klein_orbits_match);
  REQUIRE(rep.entries.size() == 2);
  for (const auto& e : rep.entries) CHECK(e.verified);
}

TEST_SUITE_END();
