#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "g2cubics/fricke.hpp"
#include "g2cubics/g2class.hpp"
#include "g2cubics/matrix.hpp"

namespace g2cubics {

/// Braid generator tokens: +1 = beta1, -1 = beta1^-1, +2 = beta2, -2 = beta2^-1.
struct BraidWord {
  std::vector<int> tokens;

  /// Cancels adjacent inverse pairs until stable.
  BraidWord reduced() const {
    std::vector<int> out;
    for (int t : tokens) {
      if (!out.empty() && out.back() == -t)
        out.pop_back();
      else
        out.push_back(t);
    }
    return {out};
  }
};

// ---------------------------------------------------------------------------
// Hurwitz action on triples of group elements (G2 matrices; inverses are
// transposes since the elements preserve the form).

template <class S>
using Triple = std::array<Matrix7<S>, 3>;

template <class S>
Triple<S> braid_triple(int gen, const Triple<S>& g) {
  const auto& [g1, g2, g3] = g;
  switch (gen) {
    case 1:
      return {g2, g2.transpose() * g1 * g2, g3};
    case -1:
      return {g1 * g2 * g1.transpose(), g1, g3};
    case 2:
      return {g1, g3, g3.transpose() * g2 * g3};
    case -2:
      return {g1, g2 * g3 * g2.transpose(), g2};
    default:
      throw Error("bad braid generator token");
  }
}

// ---------------------------------------------------------------------------
// The same action on norm-3 octonion triples: conjugation by a(v) is exactly
// the conj_map matrix, and a(-v) gives its inverse.

template <class S>
using OctTriple = std::array<Vector7<S>, 3>;

template <class S>
OctTriple<S> braid_oct(int gen, const OctTriple<S>& v, double tol = 1e-9) {
  const auto& [v1, v2, v3] = v;
  switch (gen) {
    case 1:
      return {v2, conj_map(-v2, tol) * v1, v3};
    case -1:
      return {conj_map(v1, tol) * v2, v1, v3};
    case 2:
      return {v1, v3, conj_map(-v3, tol) * v2};
    case -2:
      return {v1, conj_map(v2, tol) * v3, v2};
    default:
      throw Error("bad braid generator token");
  }
}

// ---------------------------------------------------------------------------
// Induced action on the invariants p = (p1,p2,p3,p4).

template <class S>
PInvariants<S> braid_p(int gen, const PInvariants<S>& p) {
  auto k = [](long n) { return scalar_traits<S>::from_int(n); };
  const S two = k(2), three = k(3);
  const S p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4;
  switch (gen) {
    case 1:
      return {(p4 + p1 * p3 - p2) / two, p1, p3, (p4 + three * p2 - p1 * p3) / two};
    case -1:
      return {p2, (p4 - p1 + p2 * p3) / two, p3, (three * p1 + p4 - p2 * p3) / two};
    case 2:
      return {p1, (p4 + p1 * p2 - p3) / two, p2, (p4 + three * p3 - p1 * p2) / two};
    case -2:
      return {p1, p3, (p1 * p3 - p2 + p4) / two, (three * p2 + p4 - p1 * p3) / two};
    default:
      throw Error("bad braid generator token");
  }
}

// ---------------------------------------------------------------------------
// Action on surface coordinates for fixed b.

template <class S>
SurfacePoint<S> braid_xyz(int gen, const SurfacePoint<S>& pt, const S& b) {
  const S x = pt.x, y = pt.y, z = pt.z;
  switch (gen) {
    case 1:
      return {x, -b - z - x * y, y};
    case -1:
      return {x, z, -b - y - x * z};
    case 2:
      return {z, y, -b - x - y * z};
    case -2:
      return {-b - z - x * y, y, x};
    default:
      throw Error("bad braid generator token");
  }
}

// ---------------------------------------------------------------------------
// Orbit enumeration: BFS closure under the four generator tokens, with
// canonical exact keys for dedup.

template <class Key>
struct OrbitResult {
  std::vector<Key> points;  // sorted
  std::size_t size = 0;
};

template <class State, class Key, class Step, class MakeKey>
OrbitResult<Key> braid_orbit_generic(const State& start, std::size_t max_size,
                                     Step step, MakeKey make_key) {
  if (max_size == 0) throw Error("max_size must be positive");
  std::set<Key> seen;
  std::deque<State> frontier;
  seen.insert(make_key(start));
  frontier.push_back(start);
  while (!frontier.empty()) {
    const State s = frontier.front();
    frontier.pop_front();
    for (int gen : {1, -1, 2, -2}) {
      State next = step(gen, s);
      Key key = make_key(next);
      if (seen.insert(key).second) {
        if (seen.size() > max_size) throw OrbitTruncated(max_size);
        frontier.push_back(std::move(next));
      }
    }
  }
  OrbitResult<Key> out;
  out.points.assign(seen.begin(), seen.end());
  out.size = out.points.size();
  return out;
}

using PKey = std::array<Rat, 4>;
using XyzKey = std::array<Rat, 3>;

inline OrbitResult<PKey> braid_orbit_p(const PInvariants<Rat>& start,
                                       std::size_t max_size) {
  return braid_orbit_generic<PInvariants<Rat>, PKey>(
      start, max_size,
      [](int gen, const PInvariants<Rat>& p) { return braid_p(gen, p); },
      [](const PInvariants<Rat>& p) { return PKey{p.p1, p.p2, p.p3, p.p4}; });
}

inline OrbitResult<XyzKey> braid_orbit_xyz(const SurfacePoint<Rat>& start,
                                           const Rat& b, std::size_t max_size) {
  return braid_orbit_generic<SurfacePoint<Rat>, XyzKey>(
      start, max_size,
      [&b](int gen, const SurfacePoint<Rat>& pt) { return braid_xyz(gen, pt, b); },
      [](const SurfacePoint<Rat>& pt) { return XyzKey{pt.x, pt.y, pt.z}; });
}

/// Quantized key for floating states (1e-9 grid).
inline std::array<std::int64_t, 8> quantize_p(const PInvariants<Cplx>& p) {
  auto q = [](double x) { return static_cast<std::int64_t>(std::llround(x * 1e9)); };
  return {q(p.p1.real()), q(p.p1.imag()), q(p.p2.real()), q(p.p2.imag()),
          q(p.p3.real()), q(p.p3.imag()), q(p.p4.real()), q(p.p4.imag())};
}

/// Matrix-class-level orbit: states are octonion triples, canonicalized by
/// their p-invariants (a complete conjugation invariant on M = C^3/G2).
inline OrbitResult<std::array<std::int64_t, 8>> braid_orbit_class(
    const OctTriple<Cplx>& start, std::size_t max_size, double tol = 1e-7) {
  return braid_orbit_generic<OctTriple<Cplx>, std::array<std::int64_t, 8>>(
      start, max_size,
      [tol](int gen, const OctTriple<Cplx>& v) { return braid_oct(gen, v, tol); },
      [tol](const OctTriple<Cplx>& v) {
        return quantize_p(p_invariants(v[0], v[1], v[2], tol));
      });
}

// ---------------------------------------------------------------------------
// Equivariance dictionary between the p-level and xyz-level actions.

struct DictionaryEntry {
  std::string p_generator;  // "beta1" or "beta2"
  std::string xyz_word;     // word in beta1/beta2 (xyz level) and the y<->z swap
  bool verified = false;
};

struct DictionaryReport {
  std::vector<DictionaryEntry> entries;
  bool klein_orbits_match = false;
  bool all_verified = false;
};

/// Verifies the candidate identities relating the two published braid
/// actions under phi, falling back to a bounded word search; also checks
/// that the Klein p-orbit maps onto the listed xyz orbit.
DictionaryReport equivariance_dictionary(unsigned seed = 12345, int samples = 100);

}  // namespace g2cubics
