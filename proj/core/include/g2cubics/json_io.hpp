#pragma once

#include <json.hpp>

#include "g2cubics/fricke.hpp"
#include "g2cubics/matrix.hpp"
#include "g2cubics/octonion.hpp"

namespace g2cubics {

using nlohmann::json;

// Scalar encodings: exact rationals as "p/q" strings, complex as [re, im].
inline json scalar_to_json(const Rat& x) { return x.str(); }
inline json scalar_to_json(const Cplx& x) { return json::array({x.real(), x.imag()}); }

inline void scalar_from_json(const json& j, Rat& out) {
  if (!j.is_string()) throw ParseError("expected \"p/q\" string scalar");
  out = parse_rational(j.get<std::string>());
}
inline void scalar_from_json(const json& j, Cplx& out) {
  if (j.is_number()) {
    out = Cplx(j.get<double>(), 0.0);
    return;
  }
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [re, im] scalar");
  out = Cplx(j[0].get<double>(), j[1].get<double>());
}

template <class S>
json to_json(const Octonion<S>& q) {
  json arr = json::array();
  for (const S& c : q.c) arr.push_back(scalar_to_json(c));
  return arr;
}

template <class S>
json to_json(const Vector7<S>& v) {
  json arr = json::array();
  for (const S& c : v.c) arr.push_back(scalar_to_json(c));
  return arr;
}

template <class S>
Vector7<S> vector7_from_json(const json& j) {
  if (!j.is_array() || j.size() != 7) throw ParseError("expected 7-element vector");
  Vector7<S> v;
  for (int i = 0; i < 7; ++i) scalar_from_json(j[i], v.c[i]);
  return v;
}

template <class S>
Octonion<S> octonion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw ParseError("expected 8-element octonion");
  Octonion<S> q;
  for (int i = 0; i < 8; ++i) scalar_from_json(j[i], q.c[i]);
  return q;
}

template <class S>
json to_json(const Matrix7<S>& m) {
  json arr = json::array();
  for (const S& x : m.a) arr.push_back(scalar_to_json(x));
  return json{{"matrix", arr}};
}

template <class S>
Matrix7<S> matrix7_from_json(const json& j) {
  const json& arr = j.contains("matrix") ? j["matrix"] : j;
  if (!arr.is_array() || arr.size() != 49) throw ParseError("expected 49-entry matrix");
  Matrix7<S> m;
  for (int i = 0; i < 49; ++i) scalar_from_json(arr[i], m.a[i]);
  return m;
}

template <class S>
json triple_to_json(const Vector7<S>& v1, const Vector7<S>& v2, const Vector7<S>& v3) {
  return json{{"v1", to_json(v1)}, {"v2", to_json(v2)}, {"v3", to_json(v3)}};
}

template <class S>
json invariants_to_json(const PInvariants<S>& p, const SurfacePoint<S>& pt,
                        const S& b, const S& c, const AlphaBeta<S>& ab) {
  return json{
      {"p", {scalar_to_json(p.p1), scalar_to_json(p.p2), scalar_to_json(p.p3),
             scalar_to_json(p.p4)}},
      {"xyzb", {scalar_to_json(pt.x), scalar_to_json(pt.y), scalar_to_json(pt.z),
                scalar_to_json(b)}},
      {"c", scalar_to_json(c)},
      {"alpha_beta", {scalar_to_json(ab.alpha), scalar_to_json(ab.beta)}}};
}

}  // namespace g2cubics
