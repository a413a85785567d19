// Command-line front end: invariant pipelines, braid orbits, locus and
// fibre evaluation, exact group closure, and the verification suites.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "g2cubics/braid.hpp"
#include "g2cubics/fano.hpp"
#include "g2cubics/fricke.hpp"
#include "g2cubics/g2class.hpp"
#include "g2cubics/json_io.hpp"
#include "g2cubics/octonion.hpp"
#include "g2cubics/sampling.hpp"
#include "g2cubics/sl2d4.hpp"

using namespace g2cubics;

namespace {

// Exit codes: 0 ok, 2 parse, 3 precondition, 4 truncation, 5 verify failure.
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTruncated = 4;
constexpr int kExitVerifyFailed = 5;

struct Config {
  double tolerance = 1e-9;
  unsigned seed = 12345;
  std::string format = "json";
  std::size_t max_orbit = 10000;
  std::size_t max_group = 100000;
};

bool looks_decimal(const std::string& tok) {
  return tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
         tok.find('E') != std::string::npos;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

bool any_decimal(const std::vector<std::string>& toks) {
  for (const auto& t : toks)
    if (looks_decimal(t)) return true;
  return false;
}

Cplx parse_cplx(const std::string& tok) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw ParseError("cannot parse number: " + tok);
    return Cplx(v, 0.0);
  } catch (const std::exception&) {
    throw ParseError("cannot parse number: " + tok);
  }
}

void emit(const json& j, const Config& cfg) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv" || cfg.format == "table") {
    const char sep = cfg.format == "csv" ? ',' : '\t';
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << sep << it.value().dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// invariants

template <class S>
json invariants_report(const PInvariants<S>& p) {
  const auto [pt, b] = phi(p);
  const S c = c_from_surface(pt, b);
  const AlphaBeta<S> ab = alpha_beta_from_p(p);
  json out = invariants_to_json(p, pt, b, c, ab);
  const AlphaBeta<S> viaPr = pr(SurfaceParams<S>{b, c});
  out["alpha_beta_via_pr"] = {scalar_to_json(viaPr.alpha), scalar_to_json(viaPr.beta)};
  return out;
}

template <class S>
json invariants_from_triple(const Vector7<S>& v1, const Vector7<S>& v2,
                            const Vector7<S>& v3, double tol) {
  const PInvariants<S> p = p_invariants(v1, v2, v3, tol);
  json out = invariants_report(p);
  const Matrix7<S> g = conj_map(v1, tol) * conj_map(v2, tol) * conj_map(v3, tol);
  const AlphaBeta<S> direct = alpha_beta_of(g);
  const AlphaBeta<S> poly = alpha_beta_from_p(p);
  out["alpha_beta_matrix"] = {scalar_to_json(direct.alpha), scalar_to_json(direct.beta)};
  out["route_discrepancy"] =
      std::max(scalar_traits<S>::magnitude(direct.alpha - poly.alpha),
               scalar_traits<S>::magnitude(direct.beta - poly.beta));
  return out;
}

int cmd_invariants(const Config& cfg, const std::string& triple_file,
                   const std::string& inline_p) {
  if (!inline_p.empty()) {
    const auto toks = split_csv(inline_p);
    if (toks.size() != 4) throw ParseError("--p needs 4 comma-separated values");
    json out;
    if (any_decimal(toks)) {
      PInvariants<Cplx> p{parse_cplx(toks[0]), parse_cplx(toks[1]),
                          parse_cplx(toks[2]), parse_cplx(toks[3])};
      out = invariants_report(p);
      out["mode"] = "numeric";
    } else {
      PInvariants<Rat> p{parse_rational(toks[0]), parse_rational(toks[1]),
                         parse_rational(toks[2]), parse_rational(toks[3])};
      out = invariants_report(p);
      out["mode"] = "exact";
    }
    emit(out, cfg);
    return 0;
  }
  std::ifstream in(triple_file);
  if (!in) throw ParseError("cannot open " + triple_file);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("v1") || !j.contains("v2") || !j.contains("v3"))
    throw ParseError("triple file needs keys v1, v2, v3");
  const bool exact = j["v1"].is_array() && !j["v1"].empty() && j["v1"][0].is_string();
  json out;
  if (exact) {
    out = invariants_from_triple(vector7_from_json<Rat>(j["v1"]),
                                 vector7_from_json<Rat>(j["v2"]),
                                 vector7_from_json<Rat>(j["v3"]), cfg.tolerance);
    out["mode"] = "exact";
  } else {
    out = invariants_from_triple(vector7_from_json<Cplx>(j["v1"]),
                                 vector7_from_json<Cplx>(j["v2"]),
                                 vector7_from_json<Cplx>(j["v3"]), cfg.tolerance);
    out["mode"] = "numeric";
  }
  emit(out, cfg);
  return 0;
}

// ---------------------------------------------------------------------------
// braid-orbit

int cmd_braid_orbit(const Config& cfg, const std::string& level,
                    const std::string& start, const std::string& b_str) {
  const auto toks = split_csv(start);
  json out;
  out["level"] = level;
  if (level == "p") {
    if (toks.size() != 4) throw ParseError("p start needs 4 values");
    const PInvariants<Rat> p{parse_rational(toks[0]), parse_rational(toks[1]),
                             parse_rational(toks[2]), parse_rational(toks[3])};
    const auto orbit = braid_orbit_p(p, cfg.max_orbit);
    out["start"] = {p.p1.str(), p.p2.str(), p.p3.str(), p.p4.str()};
    out["b"] = phi(p).second.str();
    out["size"] = orbit.size;
    json pts = json::array();
    for (const auto& k : orbit.points)
      pts.push_back({k[0].str(), k[1].str(), k[2].str(), k[3].str()});
    out["points"] = pts;
    // conserved quantity report
    out["conserved"] = {{"p_sum", Rat(p.p1 + p.p2 + p.p3 + p.p4).str()}};
  } else if (level == "xyz") {
    if (toks.size() != 3) throw ParseError("xyz start needs 3 values");
    if (b_str.empty()) throw ParseError("xyz level needs --b");
    const SurfacePoint<Rat> pt{parse_rational(toks[0]), parse_rational(toks[1]),
                               parse_rational(toks[2])};
    const Rat b = parse_rational(b_str);
    const auto orbit = braid_orbit_xyz(pt, b, cfg.max_orbit);
    out["start"] = {pt.x.str(), pt.y.str(), pt.z.str()};
    out["b"] = b.str();
    out["size"] = orbit.size;
    json pts = json::array();
    for (const auto& k : orbit.points) pts.push_back({k[0].str(), k[1].str(), k[2].str()});
    out["points"] = pts;
    out["conserved"] = {{"c", c_from_surface(pt, b).str()}};
  } else if (level == "class") {
    if (toks.size() != 4) throw ParseError("class start takes p-invariants (4 values)");
    PInvariants<Cplx> p{parse_cplx(toks[0]), parse_cplx(toks[1]), parse_cplx(toks[2]),
                        parse_cplx(toks[3])};
    const auto [v1, v2, v3] = realize_triple(p, 1e-8);
    const auto orbit = braid_orbit_class({v1, v2, v3}, cfg.max_orbit, cfg.tolerance * 100);
    out["start"] = {p.p1.real(), p.p2.real(), p.p3.real(), p.p4.real()};
    out["size"] = orbit.size;
    json pts = json::array();
    for (const auto& k : orbit.points) {
      json row = json::array();
      for (std::int64_t q : k) row.push_back(static_cast<double>(q) * 1e-9);
      pts.push_back(row);
    }
    out["points"] = pts;
  } else {
    throw ParseError("level must be p, xyz or class");
  }
  emit(out, cfg);
  return 0;
}

// ---------------------------------------------------------------------------
// loci / pr-fiber

json fiber_json(const AlphaBeta<Rat>& ab) {
  const RatFiber fiber = pr_fiber_exact(ab);
  json pts = json::array();
  for (const auto& fp : fiber.points)
    pts.push_back({{"b", fp.b.str()}, {"c", fp.c.str()}, {"multiplicity", fp.multiplicity}});
  json out{{"points", pts}};
  if (!fiber.unresolved.empty()) {
    json coeffs = json::array();
    for (const Rat& c : fiber.unresolved) coeffs.push_back(c.str());
    out["unresolved_factor"] = coeffs;
  }
  return out;
}

int cmd_loci(const Config& cfg, const std::string& b_str, const std::string& c_str,
             const std::string& a_str, const std::string& be_str,
             const std::string& sweep) {
  if (!sweep.empty()) {
    // CSV grid of locus values: "bmin:bmax:n,cmin:cmax:n"
    const auto parts = split_csv(sweep);
    if (parts.size() != 2) throw ParseError("--sweep needs b-range,c-range");
    auto parse_range = [](const std::string& r) {
      std::stringstream ss(r);
      std::string lo, hi, n;
      if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') ||
          !std::getline(ss, n, ':'))
        throw ParseError("range must be min:max:count");
      return std::tuple<double, double, int>{std::stod(lo), std::stod(hi), std::stoi(n)};
    };
    const auto [blo, bhi, bn] = parse_range(parts[0]);
    const auto [clo, chi, cn] = parse_range(parts[1]);
    std::cout << "b,c,sing1,sing2,dbl,d1,d2\n";
    for (int i = 0; i < bn; ++i) {
      for (int j = 0; j < cn; ++j) {
        const double b = blo + (bhi - blo) * i / std::max(1, bn - 1);
        const double c = clo + (chi - clo) * j / std::max(1, cn - 1);
        const SurfaceParams<Cplx> prm{Cplx(b), Cplx(c)};
        const auto loc = locus_values_bc(prm);
        const auto [d1, d2] = locus_values_ab(pr(prm));
        std::cout << b << "," << c << "," << loc.sing1.real() << ","
                  << loc.sing2.real() << "," << loc.dbl.real() << "," << d1.real()
                  << "," << d2.real() << "\n";
      }
    }
    return 0;
  }
  json out;
  if (!b_str.empty() && !c_str.empty()) {
    if (any_decimal({b_str, c_str})) {
      const SurfaceParams<Cplx> prm{parse_cplx(b_str), parse_cplx(c_str)};
      const auto loc = locus_values_bc(prm);
      const auto ab = pr(prm);
      const auto [d1, d2] = locus_values_ab(ab);
      out = {{"mode", "numeric"},
             {"sing1", scalar_to_json(loc.sing1)},
             {"sing2", scalar_to_json(loc.sing2)},
             {"dbl", scalar_to_json(loc.dbl)},
             {"alpha", scalar_to_json(ab.alpha)},
             {"beta", scalar_to_json(ab.beta)},
             {"d1", scalar_to_json(d1)},
             {"d2", scalar_to_json(d2)}};
    } else {
      const SurfaceParams<Rat> prm{parse_rational(b_str), parse_rational(c_str)};
      const auto loc = locus_values_bc(prm);
      const auto ab = pr(prm);
      const auto [d1, d2] = locus_values_ab(ab);
      out = {{"mode", "exact"},
             {"sing1", loc.sing1.str()},
             {"sing2", loc.sing2.str()},
             {"dbl", loc.dbl.str()},
             {"alpha", ab.alpha.str()},
             {"beta", ab.beta.str()},
             {"d1", d1.str()},
             {"d2", d2.str()}};
    }
  } else if (!a_str.empty() && !be_str.empty()) {
    const AlphaBeta<Rat> ab{parse_rational(a_str), parse_rational(be_str)};
    const auto [d1, d2] = locus_values_ab(ab);
    out = {{"mode", "exact"},
           {"d1", d1.str()},
           {"d2", d2.str()},
           {"fiber", fiber_json(ab)}};
  } else {
    throw ParseError("loci needs --b/--c, --alpha/--beta, or --sweep");
  }
  emit(out, cfg);
  return 0;
}

int cmd_pr_fiber(const Config& cfg, const std::string& a_str, const std::string& be_str) {
  json out;
  if (any_decimal({a_str, be_str})) {
    const auto fiber = pr_fiber(AlphaBeta<Cplx>{parse_cplx(a_str), parse_cplx(be_str)});
    json pts = json::array();
    for (const auto& fp : fiber)
      pts.push_back({{"b", scalar_to_json(fp.b)},
                     {"c", scalar_to_json(fp.c)},
                     {"multiplicity", fp.multiplicity}});
    out = {{"mode", "numeric"}, {"points", pts}};
  } else {
    out = fiber_json(AlphaBeta<Rat>{parse_rational(a_str), parse_rational(be_str)});
    out["mode"] = "exact";
  }
  emit(out, cfg);
  return 0;
}

// ---------------------------------------------------------------------------
// realize

int cmd_realize(const Config& cfg, const std::string& inline_p) {
  const auto toks = split_csv(inline_p);
  if (toks.size() != 4) throw ParseError("--p needs 4 comma-separated values");
  PInvariants<Cplx> p;
  auto parse_any = [](const std::string& t) {
    return looks_decimal(t) ? parse_cplx(t) : to_cplx(parse_rational(t));
  };
  p.p1 = parse_any(toks[0]);
  p.p2 = parse_any(toks[1]);
  p.p3 = parse_any(toks[2]);
  p.p4 = parse_any(toks[3]);
  const auto [v1, v2, v3] = realize_triple(p, std::max(cfg.tolerance, 1e-8));
  json out = triple_to_json(v1, v2, v3);
  const auto check = p_invariants(v1, v2, v3, 1e-6);
  out["residual"] = std::max({std::abs(check.p1 - p.p1), std::abs(check.p2 - p.p2),
                              std::abs(check.p3 - p.p3), std::abs(check.p4 - p.p4)});
  emit(out, cfg);
  return 0;
}

// ---------------------------------------------------------------------------
// fano-group

json fano_point_report(int point, std::size_t max_group) {
  const auto lines = lines_through(point);
  std::vector<ExactG2Matrix> gens;
  for (const auto& l : lines) gens.push_back(line_to_generator(l).second);
  const auto closure = group_closure(gens, max_group);
  json orders;
  for (const auto& [ord, count] : closure.element_orders)
    orders[std::to_string(ord)] = count;
  return json{{"point", point}, {"order", closure.order}, {"element_orders", orders}};
}

int cmd_fano_group(const Config& cfg, int point, bool all_points) {
  if (all_points) {
    json out = json::array();
    for (int k = 1; k <= 7; ++k) out.push_back(fano_point_report(k, cfg.max_group));
    emit(out, cfg);
    return 0;
  }
  emit(fano_point_report(point, cfg.max_group), cfg);
  return 0;
}

// ---------------------------------------------------------------------------
// weyl

int cmd_weyl(const Config& cfg, const std::string& a1_str, const std::string& a2_str) {
  const TorusPoint<Rat> t{parse_rational(a1_str), parse_rational(a2_str)};
  const auto ab = torus_alpha_beta(t);
  const auto [dl, ds] = weyl_denominator(t);
  // Enumerate the Weyl orbit by closing under r1, r2.
  std::set<std::pair<Rat, Rat>> orbit{{t.a1, t.a2}};
  std::deque<TorusPoint<Rat>> frontier{t};
  while (!frontier.empty()) {
    const TorusPoint<Rat> s = frontier.front();
    frontier.pop_front();
    for (WeylGen g : {WeylGen::r1, WeylGen::r2}) {
      const TorusPoint<Rat> n = weyl_act(g, s);
      if (orbit.insert({n.a1, n.a2}).second) frontier.push_back(n);
    }
  }
  json pts = json::array();
  for (const auto& [a1, a2] : orbit) pts.push_back({a1.str(), a2.str()});
  emit(json{{"alpha", ab.alpha.str()},
            {"beta", ab.beta.str()},
            {"weyl_denominator_long", dl.str()},
            {"weyl_denominator_short", ds.str()},
            {"orbit_size", orbit.size()},
            {"orbit", pts}},
       cfg);
  return 0;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_residual = 0;
  std::string detail;
};

void note(SuiteResult& r, bool ok, double residual = 0, const std::string& what = "") {
  r.max_residual = std::max(r.max_residual, residual);
  if (!ok) {
    r.passed = false;
    if (r.detail.empty()) r.detail = what;
  }
}

SuiteResult verify_octonion() {
  SuiteResult r{"octonion"};
  note(r, generate_unit_table() == unit_table(), 0, "frozen table mismatch");
  const UnitTable& t = unit_table();
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      for (auto f : {+[](int n) { return (n % 7) + 1; },
                     +[](int n) { return (2 * n - 1) % 7 + 1; }}) {
        const int lhs = t[f(i) - 1][f(j) - 1];
        const int rhs = t[i - 1][j - 1];
        const int expect = rhs == 0 ? 0 : (rhs > 0 ? f(rhs) : -f(-rhs));
        note(r, lhs == expect, 0, "table symmetry");
      }
    }
  }
  // form = -Tr(v1 v2) on V, and alternativity on basis pairs
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const auto vi = Vector7<Rat>::unit(i), vj = Vector7<Rat>::unit(j);
      note(r, oct_form(vi, vj) == -oct_mul(vi, vj).trace(), 0, "form vs trace");
      const auto a = vi.embed(), b = vj.embed();
      const auto lhs = oct_mul(oct_mul(a, a), b);
      const auto rhs = oct_mul(a, oct_mul(a, b));
      note(r, lhs.c == rhs.c, 0, "alternativity");
    }
  }
  return r;
}

SuiteResult verify_class(unsigned seed) {
  SuiteResult r{"class"};
  std::mt19937 rng(seed);
  for (int n = 0; n < 200; ++n) {
    const auto v = random_norm3(rng);
    const auto m = conj_map(v, 1e-6);
    note(r, is_automorphism(m, 1e-9), 0, "conj_map automorphism");
    const auto cube = m * m * m;
    const double d = cube.distance_to(Matrix7<Cplx>::identity());
    note(r, d < 1e-9, d, "order 3");
    const auto inv = conj_map(-v, 1e-6);
    const double di = (m * inv).distance_to(Matrix7<Cplx>::identity());
    note(r, di < 1e-9, di, "conj_map(-v) inverse");
  }
  return r;
}

SuiteResult verify_theorem(unsigned seed) {
  SuiteResult r{"theorem"};
  std::mt19937 rng(seed);
  for (int n = 0; n < 1000; ++n) {
    const auto v1 = random_norm3(rng), v2 = random_norm3(rng), v3 = random_norm3(rng);
    const auto p = p_invariants(v1, v2, v3, 1e-6);
    const auto poly = alpha_beta_from_p(p);
    const auto g = conj_map(v1, 1e-6) * conj_map(v2, 1e-6) * conj_map(v3, 1e-6);
    const auto direct = alpha_beta_of(g);
    const double scale = std::max(1.0, std::max(std::abs(direct.alpha), std::abs(direct.beta)));
    const double res = std::max(std::abs(poly.alpha - direct.alpha),
                                std::abs(poly.beta - direct.beta)) /
                       scale;
    note(r, res < 1e-6, res, "theorem polynomials");
  }
  return r;
}

SuiteResult verify_braid(unsigned seed) {
  SuiteResult r{"braid"};
  std::mt19937 rng(seed);
  for (int n = 0; n < 100; ++n) {
    const PInvariants<Rat> p{random_rational(rng), random_rational(rng),
                             random_rational(rng), random_rational(rng)};
    auto lhs = braid_p(1, braid_p(2, braid_p(1, p)));
    auto rhs = braid_p(2, braid_p(1, braid_p(2, p)));
    note(r, lhs.p1 == rhs.p1 && lhs.p2 == rhs.p2 && lhs.p3 == rhs.p3 && lhs.p4 == rhs.p4,
         0, "braid relation (p)");
    const auto sum = p.p1 + p.p2 + p.p3 + p.p4;
    const auto im = braid_p(1, p);
    note(r, im.p1 + im.p2 + im.p3 + im.p4 == sum, 0, "p-sum conserved");

    const SurfacePoint<Rat> pt{random_rational(rng), random_rational(rng),
                               random_rational(rng)};
    const Rat b = random_rational(rng);
    auto l2 = braid_xyz(1, braid_xyz(2, braid_xyz(1, pt, b), b), b);
    auto r2v = braid_xyz(2, braid_xyz(1, braid_xyz(2, pt, b), b), b);
    note(r, l2.x == r2v.x && l2.y == r2v.y && l2.z == r2v.z, 0, "braid relation (xyz)");
  }
  const auto dict = equivariance_dictionary(seed);
  note(r, dict.all_verified, 0, "equivariance dictionary");
  return r;
}

SuiteResult verify_weyl(unsigned seed) {
  SuiteResult r{"weyl"};
  std::mt19937 rng(seed);
  for (int n = 0; n < 50; ++n) {
    const TorusPoint<Rat> t{random_nonzero_rational(rng), random_nonzero_rational(rng)};
    const auto ab = torus_alpha_beta(t);
    for (WeylGen g : {WeylGen::r1, WeylGen::r2}) {
      const auto ab2 = torus_alpha_beta(weyl_act(g, t));
      note(r, ab.alpha == ab2.alpha && ab.beta == ab2.beta, 0, "Weyl invariance");
    }
  }
  for (int n = 0; n < 50; ++n) {
    ThetaParams th{random_cplx(rng), random_cplx(rng), random_cplx(rng), random_cplx(rng)};
    const auto rep = affine_weyl_check(th);
    const double res = std::max(rep.max_reflection_residual, rep.max_translation_residual);
    note(r, res < 1e-8, res, "affine Weyl invariance");
  }
  return r;
}

SuiteResult verify_fano(std::size_t max_group) {
  SuiteResult r{"fano"};
  for (int point = 1; point <= 7; ++point) {
    const auto lines = lines_through(point);
    std::vector<ExactG2Matrix> gens;
    for (const auto& l : lines) gens.push_back(line_to_generator(l).second);
    const auto closure = group_closure(gens, max_group);
    note(r, closure.order == 6048, 0, "closure order");
    const auto p = point_invariants(point);
    note(r, p.p1 == 1 && p.p2 == 1 && p.p3 == 1 && p.p4 == -2, 0, "point invariants");
  }
  return r;
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  std::vector<SuiteResult> results;
  auto want = [&suite](const std::string& name) {
    return suite == "all" || suite == name;
  };
  if (want("octonion")) results.push_back(verify_octonion());
  if (want("class")) results.push_back(verify_class(cfg.seed));
  if (want("theorem")) results.push_back(verify_theorem(cfg.seed));
  if (want("braid")) results.push_back(verify_braid(cfg.seed));
  if (want("weyl")) results.push_back(verify_weyl(cfg.seed));
  if (want("fano")) results.push_back(verify_fano(cfg.max_group));
  if (results.empty()) throw ParseError("unknown suite: " + suite);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name
              << "  max_residual=" << r.max_residual;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    all &= r.passed;
  }
  return all ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2 character varieties as symmetric Fricke cubic surfaces"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("G2CUBICS_TOLERANCE")) cfg.tolerance = std::atof(env);
  app.add_option("--tolerance", cfg.tolerance, "numeric comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--format", cfg.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--max-orbit", cfg.max_orbit, "orbit enumeration bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-group", cfg.max_group, "group closure bound")
      ->check(CLI::PositiveNumber);

  auto* inv = app.add_subcommand("invariants", "p-invariants and both alpha/beta routes");
  std::string triple_file, inline_p;
  inv->add_option("--triple", triple_file, "JSON triple file");
  inv->add_option("--p", inline_p, "inline p1,p2,p3,p4");

  auto* orb = app.add_subcommand("braid-orbit", "enumerate a braid orbit");
  std::string level = "p", start, b_str;
  orb->add_option("--level", level, "p, xyz or class");
  orb->add_option("--start", start, "comma-separated start state")->required();
  orb->add_option("--b", b_str, "surface parameter b (xyz level)");

  auto* loci = app.add_subcommand("loci", "evaluate discriminant/singular loci");
  std::string lb, lc, la, lbe, sweep;
  loci->add_option("--b", lb);
  loci->add_option("--c", lc);
  loci->add_option("--alpha", la);
  loci->add_option("--beta", lbe);
  loci->add_option("--sweep", sweep, "b-range,c-range as min:max:count");

  auto* fib = app.add_subcommand("pr-fiber", "fibre of pr over (alpha, beta)");
  std::string fa, fbe;
  fib->add_option("--alpha", fa)->required();
  fib->add_option("--beta", fbe)->required();

  auto* rea = app.add_subcommand("realize", "realize a norm-3 triple with given p");
  std::string rp;
  rea->add_option("--p", rp, "inline p1,p2,p3,p4")->required();

  auto* fano = app.add_subcommand("fano-group", "exact closure of Fano-point generators");
  int point = 7;
  bool all_points = false;
  fano->add_option("--point", point, "Fano point 1..7");
  fano->add_flag("--all-points", all_points, "sweep all seven points");

  auto* weyl = app.add_subcommand("weyl", "torus invariants and Weyl orbit");
  std::string a1s, a2s;
  weyl->add_option("--a1", a1s)->required();
  weyl->add_option("--a2", a2s)->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  ver->add_option("suite", suite, "octonion, class, theorem, braid, weyl, fano, all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      if (triple_file.empty() == inline_p.empty())
        throw ParseError("invariants needs exactly one of --triple or --p");
      return cmd_invariants(cfg, triple_file, inline_p);
    }
    if (orb->parsed()) return cmd_braid_orbit(cfg, level, start, b_str);
    if (loci->parsed()) return cmd_loci(cfg, lb, lc, la, lbe, sweep);
    if (fib->parsed()) return cmd_pr_fiber(cfg, fa, fbe);
    if (rea->parsed()) return cmd_realize(cfg, rp);
    if (fano->parsed()) {
      if (point < 1 || point > 7) throw BadIndex();
      return cmd_fano_group(cfg, point, all_points);
    }
    if (weyl->parsed()) return cmd_weyl(cfg, a1s, a2s);
    if (ver->parsed()) return cmd_verify(cfg, suite);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NormNotThree& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ZeroTorusCoordinate& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BadIndex& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const OrbitTruncated& e) {
    std::cerr << "truncated: " << e.what() << "\n";
    return kExitTruncated;
  } catch (const ClosureTruncated& e) {
    std::cerr << "truncated: " << e.what() << "\n";
    return kExitTruncated;
  } catch (const RealizationFailed& e) {
    std::cerr << "realization failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
