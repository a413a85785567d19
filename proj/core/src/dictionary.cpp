#include <functional>
#include <random>

#include "g2cubics/braid.hpp"

namespace g2cubics {

namespace {

struct XyzState {
  SurfacePoint<Rat> pt;
  Rat b;
};

// xyz-level moves: +-1, +-2 braid tokens, 0 = the y<->z swap sigma.
XyzState apply_token(int tok, const XyzState& s) {
  if (tok == 0) return {{s.pt.x, s.pt.z, s.pt.y}, s.b};
  return {braid_xyz(tok, s.pt, s.b), s.b};
}

XyzState apply_word(const std::vector<int>& word, XyzState s) {
  for (int tok : word) s = apply_token(tok, s);
  return s;
}

std::string word_name(const std::vector<int>& word) {
  std::string out;
  for (int tok : word) {
    if (!out.empty()) out += " ";
    if (tok == 0)
      out += "sigma";
    else
      out += std::string("beta") + std::to_string(std::abs(tok)) +
             (tok < 0 ? "^-1" : "");
  }
  return out.empty() ? "id" : out;
}

bool states_equal(const XyzState& a, const XyzState& b) {
  return a.pt.x == b.pt.x && a.pt.y == b.pt.y && a.pt.z == b.pt.z && a.b == b.b;
}

}  // namespace

DictionaryReport equivariance_dictionary(unsigned seed, int samples) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  auto rand_rat = [&] { return Rat(num(rng), den(rng)); };

  std::vector<PInvariants<Rat>> ps;
  ps.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    ps.push_back({rand_rat(), rand_rat(), rand_rat(), rand_rat()});

  // phi conjugate of a p-level generator, as a map on xyz states.
  auto phi_conjugate = [](int p_gen, const XyzState& s) {
    const PInvariants<Rat> p = phi_inv(s.pt, s.b);
    const auto [pt2, b2] = phi(braid_p(p_gen, p));
    return XyzState{pt2, b2};
  };

  auto holds_on_samples = [&](int p_gen, const std::vector<int>& xyz_word) {
    for (const auto& p : ps) {
      const auto [pt, b] = phi(p);
      const XyzState s{pt, b};
      if (!states_equal(phi_conjugate(p_gen, s), apply_word(xyz_word, s)))
        return false;
    }
    return true;
  };

  DictionaryReport report;
  // Candidates from expanding phi symbolically:
  //   phi beta2^p phi^-1 = beta1^xyz
  //   phi beta1^p phi^-1 = sigma (beta2^xyz)^-1 sigma
  const std::vector<std::pair<int, std::vector<int>>> candidates = {
      {2, {1}},
      {1, {0, -2, 0}},
  };

  for (const auto& [p_gen, word] : candidates) {
    DictionaryEntry entry;
    entry.p_generator = std::string("beta") + std::to_string(p_gen);
    if (holds_on_samples(p_gen, word)) {
      entry.xyz_word = word_name(word);
      entry.verified = true;
    } else {
      // Bounded word search over the xyz tokens including sigma.
      const std::array<int, 5> alphabet = {1, -1, 2, -2, 0};
      std::vector<int> found;
      std::function<bool(std::vector<int>&, int)> search =
          [&](std::vector<int>& word_acc, int depth) {
            if (holds_on_samples(p_gen, word_acc)) {
              found = word_acc;
              return true;
            }
            if (depth == 0) return false;
            for (int tok : alphabet) {
              word_acc.push_back(tok);
              if (search(word_acc, depth - 1)) return true;
              word_acc.pop_back();
            }
            return false;
          };
      std::vector<int> acc;
      if (search(acc, 6)) {
        entry.xyz_word = word_name(found);
        entry.verified = true;
      } else {
        entry.xyz_word = "(not found)";
      }
    }
    report.entries.push_back(entry);
  }

  // Klein orbit sets must coincide under phi regardless of the dictionary.
  const PInvariants<Rat> klein_p{1, 1, 1, -2};
  const auto orbit_p = braid_orbit_p(klein_p, 64);
  const auto orbit_x = braid_orbit_xyz({0, 0, 0}, Rat(-1), 64);
  std::set<XyzKey> image;
  for (const auto& key : orbit_p.points) {
    const auto [pt, b] = phi(PInvariants<Rat>{key[0], key[1], key[2], key[3]});
    image.insert(XyzKey{pt.x, pt.y, pt.z});
  }
  std::set<XyzKey> target(orbit_x.points.begin(), orbit_x.points.end());
  report.klein_orbits_match = image == target;

  report.all_verified = report.klein_orbits_match;
  for (const auto& e : report.entries) report.all_verified &= e.verified;
  return report;
}

}  // namespace g2cubics
