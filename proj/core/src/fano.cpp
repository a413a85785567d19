#include "g2cubics/fano.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "g2cubics/g2class.hpp"

namespace g2cubics {

std::array<FanoLine, 7> fano_lines() {
  std::array<FanoLine, 7> out{};
  const auto& data = fano_line_data();
  for (std::size_t i = 0; i < 7; ++i) {
    out[i] = {data[i][0], data[i][1], data[i][2]};
    std::sort(out[i].begin(), out[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Vector7<Rat> line_vector(const FanoLine& line) {
  Vector7<Rat> v;
  for (int idx : line) v.c[idx - 1] = 1;
  return v;
}

}  // namespace

std::array<FanoLine, 3> lines_through(int point) {
  if (point < 1 || point > 7) throw BadIndex();
  std::array<FanoLine, 3> out{};
  int n = 0;
  for (const FanoLine& l : fano_lines())
    if (std::find(l.begin(), l.end(), point) != l.end()) out[n++] = l;
  // Orient so the skew invariant of the vector triple is -2.
  const Rat p4 = oct_form(line_vector(out[0]).embed(),
                          oct_mul(line_vector(out[1]), line_vector(out[2])));
  if (p4 > 0) std::swap(out[1], out[2]);
  return out;
}

ExactG2Matrix ExactG2Matrix::identity() {
  ExactG2Matrix m;
  for (int i = 0; i < 7; ++i) m.at(i, i) = 4;
  return m;
}

ExactG2Matrix ExactG2Matrix::operator*(const ExactG2Matrix& o) const {
  ExactG2Matrix r;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 7; ++k) s += at(i, k) * o.at(k, j);
      if (s % 4 != 0)
        throw Error("product left the quarter-integer lattice");
      r.at(i, j) = s / 4;
    }
  }
  return r;
}

ExactG2Matrix ExactG2Matrix::transpose() const {
  ExactG2Matrix r;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix7<Rat> ExactG2Matrix::to_rational() const {
  Matrix7<Rat> m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = Rat(at(i, j), 4);
  return m;
}

bool ExactG2Matrix::is_orthogonal() const {
  return transpose() * *this == identity();
}

std::pair<Vector7<Rat>, ExactG2Matrix> line_to_generator(const FanoLine& line) {
  const Vector7<Rat> v = line_vector(line);
  const Matrix7<Rat> m = conj_map(v);
  ExactG2Matrix g;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      const Rat scaled = 4 * m(i, j);
      if (denominator(scaled) != 1)
        throw Error("generator entry not a quarter integer");
      g.at(i, j) = static_cast<std::int64_t>(numerator(scaled));
    }
  }
  return {v, g};
}

namespace {

struct MatrixHash {
  std::size_t operator()(const ExactG2Matrix& m) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : m.q) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

int element_order(const ExactG2Matrix& g, int cap = 10000) {
  const ExactG2Matrix id = ExactG2Matrix::identity();
  ExactG2Matrix acc = g;
  for (int n = 1; n <= cap; ++n) {
    if (acc == id) return n;
    acc = acc * g;
  }
  throw Error("element order exceeds cap");
}

}  // namespace

ClosureResult group_closure(const std::vector<ExactG2Matrix>& gens,
                            std::size_t max_order, bool keep_elements) {
  if (gens.empty()) throw Error("group_closure needs at least one generator");
  std::unordered_set<ExactG2Matrix, MatrixHash> seen;
  std::deque<ExactG2Matrix> frontier;
  seen.insert(ExactG2Matrix::identity());
  frontier.push_back(ExactG2Matrix::identity());
  while (!frontier.empty()) {
    const ExactG2Matrix m = frontier.front();
    frontier.pop_front();
    for (const ExactG2Matrix& g : gens) {
      ExactG2Matrix next = m * g;
      if (seen.insert(next).second) {
        if (seen.size() > max_order) throw ClosureTruncated(max_order);
        frontier.push_back(std::move(next));
      }
    }
  }
  ClosureResult out;
  out.order = seen.size();
  for (const ExactG2Matrix& m : seen) ++out.element_orders[element_order(m)];
  if (keep_elements) out.elements.assign(seen.begin(), seen.end());
  return out;
}

bool is_automorphism_exact(const ExactG2Matrix& m) {
  // Check g(e_i) g(e_j) = g(e_i e_j) with everything scaled by 16.
  const UnitTable& t = unit_table();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      std::int64_t real = 0;
      std::array<std::int64_t, 7> imag{};
      for (int r = 0; r < 7; ++r) {
        for (int s = 0; s < 7; ++s) {
          const std::int64_t prod = m.at(r, i) * m.at(s, j);
          if (r == s) {
            real -= prod;
          } else {
            const int e = t[r][s];  // signed 1-based unit index
            imag[std::abs(e) - 1] += (e > 0 ? prod : -prod);
          }
        }
      }
      if (i == j) {
        if (real != -16) return false;
        for (std::int64_t x : imag)
          if (x != 0) return false;
      } else {
        if (real != 0) return false;
        const int e = t[i][j];
        const int k = std::abs(e) - 1;
        const std::int64_t sign = e > 0 ? 4 : -4;
        for (int w = 0; w < 7; ++w)
          if (imag[w] != sign * m.at(w, k)) return false;
      }
    }
  }
  return true;
}

PInvariants<Rat> point_invariants(int point) {
  const auto ls = lines_through(point);
  return p_invariants(line_vector(ls[0]), line_vector(ls[1]), line_vector(ls[2]));
}

}  // namespace g2cubics
