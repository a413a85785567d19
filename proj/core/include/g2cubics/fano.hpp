#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "g2cubics/fricke.hpp"
#include "g2cubics/matrix.hpp"
#include "g2cubics/octonion.hpp"

namespace g2cubics {

/// A Fano line as a sorted index triple in {1..7}.
using FanoLine = std::array<int, 3>;

/// The seven oriented quaternionic triples used to build the table.
const std::array<std::array<int, 3>, 7>& fano_line_data();

/// The seven lines, sorted.
std::array<FanoLine, 7> fano_lines();

/// The three lines through a point, ordered so that the triple of line
/// vectors has skew invariant p4 = <v1, v2 v3> = -2.
std::array<FanoLine, 3> lines_through(int point);

/// 7x7 matrix over (1/4)Z: entries stored as integers scaled by 4.
/// Conjugation by (1+v)/2 with v a line vector lands here, and the group
/// these generate stays here (octavian-integer automorphisms).
struct ExactG2Matrix {
  std::array<std::int64_t, 49> q{};  // entry (r,c) times 4

  static ExactG2Matrix identity();
  std::int64_t& at(int r, int c) { return q[static_cast<std::size_t>(7 * r + c)]; }
  std::int64_t at(int r, int c) const { return q[static_cast<std::size_t>(7 * r + c)]; }

  ExactG2Matrix operator*(const ExactG2Matrix& o) const;  // checked /4
  ExactG2Matrix transpose() const;
  bool operator==(const ExactG2Matrix& o) const { return q == o.q; }
  bool operator<(const ExactG2Matrix& o) const { return q < o.q; }

  Matrix7<Rat> to_rational() const;
  bool is_orthogonal() const;  // m^T m = 1
};

/// The norm-3 vector of a line and the exact conjugation automorphism.
std::pair<Vector7<Rat>, ExactG2Matrix> line_to_generator(const FanoLine& line);

struct ClosureResult {
  std::size_t order = 0;
  std::map<int, std::size_t> element_orders;  // order -> count
  std::vector<ExactG2Matrix> elements;
};

/// BFS closure of the generated group with exact dedup; throws
/// ClosureTruncated past max_order.
ClosureResult group_closure(const std::vector<ExactG2Matrix>& gens,
                            std::size_t max_order = 100000,
                            bool keep_elements = false);

/// Exact integer-arithmetic automorphism test for quarter-integer matrices.
bool is_automorphism_exact(const ExactG2Matrix& m);

/// p-invariants of the three line vectors through a point; equals
/// (1,1,1,-2) for every point.
PInvariants<Rat> point_invariants(int point);

}  // namespace g2cubics
