#include "g2cubics/octonion.hpp"

#include <array>
#include <stdexcept>

namespace g2cubics {

// The seven oriented quaternionic triples; indices mod 7 with e7 for e0.
// Each line (i,j,k) satisfies ei*ej = ek cyclically.
static constexpr std::array<std::array<int, 3>, 7> kLines = {{
    {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
}};

const std::array<std::array<int, 3>, 7>& fano_line_data() { return kLines; }

// Frozen signed table; regenerated and cross-checked by the test suite.
static constexpr UnitTable kTable = {{
    {0, 4, 7, -2, 6, -5, -3},
    {-4, 0, 5, 1, -3, 7, -6},
    {-7, -5, 0, 6, 2, -4, 1},
    {2, -1, -6, 0, 7, 3, -5},
    {-6, 3, -2, -7, 0, 1, 4},
    {5, -7, 4, -3, -1, 0, 2},
    {3, 6, -1, 5, -4, -2, 0},
}};

const UnitTable& unit_table() { return kTable; }

UnitTable generate_unit_table() {
  UnitTable t{};
  for (auto& row : t) row.fill(0);
  for (const auto& line : kLines) {
    const int i = line[0], j = line[1], k = line[2];
    // quaternionic triple: ei*ej = ek, ej*ek = ei, ek*ei = ej, reversed negated
    const std::array<std::array<int, 3>, 3> cyc = {{{i, j, k}, {j, k, i}, {k, i, j}}};
    for (const auto& [a, b, c] : cyc) {
      if (t[a - 1][b - 1] != 0 || t[b - 1][a - 1] != 0)
        throw std::logic_error("Fano lines assign a product twice");
      t[a - 1][b - 1] = c;
      t[b - 1][a - 1] = -c;
    }
  }
  // ei*ei = -1, encoded as 0 on the diagonal.
  return t;
}

}  // namespace g2cubics
