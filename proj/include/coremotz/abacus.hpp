#pragma once

#include "coremotz/partition.hpp"

#include <string>
#include <vector>

namespace coremotz {

// Label of position (row, column) on the (s+d, d)-abacus: (s+d)*row + d*column.
// Throws DomainError for column outside 0..s+d.
int label(int row, int column, int s, int d);

// f(0..s+d): for each column, the row of the spacer carrying the smallest
// nonnegative label in that column.
struct BoundaryProfile {
  int s = 1;
  int d = 1;
  std::vector<int> values;

  int operator()(int column) const { return values.at(column); }
  std::size_t size() const { return values.size(); }
  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

// Lowest row whose label in `column` is nonnegative.
int first_nonnegative_row(int column, int s, int d);

// Total for any partition; the unit-step and window properties only hold for
// (s, s+d, ..., s+pd)-cores and are checked by verify_profile.
BoundaryProfile boundary_profile(const Partition& lambda, int s, int d);

// Endpoints f(0)=0, f(s+d)=-d; unit steps; and for p >= 3, whenever
// f(j-1) = f(j)-1 the values f(j-p+1..j-2) (clipped at 0) are >= f(j-1).
bool verify_profile(const BoundaryProfile& f, int p);

// Text grid of the (s+d, d)-abacus for rows [row_lo, row_hi], columns 0..s+d.
// Beads print as `(n)`, spacers as `n`.
std::string render_abacus(const Partition& lambda, int s, int d, int row_lo, int row_hi);

// Classic s-abacus: rows 0..rows-1, columns 0..s-1, label s*row + column.
std::string render_s_abacus(const Partition& lambda, int s, int rows);

// SVG of the (s+d, d)-abacus with one circle per bead and the boundary
// polyline through (j, f(j)). User coordinates: column j -> x = j, row i -> y = i.
std::string render_abacus_svg(const Partition& lambda, int s, int d, int row_lo, int row_hi);

}  // namespace coremotz
