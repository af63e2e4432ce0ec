#include "coremotz/abacus.hpp"

#include <algorithm>
#include <sstream>

namespace coremotz {

namespace {

void require_coprime(int s, int d) {
  if (s < 1 || d < 1 || gcd(s, d) != 1) {
    throw DomainError("abacus needs positive coprime s, d; got s=" + std::to_string(s) + " d=" + std::to_string(d));
  }
}

std::string format_grid(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 0;
  for (const auto& row : cells)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += ' ';
      line += std::string(width - row[j].size(), ' ') + row[j];
    }
    out += line + '\n';
  }
  return out;
}

std::string cell_text(int value, const BetaSet& beta) {
  if (value > 0 && beta.contains(value)) return "(" + std::to_string(value) + ")";
  return std::to_string(value);
}

}  // namespace

int label(int row, int column, int s, int d) {
  if (column < 0 || column > s + d) {
    throw DomainError("abacus column " + std::to_string(column) + " outside 0.." + std::to_string(s + d));
  }
  return (s + d) * row + d * column;
}

int first_nonnegative_row(int column, int s, int d) { return ceil_div(-d * column, s + d); }

BoundaryProfile boundary_profile(const Partition& lambda, int s, int d) {
  require_coprime(s, d);
  const BetaSet beta = beta_set(lambda);
  BoundaryProfile f{s, d, {}};
  f.values.reserve(s + d + 1);
  for (int j = 0; j <= s + d; ++j) {
    int row = first_nonnegative_row(j, s, d);
    while (beta.contains(label(row, j, s, d))) ++row;
    f.values.push_back(row);
  }
  return f;
}

bool verify_profile(const BoundaryProfile& f, int p) {
  const int n = f.s + f.d;
  if (static_cast<int>(f.values.size()) != n + 1) return false;
  if (f(0) != 0 || f(n) != -f.d) return false;
  for (int j = 1; j <= n; ++j) {
    if (std::abs(f(j) - f(j - 1)) > 1) return false;
  }
  if (p < 3) return true;
  for (int j = 1; j <= n; ++j) {
    if (f(j - 1) != f(j) - 1) continue;
    for (int m = std::max(0, j - p + 1); m <= j - 2; ++m) {
      if (f(m) < f(j - 1)) return false;
    }
  }
  return true;
}

std::string render_abacus(const Partition& lambda, int s, int d, int row_lo, int row_hi) {
  require_coprime(s, d);
  const BetaSet beta = beta_set(lambda);
  std::vector<std::vector<std::string>> cells;
  for (int i = row_lo; i <= row_hi; ++i) {
    auto& row = cells.emplace_back();
    for (int j = 0; j <= s + d; ++j) row.push_back(cell_text(label(i, j, s, d), beta));
  }
  return format_grid(cells);
}

std::string render_s_abacus(const Partition& lambda, int s, int rows) {
  if (s < 1) throw DomainError("s-abacus needs s >= 1");
  const BetaSet beta = beta_set(lambda);
  std::vector<std::vector<std::string>> cells;
  for (int i = 0; i < rows; ++i) {
    auto& row = cells.emplace_back();
    for (int j = 0; j < s; ++j) row.push_back(cell_text(s * i + j, beta));
  }
  return format_grid(cells);
}

std::string render_abacus_svg(const Partition& lambda, int s, int d, int row_lo, int row_hi) {
  require_coprime(s, d);
  const BetaSet beta = beta_set(lambda);
  const BoundaryProfile f = boundary_profile(lambda, s, d);
  const int lo = std::min(row_lo, *std::min_element(f.values.begin(), f.values.end()));
  const int hi = std::max(row_hi, *std::max_element(f.values.begin(), f.values.end()));

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 " << lo - 0.5 << ' ' << s + d + 1 << ' '
      << hi - lo + 1 << "\" width=\"" << 48 * (s + d + 1) << "\" height=\"" << 48 * (hi - lo + 1) << "\">\n";
  svg << "<g font-family=\"monospace\" font-size=\"0.3\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (int i = row_lo; i <= row_hi; ++i) {
    for (int j = 0; j <= s + d; ++j) {
      const int value = label(i, j, s, d);
      if (value > 0 && beta.contains(value)) {
        svg << "<circle cx=\"" << j << "\" cy=\"" << i << "\" r=\"0.35\" fill=\"none\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
      }
      svg << "<text x=\"" << j << "\" y=\"" << i << "\">" << value << "</text>\n";
    }
  }
  svg << "</g>\n<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"0.06\" points=\"";
  for (int j = 0; j <= s + d; ++j) {
    if (j) svg << ' ';
    svg << j << ',' << f(j);
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace coremotz
