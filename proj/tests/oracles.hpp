#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "skewrpp/qseries.hpp"
#include "skewrpp/shapes.hpp"

namespace oracle {

using skewrpp::BigInt;
using skewrpp::Cell;
using skewrpp::QSeries;

inline std::vector<Cell> cells_of(const skewrpp::Partition& outer, const skewrpp::Partition& inner) {
  std::vector<Cell> out;
  for (int r = 1; r <= outer.length(); ++r) {
    const int from = r <= inner.length() ? inner.parts()[r - 1] + 1 : 1;
    for (int c = from; c <= outer.parts()[r - 1]; ++c) out.push_back({r, c});
  }
  return out;
}

// Counts fillings with entries >= lo and total <= degree by odometer, keeping
// those accepted by ok, bucketed by total.
inline QSeries count_fillings(const std::vector<Cell>& cells, int lo, std::size_t degree,
                              const std::function<bool(const std::map<Cell, int>&)>& ok) {
  std::vector<BigInt> coeffs(degree + 1);
  const auto d = static_cast<int>(degree);
  std::vector<int> v(cells.size(), lo);
  if (static_cast<long>(cells.size()) * lo > d) return QSeries(degree);
  while (true) {
    int total = 0;
    for (int x : v) total += x;
    if (total <= d) {
      std::map<Cell, int> f;
      for (std::size_t i = 0; i < cells.size(); ++i) f[cells[i]] = v[i];
      if (ok(f)) coeffs[static_cast<std::size_t>(total)] += 1;
    }
    std::size_t pos = 0;
    while (pos < v.size() && v[pos] == d) v[pos++] = lo;
    if (pos == v.size()) break;
    ++v[pos];
  }
  return QSeries(degree, std::move(coeffs));
}

inline bool rows_cols_ok(const std::map<Cell, int>& f, bool strict_cols) {
  for (const auto& [c, x] : f) {
    auto right = f.find({c.row, c.col + 1});
    if (right != f.end() && right->second < x) return false;
    auto below = f.find({c.row + 1, c.col});
    if (below != f.end() && (below->second < x || (strict_cols && below->second == x))) return false;
  }
  return true;
}

inline QSeries rpp_series(const skewrpp::Partition& outer, const skewrpp::Partition& inner, std::size_t degree) {
  return count_fillings(cells_of(outer, inner), 0, degree,
                        [](const std::map<Cell, int>& f) { return rows_cols_ok(f, false); });
}

inline QSeries ssyt_series(const skewrpp::Partition& outer, const skewrpp::Partition& inner, std::size_t degree) {
  return count_fillings(cells_of(outer, inner), 1, degree,
                        [](const std::map<Cell, int>& f) { return rows_cols_ok(f, true); });
}

// Linear extensions of the cell poset by dynamic programming over subsets.
inline BigInt linear_extensions(const skewrpp::Partition& outer, const skewrpp::Partition& inner) {
  const auto cells = cells_of(outer, inner);
  const std::size_t n = cells.size();
  std::vector<std::uint32_t> below(n, 0);  // cells that must precede cell i
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && cells[j].row <= cells[i].row && cells[j].col <= cells[i].col) below[i] |= 1u << j;
    }
  }
  std::vector<BigInt> ways(std::size_t{1} << n);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i)) && (below[i] & mask) == below[i]) ways[mask | (1u << i)] += ways[mask];
    }
  }
  return ways.back();
}

// Laplace expansion along the first row.
inline QSeries cofactor_det(const std::vector<std::vector<QSeries>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  QSeries total(m[0][0].truncation());
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::vector<QSeries>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<QSeries> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    QSeries term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Alternating words of a given length by weight, by a transfer over the last letter.
inline QSeries alt_word_series(std::size_t length, std::size_t degree) {
  const auto d = static_cast<int>(degree);
  // ways[w][x]: words so far with weight w ending in letter x.
  std::vector<std::vector<BigInt>> ways(degree + 1, std::vector<BigInt>(degree + 1));
  for (int x = 0; x <= d; ++x) ways[x][x] = 1;
  for (std::size_t pos = 1; pos < length; ++pos) {
    std::vector<std::vector<BigInt>> next(degree + 1, std::vector<BigInt>(degree + 1));
    const bool valley = pos % 2 == 1;
    for (int w = 0; w <= d; ++w) {
      for (int x = 0; x <= d; ++x) {
        if (ways[w][x] == 0) continue;
        for (int y = 0; w + y <= d; ++y) {
          if (valley ? y <= x : y >= x) next[w + y][y] += ways[w][x];
        }
      }
    }
    ways = std::move(next);
  }
  std::vector<BigInt> coeffs(degree + 1);
  for (int w = 0; w <= d; ++w) {
    for (int x = 0; x <= d; ++x) coeffs[w] += ways[w][x];
  }
  return QSeries(degree, std::move(coeffs));
}

}  // namespace oracle
