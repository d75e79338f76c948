#pragma once

#include <cstddef>
#include <functional>
#include <map>

#include "skewrpp/alt_word.hpp"
#include "skewrpp/qseries.hpp"
#include "skewrpp/shapes.hpp"

namespace skewrpp {

/// An assignment of nonnegative integers to the cells of a skew shape.
class Filling {
 public:
  /// Throws ValidationError unless the keys are exactly the cells of the shape
  /// and every entry is nonnegative.
  Filling(SkewShape shape, std::map<Cell, int> entries);

  const SkewShape& shape() const { return shape_; }
  const std::map<Cell, int>& entries() const { return entries_; }
  int at(Cell c) const { return entries_.at(c); }
  long weight() const;

  /// Weakly increasing along rows and down columns.
  bool is_rpp() const;
  /// Weakly increasing rows, strictly increasing columns, entries >= 1.
  bool is_ssyt() const;
  /// Entries are 1..|shape|, strictly increasing along rows and columns.
  bool is_syt() const;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  SkewShape shape_;
  std::map<Cell, int> entries_;
};

inline constexpr int kDefaultSytCap = 10;

/// n! / prod of hook lengths.
BigInt count_syt_hook(const Partition& p);

/// Counts standard fillings by backtracking. Throws ResourceError when the
/// shape has more than cap cells.
BigInt count_syt_brute(const SkewShape& s, int cap = kDefaultSytCap);

/// Number of reverse plane partitions of each weight 0..D.
QSeries rpp_gf_brute(const SkewShape& s, std::size_t degree);

/// Number of SSYT (entries >= 1) of each weight 0..D.
QSeries ssyt_gf_brute(const SkewShape& s, std::size_t degree);

/// Visits every reverse plane partition of weight at most max_weight.
void for_each_rpp(const SkewShape& s, long max_weight, const std::function<void(const Filling&)>& fn);

/// Cells of the ribbon delta_m / delta_{m-2} from the bottom-left square to
/// the top-right square (2m - 3 cells, m >= 2).
std::vector<Cell> ribbon_cells(int m);

/// Reads an RPP of shape delta_{n+2} / delta_n (n >= 1) along the ribbon.
/// Throws DomainError for any other shape.
AltWord ribbon_to_word(const Filling& f);

/// Inverse of ribbon_to_word; the word length must be 2n + 1 with n >= 1.
Filling word_to_ribbon(const AltWord& w);

}  // namespace skewrpp
