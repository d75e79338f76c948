#include "skewrpp/tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "skewrpp/errors.hpp"

namespace skewrpp {

Filling::Filling(SkewShape shape, std::map<Cell, int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto cells = skew_cells(shape_);
  if (cells.size() != entries_.size()) {
    throw ValidationError("Filling: entry count does not match the shape");
  }
  for (const Cell& c : cells) {
    const auto it = entries_.find(c);
    if (it == entries_.end()) throw ValidationError("Filling: missing entry for a cell of the shape");
    if (it->second < 0) throw ValidationError("Filling: entries must be nonnegative");
  }
}

long Filling::weight() const {
  long total = 0;
  for (const auto& [cell, value] : entries_) total += value;
  return total;
}

namespace {

// Checks every cell against the neighbour to its right and the one below.
template <class RowOk, class ColOk>
bool check_neighbours(const Filling& f, RowOk row_ok, ColOk col_ok) {
  for (const auto& [cell, value] : f.entries()) {
    const Cell right{cell.row, cell.col + 1};
    const Cell below{cell.row + 1, cell.col};
    if (f.shape().contains(right) && !row_ok(value, f.at(right))) return false;
    if (f.shape().contains(below) && !col_ok(value, f.at(below))) return false;
  }
  return true;
}

}  // namespace

bool Filling::is_rpp() const {
  return check_neighbours(*this, std::less_equal<>{}, std::less_equal<>{});
}

bool Filling::is_ssyt() const {
  for (const auto& [cell, value] : entries_) {
    if (value < 1) return false;
  }
  return check_neighbours(*this, std::less_equal<>{}, std::less<>{});
}

bool Filling::is_syt() const {
  std::vector<int> values;
  for (const auto& [cell, value] : entries_) values.push_back(value);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != static_cast<int>(i) + 1) return false;
  }
  return check_neighbours(*this, std::less<>{}, std::less<>{});
}

BigInt count_syt_hook(const Partition& p) {
  BigInt numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(p.size()));
  BigInt denominator = 1;
  for (const Cell& c : p.cells()) denominator *= hook_length(p, c);
  return numerator / denominator;
}

namespace {

// Shape data shared by the backtracking oracles. Cells are in row-major
// order, so the left and upper neighbours of a cell always come earlier.
struct ShapeIndex {
  std::vector<Cell> cells;
  std::vector<int> left;   // index of the left neighbour in the shape, or -1
  std::vector<int> above;  // index of the upper neighbour in the shape, or -1
  std::vector<int> dominated;  // cells (r', c') with r' >= r and c' >= c, itself included

  explicit ShapeIndex(const SkewShape& s) : cells(skew_cells(s)) {
    const std::size_t n = cells.size();
    left.assign(n, -1);
    above.assign(n, -1);
    dominated.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Cell a = cells[i];
        const Cell b = cells[j];
        if (b.row == a.row && b.col == a.col - 1) left[i] = static_cast<int>(j);
        if (b.row == a.row - 1 && b.col == a.col) above[i] = static_cast<int>(j);
        if (b.row >= a.row && b.col >= a.col) ++dominated[i];
      }
    }
  }
};

// Enumerates fillings with entries >= min_entry, weakly increasing rows, and
// columns increasing by at least column_gap, with total weight <= max_weight.
class WeightedFillingSearch {
 public:
  WeightedFillingSearch(const SkewShape& s, int min_entry, int column_gap, long max_weight)
      : index_(s), min_entry_(min_entry), column_gap_(column_gap), max_weight_(max_weight),
        values_(index_.cells.size()) {}

  template <class Visit>
  void run(Visit&& visit) {
    if (max_weight_ < 0) return;
    recurse(0, max_weight_, visit);
  }

  const ShapeIndex& index() const { return index_; }
  const std::vector<int>& values() const { return values_; }

 private:
  template <class Visit>
  void recurse(std::size_t pos, long budget, Visit& visit) {
    const std::size_t n = index_.cells.size();
    if (pos == n) {
      visit(max_weight_ - budget);
      return;
    }
    long lo = min_entry_;
    if (index_.left[pos] >= 0) lo = std::max<long>(lo, values_[static_cast<std::size_t>(index_.left[pos])]);
    if (index_.above[pos] >= 0) {
      lo = std::max<long>(lo, values_[static_cast<std::size_t>(index_.above[pos])] + column_gap_);
    }
    // Dominated cells (this one included) are at least v; the other later
    // cells are at least min_entry.
    const long dominated = index_.dominated[pos];
    const long others = (static_cast<long>(n - pos) - dominated) * min_entry_;
    for (long v = lo; v * dominated + others <= budget; ++v) {
      values_[pos] = static_cast<int>(v);
      recurse(pos + 1, budget - v, visit);
    }
  }

  ShapeIndex index_;
  int min_entry_;
  int column_gap_;
  long max_weight_;
  std::vector<int> values_;
};

QSeries weight_counts(const SkewShape& s, std::size_t degree, int min_entry, int column_gap) {
  std::vector<unsigned long long> counts(degree + 1, 0);
  WeightedFillingSearch search(s, min_entry, column_gap, static_cast<long>(degree));
  search.run([&](long weight) { ++counts[static_cast<std::size_t>(weight)]; });
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return QSeries(degree, std::move(coeffs));
}

void syt_rec(const ShapeIndex& idx, std::vector<bool>& placed, std::size_t filled, BigInt& count) {
  if (filled == idx.cells.size()) {
    ++count;
    return;
  }
  for (std::size_t i = 0; i < idx.cells.size(); ++i) {
    if (placed[i]) continue;
    const int l = idx.left[i];
    const int a = idx.above[i];
    if (l >= 0 && !placed[static_cast<std::size_t>(l)]) continue;
    if (a >= 0 && !placed[static_cast<std::size_t>(a)]) continue;
    placed[i] = true;
    syt_rec(idx, placed, filled + 1, count);
    placed[i] = false;
  }
}

}  // namespace

BigInt count_syt_brute(const SkewShape& s, int cap) {
  if (s.size() > cap) {
    throw ResourceError("count_syt_brute: " + std::to_string(s.size()) + " cells exceeds cap " +
                        std::to_string(cap));
  }
  const ShapeIndex idx(s);
  std::vector<bool> placed(idx.cells.size(), false);
  BigInt count = 0;
  syt_rec(idx, placed, 0, count);
  return count;
}

QSeries rpp_gf_brute(const SkewShape& s, std::size_t degree) {
  return weight_counts(s, degree, 0, 0);
}

QSeries ssyt_gf_brute(const SkewShape& s, std::size_t degree) {
  return weight_counts(s, degree, 1, 1);
}

void for_each_rpp(const SkewShape& s, long max_weight,
                  const std::function<void(const Filling&)>& fn) {
  WeightedFillingSearch search(s, 0, 0, max_weight);
  search.run([&](long) {
    std::map<Cell, int> entries;
    const auto& cells = search.index().cells;
    for (std::size_t i = 0; i < cells.size(); ++i) entries.emplace(cells[i], search.values()[i]);
    fn(Filling(s, std::move(entries)));
  });
}

std::vector<Cell> ribbon_cells(int m) {
  if (m < 2) throw DomainError("ribbon_cells: m must be at least 2");
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(2 * m - 3));
  for (int t = 0; t <= m - 2; ++t) {
    if (t > 0) out.push_back({m - 1 - t, t});
    out.push_back({m - 1 - t, 1 + t});
  }
  return out;
}

AltWord ribbon_to_word(const Filling& f) {
  const Partition& outer = f.shape().outer();
  const int m = outer.length() + 1;
  if (m < 3 || outer != staircase(m) || f.shape().inner() != staircase(m - 2)) {
    throw DomainError("ribbon_to_word: shape must be delta_{n+2} / delta_n with n >= 1");
  }
  std::vector<int> letters;
  for (const Cell& c : ribbon_cells(m)) letters.push_back(f.at(c));
  return AltWord(std::move(letters));
}

Filling word_to_ribbon(const AltWord& w) {
  if (w.size() < 3 || w.size() % 2 == 0) {
    throw DomainError("word_to_ribbon: word length must be 2n + 1 with n >= 1");
  }
  const int m = static_cast<int>(w.size() + 3) / 2;
  const auto cells = ribbon_cells(m);
  std::map<Cell, int> entries;
  for (std::size_t i = 0; i < cells.size(); ++i) entries.emplace(cells[i], w[i]);
  return Filling(SkewShape(staircase(m), staircase(m - 2)), std::move(entries));
}

}  // namespace skewrpp
