#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace skewrpp {

/// A square of a Young diagram, 1-based (row, col).
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive parts. Trailing zeros supplied on
/// construction are dropped; the empty partition is a valid value.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// |lambda|, the sum of the parts.
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// lambda_i for 1-based i, zero past the last part.
  int row_length(int i) const;
  /// lambda'_j for 1-based j.
  int column_length(int j) const;
  bool contains(Cell c) const;
  /// All cells in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// delta_n = (n-1, n-2, ..., 1); delta_0 and delta_1 are empty.
Partition staircase(int n);

/// arm + leg + 1. Throws DomainError when the cell is not in the partition.
int hook_length(const Partition& outer, Cell cell);

Partition conjugate(const Partition& p);

/// True when inner fits inside outer row by row.
bool contains(const Partition& outer, const Partition& inner);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions whose diagram fits inside outer (including empty and outer).
std::vector<Partition> partitions_inside(const Partition& outer);

/// lambda / mu with mu contained in lambda.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws ValidationError unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(Cell c) const { return outer_.contains(c) && !inner_.contains(c); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Cells of lambda not in mu, in row-major order.
std::vector<Cell> skew_cells(const SkewShape& s);

/// "5,4,4,2" or "-" for the empty partition. Throws ValidationError.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

}  // namespace skewrpp
