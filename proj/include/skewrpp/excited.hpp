#pragma once

#include <cstddef>
#include <vector>

#include "skewrpp/qseries.hpp"
#include "skewrpp/shapes.hpp"

namespace skewrpp {

/// A set of cells of lambda, kept sorted. Diagrams produced by
/// enumerate_excited are reachable from mu by excited moves.
class ExcitedDiagram {
 public:
  /// Throws ValidationError if a cell lies outside outer or is repeated.
  ExcitedDiagram(Partition outer, std::vector<Cell> cells);

  const Partition& outer() const { return outer_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(Cell c) const;
  /// Cells of lambda not in the diagram, row-major.
  std::vector<Cell> complement() const;

  friend bool operator==(const ExcitedDiagram&, const ExcitedDiagram&) = default;

 private:
  Partition outer_;
  std::vector<Cell> cells_;
};

/// Cells (i,j) of d whose neighbours (i,j+1), (i+1,j), (i+1,j+1) are all in
/// lambda and none is in d.
std::vector<Cell> active_cells(const ExcitedDiagram& d);

/// The diagram with active cell c replaced by (c.row+1, c.col+1).
/// Throws DomainError if c is not active.
ExcitedDiagram excited_move(const ExcitedDiagram& d, Cell c);

/// All excited diagrams of outer/inner, ordered by their sorted cell lists.
std::vector<ExcitedDiagram> enumerate_excited(const Partition& outer, const Partition& inner);

inline constexpr int kDefaultPleasantCap = 16;

/// All subsets of lambda contained in the complement of some excited diagram,
/// each once, ordered by sorted cell list. Throws ResourceError when |lambda|
/// exceeds cap.
std::vector<std::vector<Cell>> enumerate_pleasant(const Partition& outer, const Partition& inner,
                                                  int cap = kDefaultPleasantCap);

/// |lambda/mu|! times the sum over excited diagrams D of prod_{u not in D} 1/h_u.
BigInt naruse_count(const Partition& outer, const Partition& inner);

/// SSYT generating function (entries >= 1) from the excited-diagram sum.
QSeries ssyt_gf_excited(const Partition& outer, const Partition& inner, std::size_t degree);

/// RPP generating function from the pleasant-diagram sum.
QSeries rpp_gf_pleasant(const Partition& outer, const Partition& inner, std::size_t degree,
                        int cap = kDefaultPleasantCap);

/// prod over cells of lambda of 1/(1 - q^{h_u}).
QSeries hook_product_gf(const Partition& outer, std::size_t degree);

}  // namespace skewrpp
