#include "skewrpp/excited.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_set>

#include "skewrpp/errors.hpp"

namespace skewrpp {

ExcitedDiagram::ExcitedDiagram(Partition outer, std::vector<Cell> cells)
    : outer_(std::move(outer)), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw ValidationError("ExcitedDiagram: repeated cell");
  }
  for (const Cell& c : cells_) {
    if (!outer_.contains(c)) throw ValidationError("ExcitedDiagram: cell outside the outer shape");
  }
}

bool ExcitedDiagram::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<Cell> ExcitedDiagram::complement() const {
  std::vector<Cell> out;
  for (const Cell& c : outer_.cells()) {
    if (!contains(c)) out.push_back(c);
  }
  return out;
}

std::vector<Cell> active_cells(const ExcitedDiagram& d) {
  std::vector<Cell> out;
  const auto free = [&](Cell c) { return d.outer().contains(c) && !d.contains(c); };
  for (const Cell& c : d.cells()) {
    if (free({c.row, c.col + 1}) && free({c.row + 1, c.col}) && free({c.row + 1, c.col + 1})) {
      out.push_back(c);
    }
  }
  return out;
}

ExcitedDiagram excited_move(const ExcitedDiagram& d, Cell c) {
  const auto active = active_cells(d);
  if (std::find(active.begin(), active.end(), c) == active.end()) {
    throw DomainError("excited_move: cell is not active");
  }
  std::vector<Cell> cells = d.cells();
  *std::find(cells.begin(), cells.end(), c) = Cell{c.row + 1, c.col + 1};
  return ExcitedDiagram(d.outer(), std::move(cells));
}

std::vector<ExcitedDiagram> enumerate_excited(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) throw ValidationError("enumerate_excited: inner not contained in outer");
  std::set<std::vector<Cell>> seen;
  std::deque<ExcitedDiagram> queue;
  ExcitedDiagram start(outer, inner.cells());
  seen.insert(start.cells());
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    const ExcitedDiagram d = std::move(queue.front());
    queue.pop_front();
    for (const Cell& c : active_cells(d)) {
      ExcitedDiagram next = excited_move(d, c);
      if (seen.insert(next.cells()).second) queue.push_back(std::move(next));
    }
  }
  std::vector<ExcitedDiagram> out;
  out.reserve(seen.size());
  for (const auto& cells : seen) out.emplace_back(outer, cells);
  return out;
}

std::vector<std::vector<Cell>> enumerate_pleasant(const Partition& outer, const Partition& inner,
                                                  int cap) {
  if (outer.size() > cap || outer.size() > 63) {
    throw ResourceError("enumerate_pleasant: " + std::to_string(outer.size()) +
                        " cells exceeds cap " + std::to_string(cap));
  }
  const std::vector<Cell> all = outer.cells();
  std::unordered_set<std::uint64_t> masks;
  for (const ExcitedDiagram& d : enumerate_excited(outer, inner)) {
    std::uint64_t free = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!d.contains(all[i])) free |= std::uint64_t{1} << i;
    }
    // Every submask of the complement, including the empty set.
    for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
      masks.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<std::vector<Cell>> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) cells.push_back(all[i]);
    }
    out.push_back(std::move(cells));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt naruse_count(const Partition& outer, const Partition& inner) {
  BigRational sum = 0;
  for (const ExcitedDiagram& d : enumerate_excited(outer, inner)) {
    BigInt hooks = 1;
    for (const Cell& c : d.complement()) hooks *= hook_length(outer, c);
    sum += BigRational(1, hooks);
  }
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(outer.size() - inner.size()));
  BigRational result = sum * factorial;
  result.canonicalize();
  if (result.get_den() != 1) {
    throw InternalError("naruse_count: non-integer result " + result.get_str());
  }
  return result.get_num();
}

QSeries ssyt_gf_excited(const Partition& outer, const Partition& inner, std::size_t degree) {
  QSeries total(degree);
  for (const ExcitedDiagram& d : enumerate_excited(outer, inner)) {
    // The excited-diagram product counts SSYT with entries >= 0; shifting
    // every entry up by one contributes q^{|lambda/mu|}.
    std::size_t shift = static_cast<std::size_t>(outer.size() - inner.size());
    QSeries term = QSeries::one(degree);
    for (const Cell& c : d.complement()) {
      shift += static_cast<std::size_t>(outer.column_length(c.col) - c.row);
      term *= geometric(degree, static_cast<std::size_t>(hook_length(outer, c)));
    }
    total += term.shifted(shift);
  }
  return total;
}

QSeries rpp_gf_pleasant(const Partition& outer, const Partition& inner, std::size_t degree,
                        int cap) {
  QSeries total(degree);
  for (const auto& diagram : enumerate_pleasant(outer, inner, cap)) {
    std::size_t shift = 0;
    QSeries term = QSeries::one(degree);
    for (const Cell& c : diagram) {
      const auto h = static_cast<std::size_t>(hook_length(outer, c));
      shift += h;
      if (shift > degree) break;
      term *= geometric(degree, h);
    }
    if (shift <= degree) total += term.shifted(shift);
  }
  return total;
}

QSeries hook_product_gf(const Partition& outer, std::size_t degree) {
  QSeries out = QSeries::one(degree);
  for (const Cell& c : outer.cells()) {
    out *= geometric(degree, static_cast<std::size_t>(hook_length(outer, c)));
  }
  return out;
}

}  // namespace skewrpp
