#include "skewrpp/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "skewrpp/errors.hpp"

namespace skewrpp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("Partition: parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row_length(int i) const {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column_length(int j) const {
  if (j < 1) return 0;
  int count = 0;
  while (count < length() && parts_[static_cast<std::size_t>(count)] >= j) ++count;
  return count;
}

bool Partition::contains(Cell c) const {
  return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= length(); ++i) {
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  }
  return out;
}

Partition staircase(int n) {
  if (n < 0) throw DomainError("staircase: n must be nonnegative");
  std::vector<int> parts;
  for (int p = n - 1; p >= 1; --p) parts.push_back(p);
  return Partition(std::move(parts));
}

int hook_length(const Partition& outer, Cell cell) {
  if (!outer.contains(cell)) throw DomainError("hook_length: cell outside the diagram");
  const int arm = outer.row_length(cell.row) - cell.col;
  const int leg = outer.column_length(cell.col) - cell.row;
  return arm + leg + 1;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts;
  for (int j = 1; j <= p.row_length(1); ++j) parts.push_back(p.column_length(j));
  return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner.row_length(i) > outer.row_length(i)) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void inside_rec(const Partition& outer, int row, int max_part, std::vector<int>& prefix,
                std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (row > outer.length()) return;
  for (int part = std::min(max_part, outer.row_length(row)); part >= 1; --part) {
    prefix.push_back(part);
    inside_rec(outer, row + 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  inside_rec(outer, 1, outer.row_length(1), prefix, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!skewrpp::contains(outer_, inner_)) {
    throw ValidationError("SkewShape: inner partition " + format_partition(inner_) +
                          " is not contained in " + format_partition(outer_));
  }
}

std::vector<Cell> skew_cells(const SkewShape& s) {
  std::vector<Cell> out;
  for (int i = 1; i <= s.outer().length(); ++i) {
    for (int j = s.inner().row_length(i) + 1; j <= s.outer().row_length(i); ++j) {
      out.push_back({i, j});
    }
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") return Partition{};
  if (text.empty()) throw ValidationError("partition: empty text (use '-' for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("partition: bad part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

}  // namespace skewrpp
