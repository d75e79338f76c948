#include "skewrpp/arrays.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "skewrpp/errors.hpp"
#include "skewrpp/qeuler.hpp"

namespace skewrpp {

std::optional<int> order_of(std::span<const AltWord> rows) {
  if (rows.empty()) return std::nullopt;
  std::vector<long> shifted;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // l_i - 2i + 2 with 1-based i.
    shifted.push_back(static_cast<long>(rows[i].size()) - 2 * static_cast<long>(i));
  }
  std::sort(shifted.begin(), shifted.end());
  const long smallest = shifted.front();
  if (smallest < 3 || smallest % 2 == 0) return std::nullopt;
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (shifted[i] != smallest + 2 * static_cast<long>(i)) return std::nullopt;
  }
  return static_cast<int>((smallest - 1) / 2);
}

AltArray::AltArray(int order, std::vector<AltWord> rows) : order_(order), rows_(std::move(rows)) {
  const auto actual = order_of(rows_);
  if (!actual || *actual != order_) {
    std::ostringstream msg;
    msg << "AltArray: row lengths";
    for (const auto& r : rows_) msg << ' ' << r.size();
    msg << " do not form a staircase array of order " << order_;
    throw ValidationError(msg.str());
  }
}

AltArray AltArray::from_rows(std::vector<AltWord> rows) {
  const auto order = order_of(rows);
  if (!order) throw ValidationError("AltArray: row lengths admit no order");
  return AltArray(*order, std::move(rows));
}

long AltArray::weight() const {
  long total = 0;
  for (const auto& r : rows_) total += r.weight();
  return total;
}

std::optional<int> AltArray::at(int i, int column) const {
  const int start = start_column(i);
  if (column < start || column > end_column(i)) return std::nullopt;
  return row(i)[static_cast<std::size_t>(column - start)];
}

ArrayPermutation associated_perm(const AltArray& a) {
  std::vector<int> sigma;
  for (int i = 1; i <= a.row_count(); ++i) {
    const int shifted = static_cast<int>(a.row(i).size()) - 2 * i + 2;
    sigma.push_back((shifted - 2 * a.order() + 1) / 2);
  }
  Permutation p(std::move(sigma));
  const int sign = p.sign();
  return {std::move(p), sign};
}

namespace {

void require_rows(const AltArray& a, int i, int j) {
  if (i < 1 || j > a.row_count() || i >= j) {
    throw UsageError("row pair (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") must satisfy 1 <= i < j <= k");
  }
}

int overlap_start(const AltArray& a, int i, int j) {
  return std::max(a.start_column(i), a.start_column(j));
}

// Rows i and j after exchanging every letter left of grid column cut.
std::pair<std::vector<int>, std::vector<int>> exchanged(const AltArray& a, int i, int j, int cut) {
  const auto split = [&](int r) {
    const auto& letters = a.row(r).letters();
    const auto n_left = static_cast<std::ptrdiff_t>(std::max(0, cut - a.start_column(r)));
    return std::pair{std::vector<int>(letters.begin(), letters.begin() + n_left),
                     std::vector<int>(letters.begin() + n_left, letters.end())};
  };
  auto [left_i, right_i] = split(i);
  auto [left_j, right_j] = split(j);
  left_j.insert(left_j.end(), right_i.begin(), right_i.end());
  left_i.insert(left_i.end(), right_j.begin(), right_j.end());
  return {std::move(left_j), std::move(left_i)};
}

bool is_cutting(const AltArray& a, int i, int j, int t) {
  const auto [new_i, new_j] = exchanged(a, i, j, overlap_start(a, i, j) + t);
  return is_alternating(new_i) && is_alternating(new_j);
}

}  // namespace

int overlap_size(const AltArray& a, int i, int j) {
  require_rows(a, i, j);
  return a.end_column(i) - overlap_start(a, i, j) + 1;
}

std::vector<int> cutting_positions(const AltArray& a, int i, int j) {
  const int p = overlap_size(a, i, j);
  std::vector<int> out;
  for (int t = 0; t <= p; ++t) {
    if (is_cutting(a, i, j, t)) out.push_back(t);
  }
  return out;
}

std::optional<int> first_cutting_position(const AltArray& a, int i, int j) {
  const int p = overlap_size(a, i, j);
  for (int t = 0; t <= p; ++t) {
    if (is_cutting(a, i, j, t)) return t;
  }
  return std::nullopt;
}

std::optional<int> first_cutting_position_by_inequalities(const AltArray& a, int i, int j) {
  require_rows(a, i, j);
  const int si = a.start_column(i);
  const int sj = a.start_column(j);
  const int ei = a.end_column(i);
  if (si > sj) {
    // sigma_i < sigma_j: row i is a_1 .. a_{2m+1} and a_1 sits over b_3.
    const auto ai = [&](int x) { return *a.at(i, si + x - 1); };
    const auto bj = [&](int y) { return *a.at(j, si - 3 + y); };
    const int m = (ei - si) / 2;
    for (int t = 0; t <= m; ++t) {
      if (ai(2 * t + 1) >= bj(2 * t + 2)) return 2 * t;
      if (ai(2 * t + 1) >= bj(2 * t + 4)) return 2 * t + 1;
    }
    return std::nullopt;
  }
  // sigma_i > sigma_j: b_1 is the first letter of row j and sits under a_3.
  // Past the end of row i the missing a_{2m+4} counts as 0.
  const auto ai = [&](int y) { return a.at(i, sj - 3 + y).value_or(0); };
  const auto bj = [&](int x) { return *a.at(j, sj + x - 1); };
  const int m = (ei - sj) / 2;
  for (int t = 0; t <= m; ++t) {
    if (bj(2 * t + 1) >= ai(2 * t + 2)) return 2 * t;
    if (bj(2 * t + 1) >= ai(2 * t + 4)) return 2 * t + 1;
  }
  throw InternalError("first_cutting_position_by_inequalities: rows with sigma_i > sigma_j must be transposable");
}

bool is_transposable(const AltArray& a, int i, int j) {
  return first_cutting_position(a, i, j).has_value();
}

bool rows_interlace(const AltArray& a, int i, int j) {
  require_rows(a, i, j);
  const int si = a.start_column(i);
  if (si <= a.start_column(j)) return false;
  const auto ai = [&](int x) { return *a.at(i, si + x - 1); };
  const auto bj = [&](int y) { return *a.at(j, si - 3 + y); };
  const int m = (a.end_column(i) - si) / 2;
  for (int t = 0; t <= m; ++t) {
    if (!(bj(2 * t + 2) > ai(2 * t + 1) && ai(2 * t + 1) < bj(2 * t + 4))) return false;
  }
  return true;
}

AltArray transpose_rows(const AltArray& a, int i, int j) {
  const auto t = first_cutting_position(a, i, j);
  if (!t) {
    throw DomainError("transpose_rows: rows " + std::to_string(i) + " and " + std::to_string(j) +
                      " are not transposable");
  }
  auto [new_i, new_j] = exchanged(a, i, j, overlap_start(a, i, j) + *t);
  std::vector<AltWord> rows = a.rows();
  rows[static_cast<std::size_t>(i - 1)] = AltWord(std::move(new_i));
  rows[static_cast<std::size_t>(j - 1)] = AltWord(std::move(new_j));
  return AltArray(a.order(), std::move(rows));
}

PhiStep phi_step(const AltArray& a) {
  PhiStep step;
  const int k = a.row_count();
  for (int m = 1; m < k; ++m) {
    if (is_transposable(a, m, m + 1)) {
      step.m0 = m;
      break;
    }
  }
  if (step.m0 == 0) return step;

  const Permutation sigma = associated_perm(a).sigma;
  const int m0 = step.m0;
  if (sigma.at(m0) < sigma.at(m0 + 1)) {
    step.kind = PhiCase::kA;
    step.first = m0;
    step.second = m0 + 1;
    return step;
  }
  int s = 1;
  while (sigma.at(s) < sigma.at(m0 + 1)) ++s;
  step.s = s;
  step.second = m0 + 1;
  if (s > 1 && is_transposable(transpose_rows(a, s, m0 + 1), s - 1, s)) {
    if (!is_transposable(a, s - 1, m0 + 1)) {
      throw InternalError("phi: rows s-1 and m0+1 must be transposable here");
    }
    step.kind = PhiCase::kBI;
    step.first = s - 1;
  } else {
    step.kind = PhiCase::kBII;
    step.first = s;
  }
  return step;
}

AltArray phi(const AltArray& a) {
  const PhiStep step = phi_step(a);
  if (step.kind == PhiCase::kFixed) return a;
  return transpose_rows(a, step.first, step.second);
}

bool is_fixed_point(const AltArray& a) { return phi_step(a).kind == PhiCase::kFixed; }

Filling fixed_to_rpp(const AltArray& a) {
  if (!is_fixed_point(a)) throw DomainError("fixed_to_rpp: array is not a fixed point of phi");
  const int n = a.order();
  const int k = a.row_count();
  if (associated_perm(a).sigma != Permutation::identity(k)) {
    throw InternalError("fixed_to_rpp: fixed point without identity permutation");
  }
  std::map<Cell, int> entries;
  for (int i = 1; i <= k; ++i) {
    const auto cells = ribbon_cells(n + 2 * i);
    const AltWord& w = a.row(i);
    for (std::size_t x = 0; x < cells.size(); ++x) {
      const int value = w[x] - (i - 1);
      if (value < 0) throw InternalError("fixed_to_rpp: letter below the row floor i-1");
      entries.emplace(cells[x], value);
    }
  }
  return Filling(SkewShape(staircase(n + 2 * k), staircase(n)), std::move(entries));
}

AltArray rpp_to_fixed(const Filling& f) {
  const Partition& outer = f.shape().outer();
  const Partition& inner = f.shape().inner();
  const int big = outer.length() + 1;
  // An empty inner shape is delta_1 when the outer staircase has odd index.
  const int n = inner.empty() ? (big % 2 == 1 ? 1 : 0) : inner.length() + 1;
  if (outer.empty() || outer != staircase(big) || inner != staircase(n) || n < 1 ||
      (big - n) % 2 != 0 || big - n < 2) {
    throw DomainError("rpp_to_fixed: shape must be delta_{n+2k} / delta_n with n, k >= 1");
  }
  if (!f.is_rpp()) throw DomainError("rpp_to_fixed: filling is not a reverse plane partition");
  const int k = (big - n) / 2;
  std::vector<AltWord> rows;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> letters;
    for (const Cell& c : ribbon_cells(n + 2 * i)) letters.push_back(f.at(c) + (i - 1));
    rows.emplace_back(std::move(letters));
  }
  return AltArray(n, std::move(rows));
}

namespace {

void bounded_rec(int n, const std::vector<std::size_t>& lengths, std::size_t row, long remaining,
                 std::vector<AltWord>& rows, const std::function<void(const AltArray&)>& fn) {
  if (row == lengths.size()) {
    fn(AltArray(n, rows));
    return;
  }
  for_each_alt_word(lengths[row], remaining, [&](std::span<const int> letters) {
    rows[row] = AltWord(std::vector<int>(letters.begin(), letters.end()));
    bounded_rec(n, lengths, row + 1, remaining - rows[row].weight(), rows, fn);
  });
}

}  // namespace

void for_each_bounded(int n, int k, long max_weight, const std::function<void(const AltArray&)>& fn,
                      const ArrayEnumerationCaps& caps) {
  if (n < 1 || k < 1) throw UsageError("for_each_bounded: n and k must be positive");
  if (k > caps.max_rows) {
    throw ResourceError("for_each_bounded: k = " + std::to_string(k) + " exceeds cap " +
                        std::to_string(caps.max_rows));
  }
  if (max_weight > caps.max_weight) {
    throw ResourceError("for_each_bounded: max weight " + std::to_string(max_weight) +
                        " exceeds cap " + std::to_string(caps.max_weight));
  }
  if (max_weight < 0) return;
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<AltWord> rows(static_cast<std::size_t>(k));
  do {
    std::vector<std::size_t> lengths;
    for (int i = 1; i <= k; ++i) {
      lengths.push_back(static_cast<std::size_t>(2 * (n + i + sigma[static_cast<std::size_t>(i - 1)]) - 3));
    }
    bounded_rec(n, lengths, 0, max_weight, rows, fn);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<AltArray> enumerate_bounded(int n, int k, long max_weight,
                                        const ArrayEnumerationCaps& caps) {
  std::vector<AltArray> out;
  for_each_bounded(n, k, max_weight, [&](const AltArray& a) { out.push_back(a); }, caps);
  return out;
}

QSeries signed_gf(int n, int k, long max_weight, const ArrayEnumerationCaps& caps) {
  if (max_weight < 0) throw UsageError("signed_gf: max weight must be nonnegative");
  std::vector<long> counts(static_cast<std::size_t>(max_weight) + 1, 0);
  for_each_bounded(
      n, k, max_weight,
      [&](const AltArray& a) { counts[static_cast<std::size_t>(a.weight())] += associated_perm(a).sign; },
      caps);
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return QSeries(static_cast<std::size_t>(max_weight), std::move(coeffs));
}

std::string to_text(const AltArray& a) {
  std::ostringstream out;
  out << "n=" << a.order() << " k=" << a.row_count() << '\n';
  for (const auto& r : a.rows()) out << to_text(r) << '\n';
  return out.str();
}

AltArray parse_alt_array(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw ValidationError("AltArray text: missing header");
  int n = 0;
  int k = 0;
  char trailing = 0;
  if (std::sscanf(header.c_str(), " n=%d k=%d %c", &n, &k, &trailing) != 2 || k < 1) {
    throw ValidationError("AltArray text: header must be 'n=<n> k=<k>'");
  }
  std::vector<AltWord> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> letters;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ValidationError("AltArray text: bad letter '" + token + "'");
      letters.push_back(v);
    }
    rows.emplace_back(std::move(letters));
  }
  if (static_cast<int>(rows.size()) != k) {
    throw ValidationError("AltArray text: header says k=" + std::to_string(k) + " but found " +
                          std::to_string(rows.size()) + " rows");
  }
  return AltArray(n, std::move(rows));
}

std::string format_grid(const AltArray& a) {
  int left = 0;
  int width = 1;
  for (int i = 1; i <= a.row_count(); ++i) {
    left = std::min(left, a.start_column(i));
    for (int v : a.row(i).letters()) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  }
  std::ostringstream out;
  for (int i = 1; i <= a.row_count(); ++i) {
    std::string line;
    for (int c = left; c <= a.end_column(i); ++c) {
      const auto v = a.at(i, c);
      std::string cell = v ? std::to_string(*v) : std::string();
      line += std::string(static_cast<std::size_t>(width) - cell.size() + 1, ' ') + cell;
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace skewrpp
