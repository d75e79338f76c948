#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewrpp/alt_word.hpp"
#include "skewrpp/qeuler.hpp"
#include "skewrpp/qseries.hpp"
#include "skewrpp/tableaux.hpp"

namespace skewrpp {

/// The unique n >= 1 with {l_i - 2i + 2} = {2n+1, 2n+3, ..., 2n+2k-1}, if any.
std::optional<int> order_of(std::span<const AltWord> rows);

/// k alternating words in staircase alignment: the last letter of row i+1
/// sits two columns right of the last letter of row i.
///
/// Rows are 1-based. Letters live on a column grid where row i ends at
/// column 2(i-1); row i therefore starts at 2(i-1) - l_i + 1. Every row starts
/// and ends on an even column, so even columns are peaks and odd columns are
/// valleys in every row.
class AltArray {
 public:
  /// Throws ValidationError unless the row lengths make an array of this order.
  AltArray(int order, std::vector<AltWord> rows);
  /// Infers the order; throws ValidationError when there is none.
  static AltArray from_rows(std::vector<AltWord> rows);

  int order() const { return order_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<AltWord>& rows() const { return rows_; }
  const AltWord& row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  long weight() const;

  int end_column(int i) const { return 2 * (i - 1); }
  int start_column(int i) const {
    return end_column(i) - static_cast<int>(row(i).size()) + 1;
  }
  /// Letter of row i at a grid column, if the row covers it.
  std::optional<int> at(int i, int column) const;

  friend bool operator==(const AltArray&, const AltArray&) = default;
  friend auto operator<=>(const AltArray&, const AltArray&) = default;

 private:
  int order_;
  std::vector<AltWord> rows_;
};

struct ArrayPermutation {
  Permutation sigma;
  int sign;
};

/// sigma_i = (l_i - 2i + 2 - 2n + 1) / 2 and sign = (-1)^inv(sigma).
ArrayPermutation associated_perm(const AltArray& a);

/// Cutting positions are numbered 0..p over the p overlapping columns of two
/// rows; position t exchanges everything left of the t-th overlap column.
int overlap_size(const AltArray& a, int i, int j);

/// Every t in 0..p at which exchanging the prefixes leaves both rows alternating.
std::vector<int> cutting_positions(const AltArray& a, int i, int j);

/// Leftmost cutting position by exchange-and-check over all positions.
std::optional<int> first_cutting_position(const AltArray& a, int i, int j);

/// Leftmost cutting position from the inequality characterizations of the
/// first cutting position (one for each relative order of sigma_i, sigma_j).
std::optional<int> first_cutting_position_by_inequalities(const AltArray& a, int i, int j);

bool is_transposable(const AltArray& a, int i, int j);

/// For sigma_i < sigma_j: with row i written a_1 .. a_{2m+1} and row j
/// indexed so that a_1 sits over b_3, checks b_{2t+2} > a_{2t+1} < b_{2t+4}
/// for every t. Returns false when sigma_i > sigma_j.
bool rows_interlace(const AltArray& a, int i, int j);

/// Exchanges the prefixes of rows i and j before the first cutting position.
/// Throws DomainError when the rows are not transposable.
AltArray transpose_rows(const AltArray& a, int i, int j);

enum class PhiCase { kFixed, kA, kBI, kBII };

/// Which exchange phi performs on an array.
struct PhiStep {
  PhiCase kind = PhiCase::kFixed;
  int m0 = 0;  // smallest m with rows m, m+1 transposable
  int s = 0;   // case B only: smallest s <= m0 with sigma_s > sigma_{m0+1}
  int first = 0;  // rows exchanged, first < second
  int second = 0;
};

PhiStep phi_step(const AltArray& a);
/// The sign-reversing, weight-preserving involution.
AltArray phi(const AltArray& a);
bool is_fixed_point(const AltArray& a);

/// Maps a fixed point to a reverse plane partition of delta_{n+2k} / delta_n:
/// row i minus (i-1) fills the ribbon delta_{n+2i} / delta_{n+2i-2}.
/// Throws DomainError when a is not a fixed point of phi.
Filling fixed_to_rpp(const AltArray& a);
/// Inverse of fixed_to_rpp. Throws DomainError unless the shape is
/// delta_{n+2k} / delta_n with n, k >= 1.
AltArray rpp_to_fixed(const Filling& f);

struct ArrayEnumerationCaps {
  int max_rows = 3;
  long max_weight = 16;
};

/// Visits every array of A(n,k) with weight <= max_weight: permutations sigma
/// of [k] in lexicographic order, then rows in lexicographic order.
/// Throws ResourceError past the caps and UsageError for n < 1 or k < 1.
void for_each_bounded(int n, int k, long max_weight, const std::function<void(const AltArray&)>& fn,
                      const ArrayEnumerationCaps& caps = {});
std::vector<AltArray> enumerate_bounded(int n, int k, long max_weight,
                                        const ArrayEnumerationCaps& caps = {});

/// sum of sgn(a) q^{|a|} over the weight <= max_weight slice, truncated at max_weight.
QSeries signed_gf(int n, int k, long max_weight, const ArrayEnumerationCaps& caps = {});

/// "n=<n> k=<k>" followed by one line of space-separated letters per row.
std::string to_text(const AltArray& a);
/// Inverse of to_text. Throws ValidationError.
AltArray parse_alt_array(std::string_view text);
/// The rows drawn in their staircase alignment, for diagnostics.
std::string format_grid(const AltArray& a);

}  // namespace skewrpp
