#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "skewrpp/qseries.hpp"

namespace skewrpp {

/// A bijection on {1..m} in one-line notation.
class Permutation {
 public:
  /// Throws ValidationError unless word holds each of 1..m exactly once.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int m);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  /// sigma_i for 1-based i.
  int at(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

  Permutation inverse() const;
  int inversions() const;
  /// (-1)^inv.
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  /// Positions i with sigma_i > sigma_{i+1}.
  std::vector<int> descents() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Sum of the descent positions.
int maj(const Permutation& p);

/// sigma_1 < sigma_2 > sigma_3 < ...
bool is_reverse_alternating(const Permutation& p);
/// sigma_1 > sigma_2 < sigma_3 > ...
bool is_alternating(const Permutation& p);

/// kappa = 1 3 2 5 4 ... m (m-1) for odd m.
Permutation kappa(int m);

/// The one-line word of sigma^{-1} with the values 2i and 2i+1 interchanged
/// for 1 <= i <= (m-1)/2. Requires odd size.
Permutation inverse_times_kappa(const Permutation& sigma);

/// Counts alternating permutations of [n] by backtracking.
BigInt euler_number_by_enumeration(int n);
/// E_n from the Seidel-Entringer (boustrophedon) triangle.
BigInt euler_number_seidel(int n);
/// Enumeration for n <= 9, Seidel recurrence beyond.
BigInt euler_number(int n);

inline constexpr int kMaxEstarIndex = 11;

/// Visits reverse alternating permutations of [m] in lexicographic order.
void for_each_reverse_alternating(int m, const std::function<void(const Permutation&)>& fn);
/// All reverse alternating permutations of odd m <= 11, lexicographic.
/// Throws UsageError for even m and ResourceError above the cap.
std::vector<Permutation> reverse_alternating(int m);

/// E*_m(q): sum over reverse alternating sigma of q^{maj(sigma^{-1} kappa)}.
/// Returned as a polynomial truncated at its maximal possible degree m(m-1)/2.
QSeries estar(int m);

/// E*_m(q) / ((1-q)(1-q^2)...(1-q^m)) truncated at degree.
QSeries estar_tilde(int m, std::size_t degree);

/// det[ Etilde*_{2(n+i+j)-3} ]_{i,j=1..k} truncated at degree.
/// Throws ResourceError when 2(n+2k)-3 exceeds the E* cap.
QSeries mpp_det_rhs(int n, int k, std::size_t degree);

/// k(k-1)(6n+8k-1)/6.
long offset_N(int n, int k);

}  // namespace skewrpp
