#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace skewrpp {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// A power series in q truncated after q^D, with exact integer coefficients.
///
/// The truncation degree is fixed at construction. Binary arithmetic requires
/// both operands to carry the same truncation; a mismatch throws UsageError.
/// Changing the truncation is only possible through truncated().
class QSeries {
 public:
  /// The zero series with coefficients for q^0 ... q^truncation.
  explicit QSeries(std::size_t truncation);

  /// Takes exactly truncation + 1 coefficients; anything else throws UsageError.
  QSeries(std::size_t truncation, std::vector<BigInt> coeffs);

  /// Builds a series from polynomial coefficients c0, c1, ...; terms above
  /// q^truncation are dropped and missing terms are zero.
  static QSeries from_polynomial(std::size_t truncation, std::span<const long> coeffs);
  static QSeries from_polynomial(std::size_t truncation, std::initializer_list<long> coeffs);

  static QSeries one(std::size_t truncation);
  /// coeff * q^exponent, or zero if exponent exceeds the truncation.
  static QSeries monomial(std::size_t truncation, std::size_t exponent, const BigInt& coeff = 1);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t power) const { return coeffs_.at(power); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Smallest power with a nonzero coefficient.
  std::optional<std::size_t> lowest_nonzero() const;
  /// Sum of the stored coefficients (evaluation at q = 1 for polynomials that fit).
  BigInt coefficient_sum() const;

  /// Same coefficients re-expressed at a new truncation: higher terms are
  /// dropped, new slots are zero.
  QSeries truncated(std::size_t truncation) const;
  /// Multiplication by q^k, dropping terms pushed past the truncation.
  QSeries shifted(std::size_t k) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const BigInt& scalar);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const BigInt& s) { return a *= s; }
  friend QSeries operator-(QSeries a);

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse of a series whose constant term is 1 or -1.
/// Throws DomainError for any other constant term.
QSeries inv_unit(const QSeries& a);

/// 1 / (1 - q^h) truncated at D, for h >= 1.
QSeries geometric(std::size_t truncation, std::size_t h);

using SeriesMatrix = std::vector<std::vector<QSeries>>;

/// Determinant by signed expansion over all permutations; no division.
/// Throws UsageError for an empty or non-square matrix or mixed truncations.
QSeries det(const SeriesMatrix& m);

/// Space-separated decimal coefficients, e.g. "1 2 3 5 7".
std::string to_text(const QSeries& s);

/// {"truncation": D, "coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
std::string to_json(const QSeries& s);
/// Inverse of to_json. Throws ValidationError on malformed input.
QSeries from_json(std::string_view json);

}  // namespace skewrpp
