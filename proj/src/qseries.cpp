#include "skewrpp/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "skewrpp/errors.hpp"

namespace skewrpp {

namespace {

void require_same_truncation(const QSeries& a, const QSeries& b, const char* op) {
  if (a.truncation() != b.truncation()) {
    std::ostringstream msg;
    msg << "QSeries " << op << ": truncation mismatch (" << a.truncation() << " vs "
        << b.truncation() << ")";
    throw UsageError(msg.str());
  }
}

}  // namespace

QSeries::QSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

QSeries::QSeries(std::size_t truncation, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != truncation + 1) {
    std::ostringstream msg;
    msg << "QSeries: expected " << truncation + 1 << " coefficients, got " << coeffs_.size();
    throw UsageError(msg.str());
  }
}

QSeries QSeries::from_polynomial(std::size_t truncation, std::span<const long> coeffs) {
  QSeries s(truncation);
  for (std::size_t i = 0; i < coeffs.size() && i <= truncation; ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

QSeries QSeries::from_polynomial(std::size_t truncation, std::initializer_list<long> coeffs) {
  return from_polynomial(truncation, std::span<const long>(coeffs.begin(), coeffs.size()));
}

QSeries QSeries::one(std::size_t truncation) { return monomial(truncation, 0); }

QSeries QSeries::monomial(std::size_t truncation, std::size_t exponent, const BigInt& coeff) {
  QSeries s(truncation);
  if (exponent <= truncation) s.coeffs_[exponent] = coeff;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::optional<std::size_t> QSeries::lowest_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

BigInt QSeries::coefficient_sum() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), BigInt(0));
}

QSeries QSeries::truncated(std::size_t truncation) const {
  QSeries s(truncation);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), truncation + 1), s.coeffs_.begin());
  return s;
}

QSeries QSeries::shifted(std::size_t k) const {
  QSeries s(truncation());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_truncation(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  require_same_truncation(*this, other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  *this = *this * other;
  return *this;
}

QSeries& QSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_truncation(a, b, "mul");
  const std::size_t d = a.truncation();
  QSeries out(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) {
      if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

QSeries operator-(QSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries inv_unit(const QSeries& a) {
  const BigInt& a0 = a[0];
  if (a0 != 1 && a0 != -1) {
    throw DomainError("inv_unit: constant term must be 1 or -1, got " + a0.get_str());
  }
  // With a0 = +-1 we have 1/a0 = a0, and b_n = -a0 * sum_{k=1..n} a_k b_{n-k}.
  const std::size_t d = a.truncation();
  std::vector<BigInt> b(d + 1);
  b[0] = a0;
  for (std::size_t n = 1; n <= d; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += a[k] * b[n - k];
    }
    b[n] = -a0 * acc;
  }
  return QSeries(d, std::move(b));
}

QSeries geometric(std::size_t truncation, std::size_t h) {
  if (h == 0) throw DomainError("geometric: exponent must be positive");
  std::vector<BigInt> c(truncation + 1);
  for (std::size_t i = 0; i <= truncation; i += h) c[i] = 1;
  return QSeries(truncation, std::move(c));
}

QSeries det(const SeriesMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) throw UsageError("det: empty matrix");
  for (const auto& row : m) {
    if (row.size() != k) throw UsageError("det: matrix is not square");
  }
  const std::size_t d = m[0][0].truncation();
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (e.truncation() != d) throw UsageError("det: entries have mixed truncations");
    }
  }

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  QSeries total(d);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    QSeries term = m[0][perm[0]];
    for (std::size_t i = 1; i < k && !term.is_zero(); ++i) term *= m[i][perm[i]];
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::string to_text(const QSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (i > 0) out += ' ';
    out += s[i].get_str();
  }
  return out;
}

std::string to_json(const QSeries& s) {
  nlohmann::ordered_json j;
  j["truncation"] = s.truncation();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

QSeries from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("QSeries JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("truncation") || !j.contains("coeffs") ||
      !j["truncation"].is_number_unsigned() || !j["coeffs"].is_array()) {
    throw ValidationError("QSeries JSON: expected {\"truncation\": D, \"coeffs\": [...]}");
  }
  const auto d = j["truncation"].get<std::size_t>();
  const auto& arr = j["coeffs"];
  if (arr.size() != d + 1) throw ValidationError("QSeries JSON: coeffs length must be truncation + 1");
  std::vector<BigInt> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_string()) throw ValidationError("QSeries JSON: coefficients must be decimal strings");
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw ValidationError("QSeries JSON: bad coefficient '" + c.get<std::string>() + "'");
    }
    coeffs.push_back(std::move(v));
  }
  return QSeries(d, std::move(coeffs));
}

}  // namespace skewrpp
