#include "skewrpp/qeuler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "skewrpp/errors.hpp"

namespace skewrpp {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("Permutation: word is not a bijection on [m]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) {
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    for (std::size_t j = i + 1; j < word_.size(); ++j) count += word_[i] > word_[j] ? 1 : 0;
  }
  return count;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
    if (word_[i] > word_[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int maj(const Permutation& p) {
  const auto d = p.descents();
  return std::accumulate(d.begin(), d.end(), 0);
}

namespace {

// up_first: sigma_1 < sigma_2 > ... ; otherwise sigma_1 > sigma_2 < ...
bool zigzag(const std::vector<int>& w, bool up_first) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool up = (i % 2 == 0) == up_first;
    if (up ? w[i] > w[i + 1] : w[i] < w[i + 1]) return false;
  }
  return true;
}

void zigzag_rec(std::vector<int>& prefix, std::vector<bool>& used, int m, bool up_first,
                const std::function<void(const std::vector<int>&)>& fn) {
  const auto pos = prefix.size();
  if (pos == static_cast<std::size_t>(m)) {
    fn(prefix);
    return;
  }
  for (int v = 1; v <= m; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    if (pos > 0) {
      const bool up = ((pos - 1) % 2 == 0) == up_first;
      if (up ? v < prefix.back() : v > prefix.back()) continue;
    }
    used[static_cast<std::size_t>(v)] = true;
    prefix.push_back(v);
    zigzag_rec(prefix, used, m, up_first, fn);
    prefix.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

void for_each_zigzag(int m, bool up_first, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(m));
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  zigzag_rec(prefix, used, m, up_first, fn);
}

void require_odd_within_cap(int m, const char* what) {
  if (m < 1 || m % 2 == 0) {
    throw UsageError(std::string(what) + ": index must be a positive odd integer, got " +
                     std::to_string(m));
  }
  if (m > kMaxEstarIndex) {
    throw ResourceError(std::string(what) + ": index " + std::to_string(m) + " exceeds cap " +
                        std::to_string(kMaxEstarIndex));
  }
}

}  // namespace

bool is_reverse_alternating(const Permutation& p) { return zigzag(p.word(), true); }

bool is_alternating(const Permutation& p) { return zigzag(p.word(), false); }

Permutation kappa(int m) {
  if (m < 1 || m % 2 == 0) throw UsageError("kappa: size must be a positive odd integer");
  std::vector<int> w{1};
  for (int v = 2; v < m; v += 2) {
    w.push_back(v + 1);
    w.push_back(v);
  }
  return Permutation(std::move(w));
}

Permutation inverse_times_kappa(const Permutation& sigma) {
  if (sigma.size() % 2 == 0) throw UsageError("inverse_times_kappa: size must be odd");
  std::vector<int> w = sigma.inverse().word();
  for (int& v : w) {
    if (v == 1) continue;
    v = v % 2 == 0 ? v + 1 : v - 1;
  }
  return Permutation(std::move(w));
}

BigInt euler_number_by_enumeration(int n) {
  if (n < 0) throw UsageError("euler_number: n must be nonnegative");
  BigInt count = 0;
  for_each_zigzag(n, false, [&](const std::vector<int>&) { ++count; });
  return count;
}

BigInt euler_number_seidel(int n) {
  if (n < 0) throw UsageError("euler_number: n must be nonnegative");
  std::vector<BigInt> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1);
    next[0] = 0;
    for (int k = 1; k <= r; ++k) {
      next[static_cast<std::size_t>(k)] =
          next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(r - k)];
    }
    row = std::move(next);
  }
  return row.back();
}

BigInt euler_number(int n) {
  return n <= 9 ? euler_number_by_enumeration(n) : euler_number_seidel(n);
}

void for_each_reverse_alternating(int m, const std::function<void(const Permutation&)>& fn) {
  for_each_zigzag(m, true, [&](const std::vector<int>& w) { fn(Permutation(w)); });
}

std::vector<Permutation> reverse_alternating(int m) {
  require_odd_within_cap(m, "reverse_alternating");
  std::vector<Permutation> out;
  for_each_reverse_alternating(m, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

QSeries estar(int m) {
  require_odd_within_cap(m, "estar");
  const auto top = static_cast<std::size_t>(m * (m - 1) / 2);
  std::vector<unsigned long> counts(top + 1, 0);
  for_each_reverse_alternating(m, [&](const Permutation& sigma) {
    ++counts[static_cast<std::size_t>(maj(inverse_times_kappa(sigma)))];
  });
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return QSeries(top, std::move(coeffs));
}

QSeries estar_tilde(int m, std::size_t degree) {
  QSeries denominator = QSeries::one(degree);
  for (int j = 1; j <= m; ++j) {
    denominator -= denominator.shifted(static_cast<std::size_t>(j));
  }
  return estar(m).truncated(degree) * inv_unit(denominator);
}

QSeries mpp_det_rhs(int n, int k, std::size_t degree) {
  if (n < 1 || k < 1) throw UsageError("mpp_det_rhs: n and k must be positive");
  if (2 * (n + 2 * k) - 3 > kMaxEstarIndex) {
    throw ResourceError("mpp_det_rhs: largest entry index " + std::to_string(2 * (n + 2 * k) - 3) +
                        " exceeds cap " + std::to_string(kMaxEstarIndex));
  }
  std::map<int, QSeries> cache;
  const auto entry = [&](int index) -> const QSeries& {
    auto it = cache.find(index);
    if (it == cache.end()) it = cache.emplace(index, estar_tilde(index, degree)).first;
    return it->second;
  };
  SeriesMatrix m(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) m[static_cast<std::size_t>(i - 1)].push_back(entry(2 * (n + i + j) - 3));
  }
  return det(m);
}

long offset_N(int n, int k) {
  if (n < 1 || k < 1) throw UsageError("offset_N: n and k must be positive");
  const long numerator = static_cast<long>(k) * (k - 1) * (6L * n + 8L * k - 1);
  if (numerator % 6 != 0) throw InternalError("offset_N: numerator not divisible by 6");
  return numerator / 6;
}

}  // namespace skewrpp
