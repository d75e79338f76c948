#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace skewrpp {

/// True when letters are nonnegative and satisfy a1 >= a2 <= a3 >= a4 <= ...
bool is_alternating(std::span<const int> letters);

/// A word of nonnegative integers with a1 >= a2 <= a3 >= a4 <= ...
class AltWord {
 public:
  AltWord() = default;
  /// Throws ValidationError if the letters are not alternating.
  explicit AltWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  /// 0-based access.
  int operator[](std::size_t i) const { return letters_[i]; }
  long weight() const;

  friend bool operator==(const AltWord&, const AltWord&) = default;
  friend auto operator<=>(const AltWord&, const AltWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Space-separated letters.
std::string to_text(const AltWord& w);

/// Calls fn(letters) for every alternating word of the given length with
/// letter sum at most max_weight, in lexicographic order.
template <class Fn>
void for_each_alt_word(std::size_t length, long max_weight, Fn&& fn);

namespace detail {

template <class Fn>
void alt_word_rec(std::vector<int>& buf, std::size_t pos, long remaining, Fn& fn) {
  if (pos == buf.size()) {
    fn(std::span<const int>(buf));
    return;
  }
  // 0-based: odd indices are valleys (<= left neighbour), even indices past 0 are peaks.
  int lo = 0;
  long hi = remaining;
  if (pos > 0) {
    if (pos % 2 == 1) {
      hi = std::min<long>(hi, buf[pos - 1]);
    } else {
      lo = buf[pos - 1];
    }
  }
  for (long v = lo; v <= hi; ++v) {
    buf[pos] = static_cast<int>(v);
    alt_word_rec(buf, pos + 1, remaining - v, fn);
  }
}

}  // namespace detail

template <class Fn>
void for_each_alt_word(std::size_t length, long max_weight, Fn&& fn) {
  if (max_weight < 0) return;
  std::vector<int> buf(length);
  detail::alt_word_rec(buf, 0, max_weight, fn);
}

}  // namespace skewrpp
