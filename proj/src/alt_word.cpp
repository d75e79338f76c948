#include "skewrpp/alt_word.hpp"

#include <numeric>

#include "skewrpp/errors.hpp"

namespace skewrpp {

bool is_alternating(std::span<const int> letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 0) return false;
    if (i == 0) continue;
    const bool valley = i % 2 == 1;
    if (valley ? letters[i] > letters[i - 1] : letters[i] < letters[i - 1]) return false;
  }
  return true;
}

AltWord::AltWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (!is_alternating(letters_)) {
    throw ValidationError("AltWord: '" + to_text(*this) + "' is not alternating");
  }
}

long AltWord::weight() const { return std::accumulate(letters_.begin(), letters_.end(), 0L); }

std::string to_text(const AltWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace skewrpp
