#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewrpp/qseries.hpp"

namespace skewrpp {

/// First power where two series differ.
struct Mismatch {
  std::size_t power = 0;
  BigInt expected;
  BigInt actual;
};

/// Compares coefficients 0..min(truncations).
std::optional<Mismatch> first_mismatch(const QSeries& expected, const QSeries& actual);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  std::string check;
  Fields parameters;
  bool passed = true;
  std::optional<Mismatch> mismatch;
  /// Failing shape or array in text form.
  std::string witness;
  Fields details;
  double elapsed_seconds = 0.0;
};

std::string to_text(const VerificationReport& r);
/// One JSON object per report, on one line.
std::string to_json(const VerificationReport& r);

using ReportSink = std::function<void(const VerificationReport&)>;

/// q^N times the brute RPP series of delta_{n+2k} / delta_n against the
/// determinant, coefficient by coefficient up to q^degree.
VerificationReport verify_main(int n, int k, std::size_t degree);

inline constexpr int kMaxNaruseCells = 10;

/// Every skew shape with |outer| <= max_cells: Naruse's count against
/// brute-force SYT counts (and the hook formula when inner is empty), then the
/// SSYT and RPP q-analogues against brute force up to q^degree.
/// Each report is passed to sink as soon as it completes.
std::vector<VerificationReport> verify_naruse(int max_cells, std::size_t degree, const ReportSink& sink = {});

/// Runs the involution and row-pair audit on the weight <= max_weight slice and
/// compares the fixed-point series with the RPP series and the determinant.
VerificationReport verify_involution(int n, int k, long max_weight);

}  // namespace skewrpp
