#include "skewrpp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "skewrpp/array_audit.hpp"
#include "skewrpp/errors.hpp"
#include "skewrpp/excited.hpp"
#include "skewrpp/qeuler.hpp"
#include "skewrpp/shapes.hpp"
#include "skewrpp/tableaux.hpp"

namespace skewrpp {

std::optional<Mismatch> first_mismatch(const QSeries& expected, const QSeries& actual) {
  const std::size_t top = std::min(expected.truncation(), actual.truncation());
  for (std::size_t d = 0; d <= top; ++d) {
    if (expected[d] != actual[d]) return Mismatch{d, expected[d], actual[d]};
  }
  return std::nullopt;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.check;
  for (const auto& [k, v] : r.parameters) os << " " << k << "=" << v;
  os << " (" << r.elapsed_seconds << " s)\n";
  for (const auto& [k, v] : r.details) os << "  " << k << ": " << v << "\n";
  if (r.mismatch) {
    os << "  first mismatch at q^" << r.mismatch->power << ": expected " << r.mismatch->expected.get_str()
       << ", got " << r.mismatch->actual.get_str() << "\n";
  }
  if (!r.witness.empty()) {
    std::istringstream lines(r.witness);
    std::string line;
    os << "  witness:\n";
    while (std::getline(lines, line)) os << "    " << line << "\n";
  }
  return os.str();
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = r.passed ? "pass" : "fail";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  if (r.mismatch) {
    j["mismatch"] = {{"power", r.mismatch->power},
                     {"expected", r.mismatch->expected.get_str()},
                     {"actual", r.mismatch->actual.get_str()}};
  }
  if (!r.witness.empty()) j["witness"] = r.witness;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump();
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport make_report(std::string check, Fields params) {
  VerificationReport r;
  r.check = std::move(check);
  r.parameters = std::move(params);
  return r;
}

std::string shape_text(const Partition& outer, const Partition& inner) {
  return format_partition(outer) + " / " + format_partition(inner);
}

void fail_with(VerificationReport& r, const Mismatch& m, std::string witness) {
  if (!r.passed) return;
  r.passed = false;
  r.mismatch = m;
  r.witness = std::move(witness);
}

std::string lowest_term(const QSeries& s) {
  auto low = s.lowest_nonzero();
  if (!low) return "none up to q^" + std::to_string(s.truncation());
  return s[*low].get_str() + " q^" + std::to_string(*low);
}

std::vector<std::pair<Partition, Partition>> skew_shapes_up_to(int max_cells) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int size = 0; size <= max_cells; ++size) {
    for (const Partition& outer : partitions_of(size)) {
      for (const Partition& inner : partitions_inside(outer)) out.emplace_back(outer, inner);
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_main(int n, int k, std::size_t degree) {
  Stopwatch clock;
  VerificationReport r;
  r.check = "verify-main";
  r.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"degree", std::to_string(degree)}};

  const QSeries rhs = mpp_det_rhs(n, k, degree);
  const long offset = offset_N(n, k);
  QSeries lhs(degree);
  if (static_cast<long>(degree) >= offset) {
    const SkewShape shape(staircase(n + 2 * k), staircase(n));
    lhs = rpp_gf_brute(shape, degree - static_cast<std::size_t>(offset)).truncated(degree).shifted(offset);
  }
  if (auto m = first_mismatch(lhs, rhs)) fail_with(r, *m, "");
  r.details = {{"N", std::to_string(offset)}, {"lowest term", lowest_term(rhs)}, {"determinant", to_text(rhs)}};
  r.elapsed_seconds = clock.seconds();
  return r;
}

std::vector<VerificationReport> verify_naruse(int max_cells, std::size_t degree, const ReportSink& sink) {
  if (max_cells < 0 || max_cells > kMaxNaruseCells) {
    throw UsageError("max cells must be between 0 and " + std::to_string(kMaxNaruseCells));
  }
  const auto shapes = skew_shapes_up_to(max_cells);
  const Fields params = {{"max-cells", std::to_string(max_cells)}, {"degree", std::to_string(degree)}};
  std::vector<VerificationReport> reports;
  auto emit = [&](VerificationReport r) {
    if (sink) sink(r);
    reports.push_back(std::move(r));
  };

  {
    Stopwatch clock;
    VerificationReport r = make_report("hook-length", params);
    long straight = 0;
    for (int size = 0; size <= max_cells; ++size) {
      for (const Partition& p : partitions_of(size)) {
        ++straight;
        const BigInt expected = count_syt_brute(SkewShape(p, Partition{}), max_cells);
        const BigInt actual = count_syt_hook(p);
        if (expected != actual) fail_with(r, Mismatch{0, expected, actual}, format_partition(p));
      }
    }
    r.details = {{"shapes", std::to_string(straight)}};
    r.elapsed_seconds = clock.seconds();
    emit(std::move(r));
  }
  {
    Stopwatch clock;
    VerificationReport r = make_report("naruse", params);
    for (const auto& [outer, inner] : shapes) {
      const BigInt expected = count_syt_brute(SkewShape(outer, inner), max_cells);
      const BigInt actual = naruse_count(outer, inner);
      if (expected != actual) fail_with(r, Mismatch{0, expected, actual}, shape_text(outer, inner));
    }
    r.details = {{"shapes", std::to_string(shapes.size())}};
    r.elapsed_seconds = clock.seconds();
    emit(std::move(r));
  }
  {
    Stopwatch clock;
    VerificationReport r = make_report("ssyt-excited", params);
    for (const auto& [outer, inner] : shapes) {
      const SkewShape s(outer, inner);
      if (auto m = first_mismatch(ssyt_gf_brute(s, degree), ssyt_gf_excited(outer, inner, degree))) {
        fail_with(r, *m, shape_text(outer, inner));
      }
    }
    r.details = {{"shapes", std::to_string(shapes.size())}};
    r.elapsed_seconds = clock.seconds();
    emit(std::move(r));
  }
  {
    Stopwatch clock;
    VerificationReport r = make_report("rpp-pleasant", params);
    for (const auto& [outer, inner] : shapes) {
      const SkewShape s(outer, inner);
      const QSeries formula = rpp_gf_pleasant(outer, inner, degree);
      if (auto m = first_mismatch(rpp_gf_brute(s, degree), formula)) fail_with(r, *m, shape_text(outer, inner));
      if (inner.empty()) {
        if (auto m = first_mismatch(hook_product_gf(outer, degree), formula)) {
          fail_with(r, *m, shape_text(outer, inner) + " (hook product)");
        }
      }
    }
    r.details = {{"shapes", std::to_string(shapes.size())}};
    r.elapsed_seconds = clock.seconds();
    emit(std::move(r));
  }
  return reports;
}

VerificationReport verify_involution(int n, int k, long max_weight) {
  Stopwatch clock;
  VerificationReport r;
  r.check = "involution";
  r.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"max-weight", std::to_string(max_weight)}};
  if (max_weight < 0) throw UsageError("max weight must be nonnegative");

  const SliceAudit audit = audit_involution(n, k, max_weight);
  const long offset = offset_N(n, k);
  const auto degree = static_cast<std::size_t>(max_weight);

  for (const auto& [check, count] : audit.findings.counts) {
    if (count == 0 || !r.passed) continue;
    r.passed = false;
    r.witness = to_string(check) + ": " + audit.findings.first_witness.at(check);
  }
  if (auto m = first_mismatch(audit.signed_series, audit.fixed_series); m && r.passed) {
    fail_with(r, *m, "signed series vs fixed-point series");
  }

  QSeries rpp(degree);
  if (max_weight >= offset) {
    const SkewShape shape(staircase(n + 2 * k), staircase(n));
    rpp = rpp_gf_brute(shape, degree - static_cast<std::size_t>(offset)).truncated(degree).shifted(offset);
  }
  if (auto m = first_mismatch(rpp, audit.fixed_series)) fail_with(r, *m, "q^N RPP series vs fixed-point series");

  std::string det_note = "not compared (beyond tabulated q-Euler polynomials)";
  try {
    const QSeries rhs = mpp_det_rhs(n, k, degree);
    if (auto m = first_mismatch(rhs, audit.signed_series)) fail_with(r, *m, "determinant vs signed series");
    det_note = "equal to signed series";
  } catch (const ResourceError&) {
  }

  std::string shifted = "zero up to q^" + std::to_string(max_weight);
  if (max_weight >= offset) {
    std::vector<BigInt> c(audit.fixed_series.coeffs().begin() + offset, audit.fixed_series.coeffs().end());
    const std::size_t top = c.size() - 1;
    shifted = to_text(QSeries(top, std::move(c)));
  }
  auto count = [](PhiCase c, const SliceAudit& a) {
    auto it = a.phi_cases.find(c);
    return std::to_string(it == a.phi_cases.end() ? 0 : it->second);
  };
  r.details = {{"arrays", std::to_string(audit.arrays)},
               {"fixed points", std::to_string(audit.fixed_points)},
               {"cancelled pairs", std::to_string(audit.cancelled_pairs)},
               {"phi cases A/BI/BII", count(PhiCase::kA, audit) + "/" + count(PhiCase::kBI, audit) + "/" +
                                          count(PhiCase::kBII, audit)},
               {"row pairs checked", std::to_string(audit.pairs_checked)},
               {"row triples checked", std::to_string(audit.triples_checked)},
               {"N", std::to_string(offset)},
               {"fixed-point series times q^-N", shifted},
               {"determinant", det_note}};
  r.elapsed_seconds = clock.seconds();
  return r;
}

}  // namespace skewrpp
