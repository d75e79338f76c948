#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewrpp/errors.hpp"
#include "skewrpp/excited.hpp"
#include "skewrpp/qeuler.hpp"
#include "skewrpp/shapes.hpp"
#include "skewrpp/tableaux.hpp"
#include "skewrpp/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

enum class Format { kText, kJson };

void print(const skewrpp::VerificationReport& r, Format f) {
  if (f == Format::kJson) {
    std::cout << skewrpp::to_json(r) << std::endl;
  } else {
    std::cout << skewrpp::to_text(r) << std::flush;
  }
}

void print(const skewrpp::QSeries& s, Format f) {
  std::cout << (f == Format::kJson ? skewrpp::to_json(s) : skewrpp::to_text(s)) << std::endl;
}

struct Options {
  int n = 1;
  int k = 1;
  int m = 1;
  std::size_t degree = 12;
  long max_weight = 8;
  int max_cells = 7;
  std::string outer;
  std::string inner = "-";
  std::string kind;
  bool brute = false;
  bool tilde = false;
  bool at_one = false;
  Format format = Format::kText;
};

std::size_t highest_nonzero(const skewrpp::QSeries& s) {
  std::size_t top = 0;
  for (std::size_t d = 0; d <= s.truncation(); ++d) {
    if (s[d] != 0) top = d;
  }
  return top;
}

int run_gf(const Options& o) {
  using namespace skewrpp;
  if (o.kind == "rpp" || o.kind == "ssyt") {
    if (o.outer.empty()) throw UsageError("--outer is required for " + o.kind);
    const Partition outer = parse_partition(o.outer);
    const Partition inner = parse_partition(o.inner);
    const SkewShape shape(outer, inner);
    if (o.kind == "rpp") {
      print(o.brute ? rpp_gf_brute(shape, o.degree) : rpp_gf_pleasant(outer, inner, o.degree), o.format);
    } else {
      print(o.brute ? ssyt_gf_brute(shape, o.degree) : ssyt_gf_excited(outer, inner, o.degree), o.format);
    }
  } else if (o.kind == "qeuler") {
    if (o.at_one) {
      const std::string value = estar(o.m).coefficient_sum().get_str();
      if (o.format == Format::kJson) {
        std::cout << nlohmann::ordered_json{{"m", o.m}, {"value", value}}.dump() << std::endl;
      } else {
        std::cout << value << std::endl;
      }
    } else {
      if (o.tilde) {
        print(estar_tilde(o.m, o.degree), o.format);
      } else {
        const QSeries p = estar(o.m);
        print(p.truncated(p.is_zero() ? 0 : highest_nonzero(p)), o.format);
      }
    }
  } else if (o.kind == "det") {
    print(mpp_det_rhs(o.n, o.k, o.degree), o.format);
  } else {
    throw UsageError("unknown series kind: " + o.kind);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series, tableaux and staircase alternating array verification"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->transform(CLI::CheckedTransformer(formats));
  };

  auto* main_cmd = app.add_subcommand("verify-main", "RPP series of a skew staircase against the determinant");
  main_cmd->add_option("--n", o.n, "inner staircase index")->check(CLI::PositiveNumber);
  main_cmd->add_option("--k", o.k, "number of ribbons")->check(CLI::PositiveNumber);
  main_cmd->add_option("--degree", o.degree, "highest power of q compared");
  add_format(main_cmd);

  auto* naruse_cmd = app.add_subcommand("verify-naruse", "hook and excited diagram formulas on all small skew shapes");
  naruse_cmd->add_option("--max-cells", o.max_cells, "largest |outer| swept")
      ->check(CLI::Range(0, skewrpp::kMaxNaruseCells));
  naruse_cmd->add_option("--degree", o.degree, "highest power of q compared for the q-analogues");
  add_format(naruse_cmd);

  auto* inv_cmd = app.add_subcommand("involution", "audit the involution on a weight-bounded slice");
  inv_cmd->add_option("--n", o.n, "array order")->check(CLI::PositiveNumber);
  inv_cmd->add_option("--k", o.k, "number of rows")->check(CLI::PositiveNumber);
  inv_cmd->add_option("--max-weight", o.max_weight, "largest array weight")->check(CLI::NonNegativeNumber);
  add_format(inv_cmd);

  auto* gf_cmd = app.add_subcommand("gf", "print a generating function");
  gf_cmd->add_option("kind", o.kind, "rpp, ssyt, qeuler or det")
      ->required()
      ->check(CLI::IsMember({"rpp", "ssyt", "qeuler", "det"}));
  gf_cmd->add_option("--outer", o.outer, "outer partition, e.g. 5,4,4,2");
  gf_cmd->add_option("--inner", o.inner, "inner partition, - for empty");
  gf_cmd->add_option("--m", o.m, "odd q-Euler index")->check(CLI::PositiveNumber);
  gf_cmd->add_option("--n", o.n, "inner staircase index")->check(CLI::PositiveNumber);
  gf_cmd->add_option("--k", o.k, "number of ribbons")->check(CLI::PositiveNumber);
  gf_cmd->add_option("--degree", o.degree, "truncation degree");
  gf_cmd->add_flag("--brute", o.brute, "rpp/ssyt: count fillings instead of using the diagram formula");
  gf_cmd->add_flag("--tilde", o.tilde, "qeuler: divide by (1-q)...(1-q^m) and truncate");
  gf_cmd->add_flag("--at-one", o.at_one, "qeuler: print the value at q = 1");
  add_format(gf_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (main_cmd->parsed()) {
      const auto r = skewrpp::verify_main(o.n, o.k, o.degree);
      print(r, o.format);
      return r.passed ? kExitPass : kExitViolation;
    }
    if (naruse_cmd->parsed()) {
      bool ok = true;
      skewrpp::verify_naruse(o.max_cells, o.degree, [&](const skewrpp::VerificationReport& r) {
        print(r, o.format);
        ok = ok && r.passed;
      });
      return ok ? kExitPass : kExitViolation;
    }
    if (inv_cmd->parsed()) {
      const auto r = skewrpp::verify_involution(o.n, o.k, o.max_weight);
      print(r, o.format);
      return r.passed ? kExitPass : kExitViolation;
    }
    return run_gf(o);
  } catch (const skewrpp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kExitViolation;
  } catch (const skewrpp::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
}
