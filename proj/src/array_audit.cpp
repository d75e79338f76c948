#include "skewrpp/array_audit.hpp"

#include <set>
#include <sstream>

#include "skewrpp/errors.hpp"

namespace skewrpp {

std::string to_string(AuditCheck c) {
  switch (c) {
    case AuditCheck::kInvolution: return "involution";
    case AuditCheck::kWeightPreserved: return "weight-preserved";
    case AuditCheck::kOrderPreserved: return "order-preserved";
    case AuditCheck::kSignReversed: return "sign-reversed";
    case AuditCheck::kFixedIdentity: return "fixed-identity";
    case AuditCheck::kFixedNonTransposable: return "fixed-non-transposable";
    case AuditCheck::kCuttingAgreement: return "cutting-agreement";
    case AuditCheck::kInterlace: return "interlace";
    case AuditCheck::kInversionTransposable: return "inversion-transposable";
    case AuditCheck::kTransposeSelfInverse: return "transpose-self-inverse";
    case AuditCheck::kTripleImplications: return "triple-implications";
    case AuditCheck::kFixedBijection: return "fixed-bijection";
    case AuditCheck::kSignedEqualsFixed: return "signed-equals-fixed";
    case AuditCheck::kRppCoverage: return "rpp-coverage";
  }
  return "unknown";
}

void AuditFindings::record(AuditCheck c, const std::string& witness) {
  if (counts[c]++ == 0) first_witness[c] = witness;
}

long AuditFindings::count(AuditCheck c) const {
  auto it = counts.find(c);
  return it == counts.end() ? 0 : it->second;
}

long AuditFindings::total() const {
  long t = 0;
  for (const auto& [c, n] : counts) t += n;
  return t;
}

namespace {

std::string witness(const AltArray& a, const std::string& what) {
  return what + "\n" + to_text(a);
}

std::string pair_label(int i, int j) {
  std::ostringstream os;
  os << "rows " << i << "," << j;
  return os.str();
}

void check_pairs(const AltArray& a, const Permutation& sigma, SliceAudit& out) {
  const int k = a.row_count();
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      ++out.pairs_checked;
      auto scan = first_cutting_position(a, i, j);
      std::optional<int> by_inequalities;
      try {
        by_inequalities = first_cutting_position_by_inequalities(a, i, j);
      } catch (const InternalError& e) {
        out.findings.record(AuditCheck::kCuttingAgreement, witness(a, pair_label(i, j) + ": " + e.what()));
        continue;
      }
      if (scan != by_inequalities) {
        out.findings.record(AuditCheck::kCuttingAgreement, witness(a, pair_label(i, j)));
      }
      if (!scan) {
        if (sigma.at(i) > sigma.at(j)) {
          out.findings.record(AuditCheck::kInversionTransposable, witness(a, pair_label(i, j)));
        } else if (!rows_interlace(a, i, j)) {
          out.findings.record(AuditCheck::kInterlace, witness(a, pair_label(i, j)));
        }
        continue;
      }
      ++out.transposable_pairs;
      AltArray t = transpose_rows(a, i, j);
      if (t.weight() != a.weight()) {
        out.findings.record(AuditCheck::kWeightPreserved, witness(a, "T " + pair_label(i, j)));
      }
      if (order_of(t.rows()) != std::optional<int>(a.order())) {
        out.findings.record(AuditCheck::kOrderPreserved, witness(a, "T " + pair_label(i, j)));
      }
      if (!is_transposable(t, i, j) || transpose_rows(t, i, j) != a) {
        out.findings.record(AuditCheck::kTransposeSelfInverse, witness(a, pair_label(i, j)));
      }
    }
  }
}

// Three-row implications: for i < j < l with rows i, j not transposable.
void check_triples(const AltArray& a, const Permutation& sigma, SliceAudit& out) {
  const int k = a.row_count();
  auto fail = [&](int i, int j, int l, const char* what) {
    std::ostringstream os;
    os << "rows " << i << "," << j << "," << l << ": " << what;
    out.findings.record(AuditCheck::kTripleImplications, witness(a, os.str()));
  };
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (is_transposable(a, i, j)) continue;
      for (int l = j + 1; l <= k; ++l) {
        const int si = sigma.at(i), sj = sigma.at(j), sl = sigma.at(l);
        if (si < sj && sj < sl) {
          ++out.triples_checked;
          if (is_transposable(a, j, l) && is_transposable(transpose_rows(a, j, l), i, j)) {
            fail(i, j, l, "increasing triple");
          }
        } else if (si < sl && sl < sj) {
          ++out.triples_checked;
          if (!is_transposable(a, j, l)) {
            fail(i, j, l, "middle triple: rows j,l not transposable");
            continue;
          }
          if (is_transposable(transpose_rows(a, j, l), i, j)) {
            if (!is_transposable(a, i, l)) {
              fail(i, j, l, "middle triple: rows i,l not transposable");
            } else if (is_transposable(transpose_rows(a, i, l), i, j)) {
              fail(i, j, l, "middle triple: rows i,j transposable after T(i,l)");
            }
          }
        } else if (sl < si && si < sj) {
          ++out.triples_checked;
          if (!is_transposable(a, i, l)) {
            fail(i, j, l, "low triple: rows i,l not transposable");
            continue;
          }
          AltArray b = transpose_rows(a, i, l);
          if (!is_transposable(b, j, l)) {
            fail(i, j, l, "low triple: rows j,l not transposable after T(i,l)");
            continue;
          }
          if (is_transposable(b, i, j)) fail(i, j, l, "low triple: rows i,j transposable after T(i,l)");
          if (!is_transposable(transpose_rows(b, j, l), i, j)) {
            fail(i, j, l, "low triple: rows i,j not transposable after T(j,l) T(i,l)");
          }
        }
      }
    }
  }
}

void check_fixed_point(const AltArray& a, const Permutation& sigma, SliceAudit& out) {
  if (sigma != Permutation::identity(a.row_count())) {
    out.findings.record(AuditCheck::kFixedIdentity, witness(a, "fixed point"));
    return;
  }
  for (int i = 1; i < a.row_count(); ++i) {
    if (is_transposable(a, i, i + 1) || !rows_interlace(a, i, i + 1)) {
      out.findings.record(AuditCheck::kFixedNonTransposable, witness(a, pair_label(i, i + 1)));
    }
  }
  try {
    Filling f = fixed_to_rpp(a);
    if (!f.is_rpp() || a.weight() != f.weight() + offset_N(a.order(), a.row_count()) ||
        rpp_to_fixed(f) != a) {
      out.findings.record(AuditCheck::kFixedBijection, witness(a, "fixed point"));
    }
  } catch (const Error& e) {
    out.findings.record(AuditCheck::kFixedBijection, witness(a, e.what()));
  }
}

}  // namespace

void audit_array(const AltArray& a, SliceAudit& out) {
  ++out.arrays;
  const ArrayPermutation ap = associated_perm(a);
  check_pairs(a, ap.sigma, out);
  check_triples(a, ap.sigma, out);

  const PhiStep step = phi_step(a);
  ++out.phi_cases[step.kind];
  AltArray b = a;
  try {
    b = phi(a);
  } catch (const Error& e) {
    out.findings.record(AuditCheck::kInvolution, witness(a, e.what()));
    return;
  }
  if (step.kind == PhiCase::kFixed) {
    ++out.fixed_points;
    if (b != a) out.findings.record(AuditCheck::kInvolution, witness(a, "fixed step moved the array"));
    check_fixed_point(a, ap.sigma, out);
    return;
  }
  if (b == a) {
    out.findings.record(AuditCheck::kInvolution, witness(a, "non-fixed step returned the array"));
    return;
  }
  if (b < a) ++out.cancelled_pairs;
  if (b.weight() != a.weight()) out.findings.record(AuditCheck::kWeightPreserved, witness(a, "phi"));
  if (order_of(b.rows()) != std::optional<int>(a.order())) {
    out.findings.record(AuditCheck::kOrderPreserved, witness(a, "phi"));
  }
  if (associated_perm(b).sign != -ap.sign) out.findings.record(AuditCheck::kSignReversed, witness(a, "phi"));
  try {
    if (phi(b) != a) out.findings.record(AuditCheck::kInvolution, witness(a, "phi(phi(a)) != a"));
  } catch (const Error& e) {
    out.findings.record(AuditCheck::kInvolution, witness(b, e.what()));
  }
}

SliceAudit audit_involution(int n, int k, long max_weight, const ArrayEnumerationCaps& caps) {
  SliceAudit out;
  out.n = n;
  out.k = k;
  out.max_weight = max_weight;
  const auto degree = static_cast<std::size_t>(max_weight);
  out.signed_series = QSeries(degree);
  out.fixed_series = QSeries(degree);
  std::vector<BigInt> signed_coeffs(degree + 1), fixed_coeffs(degree + 1);

  for_each_bounded(
      n, k, max_weight,
      [&](const AltArray& a) {
        const long fixed_before = out.fixed_points;
        audit_array(a, out);
        const auto w = static_cast<std::size_t>(a.weight());
        signed_coeffs[w] += associated_perm(a).sign;
        if (out.fixed_points != fixed_before) fixed_coeffs[w] += 1;
      },
      caps);

  out.signed_series = QSeries(degree, signed_coeffs);
  out.fixed_series = QSeries(degree, fixed_coeffs);
  if (out.signed_series != out.fixed_series) {
    out.findings.record(AuditCheck::kSignedEqualsFixed,
                        "signed " + to_text(out.signed_series) + " vs fixed " + to_text(out.fixed_series));
  }
  return out;
}

BijectionAudit audit_bijection(int n, int k, long extra_weight, const ArrayEnumerationCaps& caps) {
  BijectionAudit out;
  out.n = n;
  out.k = k;
  out.offset = offset_N(n, k);
  out.extra_weight = extra_weight;

  std::set<std::map<Cell, int>> images;
  for_each_bounded(
      n, k, out.offset + extra_weight,
      [&](const AltArray& a) {
        if (!is_fixed_point(a)) return;
        ++out.fixed_points;
        try {
          Filling f = fixed_to_rpp(a);
          if (!f.is_rpp() || a.weight() != f.weight() + out.offset || rpp_to_fixed(f) != a) {
            out.findings.record(AuditCheck::kFixedBijection, witness(a, "round trip"));
          }
          if (!images.insert(f.entries()).second) {
            out.findings.record(AuditCheck::kFixedBijection, witness(a, "image repeated"));
          }
        } catch (const Error& e) {
          out.findings.record(AuditCheck::kFixedBijection, witness(a, e.what()));
        }
      },
      caps);

  const SkewShape shape(staircase(n + 2 * k), staircase(n));
  for_each_rpp(shape, extra_weight, [&](const Filling& f) {
    ++out.rpps;
    if (images.count(f.entries()) == 0) {
      std::ostringstream os;
      os << "rpp without preimage:";
      for (const auto& [c, v] : f.entries()) os << " (" << c.row << "," << c.col << ")=" << v;
      out.findings.record(AuditCheck::kRppCoverage, os.str());
    }
  });
  if (out.rpps != out.fixed_points) {
    std::ostringstream os;
    os << out.fixed_points << " fixed points vs " << out.rpps << " rpps";
    out.findings.record(AuditCheck::kRppCoverage, os.str());
  }
  return out;
}

}  // namespace skewrpp
