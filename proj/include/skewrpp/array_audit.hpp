#pragma once

#include <map>
#include <string>

#include "skewrpp/arrays.hpp"

namespace skewrpp {

/// Individual properties checked by the audits.
enum class AuditCheck {
  kInvolution,           // phi(phi(a)) == a
  kWeightPreserved,      // |phi(a)| == |a| and |T(a)| == |a|
  kOrderPreserved,       // phi and T keep the order n
  kSignReversed,         // sgn(phi(a)) == -sgn(a) off fixed points
  kFixedIdentity,        // fixed points have identity permutation
  kFixedNonTransposable, // fixed points: adjacent rows interlace, none transposable
  kCuttingAgreement,     // scan and inequality characterization agree
  kInterlace,            // non-transposable pair with sigma_i < sigma_j interlaces
  kInversionTransposable,// sigma_i > sigma_j implies transposable
  kTransposeSelfInverse, // T(T(a)) == a
  kTripleImplications,   // three-row implications behind the involution
  kFixedBijection,       // fixed point <-> RPP with |a| = |pi| + N
  kSignedEqualsFixed,    // signed sum over the slice equals the fixed-point sum
  kRppCoverage,          // every RPP of the slice has a fixed-point preimage
};

std::string to_string(AuditCheck c);

/// Violation counts with the first witness recorded for each check.
struct AuditFindings {
  std::map<AuditCheck, long> counts;
  std::map<AuditCheck, std::string> first_witness;

  void record(AuditCheck c, const std::string& witness);
  long count(AuditCheck c) const;
  long total() const;
  bool ok() const { return total() == 0; }
};

/// Everything learned from running phi and the row-pair checks over one
/// weight-bounded slice of A(n,k).
struct SliceAudit {
  int n = 0;
  int k = 0;
  long max_weight = 0;
  long arrays = 0;
  long fixed_points = 0;
  long cancelled_pairs = 0;
  long pairs_checked = 0;
  long transposable_pairs = 0;
  long triples_checked = 0;
  std::map<PhiCase, long> phi_cases;
  QSeries signed_series{0};
  QSeries fixed_series{0};
  AuditFindings findings;
};

/// Runs every per-array check on a, adding to the counters and findings of out.
/// Series are not touched.
void audit_array(const AltArray& a, SliceAudit& out);

SliceAudit audit_involution(int n, int k, long max_weight, const ArrayEnumerationCaps& caps = {});

/// Fixed points of weight <= N + extra_weight against RPPs of weight <= extra_weight.
struct BijectionAudit {
  int n = 0;
  int k = 0;
  long offset = 0;
  long extra_weight = 0;
  long fixed_points = 0;
  long rpps = 0;
  AuditFindings findings;
};

BijectionAudit audit_bijection(int n, int k, long extra_weight, const ArrayEnumerationCaps& caps = {});

}  // namespace skewrpp
