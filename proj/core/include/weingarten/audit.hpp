#pragma once

#include <string>
#include <vector>

#include "weingarten/catalog.hpp"

namespace weingarten::framecalc {

/// Outcome of auditing one catalog entry on one branch.
struct AuditReport {
  std::string entry_id;
  std::string branch;   // "+", "-" or "" for unbranched entries
  std::string verdict;  // exact-match | mismatch-with-diff |
                        // match-after-documented-erratum
  std::string diff;     // canonical machine - transcription ("0" on match)
  std::string machine;  // canonical machine value (may be large)
  std::string note;     // cofactors, scalars, factorization summaries
  double timing_ms = 0.0;

  bool ok() const {
    return verdict == "exact-match" || verdict == "match-after-documented-erratum";
  }
};

/// Audits one catalog entry (every sign branch it declares). With
/// `accept_errata`, a machine value equal to the documented correction is
/// reported as match-after-documented-erratum instead of mismatch-with-diff.
std::vector<AuditReport> audit_entry(const std::string& id,
                                     bool accept_errata = false);

std::vector<AuditReport> audit_all(bool accept_errata = false);

bool audits_passed(const std::vector<AuditReport>& reports);

/// JSON array of reports: entry-id, branch, verdict, diff, note, timing-ms.
std::string audit_reports_json(const std::vector<AuditReport>& reports);

/// Verifies that the parallel-chart top coefficients are the real and
/// imaginary parts of (f' + i g')^8 scaled by -c^2 r^8/32, reconciling the
/// printed 1/4 and 1/32 prefactors, and that their square sum is
/// (f'^2 + g'^2)^8.
AuditReport arclength_identity_check();

/// Substitutes the sphere data into the c = 0 table and demands every
/// coefficient vanish identically.
std::vector<AuditReport> sphere_annihilation_check();

}  // namespace weingarten::framecalc
