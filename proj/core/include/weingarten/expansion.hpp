#pragma once

#include <array>
#include <string>
#include <vector>

#include "weingarten/frame.hpp"
#include "weingarten/relation.hpp"

namespace weingarten::framecalc {

using cas::BindingSet;

/// The squared linear-curvature identity a^2 H1^2 W - 4 (c W^2 - b K1)^2
/// with a, b, c kept symbolic, expanded over the chart's Fourier basis.
/// H1 = G [Xu,Xv,Xuu] - 2F [Xu,Xv,Xuv] + E [Xu,Xv,Xvv], K1 =
/// [Xu,Xv,Xuu][Xu,Xv,Xvv] - [Xu,Xv,Xuv]^2, W = EG - F^2. Computed once per
/// kind and cached.
const FourierSeries& symbolic_expansion(FrameKind kind);

/// The expansion with the relation's pinned entries substituted.
FourierSeries assemble_weingarten(const WeingartenRelation& relation, FrameKind kind);

/// Replayable record of how a table was produced: chart, relation, and the
/// ordered catalog chain ids of every substitution applied.
struct Provenance {
  FrameKind kind = FrameKind::Frenet;
  WeingartenRelation relation;
  std::vector<std::string> chain;
  std::string str() const;
};

/// Extracted Fourier coefficients A0..A8, B1..B8 of an expansion, with
/// provenance. Entries beyond the expansion degree are exactly zero.
class CoefficientTable {
 public:
  static constexpr int kMaxHarmonic = 8;

  CoefficientTable(const FourierSeries& expansion, Provenance provenance);

  const Provenance& provenance() const { return provenance_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  const Polynomial& A(int j) const;  // 0 <= j <= 8
  const Polynomial& B(int j) const;  // 1 <= j <= 8
  /// Highest harmonic with a nonzero entry.
  int degree() const;
  bool all_zero() const;

  /// Canonical serialization: provenance header, then one line per entry.
  std::string str() const;

 private:
  Provenance provenance_;
  AlphabetPtr alphabet_;
  std::vector<Polynomial> a_;
  std::vector<Polynomial> b_;  // index 0 unused (zero)
};

CoefficientTable extract_table(const FourierSeries& expansion, Provenance provenance);

/// Applies a substitution to every entry, appending `chain_id` to the
/// provenance. Polynomial bindings only; audit chains with quotient bindings
/// work on individual entries instead.
CoefficientTable case_substitute(const CoefficientTable& table,
                                 const BindingSet& bindings,
                                 const std::string& chain_id);

}  // namespace weingarten::framecalc
