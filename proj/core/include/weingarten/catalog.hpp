#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weingarten/expansion.hpp"

namespace weingarten::framecalc {

/// The four normalization families the coefficient formulas live in.
enum class Family { FrenetC0, FrenetC1, ParallelC0, ParallelC1 };

FrameKind family_kind(Family f);
WeingartenRelation family_relation(Family f);
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// A radical to adjoin before a chain's bindings can be stated.
struct RadicalSpec {
  std::string name;
  std::string radicand;  // parsed over the family alphabet + earlier radicals
};

struct BindingSpecEntry {
  std::string symbol;
  std::string value;  // parsed expression; may use the chain's radicals
};

/// A named, replayable substitution step. Chains with `sign_branch` carry an
/// explicit second binding list for the '-' branch.
struct ChainSpec {
  std::string id;
  Family family;
  std::string summary;
  std::vector<RadicalSpec> radicals;
  std::vector<BindingSpecEntry> bindings;
  std::vector<BindingSpecEntry> bindings_minus;  // used when sign_branch
  bool sign_branch = false;
  /// True when every binding is polynomial, so the chain can produce a
  /// full CoefficientTable (not just per-entry rational audits).
  bool table_safe = true;
};

enum class CompareMode {
  Exact,        // machine equals expected (chain bindings applied to both)
  BranchSigned, // machine(+) == +expected, machine(-) == -expected
  Zero,         // machine vanishes identically
  Factor,       // expected divides machine; cofactor reported
  Custom,       // dedicated implementation keyed by entry id
};

struct CatalogEntry {
  std::string id;
  Family family;
  std::string coefficient;          // "A0".."A8", "B1".."B8"; empty for Custom
  std::vector<std::string> chain;   // chain ids applied in order
  std::string expected;             // transcription of the printed formula
  CompareMode mode = CompareMode::Exact;
  bool both_branches = false;       // replicate over the chain's sign branch
  std::string context;              // where the formula arises (derivation terms)
  std::optional<std::string> erratum;  // machine-anchored corrected form
  std::string erratum_note;            // what is suspected defective in print
  bool acceptance = false;          // member of the acceptance exact set
  bool acceptance_mismatch = false; // acceptance requires mismatch + stable diff
};

const std::vector<ChainSpec>& chain_registry();
const std::vector<CatalogEntry>& catalog();

const ChainSpec& find_chain(Family family, const std::string& id);
const CatalogEntry& find_entry(const std::string& id);

/// Alphabet of a family extended by the radicals of the given chains,
/// plus the finalized binding set of the chain sequence.
struct PreparedChain {
  AlphabetPtr alphabet;   // family alphabet + chain radicals
  BindingSet bindings;    // all chain bindings, resolved over `alphabet`
  bool table_safe;
};
PreparedChain prepare_chain(Family family, const std::vector<std::string>& chain_ids,
                            int sign_branch /* +1 or -1 */);

/// Normalized expansion of a family (relation entries substituted).
const FourierSeries& family_expansion(Family f);

/// Builds a CoefficientTable by replaying polynomial chains (expand CLI,
/// golden tests). Throws for chains that are not table safe.
CoefficientTable family_table(Family f, const std::vector<std::string>& chain_ids,
                              int sign_branch = +1);

}  // namespace weingarten::framecalc
