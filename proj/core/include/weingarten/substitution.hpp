#pragma once

#include <map>
#include <set>
#include <string>

#include "weingarten/rational_expr.hpp"

namespace weingarten::cas {

/// An ordered, stratified set of symbol bindings. Binding a function symbol
/// automatically installs the induced bindings for its derivative chain
/// (g' -> lambda*r^2 installs g'' -> 2*lambda*r*r', ...) unless the caller
/// overrides them. Where the induced derivative cannot be formed (the value
/// mentions a radical or a chain end), the derivative symbol is poisoned:
/// substitution fails only if a poisoned symbol actually occurs.
class BindingSet {
 public:
  explicit BindingSet(AlphabetPtr alphabet, bool auto_derivatives = true);

  BindingSet& bind(const std::string& symbol, const Polynomial& value);
  BindingSet& bind(const std::string& symbol, const RationalExpr& value);
  BindingSet& bind(const std::string& symbol, const Rational& value);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  bool empty() const { return raw_.empty(); }

  /// Fully resolved bindings (inter-binding references substituted away).
  /// Throws SubstitutionError on cyclic binding sets.
  const std::map<int, RationalExpr>& resolved() const;
  const std::set<int>& poisoned() const;

 private:
  AlphabetPtr alphabet_;
  bool auto_derivatives_;
  std::map<int, RationalExpr> raw_;
  std::set<int> caller_bound_;
  mutable bool finalized_ = false;
  mutable std::map<int, RationalExpr> resolved_;
  mutable std::set<int> poisoned_;
  void finalize() const;
};

/// Substitutes bindings into a polynomial. Quotient bindings are combined
/// over a common denominator; the result is exact and radical-normalized.
RationalExpr substitute_rational(const Polynomial& p, const BindingSet& bindings);
RationalExpr substitute_rational(const RationalExpr& e, const BindingSet& bindings);

/// As substitute_rational, but demands the denominators cancel to a rational
/// constant so the result is again a Polynomial.
Polynomial substitute(const Polynomial& p, const BindingSet& bindings);

/// As substitute, additionally rejecting residual radical symbols of odd
/// degree in the output.
Polynomial substitute_radical_free(const Polynomial& p, const BindingSet& bindings);

/// Ring automorphism flipping the sign branch of one radical symbol
/// (odd powers of `radical_name` change sign).
Polynomial flip_radical_sign(const Polynomial& p, const std::string& radical_name);
RationalExpr flip_radical_sign(const RationalExpr& e, const std::string& radical_name);

}  // namespace weingarten::cas
