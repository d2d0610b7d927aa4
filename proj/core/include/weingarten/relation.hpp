#pragma once

#include <optional>
#include <string>

#include "weingarten/rational.hpp"

namespace weingarten {

/// The linear curvature relation a H + b K = c. Entries left unset stay
/// symbolic in the expansion; set entries are substituted exactly.
struct WeingartenRelation {
  std::optional<Rational> a, b, c;

  enum class Normalization { Raw, AOne, COne };
  Normalization normalization = Normalization::Raw;

  static WeingartenRelation numeric(Rational a, Rational b, Rational c) {
    WeingartenRelation rel;
    rel.a = std::move(a);
    rel.b = std::move(b);
    rel.c = std::move(c);
    rel.validate();
    return rel;
  }
  static WeingartenRelation symbolic() { return {}; }
  /// c = 0, a scaled to 1, b symbolic.
  static WeingartenRelation c_zero_a_one() {
    WeingartenRelation rel;
    rel.a = Rational(1);
    rel.c = Rational(0);
    rel.normalization = Normalization::AOne;
    return rel;
  }
  /// c scaled to 1, a and b symbolic.
  static WeingartenRelation c_one() {
    WeingartenRelation rel;
    rel.c = Rational(1);
    rel.normalization = Normalization::COne;
    return rel;
  }
  /// c = 0 with a, b symbolic.
  static WeingartenRelation c_zero() {
    WeingartenRelation rel;
    rel.c = Rational(0);
    return rel;
  }

  bool fully_numeric() const { return a && b && c; }

  /// Enforces a^2 + b^2 != 0 when both are pinned.
  void validate() const {
    if (a && b && *a == 0 && *b == 0)
      throw ConfigError("relation violates a^2 + b^2 != 0");
  }

  std::string str() const {
    auto f = [](const std::optional<Rational>& q, const char* name) {
      return q ? to_string(*q) : std::string(name);
    };
    return "(" + f(a, "a") + ", " + f(b, "b") + ", " + f(c, "c") + ")";
  }
};

}  // namespace weingarten
