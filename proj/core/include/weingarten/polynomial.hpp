#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weingarten/alphabet.hpp"
#include "weingarten/rational.hpp"

namespace weingarten::cas {

/// Exponent vector over an alphabet; index i holds the exponent of symbol i.
using Monomial = std::vector<std::uint8_t>;

/// Graded lexicographic order: total degree first, ties by exponents with
/// the earliest alphabet symbol most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over the rationals in a closed symbol
/// alphabet. Canonical form: no zero coefficients, unique monomial keys,
/// radical exponents reduced below 2. Immutable value semantics; all
/// operations are pure.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Polynomial(AlphabetPtr alphabet);
  static Polynomial constant(AlphabetPtr alphabet, const Rational& value);
  static Polynomial symbol(const AlphabetPtr& alphabet, const std::string& name,
                           int power = 1);
  static Polynomial monomial(AlphabetPtr alphabet, Monomial exponents,
                             const Rational& coefficient);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial included).
  Rational constant_value() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// d/du along the alphabet's derivation. Exact Leibniz/linearity.
  /// Throws DerivativeDepthError past a chain end, RadicalDerivativeError
  /// on radical symbols.
  Polynomial derive() const;

  /// Re-expresses this polynomial over an extension of its alphabet.
  Polynomial lift_to(const AlphabetPtr& wider) const;

  /// Applies the radical rewrite rules name^2 -> radicand to a fixpoint.
  /// Arithmetic keeps results normalized; this is exposed for tests.
  Polynomial normalize_radicals() const;

  int degree_in(int symbol) const;
  bool depends_on(int symbol) const;
  bool has_radical_symbols() const;
  /// Collects the coefficient of symbol^power (the symbol is removed).
  Polynomial coefficient_of(int symbol, int power) const;

  /// Exact division. The divisor must be radical-free when the alphabet has
  /// radicals (division below a radical rewrite is not well-defined
  /// monomial-wise). Returns nullopt when not divisible.
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  /// Divides out the rational content and normalizes the leading coefficient
  /// to be positive. Returns the primitive part; reports content (the factor
  /// such that content * primitive == *this).
  Polynomial primitive_part(Rational* content = nullptr) const;

  /// Numeric evaluation. `values` must assign every non-radical symbol the
  /// polynomial depends on; radicals are resolved from their radicands
  /// (sign branch respected). NaN entries mean "unset".
  double eval(const std::vector<double>& values) const;

  /// Canonical text: graded-lex descending, exact rational coefficients.
  std::string str() const;

  friend struct PolyOps;

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;

  void prune_zeros();
  void reduce_radicals_inplace();
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

/// Fills a value vector for Polynomial::eval from named assignments;
/// radical symbols are computed from their radicands.
std::vector<double> numeric_values(const AlphabetPtr& alphabet,
                                   const std::map<std::string, double>& named);

}  // namespace weingarten::cas
