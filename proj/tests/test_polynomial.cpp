#include <doctest.h>

#include "test_support.hpp"
#include "weingarten/expr_parse.hpp"

using namespace wtest;

TEST_CASE("alphabet: chains, parameters and depth errors") {
  const AlphabetPtr alpha = frenet_alphabet();
  CHECK(alpha->entry(alpha->require("a")).kind == SymbolKind::Parameter);
  CHECK(alpha->entry(alpha->require("r")).kind == SymbolKind::Function);
  CHECK(alpha->name(alpha->entry(alpha->require("r")).derivative) == "r'");
  CHECK(alpha->entry(alpha->require("r'''")).kind == SymbolKind::Terminal);
  CHECK(alpha->find("tau") == -1);

  // Deriving a parameter gives zero, deriving past the chain end throws.
  CHECK(Polynomial::symbol(alpha, "b").derive().is_zero());
  CHECK_THROWS_AS(Polynomial::symbol(alpha, "r'''").derive(), DerivativeDepthError);
}

TEST_CASE("monomial products") {
  const AlphabetPtr alpha = frenet_alphabet();
  const Polynomial rp = Polynomial::symbol(alpha, "r'");
  CHECK(rp * rp == Polynomial::symbol(alpha, "r'", 2));

  const Polynomial p = parse_polynomial(alpha, "beta^2 - kappa^2*r^2");
  CHECK((p * Polynomial(alpha)).is_zero());
  CHECK(p * Polynomial(alpha) == Polynomial(alpha));

  // Hand-expanded difference of squares.
  const Polynomial q = parse_polynomial(alpha, "beta^2 + kappa^2*r^2");
  CHECK(p * q == parse_polynomial(alpha, "beta^4 - kappa^4*r^4"));
}

TEST_CASE("derivation: alphabet rule and Leibniz on named cases") {
  const AlphabetPtr alpha = frenet_alphabet();
  CHECK(Polynomial::symbol(alpha, "r").derive() == Polynomial::symbol(alpha, "r'"));
  CHECK(Polynomial::symbol(alpha, "r", 2).derive() ==
        parse_polynomial(alpha, "2*r*r'"));
  CHECK(parse_polynomial(alpha, "kappa*beta").derive() ==
        parse_polynomial(alpha, "kappa'*beta + kappa*beta'"));
}

TEST_CASE("ring laws and Leibniz, randomized") {
  const AlphabetPtr alpha = frenet_alphabet();
  std::mt19937 rng(20240817);
  for (int it = 0; it < 500; ++it) {
    const Polynomial p = random_polynomial(alpha, rng);
    const Polynomial q = random_polynomial(alpha, rng);
    const Polynomial s = random_polynomial(alpha, rng);
    CHECK((p + q) + s == p + (q + s));
    CHECK(p * q == q * p);
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p * q).derive() == p.derive() * q + p * q.derive());
  }
}

TEST_CASE("canonical text round-trips through the parser") {
  const AlphabetPtr alpha = frenet_alphabet();
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    const Polynomial p = random_polynomial(alpha, rng);
    CHECK(parse_polynomial(alpha, p.str()) == p);
  }
  CHECK(Polynomial(alpha).str() == "0");
}

TEST_CASE("exact division") {
  const AlphabetPtr alpha = frenet_alphabet();
  const Polynomial p = parse_polynomial(alpha, "(beta^2 - kappa^2*r^2)*(beta^2 + b*kappa)");
  const Polynomial d = parse_polynomial(alpha, "beta^2 - kappa^2*r^2");
  auto q = p.exact_divide(d);
  REQUIRE(q.has_value());
  CHECK(*q == parse_polynomial(alpha, "beta^2 + b*kappa"));
  CHECK_FALSE(p.exact_divide(parse_polynomial(alpha, "beta + 1")).has_value());
}

TEST_CASE("radical adjunction: defining relation and soundness") {
  const AlphabetPtr base = frenet_alphabet();

  // name^2 -> radicand normalizes the defining relation to zero
  const Polynomial rad = parse_polynomial(base, "16*gamma^4 + 4*b^2*gamma^2*kappa^2 "
                                                "+ b^4*kappa^4 - 12*gamma^2*kappa^2*r^2");
  const AlphabetPtr ext = adjoin_radical(base, "A8disc", rad);
  const Polynomial A = Polynomial::symbol(ext, "A8disc");
  CHECK((A * A - rad.lift_to(ext)).is_zero());

  // (a + s)(a - s) with s^2 -> a^2 + 4*b reduces to -4*b  (hand expansion)
  const AlphabetPtr ext2 = adjoin_radical(base, "s", parse_polynomial(base, "a^2 + 4*b"));
  const Polynomial a = Polynomial::symbol(ext2, "a");
  const Polynomial s = Polynomial::symbol(ext2, "s");
  CHECK((a + s) * (a - s) == parse_polynomial(ext2, "-4*b"));

  // rewrite applied to s^3 -> (a^2 + 4*b) * s
  CHECK(s.pow(3) == parse_polynomial(ext2, "(a^2 + 4*b) * s"));

  // stratified radicand over an already-adjoined radical is accepted
  const AlphabetPtr ext3 =
      adjoin_radical(ext2, "t", parse_polynomial(ext2, "b + s"));
  CHECK(Polynomial::symbol(ext3, "t").pow(2) == parse_polynomial(ext3, "b + s"));

  // name collisions are rejected
  CHECK_THROWS_AS(adjoin_radical(ext2, "s", parse_polynomial(base, "b")),
                  AlphabetMismatchError);
  CHECK_THROWS_AS(adjoin_radical(ext2, "r", parse_polynomial(base, "b")),
                  AlphabetMismatchError);

  // radicals cannot be differentiated without a materialized quotient form
  CHECK_THROWS_AS(s.derive(), RadicalDerivativeError);

  // numeric soundness: normalized-zero expressions evaluate to ~0 with the
  // radical bound to its numeric square root
  std::mt19937 rng(99);
  for (int it = 0; it < 50; ++it) {
    std::uniform_real_distribution<double> d(0.1, 2.0);
    std::map<std::string, double> named;
    for (int i = 0; i < base->size(); ++i)
      if (base->entry(i).kind != SymbolKind::Radical) named[base->name(i)] = d(rng);
    const auto vals = numeric_values(ext2, named);  // a^2+4b > 0 here
    const Polynomial z = (a + s) * (a - s) + parse_polynomial(ext2, "4*b");
    CHECK(z.is_zero());
    const Polynomial expr = (a + s) * (a - s);
    CHECK(std::abs(expr.eval(vals) - parse_polynomial(ext2, "-4*b").eval(vals)) < 1e-10);
  }
}

TEST_CASE("primitive part") {
  const AlphabetPtr alpha = frenet_alphabet();
  const Polynomial p = parse_polynomial(alpha, "-6*beta^2 + 4*kappa - 2");
  Rational content;
  const Polynomial prim = p.primitive_part(&content);
  CHECK(content == Rational(-2));
  CHECK(prim == parse_polynomial(alpha, "3*beta^2 - 2*kappa + 1"));
}

TEST_CASE("parser accepts quotients and rejects junk") {
  const AlphabetPtr alpha = frenet_alphabet();
  const RationalExpr e = parse_expression(alpha, "(alpha*b + r*r') / (2*b)");
  // denominators are normalized primitive with positive leading coefficient
  CHECK(e.den() == parse_polynomial(alpha, "b"));
  CHECK(e.num() == parse_polynomial(alpha, "(alpha*b + r*r')/2"));
  CHECK_THROWS_AS(parse_polynomial(alpha, "r /"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(alpha, "unknown_symbol"), AlphabetMismatchError);
  CHECK(parse_polynomial(alpha, "1/2 * kappa") ==
        Polynomial::symbol(alpha, "kappa") * Rational(1, 2));
}
