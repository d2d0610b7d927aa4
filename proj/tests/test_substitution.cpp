#include <doctest.h>

#include "test_support.hpp"
#include "weingarten/expr_parse.hpp"

using namespace wtest;

TEST_CASE("plain bindings and induced derivative bindings") {
  const AlphabetPtr alpha = parallel_alphabet();

  // g' -> lambda r^2 induces g'' -> 2 lambda r r', which kills r*g'' - 2*r'*g'
  const Polynomial target = parse_polynomial(alpha, "r*g'' - 2*r'*g'");
  BindingSet b(alpha);
  b.bind("g'", parse_polynomial(alpha, "lambda*r^2"));
  CHECK(substitute(target, b).is_zero());

  // caller override wins
  BindingSet b2(alpha);
  b2.bind("g'", parse_polynomial(alpha, "lambda*r^2"));
  b2.bind("g''", Polynomial(alpha));
  CHECK(substitute(parse_polynomial(alpha, "g''"), b2).is_zero());
}

TEST_CASE("binding a symbol to zero zeroes its whole derivative chain") {
  const AlphabetPtr alpha = frenet_alphabet();
  BindingSet b(alpha);
  b.bind("beta", Polynomial(alpha));
  const Polynomial p = parse_polynomial(alpha, "beta''' + beta'' + beta' + beta + r");
  CHECK(substitute(p, b) == Polynomial::symbol(alpha, "r"));
}

TEST_CASE("inter-binding references resolve when stratified, cycles throw") {
  const AlphabetPtr alpha = frenet_alphabet();
  BindingSet b(alpha);
  b.bind("alpha", parse_polynomial(alpha, "beta + 1"));
  b.bind("beta", parse_polynomial(alpha, "r^2"));
  CHECK(substitute(parse_polynomial(alpha, "alpha"), b) ==
        parse_polynomial(alpha, "r^2 + 1"));

  BindingSet cyc(alpha);
  cyc.bind("alpha", parse_polynomial(alpha, "beta"));
  cyc.bind("beta", parse_polynomial(alpha, "alpha + 1"));
  CHECK_THROWS_AS(substitute(parse_polynomial(alpha, "alpha"), cyc),
                  SubstitutionError);
}

TEST_CASE("rewrite rules fire inside substitution results") {
  const AlphabetPtr base = frenet_alphabet();
  const AlphabetPtr ext = adjoin_radical(base, "s", parse_polynomial(base, "a^2 + 4*b"));
  BindingSet b(ext);
  b.bind("beta", Polynomial::symbol(ext, "s", 3));
  // beta -> s^3 normalizes to (a^2 + 4b) s
  CHECK(substitute(parse_polynomial(ext, "beta"), b) ==
        parse_polynomial(ext, "(a^2 + 4*b)*s"));
}

TEST_CASE("quotient bindings combine over one denominator") {
  const AlphabetPtr base = frenet_alphabet();
  const AlphabetPtr ext = adjoin_radical(base, "s", parse_polynomial(base, "b^2 - r^2"));
  BindingSet b(ext);
  b.bind("alpha", parse_expression(ext, "-(r*r')/s"));
  // alpha^2 * s^2  ->  r^2 r'^2  exactly
  const RationalExpr out = substitute_rational(parse_polynomial(ext, "alpha^2"), b);
  CHECK(out.equivalent(parse_expression(ext, "(r^2*r'^2)/(b^2 - r^2)")));

  // demanding a polynomial result fails
  CHECK_THROWS_AS(substitute(parse_polynomial(ext, "alpha"), b), SubstitutionError);
}

TEST_CASE("radical-free output demand") {
  const AlphabetPtr base = frenet_alphabet();
  const AlphabetPtr ext = adjoin_radical(base, "s", parse_polynomial(base, "b^2 - r^2"));
  BindingSet b(ext);
  b.bind("beta", parse_polynomial(ext, "kappa*s"));
  // beta^2 reduces to kappa^2 (b^2 - r^2): radical-free
  CHECK(substitute_radical_free(parse_polynomial(ext, "beta^2"), b) ==
        parse_polynomial(ext, "kappa^2*b^2 - kappa^2*r^2"));
  // beta^3 leaves an odd residual power of s
  CHECK_THROWS_AS(substitute_radical_free(parse_polynomial(ext, "beta^3"), b),
                  SubstitutionError);
}

TEST_CASE("poisoned derivative symbols fail only when they occur") {
  const AlphabetPtr base = frenet_alphabet();
  const AlphabetPtr ext = adjoin_radical(base, "s", parse_polynomial(base, "b^2 - r^2"));
  BindingSet b(ext);
  // beta -> kappa*s is not differentiable (s has no declared derivative)
  b.bind("beta", parse_polynomial(ext, "kappa*s"));
  CHECK_NOTHROW(substitute_rational(parse_polynomial(ext, "beta^2"), b));
  CHECK_THROWS_AS(substitute_rational(parse_polynomial(ext, "beta'"), b),
                  SubstitutionError);

  // an explicit quotient form for beta' unblocks it:
  // beta = kappa*s  =>  beta' = kappa'*s + kappa*s' with s' = -r*r'/s
  BindingSet b2(ext);
  b2.bind("beta", parse_polynomial(ext, "kappa*s"));
  b2.bind("beta'", parse_expression(ext, "(kappa'*(b^2 - r^2) - kappa*r*r')/s"));
  const RationalExpr bp = substitute_rational(parse_polynomial(ext, "beta'"), b2);
  CHECK(bp.den() == Polynomial::symbol(ext, "s"));
}

TEST_CASE("substituting numerically consistent data annihilates numerically") {
  // beta -> kappa*s, alpha -> -r r'/s with s = sqrt(b^2 - r^2):
  // check alpha*s + r*r' -> 0 exactly, and numerically at a sample point.
  const AlphabetPtr base = frenet_alphabet();
  const AlphabetPtr ext = adjoin_radical(base, "s", parse_polynomial(base, "b^2 - r^2"));
  BindingSet b(ext);
  b.bind("alpha", parse_expression(ext, "-(r*r')/s"));
  const RationalExpr z = substitute_rational(parse_polynomial(ext, "alpha*s + r*r'"), b);
  CHECK(z.is_zero());
}

TEST_CASE("sign-branch automorphism") {
  const AlphabetPtr base = frenet_alphabet();
  const AlphabetPtr ext = adjoin_radical(base, "s", parse_polynomial(base, "b^2 - r^2"));
  const Polynomial p = parse_polynomial(ext, "kappa*s + b + r*s^3");
  const Polynomial flipped = flip_radical_sign(p, "s");
  CHECK(flipped == parse_polynomial(ext, "-kappa*s + b - r*s^3"));
  CHECK(flip_radical_sign(flipped, "s") == p);
}

TEST_CASE("fourier substitution is coefficient-wise") {
  const AlphabetPtr alpha = parallel_alphabet();
  const FourierSeries f =
      FourierSeries::harmonic(parse_polynomial(alpha, "r*g'' - 2*r'*g'"), 2,
                              Harmonic::Cos) +
      FourierSeries(parse_polynomial(alpha, "f' + g'"));
  BindingSet b(alpha);
  b.bind("g'", parse_polynomial(alpha, "lambda*r^2"));
  const FourierSeries out = f.substitute(b);
  CHECK(out.coeff(2, Harmonic::Cos).is_zero());
  CHECK(out.coeff(0, Harmonic::Const) ==
        parse_polynomial(alpha, "f' + lambda*r^2"));
  CHECK(out.degree() == 0);
}
