#include <doctest.h>

#include "test_support.hpp"
#include "weingarten/expr_parse.hpp"

using namespace wtest;

namespace {
FourierSeries cosv(const AlphabetPtr& a) {
  return FourierSeries::harmonic(Polynomial::constant(a, Rational(1)), 1, Harmonic::Cos);
}
FourierSeries sinv(const AlphabetPtr& a) {
  return FourierSeries::harmonic(Polynomial::constant(a, Rational(1)), 1, Harmonic::Sin);
}
}  // namespace

TEST_CASE("product-to-sum identities") {
  const AlphabetPtr alpha = frenet_alphabet();
  const Rational half(1, 2);

  // cos v * cos v = 1/2 + 1/2 cos 2v
  FourierSeries cc = cosv(alpha) * cosv(alpha);
  CHECK(cc.coeff(0, Harmonic::Const) == Polynomial::constant(alpha, half));
  CHECK(cc.coeff(2, Harmonic::Cos) == Polynomial::constant(alpha, half));
  CHECK(cc.degree() == 2);
  CHECK(cc.coeff(1, Harmonic::Cos).is_zero());
  CHECK(cc.coeff(2, Harmonic::Sin).is_zero());

  // cos v * sin v = 1/2 sin 2v
  FourierSeries cs = cosv(alpha) * sinv(alpha);
  CHECK(cs.coeff(2, Harmonic::Sin) == Polynomial::constant(alpha, half));
  CHECK(cs.coeff(0, Harmonic::Const).is_zero());
  CHECK(cs.coeff(2, Harmonic::Cos).is_zero());
}

TEST_CASE("squared binomial against the sampling oracle") {
  const AlphabetPtr alpha = frenet_alphabet();
  // (r cos v + sin v)^2
  const FourierSeries f =
      FourierSeries::harmonic(Polynomial::symbol(alpha, "r"), 1, Harmonic::Cos) +
      sinv(alpha);
  const FourierSeries sq = f * f;

  // Oracle: sample the numeric square at 16 angles and project.
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(0.2, 3.0);
  const double rv = dist(rng);
  std::vector<double> samples;
  for (int k = 0; k < 16; ++k) {
    const double v = 2.0 * M_PI * k / 16.0;
    const double val = rv * std::cos(v) + std::sin(v);
    samples.push_back(val * val);
  }
  const DftOracle oracle(samples);
  const auto vals = numeric_values(alpha, {{"r", rv}});

  CHECK(sq.degree() == 2);
  CHECK(sq.coeff(0, Harmonic::Const).eval(vals) == doctest::Approx(oracle.a0()).epsilon(1e-12));
  CHECK(sq.coeff(2, Harmonic::Cos).eval(vals) == doctest::Approx(oracle.cosj(2)).epsilon(1e-12));
  CHECK(sq.coeff(2, Harmonic::Sin).eval(vals) == doctest::Approx(oracle.sinj(2)).epsilon(1e-12));
  CHECK(std::abs(sq.coeff(1, Harmonic::Cos).eval(vals) - oracle.cosj(1)) < 1e-12);

  // Frozen closed forms, confirmed by the oracle above.
  CHECK(sq.coeff(0, Harmonic::Const) == parse_polynomial(alpha, "(r^2 + 1)/2"));
  CHECK(sq.coeff(2, Harmonic::Cos) == parse_polynomial(alpha, "(r^2 - 1)/2"));
  CHECK(sq.coeff(2, Harmonic::Sin) == Polynomial::symbol(alpha, "r"));
}

TEST_CASE("derivatives in v and u") {
  const AlphabetPtr alpha = frenet_alphabet();
  const FourierSeries c3 =
      FourierSeries::harmonic(Polynomial::constant(alpha, Rational(1)), 3, Harmonic::Cos);
  const FourierSeries d = c3.derive_v();
  CHECK(d.coeff(3, Harmonic::Sin) == Polynomial::constant(alpha, Rational(-3)));
  CHECK(d.coeff(3, Harmonic::Cos).is_zero());

  const FourierSeries rc =
      FourierSeries::harmonic(Polynomial::symbol(alpha, "r"), 1, Harmonic::Cos);
  CHECK(rc.derive_u().coeff(1, Harmonic::Cos) == Polynomial::symbol(alpha, "r'"));

  // second v-derivative of sin jv is -j^2 sin jv
  for (int j = 1; j <= 4; ++j) {
    const FourierSeries sj = FourierSeries::harmonic(
        Polynomial::constant(alpha, Rational(1)), j, Harmonic::Sin);
    CHECK(sj.derive_v().derive_v().coeff(j, Harmonic::Sin) ==
          Polynomial::constant(alpha, Rational(-j * j)));
  }
}

TEST_CASE("coefficient access contract") {
  const AlphabetPtr alpha = frenet_alphabet();
  const FourierSeries cc = cosv(alpha) * cosv(alpha);
  CHECK(cc.coeff(2, Harmonic::Cos) == Polynomial::constant(alpha, Rational(1, 2)));
  CHECK(cc.coeff(7, Harmonic::Cos).is_zero());  // past the degree
  CHECK_THROWS_AS(cc.coeff(0, Harmonic::Sin), Error);
}

TEST_CASE("reconstruction equals direct evaluation at sample angles") {
  const AlphabetPtr alpha = frenet_alphabet();
  std::mt19937 rng(1318);
  const FourierSeries f = random_fourier(alpha, rng);
  const auto vals = random_values(alpha, rng);
  for (double v : {0.7, 1.9, 4.4}) {
    double rec = f.coeff(0, Harmonic::Const).eval(vals);
    for (int j = 1; j <= f.degree(); ++j) {
      rec += f.coeff(j, Harmonic::Cos).eval(vals) * std::cos(j * v);
      rec += f.coeff(j, Harmonic::Sin).eval(vals) * std::sin(j * v);
    }
    CHECK(rec == doctest::Approx(f.eval(vals, v)).epsilon(1e-12));
  }
}

TEST_CASE("canonical bridge and degree additivity, randomized") {
  const AlphabetPtr alpha = frenet_alphabet();
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> vd(0.0, 2.0 * M_PI);
  for (int it = 0; it < 60; ++it) {
    const FourierSeries f = random_fourier(alpha, rng);
    const FourierSeries g = random_fourier(alpha, rng);
    const FourierSeries fg = f * g;
    CHECK(fg.degree() <= f.degree() + g.degree());

    const auto vals = random_values(alpha, rng);
    const double v = vd(rng);
    const double direct = f.eval(vals, v) * g.eval(vals, v);
    const double through = fg.eval(vals, v);
    const double scale = std::max({1.0, std::abs(direct), std::abs(through)});
    CHECK(std::abs(direct - through) / scale < 1e-12);
  }
}

TEST_CASE("series addition and subtraction agree with evaluation") {
  const AlphabetPtr alpha = parallel_alphabet();
  std::mt19937 rng(55);
  const FourierSeries f = random_fourier(alpha, rng);
  const FourierSeries g = random_fourier(alpha, rng);
  const auto vals = random_values(alpha, rng);
  const double v = 2.13;
  CHECK((f + g).eval(vals, v) ==
        doctest::Approx(f.eval(vals, v) + g.eval(vals, v)).epsilon(1e-12));
  CHECK((f - g).eval(vals, v) ==
        doctest::Approx(f.eval(vals, v) - g.eval(vals, v)).epsilon(1e-12));
}
