#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "weingarten/fourier.hpp"

namespace wtest {

using namespace weingarten;
using namespace weingarten::cas;

/// Random polynomial over symbols whose derivatives stay inside the declared
/// closure depth (so Leibniz tests never hit chain ends).
inline Polynomial random_polynomial(const AlphabetPtr& alpha, std::mt19937& rng,
                                    int max_terms = 5, int max_exp = 2) {
  std::vector<int> usable;
  for (int i = 0; i < alpha->size(); ++i) {
    const auto k = alpha->entry(i).kind;
    if (k == SymbolKind::Parameter || k == SymbolKind::Function) usable.push_back(i);
  }
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<int> numd(-9, 9);
  std::uniform_int_distribution<int> dend(1, 4);
  std::uniform_int_distribution<size_t> pick(0, usable.size() - 1);

  Polynomial p(alpha);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m(static_cast<size_t>(alpha->size()), 0);
    const int nsym = expd(rng) + 1;
    for (int s = 0; s < nsym; ++s)
      m[static_cast<size_t>(usable[pick(rng)])] += static_cast<uint8_t>(expd(rng));
    const Rational c(numd(rng), dend(rng));
    p += Polynomial::monomial(alpha, std::move(m), c);
  }
  return p;
}

inline FourierSeries random_fourier(const AlphabetPtr& alpha, std::mt19937& rng,
                                    int max_degree = 3) {
  std::uniform_int_distribution<int> degd(0, max_degree);
  FourierSeries f(random_polynomial(alpha, rng, 3, 2));
  const int d = degd(rng);
  for (int j = 1; j <= d; ++j) {
    f += FourierSeries::harmonic(random_polynomial(alpha, rng, 3, 2), j, Harmonic::Cos);
    f += FourierSeries::harmonic(random_polynomial(alpha, rng, 3, 2), j, Harmonic::Sin);
  }
  return f;
}

/// Random numeric assignment for every base symbol of an alphabet.
inline std::vector<double> random_values(const AlphabetPtr& alpha, std::mt19937& rng,
                                         double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::map<std::string, double> named;
  for (int i = 0; i < alpha->size(); ++i)
    if (alpha->entry(i).kind != SymbolKind::Radical) named[alpha->name(i)] = d(rng);
  return numeric_values(alpha, named);
}

/// Discrete-projection oracle: extracts Fourier coefficients of a sampled
/// 2pi-periodic function from N equispaced angles. Exact for band-limited
/// inputs with degree < N/2.
struct DftOracle {
  std::vector<double> samples;
  explicit DftOracle(const std::vector<double>& s) : samples(s) {}

  double a0() const {
    double acc = 0;
    for (double s : samples) acc += s;
    return acc / static_cast<double>(samples.size());
  }
  double cosj(int j) const {
    const size_t n = samples.size();
    double acc = 0;
    for (size_t k = 0; k < n; ++k)
      acc += samples[k] * std::cos(j * 2.0 * M_PI * static_cast<double>(k) / n);
    return 2.0 * acc / static_cast<double>(n);
  }
  double sinj(int j) const {
    const size_t n = samples.size();
    double acc = 0;
    for (size_t k = 0; k < n; ++k)
      acc += samples[k] * std::sin(j * 2.0 * M_PI * static_cast<double>(k) / n);
    return 2.0 * acc / static_cast<double>(n);
  }
};

}  // namespace wtest
