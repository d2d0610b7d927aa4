#include "weingarten/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace weingarten::cas {

namespace {
int mono_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}
}  // namespace

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  // Same alphabet within a polynomial; sizes match by construction.
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

Polynomial::Polynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

Polynomial Polynomial::constant(AlphabetPtr alphabet, const Rational& value) {
  Polynomial p(std::move(alphabet));
  if (value != 0) p.terms_.emplace(Monomial(static_cast<size_t>(p.alphabet_->size()), 0), value);
  return p;
}

Polynomial Polynomial::symbol(const AlphabetPtr& alphabet, const std::string& name,
                              int power) {
  const int idx = alphabet->require(name);
  Monomial m(static_cast<size_t>(alphabet->size()), 0);
  if (power < 0 || power > 255) throw Error("symbol power out of range");
  m[static_cast<size_t>(idx)] = static_cast<std::uint8_t>(power);
  return monomial(alphabet, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(AlphabetPtr alphabet, Monomial exponents,
                                const Rational& coefficient) {
  Polynomial p(std::move(alphabet));
  if (exponents.size() != static_cast<size_t>(p.alphabet_->size()))
    throw AlphabetMismatchError("monomial length does not match alphabet size");
  if (coefficient != 0) {
    p.terms_.emplace(std::move(exponents), coefficient);
    p.reduce_radicals_inplace();
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.rbegin()->first);
}

void Polynomial::prune_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

namespace {
// Lifts a monomial from a prefix alphabet by zero padding.
Monomial lift_mono(const Monomial& m, size_t n) {
  Monomial out = m;
  out.resize(n, 0);
  return out;
}

// Picks the wider of two nested alphabets; throws if unrelated.
AlphabetPtr join_alphabets(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return a;
  if (a->is_prefix_of(*b)) return b;
  if (b->is_prefix_of(*a)) return a;
  throw AlphabetMismatchError("operands live over unrelated alphabets");
}
}  // namespace

Polynomial Polynomial::lift_to(const AlphabetPtr& wider) const {
  if (wider == alphabet_) return *this;
  if (!alphabet_->is_prefix_of(*wider))
    throw AlphabetMismatchError("cannot lift: target is not an extension");
  Polynomial out(wider);
  const size_t n = static_cast<size_t>(wider->size());
  for (const auto& [m, c] : terms_) out.terms_.emplace(lift_mono(m, n), c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(alphabet_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (alphabet_ != rhs.alphabet_) {
    AlphabetPtr joined = join_alphabets(alphabet_, rhs.alphabet_);
    *this = lift_to(joined);
    return *this += rhs.lift_to(joined);
  }
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += -rhs;
  return out;
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial(alphabet_);
  Polynomial out(alphabet_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (alphabet_ != rhs.alphabet_) {
    AlphabetPtr joined = join_alphabets(alphabet_, rhs.alphabet_);
    return lift_to(joined) * rhs.lift_to(joined);
  }
  Polynomial out(alphabet_);
  const size_t n = static_cast<size_t>(alphabet_->size());
  Monomial prod(n, 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (size_t i = 0; i < n; ++i) {
        const int e = ma[i] + mb[i];
        if (e > 255) throw Error("monomial exponent overflow");
        prod[i] = static_cast<std::uint8_t>(e);
      }
      auto [it, fresh] = out.terms_.emplace(prod, ca * cb);
      if (!fresh && (it->second += ca * cb) == 0) out.terms_.erase(it);
    }
  }
  out.reduce_radicals_inplace();
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial acc = Polynomial::constant(alphabet_, Rational(1));
  Polynomial base = *this;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (alphabet_ != rhs.alphabet_) {
    AlphabetPtr joined = join_alphabets(alphabet_, rhs.alphabet_);
    return lift_to(joined).terms_ == rhs.lift_to(joined).terms_;
  }
  return terms_ == rhs.terms_;
}

void Polynomial::reduce_radicals_inplace() {
  if (!alphabet_->has_radicals()) return;
  const int first = alphabet_->first_radical();
  const int n = alphabet_->size();
  for (;;) {
    // Find a term carrying a square of a radical.
    auto hit = terms_.end();
    int rad = -1;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      for (int i = first; i < n; ++i) {
        if (alphabet_->entry(i).kind == SymbolKind::Radical &&
            it->first[static_cast<size_t>(i)] >= 2) {
          hit = it;
          rad = i;
          break;
        }
      }
      if (hit != terms_.end()) break;
    }
    if (hit == terms_.end()) return;

    Monomial m = hit->first;
    const Rational c = hit->second;
    terms_.erase(hit);
    const unsigned q = m[static_cast<size_t>(rad)] / 2;
    m[static_cast<size_t>(rad)] %= 2;
    const Polynomial repl =
        alphabet_->radicand(rad).lift_to(alphabet_).pow(q) *
        Polynomial::monomial(alphabet_, std::move(m), c);
    // monomial() already reduced repl; merge term-wise.
    for (const auto& [mm, cc] : repl.terms_) {
      auto [it, fresh] = terms_.emplace(mm, cc);
      if (!fresh && (it->second += cc) == 0) terms_.erase(it);
    }
  }
}

Polynomial Polynomial::normalize_radicals() const {
  Polynomial out = *this;
  out.reduce_radicals_inplace();
  return out;
}

Polynomial Polynomial::derive() const {
  Polynomial out(alphabet_);
  const size_t n = static_cast<size_t>(alphabet_->size());
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      const auto& e = alphabet_->entry(static_cast<int>(i));
      switch (e.kind) {
        case SymbolKind::Parameter:
          break;
        case SymbolKind::Function: {
          Monomial dm = m;
          dm[i] -= 1;
          const size_t d = static_cast<size_t>(e.derivative);
          if (dm[d] == 255) throw Error("monomial exponent overflow");
          dm[d] += 1;
          out += Polynomial::monomial(alphabet_, std::move(dm), c * m[i]);
          break;
        }
        case SymbolKind::Terminal:
          throw DerivativeDepthError("derivative of '" + e.name +
                                     "' exceeds the declared closure depth");
        case SymbolKind::Radical:
          throw RadicalDerivativeError(
              "derivative of radical '" + e.name +
              "' requires an explicitly materialized quotient form");
      }
    }
  }
  return out;
}

int Polynomial::degree_in(int symbol) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int>(m[static_cast<size_t>(symbol)]));
  return d;
}

bool Polynomial::depends_on(int symbol) const {
  for (const auto& [m, c] : terms_)
    if (m[static_cast<size_t>(symbol)] > 0) return true;
  return false;
}

bool Polynomial::has_radical_symbols() const {
  if (!alphabet_->has_radicals()) return false;
  for (int i = alphabet_->first_radical(); i < alphabet_->size(); ++i)
    if (alphabet_->entry(i).kind == SymbolKind::Radical && depends_on(i)) return true;
  return false;
}

Polynomial Polynomial::coefficient_of(int symbol, int power) const {
  Polynomial out(alphabet_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<size_t>(symbol)] != power) continue;
    Monomial mm = m;
    mm[static_cast<size_t>(symbol)] = 0;
    out += Polynomial::monomial(alphabet_, std::move(mm), c);
  }
  return out;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (divisor.has_radical_symbols())
    throw Error("exact division by a radical-bearing divisor is not supported");
  AlphabetPtr joined = join_alphabets(alphabet_, divisor.alphabet_);
  Polynomial rem = lift_to(joined);
  const Polynomial div = divisor.lift_to(joined);
  Polynomial quo(joined);
  const auto& [dm, dc] = *div.terms_.rbegin();
  const size_t n = static_cast<size_t>(joined->size());
  while (!rem.is_zero()) {
    const auto& [lm, lc] = *rem.terms_.rbegin();
    Monomial t(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (lm[i] < dm[i]) return std::nullopt;
      t[i] = static_cast<std::uint8_t>(lm[i] - dm[i]);
    }
    const Polynomial step = Polynomial::monomial(joined, std::move(t), lc / dc);
    quo += step;
    rem -= step * div;
  }
  return quo;
}

Polynomial Polynomial::primitive_part(Rational* content) const {
  if (is_zero()) {
    if (content) *content = 0;
    return *this;
  }
  // gcd of numerators over lcm of denominators, signed by the leading term.
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  Rational cont(num_gcd, den_lcm);
  if (terms_.rbegin()->second < 0) cont = -cont;
  if (content) *content = cont;
  return *this * (Rational(1) / cont);
}

double Polynomial::eval(const std::vector<double>& values) const {
  if (values.size() != static_cast<size_t>(alphabet_->size()))
    throw Error("value vector size does not match alphabet");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const double v = values[i];
      if (std::isnan(v))
        throw Error("no numeric value for symbol '" +
                    alphabet_->name(static_cast<int>(i)) + "'");
      t *= std::pow(v, static_cast<int>(m[i]));
    }
    acc += t;
  }
  return acc;
}

std::vector<double> numeric_values(const AlphabetPtr& alphabet,
                                   const std::map<std::string, double>& named) {
  std::vector<double> out(static_cast<size_t>(alphabet->size()),
                          std::numeric_limits<double>::quiet_NaN());
  for (const auto& [name, v] : named) out[static_cast<size_t>(alphabet->require(name))] = v;
  // Radicals resolve from their radicands in stratification order.
  for (int i = 0; i < alphabet->size(); ++i) {
    if (alphabet->entry(i).kind != SymbolKind::Radical) continue;
    if (!std::isnan(out[static_cast<size_t>(i)])) continue;  // caller override
    const Polynomial& rad = alphabet->radicand(i);
    std::vector<double> sub(out.begin(), out.begin() + rad.alphabet()->size());
    const double q = rad.eval(sub);
    if (q < 0)
      throw Error("negative radicand for '" + alphabet->name(i) + "' at this point");
    out[static_cast<size_t>(i)] = alphabet->radical_sign(i) * std::sqrt(q);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string factors;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += alphabet_->name(static_cast<int>(i));
      if (m[i] > 1) factors += "^" + std::to_string(static_cast<int>(m[i]));
    }
    if (factors.empty()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << factors;
    }
  }
  return os.str();
}

}  // namespace weingarten::cas
