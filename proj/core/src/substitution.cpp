#include "weingarten/substitution.hpp"

#include <algorithm>

namespace weingarten::cas {

namespace {

// Core routine: substitute a resolved binding map into a polynomial.
// Quotients are combined over one common denominator (per-symbol maximal
// powers), avoiding pairwise denominator growth.
RationalExpr apply_map(const Polynomial& input,
                       const std::map<int, RationalExpr>& map,
                       const std::set<int>& poisoned, const AlphabetPtr& target) {
  const Polynomial p = input.lift_to(target);
  for (int s : poisoned) {
    if (map.count(s)) continue;
    if (p.depends_on(s))
      throw SubstitutionError(
          "no induced derivative binding available for '" + target->name(s) +
          "' (value of its base symbol is not differentiable); bind it explicitly");
  }

  struct Powers {
    int max_exp = 0;
    std::vector<Polynomial> num_pow, den_pow;
  };
  std::map<int, Powers> active;
  for (const auto& [sym, value] : map) {
    const int d = p.degree_in(sym);
    if (d > 0) active.emplace(sym, Powers{d, {}, {}});
  }
  if (active.empty()) return RationalExpr(p);

  for (auto& [sym, pw] : active) {
    const RationalExpr v = map.at(sym).lift_to(target);
    pw.num_pow.reserve(static_cast<size_t>(pw.max_exp) + 1);
    pw.den_pow.reserve(static_cast<size_t>(pw.max_exp) + 1);
    for (int e = 0; e <= pw.max_exp; ++e) {
      pw.num_pow.push_back(v.num().pow(static_cast<unsigned>(e)));
      pw.den_pow.push_back(v.den().pow(static_cast<unsigned>(e)));
    }
  }

  Polynomial den_total = Polynomial::constant(target, Rational(1));
  for (const auto& [sym, pw] : active)
    den_total = den_total * pw.den_pow[static_cast<size_t>(pw.max_exp)];

  Polynomial num(target);
  for (const auto& [mono, coef] : p.terms()) {
    Monomial inert = mono;
    Polynomial factor = Polynomial::constant(target, coef);
    for (const auto& [sym, pw] : active) {
      const int e = inert[static_cast<size_t>(sym)];
      inert[static_cast<size_t>(sym)] = 0;
      if (e > 0) factor = factor * pw.num_pow[static_cast<size_t>(e)];
      if (pw.max_exp - e > 0)
        factor = factor * pw.den_pow[static_cast<size_t>(pw.max_exp - e)];
    }
    num += factor * Polynomial::monomial(target, std::move(inert), Rational(1));
  }
  return RationalExpr(std::move(num), std::move(den_total));
}

RationalExpr apply_map(const RationalExpr& e, const std::map<int, RationalExpr>& map,
                       const std::set<int>& poisoned, const AlphabetPtr& target) {
  const RationalExpr n = apply_map(e.num(), map, poisoned, target);
  const RationalExpr d = apply_map(e.den(), map, poisoned, target);
  if (d.is_zero())
    throw SubstitutionError("denominator vanished under the bindings: (" +
                            e.den().str() + ")");
  return n / d;
}

}  // namespace

BindingSet::BindingSet(AlphabetPtr alphabet, bool auto_derivatives)
    : alphabet_(std::move(alphabet)), auto_derivatives_(auto_derivatives) {}

BindingSet& BindingSet::bind(const std::string& symbol, const RationalExpr& value) {
  const int idx = alphabet_->require(symbol);
  raw_.insert_or_assign(idx, value.lift_to(alphabet_));
  caller_bound_.insert(idx);
  finalized_ = false;
  return *this;
}

BindingSet& BindingSet::bind(const std::string& symbol, const Polynomial& value) {
  return bind(symbol, RationalExpr(value));
}

BindingSet& BindingSet::bind(const std::string& symbol, const Rational& value) {
  return bind(symbol, RationalExpr(Polynomial::constant(alphabet_, value)));
}

void BindingSet::finalize() const {
  if (finalized_) return;
  std::map<int, RationalExpr> work = raw_;
  poisoned_.clear();

  if (auto_derivatives_) {
    // Chain induced derivative bindings from every caller binding.
    for (const auto& [sym, value] : raw_) {
      int cur = sym;
      RationalExpr cur_value = value;
      for (;;) {
        const auto& e = alphabet_->entry(cur);
        if (e.kind != SymbolKind::Function) break;
        const int d = e.derivative;
        if (work.count(d)) break;  // caller override or already chained
        bool ok = true;
        try {
          cur_value = cur_value.derive();
        } catch (const Error&) {
          poisoned_.insert(d);
          ok = false;
        }
        if (!ok) break;
        work.emplace(d, cur_value);
        cur = d;
      }
    }
  }

  // Resolve inter-binding references; stratified sets reach a fixpoint in
  // at most |work| passes.
  const size_t max_passes = work.size() + 1;
  for (size_t pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (auto& [sym, value] : work) {
      std::map<int, RationalExpr> others = work;
      others.erase(sym);
      if (others.empty()) continue;
      RationalExpr next = apply_map(value, others, {}, alphabet_);
      if (!(next.num() == value.num() && next.den() == value.den())) {
        value = next;
        changed = true;
      }
    }
    if (!changed) break;
    if (pass + 1 == max_passes)
      throw SubstitutionError("cyclic binding set (no stratification)");
  }
  for (const auto& [sym, value] : work) {
    for (const auto& [other, unused] : work) {
      if (value.num().depends_on(other) || value.den().depends_on(other))
        throw SubstitutionError("cyclic binding set: value of '" +
                                alphabet_->name(sym) + "' mentions bound '" +
                                alphabet_->name(other) + "'");
    }
  }
  resolved_ = std::move(work);
  finalized_ = true;
}

const std::map<int, RationalExpr>& BindingSet::resolved() const {
  finalize();
  return resolved_;
}

const std::set<int>& BindingSet::poisoned() const {
  finalize();
  return poisoned_;
}

RationalExpr substitute_rational(const Polynomial& p, const BindingSet& bindings) {
  return apply_map(p, bindings.resolved(), bindings.poisoned(), bindings.alphabet());
}

RationalExpr substitute_rational(const RationalExpr& e, const BindingSet& bindings) {
  return apply_map(e, bindings.resolved(), bindings.poisoned(), bindings.alphabet());
}

Polynomial substitute(const Polynomial& p, const BindingSet& bindings) {
  return substitute_rational(p, bindings).as_polynomial();
}

Polynomial substitute_radical_free(const Polynomial& p, const BindingSet& bindings) {
  Polynomial out = substitute(p, bindings);
  if (out.has_radical_symbols())
    throw SubstitutionError(
        "result retains a radical of odd residual degree: " + out.str());
  return out;
}

Polynomial flip_radical_sign(const Polynomial& p, const std::string& radical_name) {
  const AlphabetPtr& alpha = p.alphabet();
  const int idx = alpha->require(radical_name);
  if (alpha->entry(idx).kind != SymbolKind::Radical)
    throw AlphabetMismatchError("'" + radical_name + "' is not a radical symbol");
  Polynomial out(alpha);
  for (const auto& [m, c] : p.terms()) {
    const bool odd = m[static_cast<size_t>(idx)] % 2 == 1;
    out += Polynomial::monomial(alpha, m, odd ? -c : c);
  }
  return out;
}

RationalExpr flip_radical_sign(const RationalExpr& e, const std::string& radical_name) {
  return RationalExpr(flip_radical_sign(e.num(), radical_name),
                      flip_radical_sign(e.den(), radical_name));
}

}  // namespace weingarten::cas
