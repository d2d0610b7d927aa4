#include "weingarten/expansion.hpp"

#include <mutex>
#include <sstream>

namespace weingarten::framecalc {

using weingarten::Rational;

namespace {
FourierSeries compute_expansion(FrameKind kind) {
  const CyclicChart chart = build_cyclic_parametrization(kind);
  const AlphabetPtr& alpha = chart.alphabet;

  const FourierSeries E = dot(chart.xu, chart.xu);
  const FourierSeries F = dot(chart.xu, chart.xv);
  const FourierSeries G = dot(chart.xv, chart.xv);
  const FourierSeries W = E * G - F * F;

  const FourierSeries Tuu = triple_product(chart.xu, chart.xv, chart.xuu);
  const FourierSeries Tuv = triple_product(chart.xu, chart.xv, chart.xuv);
  const FourierSeries Tvv = triple_product(chart.xu, chart.xv, chart.xvv);

  const FourierSeries H1 = G * Tuu - Tuv * F * Rational(2) + E * Tvv;
  const FourierSeries K1 = Tuu * Tvv - Tuv * Tuv;

  const Polynomial a2 = cas::Polynomial::symbol(alpha, "a", 2);
  const Polynomial b = cas::Polynomial::symbol(alpha, "b");
  const Polynomial c = cas::Polynomial::symbol(alpha, "c");
  const FourierSeries inner = W * W * c - K1 * b;
  return H1 * H1 * W * a2 - inner * inner * Rational(4);
}
}  // namespace

const FourierSeries& symbolic_expansion(FrameKind kind) {
  static const FourierSeries frenet = compute_expansion(FrameKind::Frenet);
  static const FourierSeries parallel = compute_expansion(FrameKind::Cartesian);
  return kind == FrameKind::Frenet ? frenet : parallel;
}

FourierSeries assemble_weingarten(const WeingartenRelation& relation, FrameKind kind) {
  relation.validate();
  const FourierSeries& full = symbolic_expansion(kind);
  BindingSet b(full.alphabet());
  bool any = false;
  if (relation.a) {
    b.bind("a", *relation.a);
    any = true;
  }
  if (relation.b) {
    b.bind("b", *relation.b);
    any = true;
  }
  if (relation.c) {
    b.bind("c", *relation.c);
    any = true;
  }
  return any ? full.substitute(b) : full;
}

std::string Provenance::str() const {
  std::ostringstream os;
  os << "chart: " << (kind == FrameKind::Frenet ? "frenet" : "parallel");
  os << "; relation: " << relation.str();
  os << "; chain:";
  if (chain.empty()) os << " (none)";
  for (const auto& id : chain) os << " " << id;
  return os.str();
}

CoefficientTable::CoefficientTable(const FourierSeries& expansion, Provenance provenance)
    : provenance_(std::move(provenance)), alphabet_(expansion.alphabet()) {
  if (expansion.degree() > kMaxHarmonic)
    throw Error("expansion degree " + std::to_string(expansion.degree()) +
                " exceeds the harmonic bound 8");
  for (int j = 0; j <= kMaxHarmonic; ++j) {
    a_.push_back(expansion.coeff(j, cas::Harmonic::Cos));
    b_.push_back(j == 0 ? Polynomial(alphabet_)
                        : expansion.coeff(j, cas::Harmonic::Sin));
  }
}

const Polynomial& CoefficientTable::A(int j) const {
  if (j < 0 || j > kMaxHarmonic) throw Error("A index out of range");
  return a_[static_cast<size_t>(j)];
}

const Polynomial& CoefficientTable::B(int j) const {
  if (j < 1 || j > kMaxHarmonic) throw Error("B index out of range");
  return b_[static_cast<size_t>(j)];
}

int CoefficientTable::degree() const {
  for (int j = kMaxHarmonic; j >= 1; --j)
    if (!a_[static_cast<size_t>(j)].is_zero() || !b_[static_cast<size_t>(j)].is_zero())
      return j;
  return 0;
}

bool CoefficientTable::all_zero() const {
  return a_[0].is_zero() && degree() == 0;
}

std::string CoefficientTable::str() const {
  std::ostringstream os;
  os << "# " << provenance_.str() << "\n";
  os << "A0 = " << a_[0].str();
  for (int j = 1; j <= kMaxHarmonic; ++j) {
    os << "\nA" << j << " = " << a_[static_cast<size_t>(j)].str();
    os << "\nB" << j << " = " << b_[static_cast<size_t>(j)].str();
  }
  os << "\n";
  return os.str();
}

CoefficientTable extract_table(const FourierSeries& expansion, Provenance provenance) {
  return CoefficientTable(expansion, std::move(provenance));
}

CoefficientTable case_substitute(const CoefficientTable& table,
                                 const BindingSet& bindings,
                                 const std::string& chain_id) {
  Provenance p = table.provenance();
  p.chain.push_back(chain_id);
  FourierSeries acc(cas::substitute(table.A(0), bindings));
  for (int j = 1; j <= CoefficientTable::kMaxHarmonic; ++j) {
    acc += FourierSeries::harmonic(cas::substitute(table.A(j), bindings), j,
                                   cas::Harmonic::Cos);
    acc += FourierSeries::harmonic(cas::substitute(table.B(j), bindings), j,
                                   cas::Harmonic::Sin);
  }
  return CoefficientTable(acc, std::move(p));
}

}  // namespace weingarten::framecalc
