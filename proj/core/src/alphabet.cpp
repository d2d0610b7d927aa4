#include "weingarten/alphabet.hpp"

#include <mutex>

#include "weingarten/polynomial.hpp"

namespace weingarten::cas {

int Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Alphabet::require(const std::string& name) const {
  const int i = find(name);
  if (i < 0) throw AlphabetMismatchError("unknown symbol '" + name + "'");
  return i;
}

const Polynomial& Alphabet::radicand(int i) const {
  if (i < 0 || i >= size() || !radicands_[static_cast<size_t>(i)])
    throw AlphabetMismatchError("symbol '" + name(i) + "' is not a radical");
  return *radicands_[static_cast<size_t>(i)];
}

int Alphabet::radical_sign(int i) const {
  radicand(i);  // validates
  return radical_signs_[static_cast<size_t>(i)];
}

bool Alphabet::is_prefix_of(const Alphabet& other) const {
  if (this == &other) return true;
  if (size() > other.size()) return false;
  for (int i = 0; i < size(); ++i) {
    const Entry& a = entry(i);
    const Entry& b = other.entry(i);
    if (a.name != b.name || a.kind != b.kind || a.derivative != b.derivative)
      return false;
    if (a.kind == SymbolKind::Radical) {
      if (radical_signs_[static_cast<size_t>(i)] !=
          other.radical_signs_[static_cast<size_t>(i)])
        return false;
      // Compare defining relations structurally (term maps over prefixes).
      const Polynomial& ra = radicand(i);
      const Polynomial& rb = other.radicand(i);
      if (ra.terms().size() != rb.terms().size()) return false;
      auto ita = ra.terms().begin();
      auto itb = rb.terms().begin();
      for (; ita != ra.terms().end(); ++ita, ++itb) {
        Monomial ma = ita->first, mb = itb->first;
        while (ma.size() < mb.size()) ma.push_back(0);
        while (mb.size() < ma.size()) mb.push_back(0);
        if (ma != mb || ita->second != itb->second) return false;
      }
    }
  }
  return true;
}

void AlphabetBuilder::add_entry(Alphabet::Entry e) {
  if (alpha_->index_.count(e.name))
    throw AlphabetMismatchError("duplicate symbol '" + e.name + "'");
  alpha_->index_[e.name] = alpha_->size();
  alpha_->entries_.push_back(std::move(e));
  alpha_->radicands_.emplace_back();
  alpha_->radical_signs_.push_back(0);
}

AlphabetBuilder& AlphabetBuilder::parameter(const std::string& name) {
  add_entry({name, SymbolKind::Parameter, -1});
  return *this;
}

AlphabetBuilder& AlphabetBuilder::chain(const std::string& name, int depth) {
  if (depth < 0) throw AlphabetMismatchError("negative chain depth");
  const int base = alpha_->size();
  for (int d = 0; d <= depth; ++d) {
    std::string n = name + std::string(static_cast<size_t>(d), '\'');
    const bool last = (d == depth);
    add_entry({std::move(n), last ? SymbolKind::Terminal : SymbolKind::Function,
               last ? -1 : base + d + 1});
  }
  return *this;
}

AlphabetPtr AlphabetBuilder::build() {
  AlphabetPtr built = alpha_;
  alpha_ = std::make_shared<Alphabet>();
  return built;
}

AlphabetPtr adjoin_radical(const AlphabetPtr& base, const std::string& name,
                           const Polynomial& radicand, int sign) {
  if (base->find(name) >= 0)
    throw AlphabetMismatchError("radical name '" + name + "' already in use");
  if (sign != 1 && sign != -1)
    throw AlphabetMismatchError("radical sign branch must be +1 or -1");
  if (!radicand.alphabet()->is_prefix_of(*base))
    throw AlphabetMismatchError(
        "radicand of '" + name + "' is not stratified over the base alphabet");

  auto ext = std::make_shared<Alphabet>(*base);
  ext->index_[name] = ext->size();
  ext->entries_.push_back({name, SymbolKind::Radical, -1});
  ext->radicands_.push_back(std::make_shared<const Polynomial>(radicand));
  ext->radical_signs_.push_back(sign);
  if (ext->first_radical_ < 0) ext->first_radical_ = ext->size() - 1;
  return ext;
}

namespace {
AlphabetPtr build_frenet() {
  AlphabetBuilder b;
  b.parameter("a").parameter("b").parameter("c");
  b.chain("kappa", 3).chain("sigma", 3).chain("r", 3);
  b.chain("alpha", 3).chain("beta", 3).chain("gamma", 3);
  return b.build();
}

AlphabetPtr build_parallel() {
  AlphabetBuilder b;
  b.parameter("a").parameter("b").parameter("c").parameter("lambda").parameter("mu");
  b.chain("f", 3).chain("g", 3).chain("r", 3);
  return b.build();
}
}  // namespace

AlphabetPtr frenet_alphabet() {
  static const AlphabetPtr alpha = build_frenet();
  return alpha;
}

AlphabetPtr parallel_alphabet() {
  static const AlphabetPtr alpha = build_parallel();
  return alpha;
}

}  // namespace weingarten::cas
