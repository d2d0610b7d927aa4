#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "weingarten/errors.hpp"

namespace weingarten::cas {

class Polynomial;
class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// How a symbol behaves under d/du.
enum class SymbolKind {
  Parameter,  // derivative is identically zero (a, b, c, lambda, mu)
  Function,   // derivative is another declared symbol (r -> r')
  Terminal,   // function symbol at the end of its declared chain; deriving
              // it is a depth error, never silent truncation
  Radical,    // adjoined square root; deriving it is an error unless the
              // caller materialized a quotient form as an explicit binding
};

/// Closed, immutable symbol alphabet with a derivation. Radical adjunction
/// produces a new alphabet extending this one; polynomials over a prefix
/// alphabet lift losslessly into any extension.
class Alphabet {
 public:
  struct Entry {
    std::string name;
    SymbolKind kind = SymbolKind::Parameter;
    int derivative = -1;  // index of the derivative symbol (Function only)
  };

  int size() const { return static_cast<int>(entries_.size()); }
  const Entry& entry(int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::string& name(int i) const { return entries_[static_cast<size_t>(i)].name; }

  /// Index of a symbol, or -1 when absent.
  int find(const std::string& name) const;
  /// Index of a symbol; throws AlphabetMismatchError when absent.
  int require(const std::string& name) const;

  bool has_radicals() const { return first_radical_ >= 0; }
  int first_radical() const { return first_radical_; }
  /// Defining relation of a radical symbol: name^2 -> radicand.
  const Polynomial& radicand(int i) const;
  /// Sign branch the radical denotes (+1/-1); substitution bookkeeping only.
  int radical_sign(int i) const;

  /// True when this alphabet's entries are an initial segment of `other`'s
  /// (structurally, including radical defining relations).
  bool is_prefix_of(const Alphabet& other) const;

  friend class AlphabetBuilder;
  friend AlphabetPtr adjoin_radical(const AlphabetPtr&, const std::string&,
                                    const Polynomial&, int);

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::shared_ptr<const Polynomial>> radicands_;  // per entry; null if not radical
  std::vector<int> radical_signs_;
  int first_radical_ = -1;
};

/// Builds a base (radical-free) alphabet. Chains declare the full derivative
/// closure: add_chain("r", 3) declares r, r', r'', r''' with r''' terminal.
class AlphabetBuilder {
 public:
  AlphabetBuilder& parameter(const std::string& name);
  AlphabetBuilder& chain(const std::string& name, int depth);
  AlphabetPtr build();

 private:
  std::shared_ptr<Alphabet> alpha_ = std::make_shared<Alphabet>();
  void add_entry(Alphabet::Entry e);
};

/// Adjoins a square root of `radicand` as a fresh symbol. The radicand must
/// live over (a prefix of) `base`, so radicals are stratified by
/// construction. Subsequent normalization rewrites name^2 -> radicand.
AlphabetPtr adjoin_radical(const AlphabetPtr& base, const std::string& name,
                           const Polynomial& radicand, int sign = +1);

/// Frenet-chart alphabet: parameters a, b, c; function chains kappa, sigma,
/// r, alpha, beta, gamma, each with derivative closure depth 3.
AlphabetPtr frenet_alphabet();

/// Parallel-plane chart alphabet: parameters a, b, c, lambda, mu; function
/// chains f, g, r with derivative closure depth 3.
AlphabetPtr parallel_alphabet();

}  // namespace weingarten::cas
