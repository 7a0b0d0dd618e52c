#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aft/approx.hpp"

namespace aft::lp {

/// head :- pos..., not neg... . Body atoms are kept sorted and unique.
struct Rule {
  std::string head;
  std::vector<std::string> pos;
  std::vector<std::string> neg;

  Rule() = default;
  Rule(std::string head, std::vector<std::string> pos = {}, std::vector<std::string> neg = {});

  bool is_fact() const { return pos.empty() && neg.empty(); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A propositional normal logic program. Its atoms are every name that
/// occurs in a head or a body, sorted; atom i is bit i of the elements of
/// lattice().
class LogicProgram {
 public:
  /// Rule in bitmask form over the program's atom table.
  struct CompiledRule {
    Element head;  // single bit
    Element pos;
    Element neg;
  };

  LogicProgram() : LogicProgram(std::vector<Rule>{}) {}
  explicit LogicProgram(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<CompiledRule>& compiled() const noexcept { return compiled_; }
  const FiniteLattice& lattice() const noexcept { return lattice_; }

  std::optional<std::size_t> index_of(std::string_view atom) const;
  /// Element of lattice() holding exactly `atoms`. Throws ForeignAtom.
  Element element_of(const std::vector<std::string>& atoms) const;
  /// Sorted atom names of an element.
  std::vector<std::string> atoms_of(Element x) const;

  bool is_definite() const;
  /// No atom depends negatively on itself through the dependency graph.
  bool is_stratified() const;

  /// One rule per line in the input grammar; parse_program reads it back to
  /// an equal program.
  std::string to_string() const;

  friend bool operator==(const LogicProgram& a, const LogicProgram& b) {
    return a.rules_ == b.rules_ && a.atoms_ == b.atoms_;
  }

 private:
  std::vector<Rule> rules_;
  std::vector<std::string> atoms_;
  std::vector<CompiledRule> compiled_;
  FiniteLattice lattice_;
};

/// Reads `head :- lit, ..., lit.` rules, `not a` for negation and `%`
/// comments. Throws ParseError with the position of the offending token.
LogicProgram parse_program(std::string_view text);

/// Immediate consequence operator:
///   T(X) = { head(r) : pos(r) subset of X, neg(r) disjoint from X }.
LatticeOperator tp(const LogicProgram& program);

/// Four-valued consequence operator, defined on every pair (I, J):
///   lower = { head(r) : pos(r) subset of I, neg(r) disjoint from J }
///   upper = { head(r) : pos(r) subset of J, neg(r) disjoint from I }
/// with tp(program) attached.
Approximator fitting(const LogicProgram& program);

/// Drops rules blocked by `model`, strips the remaining negative bodies.
/// Throws ForeignAtom if `model` names an atom outside the program.
LogicProgram gl_reduct(const LogicProgram& program, const std::vector<std::string>& model);

inline constexpr std::size_t kOracleAtomLimit = 20;

/// Brute force: every M with M = least model of the reduct by M, as
/// elements of program.lattice(), increasing. Independent of the fixpoint
/// engine. Throws TooManyAtoms above kOracleAtomLimit atoms.
std::vector<Element> stable_models_oracle(const LogicProgram& program);

}  // namespace aft::lp
