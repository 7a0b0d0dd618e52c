#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aft/fixpoints.hpp"
#include "aft/lp.hpp"

namespace aft::adf {

enum class Truth { True, False, Unknown };

const char* to_string(Truth t);

/// Acceptance condition: a propositional formula over statement names.
struct Formula {
  enum class Kind { True, False, Var, Not, And, Or };

  Kind kind = Kind::True;
  std::string name;               // Var only
  std::vector<Formula> operands;  // one for Not, two for And/Or

  static Formula constant(bool value) { return {value ? Kind::True : Kind::False, {}, {}}; }
  static Formula var(std::string name) { return {Kind::Var, std::move(name), {}}; }
  static Formula negation(Formula f) { return {Kind::Not, {}, {std::move(f)}}; }
  static Formula conjunction(Formula a, Formula b) { return {Kind::And, {}, {std::move(a), std::move(b)}}; }
  static Formula disjunction(Formula a, Formula b) { return {Kind::Or, {}, {std::move(a), std::move(b)}}; }

  /// Printed in the input syntax: true, a, neg(a), and(a,b), or(a,b).
  std::string to_string() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Statements sorted by name; statement i is bit i of lattice() elements.
class Adf {
 public:
  Adf() : Adf({}, {}) {}
  /// `conditions[i]` belongs to `statements[i]`. Statements are re-sorted;
  /// every variable must name a statement (UndeclaredStatement otherwise).
  Adf(std::vector<std::string> statements, std::vector<Formula> conditions);

  const std::vector<std::string>& statements() const noexcept { return statements_; }
  const std::vector<Formula>& conditions() const noexcept { return conditions_; }
  const FiniteLattice& lattice() const noexcept { return lattice_; }

  std::vector<std::string> statements_of(Element x) const;

  /// `s(a).` declarations followed by `ac(a, phi).` lines.
  std::string to_string() const;

  friend bool operator==(const Adf& a, const Adf& b) {
    return a.statements_ == b.statements_ && a.conditions_ == b.conditions_;
  }

  /// Index-based form of one condition for fast evaluation.
  struct Node {
    Formula::Kind kind;
    std::uint32_t var;  // statement index for Var
    std::uint32_t left;
    std::uint32_t right;
  };
  /// Postfix node arrays, one per statement; the root is last.
  const std::vector<std::vector<Node>>& compiled() const noexcept { return compiled_; }

 private:
  std::vector<std::string> statements_;
  std::vector<Formula> conditions_;
  std::vector<std::vector<Node>> compiled_;
  FiniteLattice lattice_;
};

/// Parses `s(name).` and `ac(name, formula).` declarations with `%`
/// comments. Throws ParseError, or Error(UndeclaredStatement) for names
/// used without an `s(...)` declaration. Every declared statement needs
/// exactly one condition.
Adf parse_adf(std::string_view text);

/// Strong Kleene evaluation: a variable is t when in p.lower, f when not in
/// p.upper, u otherwise. On inconsistent pairs positive occurrences read
/// p.lower and negated ones p.upper, so t wins when both t and f apply.
Truth eval3(const Formula& condition, const Adf& adf, ApproxPair p);

/// A(I,J) = ({s : phi_s is t at (I,J)}, {s : phi_s is not f at (I,J)}), with
/// the two-valued operator X -> {s : phi_s true at X} attached. On
/// inconsistent pairs the upper bound reads positive occurrences in J and
/// negated ones in I, which keeps A precision-monotone and symmetric on the
/// whole bilattice.
Approximator adf_approximator(const Adf& adf);

/// Two-valued model operator of the ADF.
LatticeOperator model_operator(const Adf& adf);

/// compute_semantics on adf_approximator(D). ADF reading of the fields:
/// kripke_kleene is the grounded interpretation, fixpoints are the complete
/// ones, supported are the two-valued models, stable and well_founded keep
/// their names.
SemanticsReport adf_semantics(const Adf& adf, const FixpointOptions& options = {});

/// ADF whose condition for s is the disjunction, over the rules with head
/// s, of the conjunction of their body literals (false without rules, true
/// for a fact). Same statements as the program's atoms.
Adf encode_program(const lp::LogicProgram& program);

}  // namespace aft::adf
