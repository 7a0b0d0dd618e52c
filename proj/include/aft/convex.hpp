#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aft/approx.hpp"

namespace aft::convex {

/// A subset of a lattice without holes: x, z in S and x < y < z imply
/// y in S. Members are sorted by id. The empty set is the inconsistent
/// element of the space.
class ConvexSet {
 public:
  ConvexSet() = default;

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element x) const;
  bool includes(const ConvexSet& other) const;  // other subset of *this

  friend bool operator==(const ConvexSet&, const ConvexSet&) = default;

 private:
  friend class ConvexSpace;
  friend ConvexSet hull(const FiniteLattice&, std::span<const Element>);
  explicit ConvexSet(std::vector<Element> members) : members_(std::move(members)) {}

  std::vector<Element> members_;
};

struct HoleWitness {
  Element below;
  Element hole;
  Element above;
};

struct ConvexityCheck {
  bool convex = true;
  std::optional<HoleWitness> witness;
  explicit operator bool() const noexcept { return convex; }
};

/// Exhaustive check; throws ForeignElement.
ConvexityCheck is_convex(const FiniteLattice& lattice, std::span<const Element> set);

/// Smallest convex superset: { y : a <= y <= b for some a, b in X }.
ConvexSet hull(const FiniteLattice& lattice, std::span<const Element> set);

/// [p.lower, p.upper] as a convex set. Throws InconsistentPair.
ConvexSet embed_interval(const FiniteLattice& lattice, ApproxPair p);

/// Convex subsets of a base lattice ordered by reverse inclusion.
class ConvexSpace {
 public:
  explicit ConvexSpace(FiniteLattice base) : base_(std::move(base)) {}

  const FiniteLattice& base() const noexcept { return base_; }

  /// Validates convexity; throws ForeignElement or NotConvex (witness below,
  /// hole, above).
  ConvexSet make(std::vector<Element> members) const;

  /// The whole base lattice.
  ConvexSet least_precise() const;
  /// The empty set.
  ConvexSet most_precise() const { return {}; }

  /// S <=_p T iff T is a subset of S.
  bool precision_leq(const ConvexSet& s, const ConvexSet& t) const { return s.includes(t); }

  /// Meet in the precision order: hull of the union.
  ConvexSet glb(std::span<const ConvexSet> sets) const;
  /// Join in the precision order: intersection.
  ConvexSet lub(std::span<const ConvexSet> sets) const;

  /// Every convex subset, empty set included. Exponential; refuses bases
  /// with more than kEnumerationLimit elements.
  static constexpr std::size_t kEnumerationLimit = 20;
  std::vector<ConvexSet> enumerate() const;

 private:
  FiniteLattice base_;
};

/// S -> hull(O[S]), the empty set fixed. Monotone for reverse inclusion.
class LiftedOperator {
 public:
  explicit LiftedOperator(LatticeOperator op) : op_(std::move(op)) {}

  ConvexSet operator()(const ConvexSet& s) const;
  const FiniteLattice& lattice() const noexcept { return op_.lattice(); }

 private:
  LatticeOperator op_;
};

inline LiftedOperator lift_operator(const LatticeOperator& op) { return LiftedOperator(op); }

struct TracedConvexSet {
  ConvexSet result;
  /// Starts with the whole lattice, ends with `result`; shrinking.
  std::vector<ConvexSet> trace;
};

/// Precision-least fixpoint of lift_operator(op), iterating from the whole
/// lattice. Throws DivergenceGuard after |L| + 1 steps.
TracedConvexSet convex_kripke_kleene(const LatticeOperator& op);

}  // namespace aft::convex
