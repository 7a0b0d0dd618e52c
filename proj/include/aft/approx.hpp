#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "aft/order.hpp"

namespace aft {

/// An element (lower, upper) of the bilattice L x L. Read as the interval
/// [lower, upper] when lower <= upper; inconsistent pairs are representable.
struct ApproxPair {
  Element lower = 0;
  Element upper = 0;

  friend auto operator<=>(const ApproxPair&, const ApproxPair&) = default;
};

inline ApproxPair swap(ApproxPair p) { return {p.upper, p.lower}; }
inline bool exact(ApproxPair p) { return p.lower == p.upper; }
bool consistent(const FiniteLattice& lattice, ApproxPair p);

/// (x,y) <=_p (u,v) iff x <= u and v <= y. Throws LatticeMismatch when a
/// component is not an element of `lattice`.
bool precision_leq(const FiniteLattice& lattice, ApproxPair p, ApproxPair q);

/// p.lower <= z <= p.upper.
bool approximates(const FiniteLattice& lattice, ApproxPair p, Element z);

/// Which pairs an approximator is defined on. Syntactic constructions are
/// total; the ultimate approximator only makes sense on consistent pairs and
/// its dual on the mirrored set.
enum class PairDomain { All, Consistent, Anticonsistent };

/// A map on pairs over a fixed lattice, optionally tied to the operator it
/// approximates. Results are memoised per pair; the memo is shared between
/// copies and safe for concurrent readers.
///
/// Constructing an Approximator does not check any law; use
/// verify_approximator for that.
class Approximator {
 public:
  using Map = std::function<ApproxPair(ApproxPair)>;

  Approximator(FiniteLattice lattice, Map map, PairDomain domain = PairDomain::All,
               std::optional<LatticeOperator> approximated = std::nullopt);

  /// Throws InconsistentPair outside the domain, LatticeMismatch for foreign
  /// components.
  ApproxPair operator()(ApproxPair p) const;

  bool in_domain(ApproxPair p) const;
  /// Calls f(p) for every pair of the domain, lowers outermost.
  void for_each_pair(const std::function<void(ApproxPair)>& f) const;
  std::size_t domain_size() const;

  const FiniteLattice& lattice() const noexcept;
  PairDomain domain() const noexcept;
  const std::optional<LatticeOperator>& approximated() const noexcept;

  /// Same map, with `op` recorded as the approximated operator.
  Approximator with_operator(LatticeOperator op) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Tabulated approximator; `table[lower * |L| + upper]` is the image.
Approximator approximator_from_table(FiniteLattice lattice, std::vector<ApproxPair> table,
                                     PairDomain domain = PairDomain::All);

struct PrecisionMonotonicityCheck {
  bool monotone = true;
  /// p <=_p q but A(p) not <=_p A(q).
  std::optional<std::pair<ApproxPair, ApproxPair>> witness;
  explicit operator bool() const noexcept { return monotone; }
};

/// Exhaustive <=_p-monotonicity check along covering pairs of the domain.
PrecisionMonotonicityCheck check_precision_monotone(const Approximator& a);

/// First x with not (A(x,x).lower <= O(x) <= A(x,x).upper), if any.
std::optional<Element> check_approximates(const Approximator& a, const LatticeOperator& op);

/// A(x,x) == (O(x), O(x)) for every x.
bool is_exact_approximator(const Approximator& a, const LatticeOperator& op);

/// Returns `candidate` (with `op` attached when given) if it is
/// <=_p-monotone and approximates `op`. Throws NotPrecisionMonotone with
/// witness {p.lower, p.upper, q.lower, q.upper}, DoesNotApproximate with
/// witness {x}, or LatticeMismatch.
Approximator verify_approximator(const Approximator& candidate,
                                 const std::optional<LatticeOperator>& op = std::nullopt);

/// The most precise approximator of `op`:
///   A(x,y) = (glb O[x,y], lub O[x,y])
/// defined on consistent pairs only.
Approximator ultimate(const LatticeOperator& op);

/// A^d(x,y) = swap(A(y,x)), the approximator induced by reversing the truth
/// order. Consistent-domain approximators dualise to anticonsistent ones.
Approximator dual(const Approximator& a);

struct SymmetryFlag {
  bool symmetric = true;
  /// A pair where A and dual(A) disagree. The mirrored pair swap(*witness)
  /// disagrees as well.
  std::optional<ApproxPair> witness;
  explicit operator bool() const noexcept { return symmetric; }
};

/// Exhaustive A == dual(A) check on the pairs where both are defined.
SymmetryFlag is_symmetric(const Approximator& a);

}  // namespace aft
