#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aft/errors.hpp"

namespace aft {

/// A finite complete lattice. Elements are the ids 0 .. size()-1.
///
/// Two backends sit behind the same interface: an extensional one (element
/// names plus a validated order relation with precomputed join/meet tables)
/// and a powerset one over a list of atoms, where element ids are bitmasks
/// and the order is set inclusion. Either can be order-inverted.
///
/// The handle is cheap to copy; the underlying tables are shared and
/// immutable.
class FiniteLattice {
 public:
  /// Largest universe accepted by `powerset`.
  static constexpr std::size_t kMaxPowersetAtoms = 30;
  /// Largest element count accepted by `verify`.
  static constexpr std::size_t kMaxExplicitElements = 512;

  /// The one-element lattice (powerset of nothing).
  FiniteLattice();

  /// Powerset of `universe` ordered by inclusion; bit i of an element id
  /// stands for universe[i].
  static FiniteLattice powerset(std::vector<std::string> universe);

  /// Validates an extensional candidate. `leq` must list the full relation
  /// (reflexive pairs included). Throws NotAPartialOrder or NotALattice with
  /// the offending elements as witness.
  static FiniteLattice verify(std::vector<std::string> names,
                              const std::vector<std::pair<Element, Element>>& leq);

  std::size_t size() const noexcept { return size_; }
  bool contains(Element x) const noexcept { return x < size_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const noexcept {
    if (inverted_) std::swap(a, b);
    if (powerset_) return (a & ~b) == 0;
    return impl_->leq[a * size_ + b] != 0;
  }
  bool less(Element a, Element b) const noexcept { return a != b && leq(a, b); }

  Element join(Element a, Element b) const noexcept {
    if (inverted_) return raw_meet(a, b);
    return raw_join(a, b);
  }
  Element meet(Element a, Element b) const noexcept {
    if (inverted_) return raw_join(a, b);
    return raw_meet(a, b);
  }

  /// Least upper bound; lub of the empty set is bottom. Throws ForeignElement.
  Element lub(std::span<const Element> xs) const;
  /// Greatest lower bound; glb of the empty set is top. Throws ForeignElement.
  Element glb(std::span<const Element> xs) const;

  /// Elements covering x (immediate successors in the order).
  std::vector<Element> upper_covers(Element x) const;
  /// Elements covered by x.
  std::vector<Element> lower_covers(Element x) const;

  /// The same carrier with the order reversed.
  FiniteLattice inverted() const;
  bool is_inverted() const noexcept { return inverted_; }

  bool is_powerset() const noexcept { return powerset_; }
  /// Atom list of a powerset lattice (empty for extensional ones).
  const std::vector<std::string>& universe() const noexcept { return impl_->names; }

  /// Display name: the given name for extensional lattices, "{p,q}" for
  /// powerset ones.
  std::string name(Element x) const;
  /// Inverse of `name`; nullopt if no element has that name.
  std::optional<Element> find(const std::string& name) const;

  /// Structural equality (same backend, same order).
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b);

  void require_member(Element x) const {
    if (!contains(x))
      throw Error(ErrorKind::ForeignElement,
                  "element " + std::to_string(x) + " is not in the lattice", {x});
  }

 private:
  struct Impl {
    std::vector<std::string> names;  // element names, or atoms for powersets
    std::vector<char> leq;           // size*size, extensional only
    std::vector<Element> join;       // size*size, extensional only
    std::vector<Element> meet;
    std::vector<std::vector<Element>> up;  // covers, extensional only
    std::vector<std::vector<Element>> down;
  };

  Element raw_join(Element a, Element b) const noexcept {
    return powerset_ ? (a | b) : impl_->join[a * size_ + b];
  }
  Element raw_meet(Element a, Element b) const noexcept {
    return powerset_ ? (a & b) : impl_->meet[a * size_ + b];
  }

  std::shared_ptr<const Impl> impl_;
  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  bool powerset_ = false;
  bool inverted_ = false;
};

/// A total map on the elements of a lattice.
class LatticeOperator {
 public:
  using Map = std::function<Element(Element)>;

  LatticeOperator(FiniteLattice lattice, Map map)
      : lattice_(std::move(lattice)), map_(std::move(map)) {}

  /// Extensional form; table[x] is the image of x.
  static LatticeOperator from_table(FiniteLattice lattice, std::vector<Element> table);

  /// Throws ForeignElement for arguments or images outside the lattice.
  Element operator()(Element x) const {
    lattice_.require_member(x);
    Element y = map_(x);
    lattice_.require_member(y);
    return y;
  }

  const FiniteLattice& lattice() const noexcept { return lattice_; }

 private:
  FiniteLattice lattice_;
  Map map_;
};

struct MonotonicityCheck {
  bool monotone = true;
  /// x <= y with O(x) not <= O(y).
  std::optional<std::pair<Element, Element>> witness;

  explicit operator bool() const noexcept { return monotone; }
};

/// Exhaustive monotonicity check. Comparing along covering pairs is
/// complete on a finite order, so the scan is linear in the Hasse diagram.
MonotonicityCheck is_monotone(const LatticeOperator& op);

/// Validation is on by default up to this many elements.
inline constexpr std::size_t kDefaultValidationLimit = 4096;

struct LfpOptions {
  /// nullopt: validate iff the lattice has at most kDefaultValidationLimit
  /// elements.
  std::optional<bool> validate;

  bool enabled_for(const FiniteLattice& lattice) const {
    return validate.value_or(lattice.size() <= kDefaultValidationLimit);
  }
};

/// Kleene iteration from `start` for a callable f. Stops at the first
/// repetition; throws DivergenceGuard once more than `bound` steps were
/// taken. The visited chain (start first, fixpoint last) goes to `trace`
/// when non-null.
template <typename F>
Element kleene_iterate(F&& f, Element start, std::size_t bound, std::vector<Element>* trace = nullptr) {
  Element current = start;
  if (trace) trace->push_back(current);
  for (std::size_t steps = 0;; ++steps) {
    Element next = f(current);
    if (next == current) return current;
    if (steps >= bound)
      throw Error(ErrorKind::DivergenceGuard,
                  "iteration did not stabilise within " + std::to_string(bound) + " steps",
                  {current, next});
    current = next;
    if (trace) trace->push_back(current);
  }
}

/// Least fixpoint of a monotone operator by iteration from bottom.
/// Throws NonMonotoneOperator (witness x, y with x <= y) when validation is
/// enabled and fails, DivergenceGuard after |L| steps.
Element lfp(const LatticeOperator& op, const LfpOptions& options = {});

/// As lfp, also returning the chain bottom, O(bottom), ... , lfp.
std::vector<Element> lfp_trace(const LatticeOperator& op, const LfpOptions& options = {});

}  // namespace aft
