#pragma once

#include <vector>

#include "aft/approx.hpp"

namespace aft {

struct FixpointOptions {
  /// Re-check monotonicity of the stable operator's projections before each
  /// inner least fixpoint. nullopt: on iff the lattice has at most
  /// kDefaultValidationLimit elements.
  std::optional<bool> validate;

  bool enabled_for(const FiniteLattice& lattice) const {
    return validate.value_or(lattice.size() <= kDefaultValidationLimit);
  }
};

/// A fixpoint together with the construction that reached it. The trace
/// starts at (bottom, top) and ends with `result`.
struct TracedPair {
  ApproxPair result;
  std::vector<ApproxPair> trace;
};

/// <=_p-least fixpoint of A, iterating from (bottom, top).
TracedPair kripke_kleene(const Approximator& a);

/// Every x with A(x,x) = (x,x), in increasing id order.
std::vector<Element> supported_fixpoints(const Approximator& a);

/// Every consistent pair p with A(p) = p.
std::vector<ApproxPair> approximator_fixpoints(const Approximator& a);

/// (lfp of z -> A(z, p.upper).lower, lfp of z -> A(p.lower, z).upper).
///
/// For approximators restricted to consistent pairs the inner iterations run
/// inside [bottom, p.upper] and [p.lower, top]; p must then be reliable
/// (p <=_p A(p)), otherwise InconsistentPair is raised. Throws
/// NonMonotoneProjection when validation finds a projection that is not
/// monotone.
ApproxPair stable_operator(const Approximator& a, ApproxPair p, const FixpointOptions& options = {});

/// Every consistent p with stable_operator(A, p) = p. Approximators defined
/// on consistent pairs only are scanned over their reliable pairs, which
/// contain all of their fixpoints.
std::vector<ApproxPair> partial_stable_fixpoints(const Approximator& a, const FixpointOptions& options = {});

/// Lower components of the exact partial stable fixpoints.
std::vector<Element> stable_models(const Approximator& a, const FixpointOptions& options = {});

/// <=_p-least fixpoint of the stable operator, iterating from (bottom, top).
TracedPair well_founded(const Approximator& a, const FixpointOptions& options = {});

/// All fixpoint families of one approximator.
struct SemanticsReport {
  TracedPair kripke_kleene;
  TracedPair well_founded;
  std::vector<Element> supported;
  /// Consistent fixpoints of A (the complete interpretations of an ADF).
  std::vector<ApproxPair> fixpoints;
  std::vector<ApproxPair> partial_stable;
  std::vector<Element> stable;
};

SemanticsReport compute_semantics(const Approximator& a, const FixpointOptions& options = {});

}  // namespace aft
