#include "aft/fixpoints.hpp"

#include <algorithm>

namespace aft {

namespace {

std::string describe(const FiniteLattice& lattice, ApproxPair p) {
  return "(" + lattice.name(p.lower) + ", " + lattice.name(p.upper) + ")";
}

// Checks f monotone on the elements satisfying `inside`.
template <typename F, typename Inside>
void require_monotone_projection(const FiniteLattice& lattice, F&& f, Inside&& inside, const char* which) {
  for (Element z = 0; z < lattice.size(); ++z) {
    if (!inside(z)) continue;
    Element fz = f(z);
    for (Element w : lattice.upper_covers(z)) {
      if (!inside(w)) continue;
      if (!lattice.leq(fz, f(w)))
        throw Error(ErrorKind::NonMonotoneProjection,
                    std::string(which) + " projection is not monotone between " + lattice.name(z) +
                        " and " + lattice.name(w),
                    {z, w});
    }
  }
}

TracedPair iterate_pairs(const FiniteLattice& lattice, std::size_t bound,
                         const std::function<ApproxPair(ApproxPair)>& step) {
  TracedPair out;
  ApproxPair current{lattice.bottom(), lattice.top()};
  out.trace.push_back(current);
  for (std::size_t steps = 0;; ++steps) {
    ApproxPair next = step(current);
    if (next == current) break;
    if (steps >= bound)
      throw Error(ErrorKind::DivergenceGuard,
                  "pair iteration did not stabilise within " + std::to_string(bound) + " steps",
                  {current.lower, current.upper});
    current = next;
    out.trace.push_back(current);
  }
  out.result = current;
  return out;
}

}  // namespace

TracedPair kripke_kleene(const Approximator& a) {
  return iterate_pairs(a.lattice(), a.domain_size(), [&](ApproxPair p) { return a(p); });
}

std::vector<Element> supported_fixpoints(const Approximator& a) {
  std::vector<Element> out;
  for (Element x = 0; x < a.lattice().size(); ++x)
    if (a({x, x}) == ApproxPair{x, x}) out.push_back(x);
  return out;
}

std::vector<ApproxPair> approximator_fixpoints(const Approximator& a) {
  const FiniteLattice& lattice = a.lattice();
  std::vector<ApproxPair> out;
  for (Element x = 0; x < lattice.size(); ++x)
    for (Element y = 0; y < lattice.size(); ++y) {
      ApproxPair p{x, y};
      if (lattice.leq(x, y) && a.in_domain(p) && a(p) == p) out.push_back(p);
    }
  return out;
}

ApproxPair stable_operator(const Approximator& a, ApproxPair p, const FixpointOptions& options) {
  const FiniteLattice& lattice = a.lattice();
  if (!lattice.contains(p.lower) || !lattice.contains(p.upper))
    throw Error(ErrorKind::LatticeMismatch, "pair component outside the lattice", {p.lower, p.upper});
  const bool restricted = a.domain() != PairDomain::All;
  if (restricted && a.domain() != PairDomain::Consistent)
    throw Error(ErrorKind::InconsistentPair,
                "the stable operator needs an approximator defined on consistent pairs");
  if (restricted && !lattice.leq(p.lower, p.upper))
    throw Error(ErrorKind::InconsistentPair, "stable operator applied to inconsistent " + describe(lattice, p),
                {p.lower, p.upper});

  auto lower_step = [&](Element z) { return a({z, p.upper}).lower; };
  auto upper_step = [&](Element z) { return a({p.lower, z}).upper; };
  auto below_upper = [&](Element z) { return !restricted || lattice.leq(z, p.upper); };
  auto above_lower = [&](Element z) { return !restricted || lattice.leq(p.lower, z); };

  if (options.enabled_for(lattice)) {
    require_monotone_projection(lattice, lower_step, below_upper, "lower");
    require_monotone_projection(lattice, upper_step, above_lower, "upper");
  }

  // With a restricted domain each step has to stay inside its interval;
  // that holds exactly when p is reliable.
  auto guarded = [&](auto step, auto inside) {
    return [&, step, inside](Element z) {
      Element next = step(z);
      if (!inside(next))
        throw Error(ErrorKind::InconsistentPair,
                    "stable operator left the interval at " + describe(lattice, p) + " (pair is not reliable)",
                    {p.lower, p.upper});
      return next;
    };
  };
  const std::size_t bound = lattice.size();
  Element lower = kleene_iterate(guarded(lower_step, below_upper), lattice.bottom(), bound);
  Element upper = kleene_iterate(guarded(upper_step, above_lower), restricted ? p.lower : lattice.bottom(), bound);
  return {lower, upper};
}

std::vector<ApproxPair> partial_stable_fixpoints(const Approximator& a, const FixpointOptions& options) {
  const FiniteLattice& lattice = a.lattice();
  const bool restricted = a.domain() != PairDomain::All;
  std::vector<ApproxPair> out;
  for (Element x = 0; x < lattice.size(); ++x)
    for (Element y = 0; y < lattice.size(); ++y) {
      ApproxPair p{x, y};
      if (!lattice.leq(x, y)) continue;
      if (restricted && !precision_leq(lattice, p, a(p))) continue;
      if (stable_operator(a, p, options) == p) out.push_back(p);
    }
  return out;
}

std::vector<Element> stable_models(const Approximator& a, const FixpointOptions& options) {
  const FiniteLattice& lattice = a.lattice();
  const bool restricted = a.domain() != PairDomain::All;
  std::vector<Element> out;
  for (Element x = 0; x < lattice.size(); ++x) {
    ApproxPair p{x, x};
    if (restricted && !precision_leq(lattice, p, a(p))) continue;
    if (stable_operator(a, p, options) == p) out.push_back(x);
  }
  return out;
}

TracedPair well_founded(const Approximator& a, const FixpointOptions& options) {
  const FiniteLattice& lattice = a.lattice();
  return iterate_pairs(lattice, lattice.size() * lattice.size(),
                       [&](ApproxPair p) { return stable_operator(a, p, options); });
}

SemanticsReport compute_semantics(const Approximator& a, const FixpointOptions& options) {
  SemanticsReport report;
  report.kripke_kleene = kripke_kleene(a);
  report.well_founded = well_founded(a, options);
  report.supported = supported_fixpoints(a);
  report.fixpoints = approximator_fixpoints(a);
  report.partial_stable = partial_stable_fixpoints(a, options);
  for (ApproxPair p : report.partial_stable)
    if (exact(p)) report.stable.push_back(p.lower);
  return report;
}

}  // namespace aft
