#include "aft/convex.hpp"

#include <algorithm>

namespace aft::convex {

namespace {

std::vector<char> membership(const FiniteLattice& lattice, std::span<const Element> set) {
  std::vector<char> in(lattice.size(), 0);
  for (Element x : set) {
    lattice.require_member(x);
    in[x] = 1;
  }
  return in;
}

// above[y]: some member a has a <= y; below[y]: some member b has y <= b.
void bounds(const FiniteLattice& lattice, const std::vector<char>& in, std::vector<char>& above,
            std::vector<char>& below) {
  const std::size_t n = lattice.size();
  above.assign(n, 0);
  below.assign(n, 0);
  if (lattice.is_powerset() && !lattice.is_inverted()) {
    // Subsets have smaller ids, so one pass in each direction suffices.
    const std::size_t atoms = lattice.universe().size();
    for (Element y = 0; y < n; ++y) {
      above[y] = in[y];
      for (std::size_t i = 0; i < atoms && !above[y]; ++i)
        if (y & (Element{1} << i)) above[y] = above[y ^ (Element{1} << i)];
    }
    for (Element y = static_cast<Element>(n); y-- > 0;) {
      below[y] = in[y];
      for (std::size_t i = 0; i < atoms && !below[y]; ++i)
        if (!(y & (Element{1} << i))) below[y] = below[y | (Element{1} << i)];
    }
    return;
  }
  std::vector<Element> members;
  for (Element x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  for (Element y = 0; y < n; ++y)
    for (Element m : members) {
      if (lattice.leq(m, y)) above[y] = 1;
      if (lattice.leq(y, m)) below[y] = 1;
    }
}

}  // namespace

bool ConvexSet::contains(Element x) const { return std::binary_search(members_.begin(), members_.end(), x); }

bool ConvexSet::includes(const ConvexSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

ConvexityCheck is_convex(const FiniteLattice& lattice, std::span<const Element> set) {
  std::vector<char> in = membership(lattice, set);
  std::vector<char> above, below;
  bounds(lattice, in, above, below);
  for (Element y = 0; y < lattice.size(); ++y) {
    if (in[y] || !above[y] || !below[y]) continue;
    HoleWitness w{0, y, 0};
    for (Element x : set) {
      if (lattice.leq(x, y)) w.below = x;
      if (lattice.leq(y, x)) w.above = x;
    }
    return {false, w};
  }
  return {};
}

ConvexSet hull(const FiniteLattice& lattice, std::span<const Element> set) {
  std::vector<char> in = membership(lattice, set);
  std::vector<char> above, below;
  bounds(lattice, in, above, below);
  std::vector<Element> members;
  for (Element y = 0; y < lattice.size(); ++y)
    if (above[y] && below[y]) members.push_back(y);
  return ConvexSet(std::move(members));
}

ConvexSet embed_interval(const FiniteLattice& lattice, ApproxPair p) {
  if (!consistent(lattice, p))
    throw Error(ErrorKind::InconsistentPair, "only consistent pairs denote intervals", {p.lower, p.upper});
  Element ends[] = {p.lower, p.upper};
  return hull(lattice, ends);
}

ConvexSet ConvexSpace::make(std::vector<Element> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto check = is_convex(base_, members); !check) {
    const HoleWitness& w = *check.witness;
    throw Error(ErrorKind::NotConvex,
                "set has a hole at " + base_.name(w.hole) + " between " + base_.name(w.below) + " and " +
                    base_.name(w.above),
                {w.below, w.hole, w.above});
  }
  ConvexSet s;
  s.members_ = std::move(members);
  return s;
}

ConvexSet ConvexSpace::least_precise() const {
  std::vector<Element> all(base_.size());
  for (Element x = 0; x < base_.size(); ++x) all[x] = x;
  ConvexSet s;
  s.members_ = std::move(all);
  return s;
}

ConvexSet ConvexSpace::glb(std::span<const ConvexSet> sets) const {
  std::vector<Element> all;
  for (const ConvexSet& s : sets) all.insert(all.end(), s.members().begin(), s.members().end());
  return hull(base_, all);
}

ConvexSet ConvexSpace::lub(std::span<const ConvexSet> sets) const {
  ConvexSet result = least_precise();
  for (const ConvexSet& s : sets) {
    std::vector<Element> meet;
    std::set_intersection(result.members_.begin(), result.members_.end(), s.members().begin(), s.members().end(),
                          std::back_inserter(meet));
    result.members_ = std::move(meet);
  }
  return result;
}

std::vector<ConvexSet> ConvexSpace::enumerate() const {
  const std::size_t n = base_.size();
  if (n > kEnumerationLimit)
    throw Error(ErrorKind::TooManyAtoms, "convex space enumeration is limited to " +
                                             std::to_string(kEnumerationLimit) + " base elements");
  std::vector<ConvexSet> out;
  std::vector<Element> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    members.clear();
    for (Element x = 0; x < n; ++x)
      if (mask & (std::uint64_t{1} << x)) members.push_back(x);
    if (is_convex(base_, members)) {
      ConvexSet s;
      s.members_ = members;
      out.push_back(std::move(s));
    }
  }
  return out;
}

ConvexSet LiftedOperator::operator()(const ConvexSet& s) const {
  std::vector<Element> image;
  image.reserve(s.size());
  for (Element z : s.members()) image.push_back(op_(z));
  return hull(op_.lattice(), image);
}

TracedConvexSet convex_kripke_kleene(const LatticeOperator& op) {
  LiftedOperator lifted(op);
  ConvexSpace space(op.lattice());
  TracedConvexSet out;
  ConvexSet current = space.least_precise();
  out.trace.push_back(current);
  const std::size_t bound = op.lattice().size() + 1;
  for (std::size_t steps = 0;; ++steps) {
    ConvexSet next = lifted(current);
    if (next == current) break;
    if (steps >= bound)
      throw Error(ErrorKind::DivergenceGuard, "convex iteration did not stabilise");
    current = std::move(next);
    out.trace.push_back(current);
  }
  out.result = std::move(current);
  return out;
}

}  // namespace aft::convex
