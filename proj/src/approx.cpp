#include "aft/approx.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace aft {

namespace {

constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kFlatMemoLimit = std::size_t{1} << 22;

std::uint64_t pack(ApproxPair p) { return (std::uint64_t{p.lower} << 32) | p.upper; }
ApproxPair unpack(std::uint64_t v) {
  return {static_cast<Element>(v >> 32), static_cast<Element>(v & 0xffffffffu)};
}

std::string describe(const FiniteLattice& lattice, ApproxPair p) {
  return "(" + lattice.name(p.lower) + ", " + lattice.name(p.upper) + ")";
}

void require_pair(const FiniteLattice& lattice, ApproxPair p) {
  if (!lattice.contains(p.lower) || !lattice.contains(p.upper))
    throw Error(ErrorKind::LatticeMismatch, "pair component outside the lattice", {p.lower, p.upper});
}

}  // namespace

bool consistent(const FiniteLattice& lattice, ApproxPair p) {
  require_pair(lattice, p);
  return lattice.leq(p.lower, p.upper);
}

bool precision_leq(const FiniteLattice& lattice, ApproxPair p, ApproxPair q) {
  require_pair(lattice, p);
  require_pair(lattice, q);
  return lattice.leq(p.lower, q.lower) && lattice.leq(q.upper, p.upper);
}

bool approximates(const FiniteLattice& lattice, ApproxPair p, Element z) {
  require_pair(lattice, p);
  if (!lattice.contains(z)) throw Error(ErrorKind::LatticeMismatch, "element outside the lattice", {z});
  return lattice.leq(p.lower, z) && lattice.leq(z, p.upper);
}

struct Approximator::Impl {
  FiniteLattice lattice;
  Map map;
  PairDomain domain;
  std::optional<LatticeOperator> approximated;

  // Flat memo for small lattices, hashed one otherwise.
  mutable std::unique_ptr<std::atomic<std::uint64_t>[]> flat;
  mutable std::shared_mutex mutex;
  mutable std::unordered_map<std::uint64_t, std::uint64_t> hashed;

  Impl(FiniteLattice l, Map m, PairDomain d, std::optional<LatticeOperator> o)
      : lattice(std::move(l)), map(std::move(m)), domain(d), approximated(std::move(o)) {
    const std::size_t n = lattice.size();
    if (n * n <= kFlatMemoLimit) {
      flat = std::make_unique<std::atomic<std::uint64_t>[]>(n * n);
      for (std::size_t i = 0; i < n * n; ++i) flat[i].store(kEmpty, std::memory_order_relaxed);
    }
  }

  ApproxPair evaluate(ApproxPair p) const {
    ApproxPair image = map(p);
    if (!lattice.contains(image.lower) || !lattice.contains(image.upper))
      throw Error(ErrorKind::LatticeMismatch, "approximator image outside the lattice",
                  {p.lower, p.upper, image.lower, image.upper});
    return image;
  }

  ApproxPair lookup(ApproxPair p) const {
    if (flat) {
      auto& slot = flat[std::size_t{p.lower} * lattice.size() + p.upper];
      std::uint64_t cached = slot.load(std::memory_order_acquire);
      if (cached != kEmpty) return unpack(cached);
      ApproxPair image = evaluate(p);
      slot.store(pack(image), std::memory_order_release);
      return image;
    }
    {
      std::shared_lock lock(mutex);
      if (auto it = hashed.find(pack(p)); it != hashed.end()) return unpack(it->second);
    }
    ApproxPair image = evaluate(p);
    std::unique_lock lock(mutex);
    hashed.emplace(pack(p), pack(image));
    return image;
  }
};

Approximator::Approximator(FiniteLattice lattice, Map map, PairDomain domain,
                           std::optional<LatticeOperator> approximated) {
  if (approximated && !(approximated->lattice() == lattice))
    throw Error(ErrorKind::LatticeMismatch, "approximated operator lives on a different lattice");
  impl_ = std::make_shared<const Impl>(std::move(lattice), std::move(map), domain, std::move(approximated));
}

bool Approximator::in_domain(ApproxPair p) const {
  const FiniteLattice& lattice = impl_->lattice;
  switch (impl_->domain) {
    case PairDomain::All: return true;
    case PairDomain::Consistent: return lattice.leq(p.lower, p.upper);
    case PairDomain::Anticonsistent: return lattice.leq(p.upper, p.lower);
  }
  return false;
}

ApproxPair Approximator::operator()(ApproxPair p) const {
  require_pair(impl_->lattice, p);
  if (!in_domain(p))
    throw Error(ErrorKind::InconsistentPair,
                "approximator is not defined on " + describe(impl_->lattice, p), {p.lower, p.upper});
  return impl_->lookup(p);
}

void Approximator::for_each_pair(const std::function<void(ApproxPair)>& f) const {
  const std::size_t n = impl_->lattice.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (in_domain({x, y})) f({x, y});
}

std::size_t Approximator::domain_size() const {
  if (impl_->domain == PairDomain::All) return impl_->lattice.size() * impl_->lattice.size();
  std::size_t count = 0;
  for_each_pair([&](ApproxPair) { ++count; });
  return count;
}

const FiniteLattice& Approximator::lattice() const noexcept { return impl_->lattice; }
PairDomain Approximator::domain() const noexcept { return impl_->domain; }
const std::optional<LatticeOperator>& Approximator::approximated() const noexcept {
  return impl_->approximated;
}

Approximator Approximator::with_operator(LatticeOperator op) const {
  auto self = *this;
  return Approximator(impl_->lattice, [self](ApproxPair p) { return self(p); }, impl_->domain,
                      std::move(op));
}

Approximator approximator_from_table(FiniteLattice lattice, std::vector<ApproxPair> table,
                                     PairDomain domain) {
  const std::size_t n = lattice.size();
  if (table.size() != n * n)
    throw Error(ErrorKind::LatticeMismatch, "approximator table does not cover every pair");
  return Approximator(
      std::move(lattice),
      [n, table = std::move(table)](ApproxPair p) { return table[std::size_t{p.lower} * n + p.upper]; },
      domain);
}

PrecisionMonotonicityCheck check_precision_monotone(const Approximator& a) {
  const FiniteLattice& lattice = a.lattice();
  const std::size_t n = lattice.size();
  std::vector<std::vector<Element>> up(n), down(n);
  for (Element x = 0; x < n; ++x) {
    up[x] = lattice.upper_covers(x);
    down[x] = lattice.lower_covers(x);
  }
  PrecisionMonotonicityCheck result;
  auto compare = [&](ApproxPair p, ApproxPair q) {
    if (!a.in_domain(q)) return true;
    ApproxPair ap = a(p);
    ApproxPair aq = a(q);
    if (lattice.leq(ap.lower, aq.lower) && lattice.leq(aq.upper, ap.upper)) return true;
    result = {false, std::make_pair(p, q)};
    return false;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      ApproxPair p{x, y};
      if (!a.in_domain(p)) continue;
      for (Element x2 : up[x])
        if (!compare(p, {x2, y})) return result;
      for (Element y2 : down[y])
        if (!compare(p, {x, y2})) return result;
    }
  return result;
}

std::optional<Element> check_approximates(const Approximator& a, const LatticeOperator& op) {
  const FiniteLattice& lattice = a.lattice();
  if (!(op.lattice() == lattice))
    throw Error(ErrorKind::LatticeMismatch, "operator and approximator use different lattices");
  for (Element x = 0; x < lattice.size(); ++x) {
    ApproxPair image = a({x, x});
    Element ox = op(x);
    if (!lattice.leq(image.lower, ox) || !lattice.leq(ox, image.upper)) return x;
  }
  return std::nullopt;
}

bool is_exact_approximator(const Approximator& a, const LatticeOperator& op) {
  const FiniteLattice& lattice = a.lattice();
  if (!(op.lattice() == lattice))
    throw Error(ErrorKind::LatticeMismatch, "operator and approximator use different lattices");
  for (Element x = 0; x < lattice.size(); ++x) {
    Element ox = op(x);
    if (a({x, x}) != ApproxPair{ox, ox}) return false;
  }
  return true;
}

Approximator verify_approximator(const Approximator& candidate, const std::optional<LatticeOperator>& op) {
  const FiniteLattice& lattice = candidate.lattice();
  if (auto check = check_precision_monotone(candidate); !check) {
    auto [p, q] = *check.witness;
    throw Error(ErrorKind::NotPrecisionMonotone,
                "not precision-monotone: " + describe(lattice, p) + " <=_p " + describe(lattice, q) +
                    " but their images are not ordered",
                {p.lower, p.upper, q.lower, q.upper});
  }
  const std::optional<LatticeOperator>& target = op ? op : candidate.approximated();
  if (!target) return candidate;
  if (auto x = check_approximates(candidate, *target))
    throw Error(ErrorKind::DoesNotApproximate,
                "A(x,x) does not bracket O(x) at x = " + lattice.name(*x), {*x});
  return op ? candidate.with_operator(*op) : candidate;
}

namespace {

// Calls f on every element of [x, y].
template <typename F>
void for_each_in_interval(const FiniteLattice& lattice, Element x, Element y, F&& f) {
  if (lattice.is_powerset() && !lattice.is_inverted()) {
    // Subsets of y containing x: x | s for every submask s of y & ~x.
    const Element free = y & ~x;
    for (Element s = free;; s = (s - 1) & free) {
      f(x | s);
      if (s == 0) break;
    }
    return;
  }
  for (Element z = 0; z < lattice.size(); ++z)
    if (lattice.leq(x, z) && lattice.leq(z, y)) f(z);
}

}  // namespace

Approximator ultimate(const LatticeOperator& op) {
  FiniteLattice lattice = op.lattice();
  auto map = [op, lattice](ApproxPair p) {
    Element lower = lattice.top();
    Element upper = lattice.bottom();
    for_each_in_interval(lattice, p.lower, p.upper, [&](Element z) {
      Element oz = op(z);
      lower = lattice.meet(lower, oz);
      upper = lattice.join(upper, oz);
    });
    return ApproxPair{lower, upper};
  };
  return Approximator(lattice, std::move(map), PairDomain::Consistent, op);
}

Approximator dual(const Approximator& a) {
  PairDomain domain = a.domain();
  if (domain == PairDomain::Consistent)
    domain = PairDomain::Anticonsistent;
  else if (domain == PairDomain::Anticonsistent)
    domain = PairDomain::Consistent;
  return Approximator(a.lattice(), [a](ApproxPair p) { return swap(a(swap(p))); }, domain);
}

SymmetryFlag is_symmetric(const Approximator& a) {
  const std::size_t n = a.lattice().size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      ApproxPair p{x, y};
      if (!a.in_domain(p) || !a.in_domain(swap(p))) continue;
      if (a(p) != swap(a(swap(p)))) return {false, p};
    }
  return {};
}

}  // namespace aft
