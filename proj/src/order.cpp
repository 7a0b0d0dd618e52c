#include "aft/order.hpp"

#include <algorithm>
#include <unordered_map>

namespace aft {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::NonMonotoneOperator: return "NonMonotoneOperator";
    case ErrorKind::DivergenceGuard: return "DivergenceGuard";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NotPrecisionMonotone: return "NotPrecisionMonotone";
    case ErrorKind::DoesNotApproximate: return "DoesNotApproximate";
    case ErrorKind::InconsistentPair: return "InconsistentPair";
    case ErrorKind::NonMonotoneProjection: return "NonMonotoneProjection";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredStatement: return "UndeclaredStatement";
    case ErrorKind::ForeignAtom: return "ForeignAtom";
    case ErrorKind::TooManyAtoms: return "TooManyAtoms";
    case ErrorKind::NotConvex: return "NotConvex";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder:
    case ErrorKind::NotALattice:
    case ErrorKind::ForeignElement:
    case ErrorKind::LatticeMismatch:
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredStatement:
    case ErrorKind::ForeignAtom:
    case ErrorKind::TooManyAtoms:
    case ErrorKind::NotConvex:
      return true;
    default:
      return false;
  }
}

FiniteLattice::FiniteLattice() : impl_(std::make_shared<Impl>()), size_(1), powerset_(true) {}

FiniteLattice FiniteLattice::powerset(std::vector<std::string> universe) {
  if (universe.size() > kMaxPowersetAtoms)
    throw Error(ErrorKind::TooManyAtoms,
                "powerset lattice over " + std::to_string(universe.size()) +
                    " atoms exceeds the limit of " + std::to_string(kMaxPowersetAtoms));
  auto impl = std::make_shared<Impl>();
  impl->names = std::move(universe);
  FiniteLattice lattice;
  lattice.size_ = std::size_t{1} << impl->names.size();
  lattice.bottom_ = 0;
  lattice.top_ = static_cast<Element>(lattice.size_ - 1);
  lattice.powerset_ = true;
  lattice.impl_ = std::move(impl);
  return lattice;
}

FiniteLattice FiniteLattice::verify(std::vector<std::string> names,
                                    const std::vector<std::pair<Element, Element>>& pairs) {
  const std::size_t n = names.size();
  if (n > kMaxExplicitElements)
    throw Error(ErrorKind::NotALattice, "too many elements for an extensional lattice");
  if (n == 0) throw Error(ErrorKind::NotALattice, "the empty order has no bottom or top");

  std::vector<char> leq(n * n, 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::ForeignElement, "order relation mentions an unknown element", {a, b});
    leq[a * n + b] = 1;
  }
  auto rel = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };
  auto el = [](std::size_t x) { return static_cast<Element>(x); };

  for (std::size_t a = 0; a < n; ++a)
    if (!rel(a, a))
      throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + names[a], {el(a)});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rel(a, b) && rel(b, a))
        throw Error(ErrorKind::NotAPartialOrder,
                    "not antisymmetric: " + names[a] + " and " + names[b], {el(a), el(b)});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel(b, c) && !rel(a, c))
          throw Error(ErrorKind::NotAPartialOrder,
                      "not transitive: " + names[a] + " <= " + names[b] + " <= " + names[c],
                      {el(a), el(b), el(c)});
    }

  auto impl = std::make_shared<Impl>();
  impl->join.resize(n * n);
  impl->meet.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::optional<std::size_t> least_upper;
      std::optional<std::size_t> greatest_lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel(a, c) && rel(b, c) && (!least_upper || rel(c, *least_upper))) least_upper = c;
        if (rel(c, a) && rel(c, b) && (!greatest_lower || rel(*greatest_lower, c))) greatest_lower = c;
      }
      // The candidate found by the scan must also be below every other bound.
      for (std::size_t c = 0; c < n && least_upper; ++c)
        if (rel(a, c) && rel(b, c) && !rel(*least_upper, c)) least_upper.reset();
      for (std::size_t c = 0; c < n && greatest_lower; ++c)
        if (rel(c, a) && rel(c, b) && !rel(c, *greatest_lower)) greatest_lower.reset();
      if (!least_upper)
        throw Error(ErrorKind::NotALattice, "no least upper bound for " + names[a] + " and " + names[b],
                    {el(a), el(b)});
      if (!greatest_lower)
        throw Error(ErrorKind::NotALattice,
                    "no greatest lower bound for " + names[a] + " and " + names[b], {el(a), el(b)});
      impl->join[a * n + b] = impl->join[b * n + a] = el(*least_upper);
      impl->meet[a * n + b] = impl->meet[b * n + a] = el(*greatest_lower);
    }

  FiniteLattice lattice;
  lattice.powerset_ = false;
  lattice.size_ = n;
  Element bottom = 0;
  Element top = 0;
  for (std::size_t x = 1; x < n; ++x) {
    bottom = impl->meet[bottom * n + x];
    top = impl->join[top * n + x];
  }
  lattice.bottom_ = bottom;
  lattice.top_ = top;

  impl->up.resize(n);
  impl->down.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !rel(a, b)) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c)
        if (c != a && c != b && rel(a, c) && rel(c, b)) covering = false;
      if (covering) {
        impl->up[a].push_back(el(b));
        impl->down[b].push_back(el(a));
      }
    }
  impl->names = std::move(names);
  impl->leq = std::move(leq);
  lattice.impl_ = std::move(impl);
  return lattice;
}

Element FiniteLattice::lub(std::span<const Element> xs) const {
  Element result = bottom_;
  for (Element x : xs) {
    require_member(x);
    result = join(result, x);
  }
  return result;
}

Element FiniteLattice::glb(std::span<const Element> xs) const {
  Element result = top_;
  for (Element x : xs) {
    require_member(x);
    result = meet(result, x);
  }
  return result;
}

std::vector<Element> FiniteLattice::upper_covers(Element x) const {
  require_member(x);
  if (powerset_) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < impl_->names.size(); ++i) {
      Element bit = Element{1} << i;
      bool present = (x & bit) != 0;
      if (present == inverted_) out.push_back(x ^ bit);
    }
    return out;
  }
  return inverted_ ? impl_->down[x] : impl_->up[x];
}

std::vector<Element> FiniteLattice::lower_covers(Element x) const {
  return inverted().upper_covers(x);
}

FiniteLattice FiniteLattice::inverted() const {
  FiniteLattice copy = *this;
  copy.inverted_ = !inverted_;
  std::swap(copy.bottom_, copy.top_);
  return copy;
}

std::string FiniteLattice::name(Element x) const {
  require_member(x);
  if (!powerset_) return impl_->names[x];
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < impl_->names.size(); ++i) {
    if (!(x & (Element{1} << i))) continue;
    if (!first) out += ',';
    out += impl_->names[i];
    first = false;
  }
  return out + "}";
}

std::optional<Element> FiniteLattice::find(const std::string& text) const {
  if (!powerset_) {
    auto it = std::find(impl_->names.begin(), impl_->names.end(), text);
    if (it == impl_->names.end()) return std::nullopt;
    return static_cast<Element>(it - impl_->names.begin());
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
  Element x = 0;
  std::string body = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t comma = body.find(',', start);
    std::string atom = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto it = std::find(impl_->names.begin(), impl_->names.end(), atom);
    if (it == impl_->names.end()) return std::nullopt;
    x |= Element{1} << (it - impl_->names.begin());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return x;
}

bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.impl_ == b.impl_) return a.inverted_ == b.inverted_;
  if (a.powerset_ != b.powerset_ || a.inverted_ != b.inverted_ || a.size_ != b.size_) return false;
  if (a.powerset_) return a.impl_->names == b.impl_->names;
  return a.impl_->leq == b.impl_->leq;
}

LatticeOperator LatticeOperator::from_table(FiniteLattice lattice, std::vector<Element> table) {
  if (table.size() != lattice.size())
    throw Error(ErrorKind::ForeignElement, "operator table does not cover the lattice");
  for (Element y : table) lattice.require_member(y);
  return LatticeOperator(std::move(lattice), [table = std::move(table)](Element x) { return table[x]; });
}

MonotonicityCheck is_monotone(const LatticeOperator& op) {
  const FiniteLattice& lattice = op.lattice();
  std::vector<Element> image(lattice.size());
  for (Element x = 0; x < lattice.size(); ++x) image[x] = op(x);
  for (Element x = 0; x < lattice.size(); ++x)
    for (Element y : lattice.upper_covers(x))
      if (!lattice.leq(image[x], image[y])) return {false, std::make_pair(x, y)};
  return {};
}

std::vector<Element> lfp_trace(const LatticeOperator& op, const LfpOptions& options) {
  const FiniteLattice& lattice = op.lattice();
  if (options.enabled_for(lattice)) {
    if (auto check = is_monotone(op); !check) {
      auto [x, y] = *check.witness;
      throw Error(ErrorKind::NonMonotoneOperator,
                  "operator is not monotone: " + lattice.name(x) + " <= " + lattice.name(y) +
                      " but images are not ordered",
                  {x, y});
    }
  }
  std::vector<Element> trace;
  kleene_iterate(op, lattice.bottom(), lattice.size(), &trace);
  return trace;
}

Element lfp(const LatticeOperator& op, const LfpOptions& options) { return lfp_trace(op, options).back(); }

}  // namespace aft
