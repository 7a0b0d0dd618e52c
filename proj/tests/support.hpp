#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aft/approx.hpp"
#include "aft/lp.hpp"

namespace aft::testing {

/// bot < a, b < top.
inline FiniteLattice diamond() {
  std::vector<std::pair<Element, Element>> leq = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1},
                                                  {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  return FiniteLattice::verify({"bot", "a", "b", "top"}, leq);
}

/// n-element chain 0 < 1 < ... < n-1.
inline FiniteLattice chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> leq;
  for (Element i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (Element j = i; j < n; ++j) leq.emplace_back(i, j);
  }
  return FiniteLattice::verify(names, leq);
}

inline lp::LogicProgram program(const std::string& text) { return lp::parse_program(text); }

inline std::vector<Element> elements(const FiniteLattice& lattice) {
  std::vector<Element> xs(lattice.size());
  for (Element x = 0; x < lattice.size(); ++x) xs[x] = x;
  return xs;
}

inline std::vector<ApproxPair> all_pairs(const FiniteLattice& lattice) {
  std::vector<ApproxPair> out;
  for (Element x = 0; x < lattice.size(); ++x)
    for (Element y = 0; y < lattice.size(); ++y) out.push_back({x, y});
  return out;
}

inline std::vector<ApproxPair> consistent_pairs(const FiniteLattice& lattice) {
  std::vector<ApproxPair> out;
  for (ApproxPair p : all_pairs(lattice))
    if (lattice.leq(p.lower, p.upper)) out.push_back(p);
  return out;
}

/// Least element of `xs` under leq, by enumeration.
inline std::optional<Element> least_of(const FiniteLattice& lattice, const std::vector<Element>& xs) {
  for (Element x : xs) {
    bool least = true;
    for (Element y : xs) least = least && lattice.leq(x, y);
    if (least) return x;
  }
  return std::nullopt;
}

/// Least fixpoint of `op` by scanning every element; no iteration involved.
template <typename Op>
std::optional<Element> enumerated_lfp(const FiniteLattice& lattice, Op&& op) {
  std::vector<Element> fixpoints;
  for (Element x = 0; x < lattice.size(); ++x)
    if (op(x) == x) fixpoints.push_back(x);
  return least_of(lattice, fixpoints);
}

/// Precision-least pair of `ps`, by enumeration.
inline std::optional<ApproxPair> precision_least(const FiniteLattice& lattice, const std::vector<ApproxPair>& ps) {
  for (ApproxPair p : ps) {
    bool least = true;
    for (ApproxPair q : ps) least = least && precision_leq(lattice, p, q);
    if (least) return p;
  }
  return std::nullopt;
}

}  // namespace aft::testing
