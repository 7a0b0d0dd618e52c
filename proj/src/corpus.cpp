#include "aft/corpus.hpp"

namespace aft::corpus {

namespace {

const char* const kAtomNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
const char* const kStatementNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

adf::Formula random_formula(Rng& rng, const std::vector<std::string>& names, int depth) {
  std::size_t pick = uniform(rng, 0, depth == 0 ? 2 : 6);
  switch (pick) {
    case 0:
      return adf::Formula::constant(uniform(rng, 0, 1) == 1);
    case 1:
    case 2:
    case 3:
      return adf::Formula::var(names[uniform(rng, 0, names.size() - 1)]);
    case 4:
      return adf::Formula::negation(random_formula(rng, names, depth - 1));
    case 5:
      return adf::Formula::conjunction(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1));
    default:
      return adf::Formula::disjunction(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1));
  }
}

FiniteLattice from_covers(std::vector<std::string> names, const std::vector<std::pair<Element, Element>>& covers) {
  const std::size_t n = names.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto [a, b] : covers) leq[a][b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
  std::vector<std::pair<Element, Element>> relation;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) relation.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  return FiniteLattice::verify(std::move(names), relation);
}

FiniteLattice chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<Element>(i - 1), static_cast<Element>(i));
  }
  return from_covers(std::move(names), covers);
}

}  // namespace

const std::vector<lp::Rule>& two_atom_rules() {
  static const std::vector<lp::Rule> rules = [] {
    struct Literal {
      std::string atom;
      bool positive;
    };
    const std::vector<Literal> literals = {{"p", true}, {"q", true}, {"p", false}, {"q", false}};
    std::vector<std::vector<Literal>> bodies = {{}};
    for (std::size_t i = 0; i < literals.size(); ++i) bodies.push_back({literals[i]});
    for (std::size_t i = 0; i < literals.size(); ++i)
      for (std::size_t j = i + 1; j < literals.size(); ++j) bodies.push_back({literals[i], literals[j]});
    std::vector<lp::Rule> out;
    for (const char* head : {"p", "q"})
      for (const auto& body : bodies) {
        std::vector<std::string> pos, neg;
        for (const Literal& l : body) (l.positive ? pos : neg).push_back(l.atom);
        out.emplace_back(head, std::move(pos), std::move(neg));
      }
    return out;
  }();
  return rules;
}

std::uint64_t two_atom_program_count() { return std::uint64_t{1} << two_atom_rules().size(); }

lp::LogicProgram two_atom_program(std::uint64_t index) {
  const auto& catalogue = two_atom_rules();
  std::vector<lp::Rule> rules;
  for (std::size_t i = 0; i < catalogue.size(); ++i)
    if (index & (std::uint64_t{1} << i)) rules.push_back(catalogue[i]);
  return lp::LogicProgram(std::move(rules));
}

lp::LogicProgram random_program(Rng& rng, std::size_t atoms) {
  std::vector<lp::Rule> rules;
  std::size_t count = uniform(rng, 1, 2 * atoms);
  for (std::size_t r = 0; r < count; ++r) {
    std::string head = kAtomNames[uniform(rng, 0, atoms - 1)];
    std::vector<std::string> pos, neg;
    std::size_t body = uniform(rng, 0, 3);
    for (std::size_t l = 0; l < body; ++l) {
      std::string atom = kAtomNames[uniform(rng, 0, atoms - 1)];
      (uniform(rng, 0, 1) ? pos : neg).push_back(std::move(atom));
    }
    rules.emplace_back(std::move(head), std::move(pos), std::move(neg));
  }
  return lp::LogicProgram(std::move(rules));
}

std::vector<lp::LogicProgram> random_programs(std::uint64_t seed, std::size_t count, std::size_t min_atoms,
                                              std::size_t max_atoms) {
  Rng rng(seed);
  std::vector<lp::LogicProgram> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_program(rng, uniform(rng, min_atoms, max_atoms)));
  return out;
}

adf::Adf random_adf(Rng& rng, std::size_t statements) {
  std::vector<std::string> names(kStatementNames, kStatementNames + statements);
  std::vector<adf::Formula> conditions;
  for (std::size_t i = 0; i < statements; ++i) conditions.push_back(random_formula(rng, names, 3));
  return adf::Adf(std::move(names), std::move(conditions));
}

std::vector<adf::Adf> random_adfs(std::uint64_t seed, std::size_t count, std::size_t max_statements) {
  Rng rng(seed);
  std::vector<adf::Adf> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_adf(rng, uniform(rng, 1, max_statements)));
  return out;
}

std::vector<FiniteLattice> small_lattices() {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(chain(n));
  // 4 elements: the diamond.
  out.push_back(from_covers({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  // 5 elements: M3, N5, diamond with a new top, diamond with a new bottom.
  out.push_back(from_covers({"bot", "a", "b", "c", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  out.push_back(from_covers({"bot", "a", "b", "c", "top"}, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}}));
  out.push_back(from_covers({"bot", "a", "b", "m", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
  out.push_back(from_covers({"bot", "m", "a", "b", "top"}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}));
  return out;
}

LatticeOperator random_operator(Rng& rng, const FiniteLattice& lattice) {
  std::vector<Element> table(lattice.size());
  for (Element& y : table) y = static_cast<Element>(uniform(rng, 0, lattice.size() - 1));
  return LatticeOperator::from_table(lattice, std::move(table));
}

std::vector<Element> random_subset(Rng& rng, const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element x = 0; x < lattice.size(); ++x)
    if (uniform(rng, 0, 1)) out.push_back(x);
  return out;
}

}  // namespace aft::corpus
