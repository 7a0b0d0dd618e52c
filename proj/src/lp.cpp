#include "aft/lp.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "scanner.hpp"

namespace aft::lp {

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool atom_start(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

Rule::Rule(std::string h, std::vector<std::string> p, std::vector<std::string> n)
    : head(std::move(h)), pos(std::move(p)), neg(std::move(n)) {
  sort_unique(pos);
  sort_unique(neg);
}

LogicProgram::LogicProgram(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (Rule& r : rules_) {
    sort_unique(r.pos);
    sort_unique(r.neg);
    atoms_.push_back(r.head);
    atoms_.insert(atoms_.end(), r.pos.begin(), r.pos.end());
    atoms_.insert(atoms_.end(), r.neg.begin(), r.neg.end());
  }
  sort_unique(atoms_);
  lattice_ = FiniteLattice::powerset(atoms_);
  compiled_.reserve(rules_.size());
  for (const Rule& r : rules_) {
    compiled_.push_back({Element{1} << *index_of(r.head), element_of(r.pos), element_of(r.neg)});
  }
}

std::optional<std::size_t> LogicProgram::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

Element LogicProgram::element_of(const std::vector<std::string>& atoms) const {
  Element x = 0;
  for (const std::string& a : atoms) {
    auto i = index_of(a);
    if (!i) throw Error(ErrorKind::ForeignAtom, "atom '" + a + "' does not occur in the program");
    x |= Element{1} << *i;
  }
  return x;
}

std::vector<std::string> LogicProgram::atoms_of(Element x) const {
  lattice_.require_member(x);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (x & (Element{1} << i)) out.push_back(atoms_[i]);
  return out;
}

bool LogicProgram::is_definite() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.neg.empty(); });
}

bool LogicProgram::is_stratified() const {
  const std::size_t n = atoms_.size();
  // reach[a][b]: a depends on b, directly or transitively.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const CompiledRule& r : compiled_) {
    std::size_t h = std::countr_zero(r.head);
    for (std::size_t b = 0; b < n; ++b)
      if ((r.pos | r.neg) & (Element{1} << b)) reach[h][b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  for (const CompiledRule& r : compiled_) {
    std::size_t h = std::countr_zero(r.head);
    for (std::size_t b = 0; b < n; ++b)
      if ((r.neg & (Element{1} << b)) && (b == h || reach[b][h])) return false;
  }
  return true;
}

std::string LogicProgram::to_string() const {
  std::string out;
  for (const Rule& r : rules_) {
    out += r.head;
    if (!r.is_fact()) {
      out += " :- ";
      bool first = true;
      for (const std::string& a : r.pos) {
        if (!first) out += ", ";
        out += a;
        first = false;
      }
      for (const std::string& a : r.neg) {
        if (!first) out += ", ";
        out += "not " + a;
        first = false;
      }
    }
    out += ".\n";
  }
  return out;
}

LogicProgram parse_program(std::string_view text) {
  detail::Scanner in(text);
  std::vector<Rule> rules;
  in.skip_space();
  while (!in.at_end()) {
    Rule rule;
    rule.head = in.identifier(atom_start);
    if (rule.head.empty()) in.fail("expected an atom");
    in.skip_space();
    if (in.accept(":-")) {
      do {
        in.skip_space();
        std::string word = in.identifier(atom_start);
        if (word.empty()) in.fail("expected a literal");
        bool spaced = in.skip_space();
        if (word == "not" && spaced && atom_start(in.peek())) {
          rule.neg.push_back(in.identifier(atom_start));
          in.skip_space();
        } else {
          rule.pos.push_back(std::move(word));
        }
      } while (in.accept(","));
    }
    in.expect(".", "'.' at the end of the rule");
    rules.emplace_back(std::move(rule.head), std::move(rule.pos), std::move(rule.neg));
    in.skip_space();
  }
  return LogicProgram(std::move(rules));
}

LatticeOperator tp(const LogicProgram& program) {
  auto rules = program.compiled();
  return LatticeOperator(program.lattice(), [rules](Element x) {
    Element out = 0;
    for (const auto& r : rules)
      if ((r.pos & ~x) == 0 && (r.neg & x) == 0) out |= r.head;
    return out;
  });
}

Approximator fitting(const LogicProgram& program) {
  auto rules = program.compiled();
  auto map = [rules](ApproxPair p) {
    ApproxPair out{0, 0};
    for (const auto& r : rules) {
      if ((r.pos & ~p.lower) == 0 && (r.neg & p.upper) == 0) out.lower |= r.head;
      if ((r.pos & ~p.upper) == 0 && (r.neg & p.lower) == 0) out.upper |= r.head;
    }
    return out;
  };
  return Approximator(program.lattice(), std::move(map), PairDomain::All, tp(program));
}

LogicProgram gl_reduct(const LogicProgram& program, const std::vector<std::string>& model) {
  std::set<std::string> m;
  for (const std::string& a : model) {
    if (!program.index_of(a))
      throw Error(ErrorKind::ForeignAtom, "atom '" + a + "' does not occur in the program");
    m.insert(a);
  }
  std::vector<Rule> kept;
  for (const Rule& r : program.rules()) {
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](const std::string& a) { return m.count(a); });
    if (!blocked) kept.emplace_back(r.head, r.pos);
  }
  return LogicProgram(std::move(kept));
}

std::vector<Element> stable_models_oracle(const LogicProgram& program) {
  const std::size_t n = program.atoms().size();
  if (n > kOracleAtomLimit)
    throw Error(ErrorKind::TooManyAtoms, "stable model oracle enumerates 2^" + std::to_string(n) +
                                             " candidates; limit is 2^" + std::to_string(kOracleAtomLimit));
  std::vector<Element> out;
  const auto& rules = program.compiled();
  for (Element candidate = 0; candidate < (Element{1} << n); ++candidate) {
    // Least model of the reduct: rules not blocked by the candidate, negation dropped.
    Element model = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& r : rules) {
        if ((r.neg & candidate) != 0 || (model & r.head) != 0) continue;
        if ((r.pos & ~model) == 0) {
          model |= r.head;
          changed = true;
        }
      }
    }
    if (model == candidate) out.push_back(candidate);
  }
  return out;
}

}  // namespace aft::lp
