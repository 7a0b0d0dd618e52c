#include "aft/adf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scanner.hpp"

namespace aft::adf {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "t";
    case Truth::False: return "f";
    case Truth::Unknown: return "u";
  }
  return "?";
}

std::string Formula::to_string() const {
  switch (kind) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Var: return name;
    case Kind::Not: return "neg(" + operands[0].to_string() + ")";
    case Kind::And: return "and(" + operands[0].to_string() + "," + operands[1].to_string() + ")";
    case Kind::Or: return "or(" + operands[0].to_string() + "," + operands[1].to_string() + ")";
  }
  return {};
}

namespace {

using Node = Adf::Node;

void compile(const Formula& f, const std::vector<std::string>& statements, std::vector<Node>& out) {
  switch (f.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      out.push_back({f.kind, 0, 0, 0});
      return;
    case Formula::Kind::Var: {
      auto it = std::lower_bound(statements.begin(), statements.end(), f.name);
      if (it == statements.end() || *it != f.name)
        throw Error(ErrorKind::UndeclaredStatement, "statement '" + f.name + "' is not declared");
      out.push_back({f.kind, static_cast<std::uint32_t>(it - statements.begin()), 0, 0});
      return;
    }
    case Formula::Kind::Not:
      compile(f.operands[0], statements, out);
      out.push_back({f.kind, 0, static_cast<std::uint32_t>(out.size() - 1), 0});
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      compile(f.operands[0], statements, out);
      auto left = static_cast<std::uint32_t>(out.size() - 1);
      compile(f.operands[1], statements, out);
      out.push_back({f.kind, 0, left, static_cast<std::uint32_t>(out.size() - 1)});
      return;
    }
  }
}

// Two-sided evaluation over a pair (I, J): `sure` reads positive occurrences
// of variables in I and negated ones in J, `possible` the other way round.
// On consistent pairs, sure means t and not possible means f under strong
// Kleene; on inconsistent pairs this keeps the map precision-monotone.
struct Verdict {
  bool sure;
  bool possible;
};

Verdict evaluate(const std::vector<Node>& nodes, ApproxPair p, std::vector<Verdict>& scratch) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    switch (n.kind) {
      case Formula::Kind::True: scratch[i] = {true, true}; break;
      case Formula::Kind::False: scratch[i] = {false, false}; break;
      case Formula::Kind::Var: {
        Element bit = Element{1} << n.var;
        scratch[i] = {(p.lower & bit) != 0, (p.upper & bit) != 0};
        break;
      }
      case Formula::Kind::Not:
        scratch[i] = {!scratch[n.left].possible, !scratch[n.left].sure};
        break;
      case Formula::Kind::And:
        scratch[i] = {scratch[n.left].sure && scratch[n.right].sure,
                      scratch[n.left].possible && scratch[n.right].possible};
        break;
      case Formula::Kind::Or:
        scratch[i] = {scratch[n.left].sure || scratch[n.right].sure,
                      scratch[n.left].possible || scratch[n.right].possible};
        break;
    }
  }
  return scratch.back();
}

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Adf::Adf(std::vector<std::string> statements, std::vector<Formula> conditions) {
  if (statements.size() != conditions.size())
    throw Error(ErrorKind::UndeclaredStatement, "every statement needs exactly one acceptance condition");
  std::vector<std::size_t> order(statements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return statements[a] < statements[b]; });
  for (std::size_t i : order) {
    if (!statements_.empty() && statements_.back() == statements[i])
      throw Error(ErrorKind::UndeclaredStatement, "statement '" + statements[i] + "' is declared twice");
    statements_.push_back(std::move(statements[i]));
    conditions_.push_back(std::move(conditions[i]));
  }
  lattice_ = FiniteLattice::powerset(statements_);
  for (const Formula& f : conditions_) {
    compiled_.emplace_back();
    compile(f, statements_, compiled_.back());
  }
}

std::vector<std::string> Adf::statements_of(Element x) const {
  lattice_.require_member(x);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < statements_.size(); ++i)
    if (x & (Element{1} << i)) out.push_back(statements_[i]);
  return out;
}

std::string Adf::to_string() const {
  std::string out;
  for (const std::string& s : statements_) out += "s(" + s + ").\n";
  for (std::size_t i = 0; i < statements_.size(); ++i)
    out += "ac(" + statements_[i] + "," + conditions_[i].to_string() + ").\n";
  return out;
}

namespace {

Formula parse_formula(detail::Scanner& in) {
  in.skip_space();
  std::string word = in.identifier(name_char);
  if (word.empty()) in.fail("expected a formula");
  if (word == "true") return Formula::constant(true);
  if (word == "false") return Formula::constant(false);
  in.skip_space();
  if ((word == "neg" || word == "and" || word == "or") && in.accept("(")) {
    Formula first = parse_formula(in);
    if (word == "neg") {
      in.expect(")", "')'");
      return Formula::negation(std::move(first));
    }
    in.expect(",", "','");
    Formula second = parse_formula(in);
    in.expect(")", "')'");
    return word == "and" ? Formula::conjunction(std::move(first), std::move(second))
                         : Formula::disjunction(std::move(first), std::move(second));
  }
  return Formula::var(std::move(word));
}

std::string parse_name(detail::Scanner& in) {
  in.skip_space();
  int line = in.line();
  int column = in.column();
  std::string name = in.identifier(name_char);
  if (name.empty()) in.fail("expected a statement name");
  if (name == "true" || name == "false") in.fail_at("'" + name + "' is reserved", line, column);
  return name;
}

}  // namespace

Adf parse_adf(std::string_view text) {
  detail::Scanner in(text);
  struct Declared {
    int line;
    int column;
  };
  std::map<std::string, Declared> declared;
  std::map<std::string, Formula> conditions;
  std::vector<std::string> used;  // names seen in conditions or ac heads, in order

  in.skip_space();
  while (!in.at_end()) {
    int line = in.line();
    int column = in.column();
    if (in.accept("s(")) {
      std::string name = parse_name(in);
      in.expect(")", "')'");
      in.expect(".", "'.'");
      if (!declared.emplace(name, Declared{line, column}).second)
        in.fail_at("statement '" + name + "' is declared twice", line, column);
    } else if (in.accept("ac(")) {
      std::string name = parse_name(in);
      in.expect(",", "','");
      Formula f = parse_formula(in);
      in.expect(")", "')'");
      in.expect(".", "'.'");
      if (conditions.count(name))
        in.fail_at("statement '" + name + "' has two acceptance conditions", line, column);
      used.push_back(name);
      conditions.emplace(std::move(name), std::move(f));
    } else {
      in.fail("expected 's(' or 'ac('");
    }
    in.skip_space();
  }

  for (const std::string& name : used)
    if (!declared.count(name))
      throw Error(ErrorKind::UndeclaredStatement, "statement '" + name + "' is not declared");
  std::vector<std::string> statements;
  std::vector<Formula> formulas;
  for (auto& [name, where] : declared) {
    auto it = conditions.find(name);
    if (it == conditions.end())
      in.fail_at("statement '" + name + "' has no acceptance condition", where.line, where.column);
    statements.push_back(name);
    formulas.push_back(std::move(it->second));
  }
  return Adf(std::move(statements), std::move(formulas));
}

Truth eval3(const Formula& condition, const Adf& adf, ApproxPair p) {
  std::vector<Node> nodes;
  compile(condition, adf.statements(), nodes);
  std::vector<Verdict> scratch(nodes.size());
  Verdict v = evaluate(nodes, p, scratch);
  if (v.sure) return Truth::True;
  return v.possible ? Truth::Unknown : Truth::False;
}

Approximator adf_approximator(const Adf& adf) {
  auto conditions = adf.compiled();
  auto map = [conditions](ApproxPair p) {
    ApproxPair out{0, 0};
    std::vector<Verdict> scratch;
    for (std::size_t s = 0; s < conditions.size(); ++s) {
      scratch.resize(conditions[s].size());
      Verdict v = evaluate(conditions[s], p, scratch);
      if (v.sure) out.lower |= Element{1} << s;
      if (v.possible) out.upper |= Element{1} << s;
    }
    return out;
  };
  return Approximator(adf.lattice(), std::move(map), PairDomain::All, model_operator(adf));
}

LatticeOperator model_operator(const Adf& adf) {
  auto conditions = adf.compiled();
  return LatticeOperator(adf.lattice(), [conditions](Element x) {
    Element out = 0;
    std::vector<Verdict> scratch;
    for (std::size_t s = 0; s < conditions.size(); ++s) {
      scratch.resize(conditions[s].size());
      if (evaluate(conditions[s], {x, x}, scratch).sure) out |= Element{1} << s;
    }
    return out;
  });
}

SemanticsReport adf_semantics(const Adf& adf, const FixpointOptions& options) {
  return compute_semantics(adf_approximator(adf), options);
}

Adf encode_program(const lp::LogicProgram& program) {
  std::vector<Formula> conditions;
  for (const std::string& atom : program.atoms()) {
    std::optional<Formula> disjunction;
    for (const lp::Rule& r : program.rules()) {
      if (r.head != atom) continue;
      std::optional<Formula> body;
      auto add = [&](Formula literal) {
        body = body ? Formula::conjunction(std::move(*body), std::move(literal)) : std::move(literal);
      };
      for (const std::string& a : r.pos) add(Formula::var(a));
      for (const std::string& a : r.neg) add(Formula::negation(Formula::var(a)));
      Formula term = body ? std::move(*body) : Formula::constant(true);
      disjunction = disjunction ? Formula::disjunction(std::move(*disjunction), std::move(term)) : std::move(term);
    }
    conditions.push_back(disjunction ? std::move(*disjunction) : Formula::constant(false));
  }
  return Adf(program.atoms(), std::move(conditions));
}

}  // namespace aft::adf
