#include "aft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "aft/adf.hpp"
#include "aft/convex.hpp"
#include "aft/corpus.hpp"
#include "aft/fixpoints.hpp"
#include "aft/lp.hpp"

namespace aft::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "aft/1";

/// Problems with the command line or input files that are not library errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

/// What every command needs from an input, whatever the frontend.
struct Loaded {
  Frontend frontend;
  FiniteLattice lattice;
  std::optional<Approximator> approximator;
  std::optional<LatticeOperator> op;
};

// ---- table files ---------------------------------------------------------

Element table_element(const FiniteLattice& lattice, const json& value) {
  if (!value.is_string()) throw InputError("element names must be strings");
  auto x = lattice.find(value.get<std::string>());
  if (!x) throw InputError("unknown element '" + value.get<std::string>() + "'");
  return *x;
}

FiniteLattice table_lattice(const json& doc) {
  if (doc.contains("powerset")) return FiniteLattice::powerset(doc.at("powerset").get<std::vector<std::string>>());
  auto names = doc.at("elements").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  auto index = [&](const json& v) -> std::size_t {
    auto name = v.get<std::string>();
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == name) return i;
    throw InputError("unknown element '" + name + "' in order");
  };
  // "order" lists generating pairs; the relation is their reflexive-transitive closure.
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (const json& edge : doc.value("order", json::array())) leq[index(edge.at(0))][index(edge.at(1))] = 1;
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

Loaded load_table(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("table file: ") + e.what());
  }
  try {
    Loaded loaded{Frontend::Table, table_lattice(doc), std::nullopt, std::nullopt};
    const FiniteLattice& lattice = loaded.lattice;
    const std::size_t n = lattice.size();
    if (doc.contains("operator")) {
      std::vector<Element> table(n);
      std::vector<char> seen(n, 0);
      for (const auto& [from, to] : doc.at("operator").items()) {
        Element x = table_element(lattice, json(from));
        table[x] = table_element(lattice, to);
        seen[x] = 1;
      }
      for (Element x = 0; x < n; ++x)
        if (!seen[x]) throw InputError("operator is not defined on '" + lattice.name(x) + "'");
      loaded.op = LatticeOperator::from_table(lattice, std::move(table));
    }
    PairDomain domain = PairDomain::All;
    std::string domain_name = doc.value("domain", "all");
    if (domain_name == "consistent")
      domain = PairDomain::Consistent;
    else if (domain_name != "all")
      throw InputError("domain must be \"all\" or \"consistent\"");
    std::vector<ApproxPair> table(n * n);
    std::vector<char> seen(n * n, 0);
    for (const json& entry : doc.at("approximator")) {
      ApproxPair p{table_element(lattice, entry.at("pair").at(0)), table_element(lattice, entry.at("pair").at(1))};
      ApproxPair image{table_element(lattice, entry.at("image").at(0)),
                       table_element(lattice, entry.at("image").at(1))};
      table[std::size_t{p.lower} * n + p.upper] = image;
      seen[std::size_t{p.lower} * n + p.upper] = 1;
    }
    Approximator a = approximator_from_table(lattice, std::move(table), domain);
    a.for_each_pair([&](ApproxPair p) {
      if (!seen[std::size_t{p.lower} * n + p.upper])
        throw InputError("approximator is not defined on (" + lattice.name(p.lower) + ", " +
                         lattice.name(p.upper) + ")");
    });
    loaded.approximator = loaded.op ? a.with_operator(*loaded.op) : a;
    return loaded;
  } catch (const json::exception& e) {
    throw InputError(std::string("table file: ") + e.what());
  }
}

Loaded load(Frontend frontend, const std::string& path, std::istream& in) {
  std::string text = read_input(path, in);
  switch (frontend) {
    case Frontend::Lp: {
      lp::LogicProgram program = lp::parse_program(text);
      return {frontend, program.lattice(), lp::fitting(program), lp::tp(program)};
    }
    case Frontend::Adf: {
      adf::Adf d = adf::parse_adf(text);
      return {frontend, d.lattice(), adf::adf_approximator(d), adf::model_operator(d)};
    }
    case Frontend::Table:
      return load_table(text);
  }
  throw InputError("unknown frontend");
}

// ---- rendering -------------------------------------------------------------

const char* truth_value(ApproxPair p, std::size_t atom) {
  Element bit = Element{1} << atom;
  bool in_lower = p.lower & bit;
  bool in_upper = p.upper & bit;
  if (in_lower && in_upper) return "true";
  if (!in_lower && !in_upper) return "false";
  if (!in_lower) return "unknown";
  return "inconsistent";
}

std::string pair_text(const FiniteLattice& lattice, ApproxPair p) {
  const auto& atoms = lattice.universe();
  if (atoms.empty()) return "(no atoms)";
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i] + ": " + truth_value(p, i);
  }
  return out;
}

json element_json(const FiniteLattice& lattice, Element x) {
  json atoms = json::array();
  for (std::size_t i = 0; i < lattice.universe().size(); ++i)
    if (x & (Element{1} << i)) atoms.push_back(lattice.universe()[i]);
  return atoms;
}

json pair_json(const FiniteLattice& lattice, ApproxPair p) {
  json values = json::object();
  for (std::size_t i = 0; i < lattice.universe().size(); ++i)
    values[lattice.universe()[i]] = truth_value(p, i);
  return {{"lower", element_json(lattice, p.lower)}, {"upper", element_json(lattice, p.upper)}, {"values", values}};
}

json traced_json(const FiniteLattice& lattice, const TracedPair& t, bool with_trace) {
  json out = pair_json(lattice, t.result);
  if (with_trace) {
    json steps = json::array();
    for (ApproxPair p : t.trace) steps.push_back(pair_json(lattice, p));
    out["trace"] = steps;
  }
  return out;
}

std::string set_text(const FiniteLattice& lattice, const convex::ConvexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ", ";
    out += lattice.name(s.members()[i]);
  }
  return out + "}";
}

json set_json(const FiniteLattice& lattice, const convex::ConvexSet& s) {
  json members = json::array();
  for (Element x : s.members()) members.push_back(element_json(lattice, x));
  return members;
}

std::string label(Frontend frontend, const std::string& selector) {
  static const std::map<std::string, std::string> lp_labels = {
      {"kk", "kripke-kleene"},         {"wf", "well-founded"},         {"supported", "supported"},
      {"stable", "stable"},            {"partial-stable", "partial-stable"},
      {"ultimate-kk", "ultimate kripke-kleene"}, {"ultimate-wf", "ultimate well-founded"},
      {"convex-kk", "convex kripke-kleene"}};
  static const std::map<std::string, std::string> adf_labels = {
      {"kk", "grounded"}, {"supported", "two-valued models"}, {"partial-stable", "partial stable"}};
  if (frontend == Frontend::Adf)
    if (auto it = adf_labels.find(selector); it != adf_labels.end()) return it->second;
  return lp_labels.at(selector);
}

std::vector<std::string> expand_semantics(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const std::string& name : semantics_names()) {
    bool wanted = false;
    for (const std::string& r : requested) wanted = wanted || r == name || r == "all";
    if (wanted) out.push_back(name);
  }
  for (const std::string& r : requested)
    if (r != "all" && std::find(out.begin(), out.end(), r) == out.end())
      throw InputError("unknown semantics '" + r + "'");
  if (out.empty()) throw InputError("no semantics selected");
  return out;
}

const char* frontend_name(Frontend f) {
  switch (f) {
    case Frontend::Lp: return "lp";
    case Frontend::Adf: return "adf";
    case Frontend::Table: return "table";
  }
  return "";
}

int report_error(std::ostream& err, const std::exception& e, int code) {
  err << "aft: " << e.what() << '\n';
  return code;
}

/// Runs `body`, mapping exceptions to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "aft: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return is_input_error(e.kind()) ? 1 : 2;
  } catch (const InputError& e) {
    return report_error(err, e, 1);
  }
}

}  // namespace

const std::vector<std::string>& semantics_names() {
  static const std::vector<std::string> names = {"kk",          "wf",          "supported", "stable", "partial-stable",
                                                 "ultimate-kk", "ultimate-wf", "convex-kk"};
  return names;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.frontend == Frontend::Table) throw InputError("table inputs are only accepted by 'aft check'");
    std::vector<std::string> selected = expand_semantics(config.semantics);
    Loaded loaded = load(config.frontend, config.input, in);
    const FiniteLattice& lattice = loaded.lattice;
    Approximator a = *loaded.approximator;
    if (config.validate) a = verify_approximator(a, loaded.op);
    FixpointOptions options;
    if (config.validate) options.validate = true;

    json doc = {{"schema", kSchema}, {"frontend", frontend_name(config.frontend)}};
    doc["atoms"] = lattice.universe();
    std::ostringstream text;

    auto emit_pair = [&](const std::string& key, const TracedPair& t) {
      doc[key] = traced_json(lattice, t, config.trace);
      text << label(config.frontend, key) << ": " << pair_text(lattice, t.result) << '\n';
      if (config.trace)
        for (std::size_t i = 0; i < t.trace.size(); ++i)
          text << "  step " << i << ": " << pair_text(lattice, t.trace[i]) << '\n';
    };
    auto emit_elements = [&](const std::string& key, const std::vector<Element>& xs) {
      json list = json::array();
      for (Element x : xs) list.push_back(element_json(lattice, x));
      doc[key] = list;
      text << label(config.frontend, key) << ":";
      if (xs.empty()) text << " none";
      for (std::size_t i = 0; i < xs.size(); ++i) text << (i ? "; " : " ") << lattice.name(xs[i]);
      text << '\n';
    };

    for (const std::string& s : selected) {
      if (s == "kk") {
        emit_pair(s, kripke_kleene(a));
      } else if (s == "wf") {
        emit_pair(s, well_founded(a, options));
      } else if (s == "supported") {
        emit_elements(s, supported_fixpoints(a));
      } else if (s == "stable") {
        emit_elements(s, stable_models(a, options));
      } else if (s == "partial-stable") {
        json list = json::array();
        text << label(config.frontend, s) << ":";
        auto pairs = partial_stable_fixpoints(a, options);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          list.push_back(pair_json(lattice, pairs[i]));
          text << (i ? "; " : " ")
               << (lattice.universe().empty() ? pair_text(lattice, pairs[i]) : "(" + pair_text(lattice, pairs[i]) + ")");
        }
        if (pairs.empty()) text << " none";
        text << '\n';
        doc[s] = list;
      } else if (s == "ultimate-kk") {
        emit_pair(s, kripke_kleene(ultimate(*loaded.op)));
      } else if (s == "ultimate-wf") {
        emit_pair(s, well_founded(ultimate(*loaded.op), options));
      } else if (s == "convex-kk") {
        auto result = convex::convex_kripke_kleene(*loaded.op);
        json entry = {{"members", set_json(lattice, result.result)}};
        text << label(config.frontend, s) << ": " << set_text(lattice, result.result) << '\n';
        if (config.trace) {
          json steps = json::array();
          for (std::size_t i = 0; i < result.trace.size(); ++i) {
            steps.push_back(set_json(lattice, result.trace[i]));
            text << "  step " << i << ": " << set_text(lattice, result.trace[i]) << '\n';
          }
          entry["trace"] = steps;
        }
        doc[s] = entry;
      }
    }
    if (config.format == Format::Json)
      out << doc.dump(2) << '\n';
    else
      out << text.str();
    return 0;
  });
}

int check(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Loaded loaded = load(config.frontend, config.input, in);
    const FiniteLattice& lattice = loaded.lattice;
    const Approximator& a = *loaded.approximator;
    auto describe = [&](ApproxPair p) { return "(" + lattice.name(p.lower) + ", " + lattice.name(p.upper) + ")"; };

    struct Law {
      std::string name;
      bool pass;
      bool required;
      std::string detail;
    };
    std::vector<Law> laws;
    laws.push_back({"lattice", true, true, std::to_string(lattice.size()) + " elements"});

    if (auto m = check_precision_monotone(a); m)
      laws.push_back({"precision-monotone", true, true, ""});
    else
      laws.push_back({"precision-monotone", false, true,
                      "NotPrecisionMonotone: " + describe(m.witness->first) + " <=_p " +
                          describe(m.witness->second) + " but images are not ordered"});
    if (loaded.op) {
      if (auto x = check_approximates(a, *loaded.op))
        laws.push_back({"approximates-operator", false, true,
                        "DoesNotApproximate: A(x,x) does not bracket O(x) at x = " + lattice.name(*x)});
      else
        laws.push_back({"approximates-operator", true, true, ""});
      laws.push_back({"exact", is_exact_approximator(a, *loaded.op), true, ""});
    }
    // Symmetry is a law of the syntactic constructions, a property otherwise.
    SymmetryFlag sym = is_symmetric(a);
    laws.push_back({"symmetric", bool(sym), config.frontend != Frontend::Table,
                    sym ? "" : "differs from its dual at " + describe(*sym.witness)});

    bool ok = true;
    json list = json::array();
    for (const Law& law : laws) {
      ok = ok && (law.pass || !law.required);
      list.push_back({{"law", law.name}, {"pass", law.pass}, {"required", law.required}, {"detail", law.detail}});
    }
    if (config.format == Format::Json) {
      out << json{{"schema", kSchema}, {"command", "check"}, {"frontend", frontend_name(config.frontend)},
                  {"laws", list}, {"ok", ok}}
                 .dump(2)
          << '\n';
    } else {
      for (const Law& law : laws) {
        out << law.name << ": " << (law.pass ? "pass" : law.required ? "FAIL" : "no");
        if (!law.detail.empty()) out << " (" << law.detail << ")";
        out << '\n';
      }
      out << (ok ? "all checks passed" : "checks failed") << '\n';
    }
    return ok ? 0 : 2;
  });
}

namespace {

struct Comparison {
  TracedPair fitting;
  TracedPair ultimate;
  convex::TracedConvexSet convex;
  bool fitting_below_ultimate;
  bool ultimate_strict;
  bool convex_inside_ultimate;
  bool convex_strict;
  bool convex_inside_fitting;
  bool convex_strict_over_fitting;
};

Comparison compare_constructions(const Approximator& a, const LatticeOperator& op) {
  const FiniteLattice& lattice = a.lattice();
  Comparison c{kripke_kleene(a), kripke_kleene(ultimate(op)), convex::convex_kripke_kleene(op), false, false,
               false, false, false, false};
  c.fitting_below_ultimate = precision_leq(lattice, c.fitting.result, c.ultimate.result);
  c.ultimate_strict = c.fitting_below_ultimate && c.fitting.result != c.ultimate.result;
  auto inside = [&](ApproxPair p, bool& included, bool& strict) {
    if (!consistent(lattice, p)) {
      included = true;
      strict = !c.convex.result.empty();
      return;
    }
    convex::ConvexSet interval = convex::embed_interval(lattice, p);
    included = interval.includes(c.convex.result);
    strict = included && !(interval == c.convex.result);
  };
  inside(c.ultimate.result, c.convex_inside_ultimate, c.convex_strict);
  inside(c.fitting.result, c.convex_inside_fitting, c.convex_strict_over_fitting);
  return c;
}

const char* verdict(bool holds, bool strict) { return !holds ? "NO" : strict ? "yes (strict)" : "yes (equal)"; }

}  // namespace

int compare(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.frontend == Frontend::Table) throw InputError("'aft compare' takes lp or adf input");
    Loaded loaded = load(config.frontend, config.input, in);
    const FiniteLattice& lattice = loaded.lattice;
    Comparison c = compare_constructions(*loaded.approximator, *loaded.op);
    bool ok = c.fitting_below_ultimate && c.convex_inside_ultimate && c.convex_inside_fitting;
    if (config.format == Format::Json) {
      json doc = {{"schema", kSchema},
                  {"command", "compare"},
                  {"frontend", frontend_name(config.frontend)},
                  {"atoms", lattice.universe()},
                  {"frontend-kk", traced_json(lattice, c.fitting, config.trace)},
                  {"ultimate-kk", traced_json(lattice, c.ultimate, config.trace)},
                  {"convex-kk", {{"members", set_json(lattice, c.convex.result)}}},
                  {"comparisons",
                   {{"frontend-below-ultimate", c.fitting_below_ultimate},
                    {"ultimate-strictly-more-precise", c.ultimate_strict},
                    {"convex-inside-ultimate", c.convex_inside_ultimate},
                    {"convex-strictly-more-precise-than-ultimate", c.convex_strict},
                    {"convex-inside-frontend", c.convex_inside_fitting},
                    {"convex-strictly-more-precise-than-frontend", c.convex_strict_over_fitting}}}};
      out << doc.dump(2) << '\n';
    } else {
      out << "frontend kripke-kleene: " << pair_text(lattice, c.fitting.result) << '\n'
          << "ultimate kripke-kleene: " << pair_text(lattice, c.ultimate.result) << '\n'
          << "convex kripke-kleene: " << set_text(lattice, c.convex.result) << '\n'
          << "frontend <=_p ultimate: " << verdict(c.fitting_below_ultimate, c.ultimate_strict) << '\n'
          << "convex within ultimate interval: " << verdict(c.convex_inside_ultimate, c.convex_strict) << '\n'
          << "convex within frontend interval: "
          << verdict(c.convex_inside_fitting, c.convex_strict_over_fitting) << '\n';
    }
    return ok ? 0 : 2;
  });
}

int compare_corpus(std::uint64_t seed, std::size_t count, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::size_t ultimate_gains = 0, convex_gains = 0, convex_over_fitting = 0, violations = 0;
    for (const lp::LogicProgram& program : corpus::random_programs(seed, count, 3, 4)) {
      Comparison c = compare_constructions(lp::fitting(program), lp::tp(program));
      ultimate_gains += c.ultimate_strict;
      convex_gains += c.convex_strict;
      convex_over_fitting += c.convex_strict_over_fitting;
      violations += !(c.fitting_below_ultimate && c.convex_inside_ultimate && c.convex_inside_fitting);
    }
    if (format == Format::Json) {
      out << json{{"schema", kSchema},
                  {"command", "compare-corpus"},
                  {"seed", seed},
                  {"programs", count},
                  {"gains",
                   {{"ultimate-over-fitting", ultimate_gains},
                    {"convex-over-ultimate", convex_gains},
                    {"convex-over-fitting", convex_over_fitting}}},
                  {"violations", violations}}
                 .dump(2)
          << '\n';
    } else {
      out << "seed\tprograms\tultimate>fitting\tconvex>ultimate\tconvex>fitting\tviolations\n"
          << seed << '\t' << count << '\t' << ultimate_gains << '\t' << convex_gains << '\t' << convex_over_fitting
          << '\t' << violations << '\n';
    }
    return violations == 0 ? 0 : 2;
  });
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation fixpoint semantics for logic programs and ADFs", "aft"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string semantics = "all";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", config.seed, "Seed for corpus commands");
  };
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input file, or - for standard input")->required();
    sub->add_option("--semantics", semantics, "Comma separated: " + [] {
      std::string s;
      for (const auto& n : semantics_names()) s += n + ",";
      return s + "all";
    }());
    sub->add_flag("--trace", config.trace, "Print iteration traces");
    sub->add_flag("--validate", config.validate, "Verify the approximator and re-check inner monotonicity");
    add_common(sub);
  };

  CLI::App* lp_cmd = app.add_subcommand("lp", "Semantics of a normal logic program");
  add_run_options(lp_cmd);
  CLI::App* adf_cmd = app.add_subcommand("adf", "Semantics of an abstract dialectical framework");
  add_run_options(adf_cmd);

  std::string frontend_word;
  CLI::App* check_cmd = app.add_subcommand("check", "Check the approximator laws of an input");
  check_cmd->add_option("frontend", frontend_word, "lp, adf or table")
      ->required()
      ->check(CLI::IsMember({"lp", "adf", "table"}));
  check_cmd->add_option("input", config.input, "Input file, or - for standard input")->required();
  add_common(check_cmd);

  std::size_t count = 500;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare interval and convex Kripke-Kleene constructions");
  compare_cmd->add_option("frontend", frontend_word, "lp, adf, or corpus")
      ->required()
      ->check(CLI::IsMember({"lp", "adf", "corpus"}));
  compare_cmd->add_option("input", config.input, "Input file, or - for standard input");
  compare_cmd->add_option("--count", count, "Corpus size");
  compare_cmd->add_flag("--trace", config.trace, "Include iteration traces");
  add_common(compare_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int code = app.exit(e, help, help);
    if (code == 0) {
      out << help.str();
      return 0;
    }
    err << help.str();
    return 1;
  }

  config.format = format == "json" ? Format::Json : Format::Text;
  config.semantics.clear();
  std::stringstream list(semantics);
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) config.semantics.push_back(item);

  auto frontend_of = [](const std::string& word) {
    return word == "adf" ? Frontend::Adf : word == "table" ? Frontend::Table : Frontend::Lp;
  };
  if (lp_cmd->parsed()) {
    config.frontend = Frontend::Lp;
    return run(config, in, out, err);
  }
  if (adf_cmd->parsed()) {
    config.frontend = Frontend::Adf;
    return run(config, in, out, err);
  }
  if (check_cmd->parsed()) {
    config.frontend = frontend_of(frontend_word);
    return check(config, in, out, err);
  }
  if (frontend_word == "corpus") return compare_corpus(config.seed, count, config.format, out, err);
  if (compare_cmd->count("input") == 0) {
    err << "aft: compare " << frontend_word << " needs an input file\n";
    return 1;
  }
  config.frontend = frontend_of(frontend_word);
  return compare(config, in, out, err);
}

}  // namespace aft::cli
