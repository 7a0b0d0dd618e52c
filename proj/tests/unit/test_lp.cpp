#include <doctest.h>

#include <set>

#include "aft/corpus.hpp"
#include "aft/fixpoints.hpp"
#include "aft/lp.hpp"
#include "support.hpp"

using namespace aft;
using namespace aft::testing;

namespace {

using Atoms = std::vector<std::string>;

/// Independent stable-model check: M is stable iff it is the least model of
/// its reduct, computed here by naive forward chaining over rule structs.
bool is_stable_by_definition(const lp::LogicProgram& P, const Atoms& m) {
  std::set<std::string> model(m.begin(), m.end());
  std::set<std::string> derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const lp::Rule& r : P.rules()) {
      bool blocked = false;
      for (const auto& a : r.neg) blocked = blocked || model.count(a);
      bool fires = !blocked;
      for (const auto& a : r.pos) fires = fires && derived.count(a);
      if (fires && derived.insert(r.head).second) changed = true;
    }
  }
  return derived == model;
}

}  // namespace

TEST_CASE("parse_program") {
  SUBCASE("two rules") {
    auto P = lp::parse_program("p :- not q.\nq :- not p.");
    CHECK(P.rules().size() == 2);
    CHECK(P.atoms() == Atoms{"p", "q"});
    CHECK(P.rules()[0] == lp::Rule("p", {}, {"q"}));
  }
  SUBCASE("a fact") {
    auto P = lp::parse_program("p.");
    REQUIRE(P.rules().size() == 1);
    CHECK(P.rules()[0].is_fact());
    CHECK(P.atoms() == Atoms{"p"});
  }
  SUBCASE("missing period") {
    try {
      lp::parse_program("p :- q, not r");
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(e.line() == 1);
      CHECK(e.column() == 14);
    }
  }
  SUBCASE("comments, whitespace and body-only atoms") {
    auto P = lp::parse_program("% header\n  p :-\n q ,not   r . % trailing\n\ns_1:-p.");
    CHECK(P.rules().size() == 2);
    CHECK(P.atoms() == Atoms{"p", "q", "r", "s_1"});
    CHECK(P.rules()[0] == lp::Rule("p", {"q"}, {"r"}));
  }
  SUBCASE("not without a following atom is itself an atom") {
    CHECK(lp::parse_program("p :- not_x.").rules()[0].pos == Atoms{"not_x"});
    CHECK(lp::parse_program("p :- not.").rules()[0].pos == Atoms{"not"});
    auto P = lp::parse_program("p :- not not, not.");
    CHECK(P.rules()[0] == lp::Rule("p", {"not"}, {"not"}));
    CHECK(lp::parse_program(P.to_string()) == P);
  }
  SUBCASE("malformed input reports its position") {
    auto position = [](const std::string& text) {
      try {
        lp::parse_program(text);
      } catch (const ParseError& e) {
        return std::pair{e.line(), e.column()};
      }
      return std::pair{0, 0};
    };
    CHECK(position("P.") == std::pair{1, 1});
    CHECK(position("p :- .") == std::pair{1, 6});
    CHECK(position("p.\nq :- not 1.") == std::pair{2, 10});
    CHECK(position("p :- q r.") == std::pair{1, 8});
  }
  SUBCASE("empty input") {
    CHECK(lp::parse_program("  % nothing\n").rules().empty());
  }
}

TEST_CASE("parser round trip") {
  auto P = lp::parse_program("q :- p, not r, p.\np.\nr :- not q.");
  CHECK(P.to_string() == "q :- p, not r.\np.\nr :- not q.\n");
  CHECK(lp::parse_program(P.to_string()) == P);
  for (const lp::LogicProgram& Q : corpus::random_programs(6, 200, 1, 5)) CHECK(lp::parse_program(Q.to_string()) == Q);
}

TEST_CASE("tp") {
  auto P = program("p :- not q. q :- not p.");
  LatticeOperator t = lp::tp(P);
  CHECK(t(0) == 3);
  CHECK(t(3) == 0);
  auto fact = program("p.");
  for (Element x : elements(fact.lattice())) CHECK(lp::tp(fact)(x) == 1);
}

TEST_CASE("fitting") {
  SUBCASE("two-cycle at full uncertainty") {
    auto P = program("p :- not q. q :- not p.");
    CHECK(lp::fitting(P)({0, 3}) == ApproxPair{0, 3});
  }
  SUBCASE("p :- p") {
    CHECK(lp::fitting(program("p :- p."))({0, 1}) == ApproxPair{0, 1});
  }
  SUBCASE("exact pairs give the consequence operator") {
    for (const lp::LogicProgram& P : corpus::random_programs(14, 50, 1, 4)) {
      Approximator a = lp::fitting(P);
      LatticeOperator t = lp::tp(P);
      for (Element x : elements(P.lattice())) CHECK(a({x, x}) == ApproxPair{t(x), t(x)});
      REQUIRE(a.approximated());
    }
  }
  SUBCASE("matches the formulas on inconsistent pairs too") {
    for (const lp::LogicProgram& P : corpus::random_programs(15, 30, 1, 3)) {
      Approximator a = lp::fitting(P);
      for (ApproxPair p : all_pairs(P.lattice())) {
        Atoms I = P.atoms_of(p.lower), J = P.atoms_of(p.upper);
        auto in = [](const Atoms& s, const std::string& x) { return std::find(s.begin(), s.end(), x) != s.end(); };
        std::set<std::string> lower, upper;
        for (const lp::Rule& r : P.rules()) {
          bool lo = true, up = true;
          for (const auto& x : r.pos) lo = lo && in(I, x), up = up && in(J, x);
          for (const auto& x : r.neg) lo = lo && !in(J, x), up = up && !in(I, x);
          if (lo) lower.insert(r.head);
          if (up) upper.insert(r.head);
        }
        ApproxPair image = a(p);
        CHECK(P.atoms_of(image.lower) == Atoms(lower.begin(), lower.end()));
        CHECK(P.atoms_of(image.upper) == Atoms(upper.begin(), upper.end()));
      }
    }
  }
  SUBCASE("verified, exact and symmetric") {
    for (const lp::LogicProgram& P : corpus::random_programs(16, 50, 1, 4)) {
      CHECK_NOTHROW(verify_approximator(lp::fitting(P), lp::tp(P)));
      CHECK(is_exact_approximator(lp::fitting(P), lp::tp(P)));
      CHECK(is_symmetric(lp::fitting(P)));
    }
  }
}

TEST_CASE("gl_reduct") {
  auto P = program("p :- not q. q :- not p.");
  CHECK(lp::gl_reduct(P, {"p"}).rules() == std::vector<lp::Rule>{lp::Rule("p")});
  CHECK(lp::gl_reduct(program("p :- not p."), {}).rules() == std::vector<lp::Rule>{lp::Rule("p")});
  auto definite = program("p. q :- p, r. r :- q.");
  CHECK(lp::gl_reduct(definite, {"q"}) == definite);
  CHECK_THROWS_AS(lp::gl_reduct(P, {"z"}), Error);
}

TEST_CASE("stable_models_oracle") {
  auto P = program("p :- not q. q :- not p.");
  CHECK(lp::stable_models_oracle(P) == std::vector<Element>{1, 2});
  CHECK(lp::stable_models_oracle(program("p :- not p.")).empty());
  CHECK(lp::stable_models_oracle(program("p.")) == std::vector<Element>{1});
  CHECK(lp::stable_models_oracle(lp::LogicProgram()) == std::vector<Element>{0});
  SUBCASE("agrees with the textbook definition") {
    for (const lp::LogicProgram& Q : corpus::random_programs(18, 80, 1, 4))
      for (Element m : elements(Q.lattice())) {
        auto models = lp::stable_models_oracle(Q);
        bool listed = std::find(models.begin(), models.end(), m) != models.end();
        CHECK(listed == is_stable_by_definition(Q, Q.atoms_of(m)));
      }
  }
  SUBCASE("refuses large programs") {
    std::string text;
    for (int i = 0; i <= 20; ++i) text += "a" + std::to_string(i) + ".\n";
    try {
      lp::stable_models_oracle(lp::parse_program(text));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooManyAtoms);
    }
  }
}

TEST_CASE("program helpers") {
  auto P = program("p :- q, not r. q. r :- r.");
  CHECK(P.index_of("q") == std::size_t{1});
  CHECK_FALSE(P.index_of("z"));
  CHECK(P.element_of({"p", "r"}) == 5);
  CHECK(P.atoms_of(6) == Atoms{"q", "r"});
  CHECK_THROWS_AS(P.element_of({"z"}), Error);
  CHECK_FALSE(P.is_definite());
  CHECK(P.is_stratified());
  CHECK(program("p. q :- p.").is_definite());
  CHECK_FALSE(program("p :- not q. q :- not p.").is_stratified());
  CHECK_FALSE(program("p :- not p.").is_stratified());
}

TEST_CASE("stratified programs have an exact well-founded model") {
  for (const lp::LogicProgram& P : corpus::random_programs(19, 150, 1, 4)) {
    if (!P.is_stratified()) continue;
    TracedPair wf = well_founded(lp::fitting(P));
    CHECK(exact(wf.result));
    CHECK(stable_models(lp::fitting(P)) == std::vector<Element>{wf.result.lower});
  }
}
