#include <doctest.h>

#include <thread>

#include "aft/approx.hpp"
#include "aft/corpus.hpp"
#include "aft/lp.hpp"
#include "support.hpp"

using namespace aft;
using namespace aft::testing;

namespace {

bool same_map(const Approximator& a, const Approximator& b) {
  bool same = true;
  a.for_each_pair([&](ApproxPair p) { same = same && b.in_domain(p) && a(p) == b(p); });
  b.for_each_pair([&](ApproxPair p) { same = same && a.in_domain(p); });
  return same;
}

std::vector<ApproxPair> tabulate(const Approximator& a) {
  const std::size_t n = a.lattice().size();
  std::vector<ApproxPair> table(n * n);
  a.for_each_pair([&](ApproxPair p) { table[p.lower * n + p.upper] = a(p); });
  return table;
}

}  // namespace

TEST_CASE("precision order") {
  FiniteLattice l = FiniteLattice::powerset({"p", "q"});
  CHECK(precision_leq(l, {0, 3}, {1, 1}));
  CHECK_FALSE(precision_leq(l, {1, 1}, {0, 3}));
  for (ApproxPair p : all_pairs(l)) CHECK(precision_leq(l, p, p));
  try {
    precision_leq(l, {0, 4}, {0, 0});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LatticeMismatch);
  }
}

TEST_CASE("approximates") {
  FiniteLattice l = FiniteLattice::powerset({"p", "q"});
  CHECK(approximates(l, {0, 3}, 1));
  CHECK_FALSE(approximates(l, {1, 1}, 2));
  for (Element z : elements(l)) CHECK(approximates(l, {l.bottom(), l.top()}, z));
  CHECK_THROWS_AS(approximates(l, {0, 3}, 8), Error);
}

TEST_CASE("the pairs form a complete lattice under precision") {
  for (const FiniteLattice& l : corpus::small_lattices()) {
    auto pairs = all_pairs(l);
    ApproxPair least{l.bottom(), l.top()};
    for (ApproxPair p : pairs) {
      CHECK(precision_leq(l, least, p));
      for (ApproxPair q : pairs) {
        if (p != q) CHECK_FALSE((precision_leq(l, p, q) && precision_leq(l, q, p)));
        for (ApproxPair r : pairs)
          if (precision_leq(l, p, q) && precision_leq(l, q, r)) CHECK(precision_leq(l, p, r));
        // Binary joins and meets exist: a least upper bound among all pairs.
        std::vector<ApproxPair> uppers;
        for (ApproxPair r : pairs)
          if (precision_leq(l, p, r) && precision_leq(l, q, r)) uppers.push_back(r);
        auto join = precision_least(l, uppers);
        REQUIRE(join);
        CHECK(*join == ApproxPair{l.join(p.lower, q.lower), l.meet(p.upper, q.upper)});
      }
    }
  }
}

TEST_CASE("interval reading") {
  for (const FiniteLattice& l : corpus::small_lattices()) {
    auto interval = [&](ApproxPair p) {
      std::vector<Element> out;
      for (Element z : elements(l))
        if (l.leq(p.lower, z) && l.leq(z, p.upper)) out.push_back(z);
      return out;
    };
    for (ApproxPair p : consistent_pairs(l)) {
      auto members = interval(p);
      for (Element z : elements(l))
        CHECK(approximates(l, p, z) == (std::find(members.begin(), members.end(), z) != members.end()));
      if (exact(p)) CHECK(members == std::vector<Element>{p.lower});
      for (ApproxPair q : consistent_pairs(l)) {
        auto inner = interval(q);
        bool inside = std::includes(members.begin(), members.end(), inner.begin(), inner.end());
        CHECK(precision_leq(l, p, q) == inside);
      }
    }
  }
}

TEST_CASE("verify_approximator") {
  SUBCASE("the swap map on a 2-chain is not precision-monotone") {
    FiniteLattice c = chain(2);
    Approximator a(c, [](ApproxPair p) { return swap(p); });
    try {
      verify_approximator(a);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPrecisionMonotone);
      REQUIRE(e.witness().size() == 4);
      ApproxPair p{e.witness()[0], e.witness()[1]}, q{e.witness()[2], e.witness()[3]};
      CHECK(precision_leq(c, p, q));
      CHECK_FALSE(precision_leq(c, a(p), a(q)));
    }
  }
  SUBCASE("the constant least precise map approximates every operator") {
    FiniteLattice l = FiniteLattice::powerset({"p", "q"});
    Approximator a(l, [&](ApproxPair) { return ApproxPair{l.bottom(), l.top()}; });
    corpus::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      LatticeOperator op = corpus::random_operator(rng, l);
      Approximator v = verify_approximator(a, op);
      CHECK(v.approximated().has_value());
    }
  }
  SUBCASE("a map that misses the operator") {
    FiniteLattice l = FiniteLattice::powerset({"p"});
    Approximator a(l, [](ApproxPair p) { return p; });
    LatticeOperator flip = LatticeOperator::from_table(l, {1, 0});
    try {
      verify_approximator(a, flip);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DoesNotApproximate);
      CHECK(e.witness() == std::vector<Element>{0});
    }
  }
  SUBCASE("the four-valued operator of a normal program") {
    auto P = program("p :- not q. q :- not p, r. r :- r.");
    Approximator a = verify_approximator(lp::fitting(P), lp::tp(P));
    CHECK(is_exact_approximator(a, lp::tp(P)));
  }
}

TEST_CASE("cover-based precision monotonicity agrees with the all-pairs definition") {
  corpus::Rng rng(5);
  for (const FiniteLattice& l : corpus::small_lattices()) {
    if (l.size() > 4) continue;
    const std::size_t n = l.size();
    for (int round = 0; round < 40; ++round) {
      std::vector<ApproxPair> table(n * n);
      // Start from the identity and perturb one entry.
      table = tabulate(Approximator(l, [](ApproxPair p) { return p; }));
      std::uniform_int_distribution<std::size_t> pick(0, n * n - 1), el(0, n - 1);
      table[pick(rng)] = {static_cast<Element>(el(rng)), static_cast<Element>(el(rng))};
      Approximator a = approximator_from_table(l, table);
      bool all_pairs_ok = true;
      for (ApproxPair p : all_pairs(l))
        for (ApproxPair q : all_pairs(l))
          if (precision_leq(l, p, q) && !precision_leq(l, a(p), a(q))) all_pairs_ok = false;
      CHECK(bool(check_precision_monotone(a)) == all_pairs_ok);
    }
  }
}

TEST_CASE("ultimate approximator") {
  SUBCASE("exact pairs map to the operator's value") {
    corpus::Rng rng(9);
    for (const FiniteLattice& l : corpus::small_lattices()) {
      LatticeOperator op = corpus::random_operator(rng, l);
      Approximator u = ultimate(op);
      for (Element x : elements(l)) CHECK(u({x, x}) == ApproxPair{op(x), op(x)});
    }
  }
  SUBCASE("p :- not p") {
    auto P = program("p :- not p.");
    Approximator u = ultimate(lp::tp(P));
    CHECK(u({0, 1}) == ApproxPair{0, 1});
  }
  SUBCASE("monotone operator on the diamond") {
    FiniteLattice d = diamond();
    LatticeOperator join_a(d, [&](Element x) { return d.join(x, 1); });
    Approximator u = ultimate(join_a);
    for (ApproxPair p : consistent_pairs(d)) CHECK(u(p) == ApproxPair{join_a(p.lower), join_a(p.upper)});
  }
  SUBCASE("rejects inconsistent pairs") {
    FiniteLattice d = diamond();
    Approximator u = ultimate(LatticeOperator(d, [](Element x) { return x; }));
    try {
      u({1, 2});
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InconsistentPair);
    }
  }
  SUBCASE("matches the definition and verifies on random operators") {
    corpus::Rng rng(13);
    auto lattices = corpus::small_lattices();
    lattices.push_back(FiniteLattice::powerset({"p", "q", "r"}));
    for (const FiniteLattice& l : lattices)
      for (int round = 0; round < 10; ++round) {
        LatticeOperator op = corpus::random_operator(rng, l);
        Approximator u = ultimate(op);
        for (ApproxPair p : consistent_pairs(l)) {
          std::vector<Element> image;
          for (Element z : elements(l))
            if (approximates(l, p, z)) image.push_back(op(z));
          CHECK(u(p) == ApproxPair{l.glb(image), l.lub(image)});
        }
        CHECK_NOTHROW(verify_approximator(u, op));
      }
  }
}

TEST_CASE("ultimate dominates the four-valued operator") {
  for (const lp::LogicProgram& P : corpus::random_programs(21, 60, 1, 3)) {
    Approximator f = lp::fitting(P);
    Approximator u = ultimate(lp::tp(P));
    for (ApproxPair p : consistent_pairs(P.lattice())) CHECK(precision_leq(P.lattice(), f(p), u(p)));
  }
}

TEST_CASE("dual") {
  auto P = program("p :- not q. q :- not p.");
  Approximator f = lp::fitting(P);
  SUBCASE("is an involution") {
    CHECK(same_map(dual(dual(f)), f));
    Approximator u = ultimate(lp::tp(program("p :- p, not q. q :- not p.")));
    CHECK(dual(u).domain() == PairDomain::Anticonsistent);
    CHECK(same_map(dual(dual(u)), u));
  }
  SUBCASE("a symmetric approximator is its own dual") {
    CHECK(is_symmetric(f));
    CHECK(same_map(dual(f), f));
  }
  SUBCASE("the constant least precise approximator dualises to the constant inconsistent one") {
    FiniteLattice l = P.lattice();
    Approximator c(l, [&](ApproxPair) { return ApproxPair{l.bottom(), l.top()}; });
    Approximator d = dual(c);
    for (ApproxPair p : all_pairs(l)) CHECK(d(p) == ApproxPair{l.top(), l.bottom()});
    CHECK_FALSE(is_symmetric(c));
    FiniteLattice one;
    Approximator trivial(one, [](ApproxPair p) { return p; });
    CHECK(same_map(dual(trivial), trivial));
  }
  SUBCASE("preserves precision monotonicity") {
    CHECK(check_precision_monotone(dual(f)));
    CHECK(check_precision_monotone(dual(ultimate(lp::tp(P)))));
  }
  SUBCASE("is defined pointwise as the swapped mirror") {
    Approximator d = dual(f);
    for (ApproxPair p : all_pairs(P.lattice())) CHECK(d(p) == swap(f(swap(p))));
  }
}

TEST_CASE("is_symmetric") {
  SUBCASE("four-valued operators are symmetric") {
    for (const lp::LogicProgram& P : corpus::random_programs(4, 50, 1, 3)) CHECK(is_symmetric(lp::fitting(P)));
  }
  SUBCASE("a perturbed upper component breaks symmetry at that pair") {
    auto P = program("p :- not q. q :- not p.");
    Approximator f = lp::fitting(P);
    auto table = tabulate(f);
    const ApproxPair target{1, 3};
    table[target.lower * 4 + target.upper].upper ^= 2;
    Approximator broken = approximator_from_table(P.lattice(), table);
    SymmetryFlag s = is_symmetric(broken);
    CHECK_FALSE(s.symmetric);
    REQUIRE(s.witness);
    CHECK((*s.witness == target || *s.witness == swap(target)));
    CHECK_FALSE(same_map(dual(broken), broken));
  }
  SUBCASE("anything on the one-element lattice") {
    FiniteLattice one;
    CHECK(is_symmetric(Approximator(one, [](ApproxPair p) { return p; })));
  }
  SUBCASE("agrees with pointwise equality to the dual") {
    corpus::Rng rng(17);
    for (int round = 0; round < 100; ++round) {
      lp::LogicProgram P = corpus::random_program(rng, 2);
      const FiniteLattice& l = P.lattice();
      const auto n = static_cast<Element>(l.size());
      std::uniform_int_distribution<Element> el(0, n - 1);
      auto table = tabulate(lp::fitting(P));
      if (round % 2) table[el(rng) * n + el(rng)] = {el(rng), el(rng)};
      Approximator a = approximator_from_table(l, table);
      CHECK(bool(is_symmetric(a)) == same_map(dual(a), a));
    }
  }
}

TEST_CASE("memoised evaluation is safe for concurrent readers") {
  auto P = program("p :- not q. q :- not r. r :- not s. s :- not p, t. t :- s.");
  Approximator f = lp::fitting(P);
  Approximator reference = lp::fitting(P);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (ApproxPair p : all_pairs(P.lattice()))
        if (f(p) != reference(p)) ++mismatches[t];
    });
  for (auto& th : threads) th.join();
  for (int m : mismatches) CHECK(m == 0);
}
