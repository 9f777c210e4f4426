#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "zap/augmented.hpp"
#include "zap/errors.hpp"

using namespace zap;

namespace {

// Sym{x1..xm} embedded in nvars variables.
PermGroup sym_prefix(unsigned nvars, unsigned m) {
  std::vector<Permutation> gens;
  if (m >= 2) gens.push_back(var_transposition(nvars, 1, 2));
  if (m >= 3) {
    std::vector<unsigned> tail;
    for (unsigned v = 2; v <= m; ++v) tail.push_back(v);
    gens.push_back(var_cycle(nvars, tail));
  }
  return PermGroup(nvars, gens);
}

std::uint64_t factorial(unsigned k) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<Clause> sorted(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end());
  return cs;
}

}  // namespace

TEST_CASE("cardinality clause expands to every subset of the right size",
          "[augmented]") {
  AugmentedClause ac(Clause::of({1, 2, 3}), sym_prefix(5, 5));
  std::vector<Clause> expected;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k) expected.push_back(Clause::of({i, j, k}));
  CHECK(ac.instances() == sorted(expected));
  CHECK(ac.instances().size() == 10);
  CHECK_THROWS_AS(ac.instances(5), TooManyInstances);
}

TEST_CASE("parity clause expands to the odd assignments", "[augmented]") {
  PermGroup fs(3, {parse_cycles("(1 -1)(2 -2)", 3),
                   parse_cycles("(1 -1)(3 -3)", 3)});
  CHECK(fs.order() == 4);
  AugmentedClause ac(Clause::of({1, 2, 3}), fs);
  std::vector<Clause> expected = {Clause::of({1, 2, 3}), Clause::of({1, -2, -3}),
                                  Clause::of({-1, 2, -3}),
                                  Clause::of({-1, -2, 3})};
  CHECK(ac.instances() == sorted(expected));
}

TEST_CASE("quantified clause expands to its ground instances", "[augmented]") {
  const unsigned n = 12;
  PermGroup g(n, {parse_cycles("(1 3)(2 4)(9 11)(10 12)", n),
                  parse_cycles("(1 2)(3 4)(5 7)(6 8)", n),
                  parse_cycles("(5 6)(7 8)(9 10)(11 12)", n)});
  CHECK(g.order() == 8);
  AugmentedClause ac(Clause::of({1, 5, 9}), g);
  std::vector<Clause> expected = {
      Clause::of({1, 5, 9}),  Clause::of({1, 6, 10}), Clause::of({2, 7, 9}),
      Clause::of({2, 8, 10}), Clause::of({3, 5, 11}), Clause::of({3, 6, 12}),
      Clause::of({4, 7, 11}), Clause::of({4, 8, 12})};
  CHECK(ac.instances() == sorted(expected));
}

TEST_CASE("group order factors through instance count", "[augmented]") {
  // A length-(m-k+1) base under Sym(m) demands k true variables of m; the
  // point stabilizer of one instance has order (m-k+1)!.(k-1)!.
  for (unsigned m = 3; m <= 6; ++m) {
    PermGroup g = sym_prefix(m, m);
    for (unsigned k = 1; k <= m; ++k) {
      std::vector<Literal> lits;
      for (unsigned v = 1; v <= m - k + 1; ++v)
        lits.push_back(Literal(static_cast<int>(v)));
      AugmentedClause ac(Clause(std::move(lits)), g);
      std::uint64_t count = ac.instances().size();
      CHECK(g.order() == count * factorial(m - k + 1) * factorial(k - 1));
    }
  }
}

TEST_CASE("instance membership and witnesses", "[augmented]") {
  AugmentedClause ac(Clause::of({1, 2, 3}), sym_prefix(5, 5));
  CHECK(ac.is_instance(Clause::of({2, 4, 5})));
  CHECK(ac.is_instance(Clause::of({1, 2, 3})));
  CHECK_FALSE(ac.is_instance(Clause::of({1, 2, -3})));
  CHECK_FALSE(ac.is_instance(Clause::of({1, 2})));
  CHECK_FALSE(ac.is_instance(Clause::of({1, 2, 3, 4})));

  auto w = ac.instance_witness(Clause::of({2, 4, 5}));
  REQUIRE(w.has_value());
  CHECK(w->apply(Clause::of({1, 2, 3})) == Clause::of({2, 4, 5}));
  CHECK(ac.group().contains(*w));
  CHECK_FALSE(ac.instance_witness(Clause::of({1, 2, -3})).has_value());

  // flips reach complemented instances
  PermGroup fs(3, {parse_cycles("(1 -1)(2 -2)", 3),
                   parse_cycles("(1 -1)(3 -3)", 3)});
  AugmentedClause px(Clause::of({1, 2, 3}), fs);
  CHECK(px.is_instance(Clause::of({-1, 2, -3})));
  CHECK_FALSE(px.is_instance(Clause::of({-1, 2, 3})));
  auto wf = px.instance_witness(Clause::of({1, -2, -3}));
  REQUIRE(wf.has_value());
  CHECK(wf->apply(Clause::of({1, 2, 3})) == Clause::of({1, -2, -3}));
}

TEST_CASE("witness search scales past enumerable orbits", "[augmented]") {
  // 30 variables, full symmetric group: 142506 instances of a 5-literal base,
  // found without expanding the orbit.
  PermGroup g = sym_prefix(30, 30);
  AugmentedClause ac(Clause::of({1, 2, 3, 4, 5}), g);
  auto w = ac.instance_witness(Clause::of({7, 11, 13, 24, 30}));
  REQUIRE(w.has_value());
  CHECK(w->apply(Clause::of({1, 2, 3, 4, 5})) ==
        Clause::of({7, 11, 13, 24, 30}));
  CHECK_FALSE(ac.is_instance(Clause::of({7, 11, 13, 24, -30})));
}

TEST_CASE("equivalence compares instance sets, not groups", "[augmented]") {
  PermGroup fs(3, {parse_cycles("(1 -1)(2 -2)", 3),
                   parse_cycles("(1 -1)(3 -3)", 3)});
  PermGroup compact(3, {parse_cycles("(1 -1)(2 -2)", 3),
                        var_transposition(3, 1, 2), var_cycle(3, {2, 3})});
  CHECK(fs.order() == 4);
  CHECK(compact.order() == 24);
  AugmentedClause a(Clause::of({1, 2, 3}), fs);
  AugmentedClause b(Clause::of({1, 2, 3}), compact);
  CHECK(a.equivalent(b));
  CHECK(b.equivalent(a));

  AugmentedClause c(Clause::of({1, 2, 3}), PermGroup::trivial(3));
  CHECK_FALSE(a.equivalent(c));
  CHECK(c.equivalent(AugmentedClause(Clause::of({1, 2, 3}), PermGroup::trivial(3))));
}

TEST_CASE("rebasing keeps the instance set", "[augmented]") {
  AugmentedClause ac(Clause::of({1, 2}), sym_prefix(4, 4));
  AugmentedClause moved = ac.rebase(Clause::of({3, 4}));
  CHECK(moved.base() == Clause::of({3, 4}));
  CHECK(moved.instances() == ac.instances());
  CHECK(moved.equivalent(ac));
  CHECK_THROWS_AS(ac.rebase(Clause::of({1, -2})), NotAnInstance);
  CHECK_THROWS_AS(ac.rebase(Clause::of({1, 2, 3})), NotAnInstance);
}

TEST_CASE("construction checks the variable range", "[augmented]") {
  CHECK_THROWS_AS(AugmentedClause(Clause::of({1, 6}), sym_prefix(5, 5)), Error);
  CHECK_NOTHROW(AugmentedClause(Clause::of({1, 5}), sym_prefix(5, 5)));
}

TEST_CASE("empty base stays empty under any group", "[augmented]") {
  AugmentedClause bottom(Clause(), sym_prefix(3, 3));
  CHECK(bottom.instances() == std::vector<Clause>{Clause()});
  CHECK(bottom.is_instance(Clause()));
  CHECK_FALSE(bottom.is_instance(Clause::of({1})));
}

TEST_CASE("printing shows base and generators", "[augmented]") {
  AugmentedClause ac(Clause::of({1, -2}), PermGroup(3, {var_flip(3, 3)}));
  std::string s = ac.str();
  CHECK(s.find("x1") != std::string::npos);
  CHECK(s.find("(3 -3)") != std::string::npos);
}
