#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "zap/solver.hpp"

using namespace zap;

namespace {

// Pigeonhole layout: pigeon i of n+1, hole j of n, variable (i-1)*n + j.
unsigned php_var(unsigned i, unsigned j, unsigned n) { return (i - 1) * n + j; }

Permutation product(unsigned nvars, const std::vector<Permutation> &parts) {
  Permutation acc(nvars);
  for (const Permutation &q : parts) acc = compose(acc, q);
  return acc;
}

// Arbitrary pigeon exchanges crossed with arbitrary hole exchanges.
PermGroup php_group(unsigned n) {
  unsigned m = n + 1;
  unsigned nv = m * n;
  std::vector<Permutation> gens;
  {
    std::vector<Permutation> parts;
    for (unsigned j = 1; j <= n; ++j)
      parts.push_back(var_transposition(nv, php_var(1, j, n), php_var(2, j, n)));
    gens.push_back(product(nv, parts));
  }
  {
    std::vector<Permutation> parts;
    for (unsigned j = 1; j <= n; ++j) {
      std::vector<unsigned> vs;
      for (unsigned i = 1; i <= m; ++i) vs.push_back(php_var(i, j, n));
      parts.push_back(var_cycle(nv, vs));
    }
    gens.push_back(product(nv, parts));
  }
  {
    std::vector<Permutation> parts;
    for (unsigned i = 1; i <= m; ++i)
      parts.push_back(var_transposition(nv, php_var(i, 1, n), php_var(i, 2, n)));
    gens.push_back(product(nv, parts));
  }
  {
    std::vector<Permutation> parts;
    for (unsigned i = 1; i <= m; ++i) {
      std::vector<unsigned> vs;
      for (unsigned j = 1; j <= n; ++j) vs.push_back(php_var(i, j, n));
      parts.push_back(var_cycle(nv, vs));
    }
    gens.push_back(product(nv, parts));
  }
  return PermGroup(nv, gens);
}

// First-pigeon row clause before the hole-1 exclusivity pair; propagation
// traces depend on this order.
std::vector<AugmentedClause> php_db(unsigned n) {
  PermGroup g = php_group(n);
  std::vector<Literal> row;
  for (unsigned j = 1; j <= n; ++j)
    row.push_back(Literal(static_cast<int>(php_var(1, j, n))));
  std::vector<Literal> pair;
  pair.push_back(Literal(-1));
  pair.push_back(Literal(-static_cast<int>(php_var(2, 1, n))));
  std::vector<AugmentedClause> db;
  db.emplace_back(Clause(std::move(row)), g);
  db.emplace_back(Clause(std::move(pair)), g);
  return db;
}

bool brute_sat(const std::vector<Clause> &db, unsigned nvars) {
  for (std::uint32_t m = 0; m < (1u << nvars); ++m) {
    bool all = true;
    for (const Clause &c : db) {
      bool sat = false;
      for (const Literal &l : c.literals())
        if (((m >> (l.var() - 1)) & 1u) == (l.positive() ? 1u : 0u)) {
          sat = true;
          break;
        }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool model_satisfies(const std::vector<Clause> &db,
                     const std::vector<Literal> &model) {
  for (const Clause &c : db) {
    bool sat = false;
    for (const Literal &l : c.literals())
      if (model[l.var() - 1] == l) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::vector<Clause> random_theory(std::mt19937_64 &rng, unsigned nvars,
                                  unsigned nclauses) {
  std::vector<unsigned> vars(nvars);
  for (unsigned v = 0; v < nvars; ++v) vars[v] = v + 1;
  std::uniform_int_distribution<unsigned> len_d(1, std::min(4u, nvars));
  std::vector<Clause> db;
  for (unsigned c = 0; c < nclauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    unsigned len = len_d(rng);
    std::vector<Literal> lits;
    for (unsigned i = 0; i < len; ++i) {
      int v = static_cast<int>(vars[i]);
      lits.push_back(Literal(rng() & 1 ? v : -v));
    }
    db.push_back(Clause(std::move(lits)));
  }
  return db;
}

// A conflict nogood must be falsified by the assignment that produced it.
void require_falsified(const PropagationResult &r,
                       const AnnotatedAssignment &p) {
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.conflict->is_branch());
  for (const Literal &l : r.conflict->clause.literals())
    CHECK(p.falsifies(l));
}

const std::vector<AugmentedClause> no_learned;

}  // namespace

TEST_CASE("ground unit propagation extends the assignment with reasons",
          "[solver]") {
  AnnotatedAssignment p(1);
  std::vector<Clause> db{Clause::of({1})};
  auto r = unit_propagate_ground(db, p);
  REQUIRE(r.ok());
  REQUIRE(p.size() == 1);
  CHECK(p.contains(Literal(1)));
  CHECK_FALSE(p.entry(0).reason.is_branch());
  CHECK(p.entry(0).reason.clause == Clause::of({1}));
}

TEST_CASE("ground unit propagation derives the empty nogood from a equals "
          "not a",
          "[solver]") {
  AnnotatedAssignment p(1);
  std::vector<Clause> db{Clause::of({1}), Clause::of({-1})};
  auto r = unit_propagate_ground(db, p);
  require_falsified(r, p);
  CHECK(r.conflict->clause.empty());
}

TEST_CASE("ground propagation on expanded pigeonhole clears hole one",
          "[solver]") {
  auto aug = php_db(3);
  std::vector<Clause> db = aug[0].instances();
  for (const Clause &c : aug[1].instances()) db.push_back(c);
  REQUIRE(db.size() == 4 + 18);

  AnnotatedAssignment p(12);
  p.append(Literal(1), Reason::branch());
  auto r = unit_propagate_ground(db, p);
  REQUIRE(r.ok());
  REQUIRE(p.size() == 4);
  CHECK(p.entry(1).lit == Literal(-4));
  CHECK(p.entry(2).lit == Literal(-7));
  CHECK(p.entry(3).lit == Literal(-10));
  CHECK(p.entry(1).reason.clause == Clause::of({-1, -4}));
  CHECK(p.entry(2).reason.clause == Clause::of({-1, -7}));
  CHECK(p.entry(3).reason.clause == Clause::of({-1, -10}));
}

TEST_CASE("ground conflict analysis resolves against the deepest reason",
          "[solver]") {
  std::vector<Clause> db{Clause::of({1}), Clause::of({-1, 2}),
                         Clause::of({-1, -2})};
  AnnotatedAssignment p(2);
  auto r = unit_propagate_ground(db, p);
  require_falsified(r, p);
  CHECK(r.conflict->clause == Clause::of({-1}));

  // Both falsified literals are branches: the clause is its own nogood.
  AnnotatedAssignment q(2);
  q.append(Literal(1), Reason::branch());
  q.append(Literal(2), Reason::branch());
  std::vector<Clause> db2{Clause::of({-1, -2})};
  auto r2 = unit_propagate_ground(db2, q);
  require_falsified(r2, q);
  CHECK(r2.conflict->clause == Clause::of({-1, -2}));
}

TEST_CASE("find_unit_instance tracks the assignment", "[solver]") {
  unsigned n = 3;
  PermGroup g = php_group(n);
  std::vector<Literal> pair{Literal(-1), Literal(-4)};
  AugmentedClause ac(Clause(pair), g);

  AnnotatedAssignment empty(12);
  CHECK_FALSE(find_unit_instance(ac, empty).has_value());

  AnnotatedAssignment p(12);
  p.append(Literal(1), Reason::branch());
  auto w = find_unit_instance(ac, p);
  REQUIRE(w.has_value());
  CHECK(w->apply(ac.base()) == Clause::of({-1, -4}));

  // Group-driven singleton: with the base instance satisfied, the search
  // moves to the next image of the clause.
  AugmentedClause one(Clause::of({-1}), g);
  AnnotatedAssignment q(12);
  q.append(Literal(-1), Reason::branch());
  auto w2 = find_unit_instance(one, q);
  REQUIRE(w2.has_value());
  CHECK(w2->apply(one.base()) == Clause::of({-2}));
}

TEST_CASE("augmented propagation walks the four pigeon three hole trace",
          "[solver]") {
  auto db = php_db(3);
  AnnotatedAssignment p(12);

  p.append(Literal(1), Reason::branch());  // pigeon 1 in hole 1
  auto r1 = unit_propagate_augmented(db, p);
  REQUIRE(r1.ok());
  REQUIRE(p.size() == 4);
  for (int v : {-4, -7, -10}) CHECK(p.contains(Literal(v)));
  CHECK(p.entry(1).reason.clause == Clause::of({-1, -4}));
  REQUIRE(p.entry(1).reason.group != nullptr);
  CHECK(p.entry(1).reason.group->order() == 144);

  p.append(Literal(5), Reason::branch());  // pigeon 2 in hole 2
  auto r2 = unit_propagate_augmented(db, p);
  require_falsified(r2, p);

  // Hole two empties, then pigeons three and four are forced into hole
  // three and collide there.
  for (int v : {-2, -8, -11, 9, 12}) CHECK(p.contains(Literal(v)));
  int at9 = p.index_of_var(9), at12 = p.index_of_var(12);
  REQUIRE(at9 >= 0);
  CHECK(at9 < at12);
  CHECK(p.entry(static_cast<std::size_t>(at9)).reason.clause ==
        Clause::of({7, 8, 9}));
  CHECK(p.entry(static_cast<std::size_t>(at12)).reason.clause ==
        Clause::of({10, 11, 12}));

  CHECK(r2.conflict->clause == Clause::of({-9, 10, 11}));
  REQUIRE(r2.conflict->group != nullptr);
  CHECK(r2.conflict->group->same_group_as(db[0].group()));

  // Learned nogoods keep the whole group, so the hole swap image of
  // p41|-p22|p31 is available without further work.
  AugmentedClause learned(Clause::of({10, -5, 7}), db[0].group());
  CHECK(learned.is_instance(Clause::of({10, -6, 7})));
}

TEST_CASE("propagation without unit instances leaves the assignment alone",
          "[solver]") {
  auto db = php_db(3);
  AnnotatedAssignment p(12);
  auto r = unit_propagate_augmented(db, p);
  REQUIRE(r.ok());
  CHECK(p.size() == 0);
}

TEST_CASE("relevance testing bounds the possibility count", "[solver]") {
  AugmentedClause plain(Clause::of({1, 2, 3}), PermGroup::trivial(3));
  AnnotatedAssignment empty(3);
  CHECK_FALSE(has_relevant_instance(plain, empty, 1));
  CHECK(has_relevant_instance(plain, empty, 2));

  PermGroup g = php_group(3);
  AugmentedClause pair(Clause::of({-1, -4}), g);
  AnnotatedAssignment none(12);
  CHECK_FALSE(has_relevant_instance(pair, none, 0));
  CHECK(has_relevant_instance(pair, none, 1));

  AnnotatedAssignment p(12);
  p.append(Literal(1), Reason::branch());
  CHECK(has_relevant_instance(pair, p, 0));

  AnnotatedAssignment f(12);
  f.append(Literal(1), Reason::branch());
  f.append(Literal(4), Reason::branch());
  CHECK(has_relevant_instance(pair, f, 0));
}

TEST_CASE("branch selection prefers positive literals of unsatisfied "
          "instances",
          "[solver]") {
  auto db = php_db(3);
  AnnotatedAssignment p(12);
  CHECK(branch_select(db, no_learned, p, Heuristic::PosUnsat) == Literal(1));
  CHECK(branch_select(db, no_learned, p, Heuristic::PosUnsat) == Literal(1));

  p.append(Literal(1), Reason::branch());
  REQUIRE(unit_propagate_augmented(db, p).ok());
  CHECK(branch_select(db, no_learned, p, Heuristic::PosUnsat) == Literal(5));

  SolverStats st;
  std::vector<AugmentedClause> neg{
      AugmentedClause(Clause::of({-1, -2}), PermGroup::trivial(2))};
  AnnotatedAssignment q(2);
  CHECK(branch_select(neg, no_learned, q, Heuristic::PosUnsat, &st) ==
        Literal(1));
  CHECK(st.heuristic_fallbacks == 1);
  CHECK(branch_select(neg, no_learned, q, Heuristic::FirstUnassigned, &st) ==
        Literal(1));
  CHECK(st.heuristic_fallbacks == 1);

  q.append(Literal(-1), Reason::branch());
  q.append(Literal(-2), Reason::branch());
  CHECK_THROWS_AS(branch_select(neg, no_learned, q, Heuristic::PosUnsat),
                  NoBranchAvailable);
}

TEST_CASE("rbl solves tiny ground databases", "[solver]") {
  SolveResult r = rbl_solve({Clause::of({1, 2})}, 2);
  CHECK(r.sat);
  CHECK(model_satisfies({Clause::of({1, 2})}, r.model));

  r = rbl_solve({Clause::of({1}), Clause::of({-1})}, 1);
  CHECK_FALSE(r.sat);
  CHECK(r.stats.branches == 0);

  r = rbl_solve({Clause()}, 3);
  CHECK_FALSE(r.sat);

  r = rbl_solve(std::vector<Clause>{}, 0);
  CHECK(r.sat);
  CHECK(r.model.empty());

  std::vector<Clause> chain{Clause::of({1}), Clause::of({-1, 2}),
                            Clause::of({-2, 3})};
  r = rbl_solve(chain, 3);
  CHECK(r.sat);
  CHECK(r.stats.branches == 0);
  CHECK(model_satisfies(chain, r.model));
}

TEST_CASE("rbl agrees with exhaustive search on random ground theories",
          "[solver]") {
  std::mt19937_64 rng(20090);
  for (unsigned trial = 0; trial < 200; ++trial) {
    unsigned nvars = 4 + static_cast<unsigned>(rng() % 7);
    unsigned nclauses = nvars + static_cast<unsigned>(rng() % (2 * nvars));
    auto db = random_theory(rng, nvars, nclauses);
    bool expect = brute_sat(db, nvars);
    for (unsigned k = 0; k <= 3; ++k) {
      SolveOptions opts;
      opts.k = k;
      opts.heuristic =
          (trial + k) % 2 ? Heuristic::PosUnsat : Heuristic::FirstUnassigned;
      SolveResult got = rbl_solve(db, nvars, opts);
      REQUIRE(got.sat == expect);
      if (got.sat) REQUIRE(model_satisfies(db, got.model));
      std::uint64_t cap = 1;
      for (unsigned e = 0; e <= k; ++e) cap *= 2 * nvars;
      REQUIRE(got.stats.max_learned_db <= cap);
    }
  }
}

TEST_CASE("rbl on augmented databases with trivial groups matches ground "
          "solving",
          "[solver]") {
  std::mt19937_64 rng(5151);
  for (unsigned trial = 0; trial < 30; ++trial) {
    unsigned nvars = 4 + static_cast<unsigned>(rng() % 3);
    auto db = random_theory(rng, nvars, nvars + 3);
    std::vector<AugmentedClause> adb;
    for (const Clause &c : db)
      adb.emplace_back(c, PermGroup::trivial(nvars));
    SolveOptions opts;
    opts.k = 2;
    SolveResult ground = rbl_solve(db, nvars, opts);
    SolveResult aug = rbl_solve(adb, opts);
    REQUIRE(ground.sat == aug.sat);
    if (aug.sat) REQUIRE(model_satisfies(db, aug.model));
  }
}

TEST_CASE("a sign flip group turns one unit into a contradiction",
          "[solver]") {
  PermGroup flips(1, {var_flip(1, 1)});
  std::vector<AugmentedClause> db{AugmentedClause(Clause::of({1}), flips)};
  SolveResult r = rbl_solve(db);
  CHECK_FALSE(r.sat);
  CHECK(r.stats.branches == 0);
}

TEST_CASE("satisfiable augmented databases produce checked models",
          "[solver]") {
  std::vector<AugmentedClause> db{
      AugmentedClause(Clause::of({1, 2}), PermGroup::trivial(2))};
  SolveResult r = rbl_solve(db);
  REQUIRE(r.sat);
  bool covered = false;
  for (const Clause &inst : db[0].instances()) {
    bool sat = false;
    for (const Literal &l : inst.literals())
      if (r.model[l.var() - 1] == l) sat = true;
    covered = sat;
  }
  CHECK(covered);

  SolveResult empty = rbl_solve(std::vector<AugmentedClause>{});
  CHECK(empty.sat);
}

TEST_CASE("each early pigeonhole branch empties exactly one hole",
          "[solver]") {
  for (unsigned n : {3u, 4u, 5u}) {
    auto db = php_db(n);
    unsigned m = n + 1;
    AnnotatedAssignment p(m * n);
    for (unsigned b = 1; b <= n - 1; ++b) {
      Literal l = branch_select(db, no_learned, p, Heuristic::PosUnsat);
      REQUIRE(l.positive());
      unsigned v = l.var();
      unsigned pj = (v - 1) / n + 1, hk = (v - 1) % n + 1;
      for (unsigned h = 1; h <= n; ++h)
        CHECK_FALSE(p.contains(Literal(static_cast<int>(php_var(pj, h, n)))));
      std::size_t before = p.size();
      p.append(l, Reason::branch());
      auto r = unit_propagate_augmented(db, p);
      if (b <= n - 2) {
        REQUIRE(r.ok());
        std::set<int> got;
        for (std::size_t i = before + 1; i < p.size(); ++i)
          got.insert(p.entry(i).lit.value());
        std::set<int> want;
        for (unsigned i = 1; i <= m; ++i)
          if (i != pj) want.insert(-static_cast<int>(php_var(i, hk, n)));
        CHECK(got == want);
      } else {
        // The last branch overcommits: the remaining pigeons collide.
        require_falsified(r, p);
      }
    }
  }
}

TEST_CASE("rbl refutes pigeonhole problems in n minus one branches",
          "[solver]") {
  for (unsigned n = 3; n <= 7; ++n) {
    auto db = php_db(n);
    SolveResult r = rbl_solve(db);
    CHECK_FALSE(r.sat);
    CHECK(r.stats.branches == n - 1);
    CHECK(r.stats.heuristic_fallbacks == 0);
    CHECK(r.stats.conflicts >= 1);
  }
}

TEST_CASE("seeded tie-breaking never changes the pigeonhole branch count",
          "[solver]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (unsigned n = 3; n <= 5; ++n) {
      auto db = php_db(n);
      SolveOptions opts;
      opts.seed = seed;
      SolveResult r = rbl_solve(db, opts);
      CHECK_FALSE(r.sat);
      CHECK(r.stats.branches == n - 1);
      CHECK(r.stats.heuristic_fallbacks == 0);
    }
  }
}

TEST_CASE("rbl verdicts survive full ground expansion", "[solver]") {
  auto db = php_db(3);
  std::vector<Clause> ground = db[0].instances();
  for (const Clause &c : db[1].instances()) ground.push_back(c);
  SolveResult r = rbl_solve(ground, 12);
  CHECK_FALSE(r.sat);
}

TEST_CASE("solver statistics render as key=value lines", "[solver]") {
  SolveResult r = rbl_solve({Clause::of({1}), Clause::of({-1})}, 1);
  std::string s = r.stats.str();
  CHECK(s.find("branches=0") != std::string::npos);
  CHECK(s.find("conflicts=") != std::string::npos);
  CHECK(s.find("max_learned_db=") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') == 7);
}
