#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "zap/encoders.hpp"
#include "zap/oracle.hpp"
#include "zap/solver.hpp"

using namespace zap;

namespace {

std::vector<std::vector<int>> random_3sat(unsigned nvars, unsigned nclauses,
                                          std::mt19937_64 &rng) {
  std::vector<std::vector<int>> out;
  for (unsigned i = 0; i < nclauses; ++i) {
    std::vector<int> c;
    while (c.size() < 3) {
      int v = 1 + static_cast<int>(rng() % nvars);
      bool dup = false;
      for (int l : c)
        if (l == v || l == -v) dup = true;
      if (!dup) c.push_back(rng() & 1 ? v : -v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Clause> to_clauses(const std::vector<std::vector<int>> &theory) {
  std::vector<Clause> out;
  for (const auto &ints : theory) {
    std::vector<Literal> lits;
    for (int l : ints) lits.emplace_back(l);
    out.emplace_back(std::move(lits));
  }
  return out;
}

bool satisfies(const std::vector<std::vector<int>> &theory,
               const std::vector<Literal> &model) {
  for (const auto &c : theory) {
    bool ok = false;
    for (int l : c)
      for (Literal m : model)
        if (m.value() == l) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ground solver matches dpll across density and relevance bounds",
          "[integration]") {
  std::mt19937_64 rng(5);
  const unsigned nvars = 14;
  for (double ratio : {2.0, 4.3, 6.0}) {
    for (int round = 0; round < 10; ++round) {
      auto theory =
          random_3sat(nvars, static_cast<unsigned>(ratio * nvars), rng);
      bool expected = dpll_solve(theory, nvars).sat;
      for (unsigned k : {0u, 3u}) {
        SolveOptions opts;
        opts.k = k;
        SolveResult r = rbl_solve(to_clauses(theory), nvars, opts);
        REQUIRE(r.sat == expected);
        if (r.sat) CHECK(satisfies(theory, r.model));
        std::uint64_t bound = 1;  // (2n)^(k+1)
        for (unsigned i = 0; i <= k; ++i) bound *= 2 * nvars;
        CHECK(r.stats.max_learned_db <= bound);
      }
    }
  }
}

TEST_CASE("augmented solver matches the gf2 oracle on parity theories",
          "[integration]") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 30; ++round) {
    unsigned nvars = 4 + rng() % 9;
    unsigned m = 2 + rng() % 7;
    std::vector<ParityConstraint> sys = random_parity_theory(nvars, m, rng());
    std::vector<AugmentedClause> db;
    for (const ParityConstraint &pc : sys)
      db.push_back(encode_parity(pc, nvars).clause);
    SolveResult r = rbl_solve(db);
    OracleResult g = gf2_solve(sys, nvars);
    REQUIRE(r.sat == g.sat);
    if (r.sat) {
      for (const ParityConstraint &pc : sys) {
        bool sum = false;
        for (unsigned v : pc.vars)
          if (r.model[v - 1].positive()) sum = !sum;
        CHECK(sum == pc.rhs);
      }
    }
  }
}

TEST_CASE("contradictory parity pair is refuted", "[integration]") {
  std::vector<ParityConstraint> sys = {{{1, 2}, true}, {{1, 2}, false}};
  CHECK_FALSE(gf2_solve(sys, 2).sat);
  std::vector<AugmentedClause> db = {encode_parity(sys[0], 2).clause,
                                     encode_parity(sys[1], 2).clause};
  CHECK_FALSE(rbl_solve(db).sat);
}

TEST_CASE("clique-coloring theories are refuted within the branch budget",
          "[integration]") {
  for (auto [m, n] : {std::pair{4u, 3u}, {5u, 3u}}) {
    std::vector<AugmentedClause> db = encode_clique_coloring(m, n);
    SolveResult r = rbl_solve(db);
    CHECK_FALSE(r.sat);
    CHECK(r.stats.branches < 100'000);
  }
}
