#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "zap/encoders.hpp"
#include "zap/errors.hpp"
#include "zap/oracle.hpp"

using namespace zap;

namespace {

std::vector<std::vector<int>> expand(const std::vector<AugmentedClause> &db) {
  std::vector<std::vector<int>> out;
  for (const AugmentedClause &ac : db)
    for (const Clause &c : ac.instances()) {
      std::vector<int> row;
      for (Literal l : c.literals()) row.push_back(l.value());
      out.push_back(std::move(row));
    }
  return out;
}

// All clauses forbidding the wrong-parity assignments of the constraint,
// built directly so the check does not lean on the engine's encoder.
std::vector<std::vector<int>> parity_clauses(const ParityConstraint &pc) {
  std::vector<std::vector<int>> out;
  unsigned k = static_cast<unsigned>(pc.vars.size());
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    bool parity = false;
    for (unsigned i = 0; i < k; ++i)
      if ((bits >> i) & 1) parity = !parity;
    if (parity == pc.rhs) continue;
    std::vector<int> clause;
    for (unsigned i = 0; i < k; ++i) {
      int v = static_cast<int>(pc.vars[i]);
      clause.push_back((bits >> i) & 1 ? -v : v);
    }
    out.push_back(std::move(clause));
  }
  return out;
}

std::vector<std::vector<int>> random_theory(unsigned nvars, unsigned nclauses,
                                            unsigned width,
                                            std::mt19937_64 &rng) {
  std::vector<std::vector<int>> out;
  for (unsigned i = 0; i < nclauses; ++i) {
    std::vector<int> c;
    while (c.size() < width) {
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

}  // namespace

TEST_CASE("dpll basics", "[oracle]") {
  OracleResult r = dpll_solve({{1, 2}}, 2);
  REQUIRE(r.sat);
  CHECK(r.model.size() == 2);
  CHECK((r.model[0] || r.model[1]));

  CHECK(dpll_solve({}, 0).sat);
  CHECK(dpll_solve({}, 0).model.empty());
  CHECK_FALSE(dpll_solve({{1}, {-1}}, 1).sat);
  CHECK_FALSE(dpll_solve({{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}, 2).sat);

  CHECK_THROWS_AS(dpll_solve({}, 25), BudgetExceeded);
  CHECK_THROWS_AS(dpll_solve({}, 11, 10), BudgetExceeded);
  CHECK_THROWS_AS(dpll_solve({{0}}, 1), Error);
  CHECK_THROWS_AS(dpll_solve({{3}}, 2), Error);
}

TEST_CASE("dpll refutes the small pigeonhole expansion", "[oracle]") {
  CHECK_FALSE(dpll_solve(expand(encode_pigeonhole(3)), 12).sat);
  CHECK_FALSE(dpll_solve(expand(encode_pigeonhole(1)), 2).sat);
}

TEST_CASE("model counting", "[oracle]") {
  CHECK(enumerate_models({{1, 2}}, 2) == 3);
  CHECK(enumerate_models({}, 0) == 1);
  CHECK(enumerate_models({{1}, {-1}}, 1) == 0);

  // Odd-parity clause set over three variables.
  std::vector<std::vector<int>> odd = {
      {1, 2, 3}, {1, -2, -3}, {-1, 2, -3}, {-1, -2, 3}};
  CHECK(enumerate_models(odd, 3) == 4);

  CHECK(enumerate_models(expand(encode_pigeonhole(2)), 6) == 0);
  CHECK_THROWS_AS(enumerate_models({}, 21), BudgetExceeded);
}

TEST_CASE("dpll agrees with exhaustive enumeration", "[oracle]") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    unsigned nvars = 3 + rng() % 8;
    unsigned nclauses = 2 + rng() % (3 * nvars);
    auto theory = random_theory(nvars, nclauses, 3, rng);
    bool sat = dpll_solve(theory, nvars).sat;
    CHECK(sat == (enumerate_models(theory, nvars) > 0));
  }
}

TEST_CASE("gf2 basics", "[oracle]") {
  OracleResult r = gf2_solve({{{1, 2, 3}, true}}, 3);
  REQUIRE(r.sat);
  CHECK((r.model[0] ^ r.model[1] ^ r.model[2]) == true);

  CHECK_FALSE(gf2_solve({{{1}, true}, {{1}, false}}, 1).sat);
  CHECK_FALSE(gf2_solve({{{1, 2}, true}, {{1, 2}, false}}, 2).sat);
  CHECK(gf2_solve({}, 4).sat);
  // Duplicated variables cancel: x1 + x1 = 0.
  CHECK_FALSE(gf2_solve({{{1, 1}, true}}, 1).sat);
  CHECK_THROWS_AS(gf2_solve({{{5}, true}}, 4), Error);
}

TEST_CASE("gf2 agrees with dpll on the clause expansions", "[oracle]") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    unsigned nvars = 3 + rng() % 10;
    unsigned m = 1 + rng() % 6;
    std::vector<ParityConstraint> sys = random_parity_theory(
        nvars, m, rng());
    std::vector<std::vector<int>> clauses;
    for (const ParityConstraint &pc : sys)
      for (auto &c : parity_clauses(pc)) clauses.push_back(std::move(c));
    OracleResult g = gf2_solve(sys, nvars);
    OracleResult d = dpll_solve(clauses, nvars);
    REQUIRE(g.sat == d.sat);
    if (g.sat) {
      // The gf2 model satisfies the clause expansion too.
      for (const auto &c : clauses) {
        bool ok = false;
        for (int l : c) {
          bool val = g.model[static_cast<unsigned>(l < 0 ? -l : l) - 1];
          if ((l > 0) == val) ok = true;
        }
        CHECK(ok);
      }
    }
  }
}
