#pragma once

#include <cstdint>
#include <vector>

#include "zap/encoders.hpp"  // ParityConstraint only

namespace zap {

/// Brute-force deciders used to cross-check the engine. They take plain
/// DIMACS-style integer clauses and do their own evaluation and propagation
/// so that an engine bug cannot hide inside its own oracle.
struct OracleResult {
  bool sat = false;
  std::vector<bool> model;  // model[v-1]; filled only on sat
};

/// Plain recursive DPLL with unit propagation. The model is re-checked
/// against every clause by direct evaluation before it is returned.
OracleResult dpll_solve(const std::vector<std::vector<int>> &clauses,
                        unsigned nvars, unsigned budget = 24);

/// Gaussian elimination over GF(2); the model is re-checked against every
/// constraint before it is returned.
OracleResult gf2_solve(const std::vector<ParityConstraint> &constraints,
                       unsigned nvars);

/// Exact model count by exhaustive assignment enumeration.
std::uint64_t enumerate_models(const std::vector<std::vector<int>> &clauses,
                               unsigned nvars, unsigned budget = 20);

}  // namespace zap
