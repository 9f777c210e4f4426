#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zap/augmented.hpp"

namespace zap {

struct SolverStats {
  std::uint64_t branches = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learned = 0;
  std::uint64_t purged = 0;
  std::uint64_t max_learned_db = 0;
  std::uint64_t heuristic_fallbacks = 0;

  /// Line-oriented key=value rendering.
  std::string str() const;
};

/// Outcome of a propagation round: either the assignment was extended in
/// place until fixpoint, or a conflict was detected and analyzed. The
/// conflict reason's clause is falsified by the assignment; for augmented
/// databases it carries the resolvent group.
struct PropagationResult {
  std::optional<Reason> conflict;
  bool ok() const { return !conflict.has_value(); }
};

enum class Heuristic {
  PosUnsat,         // positive unvalued literal in an unsatisfied instance
  FirstUnassigned,  // lowest unvalued variable, positive phase
};

struct SolveOptions {
  unsigned k = 3;  // relevance bound for retained learned clauses
  Heuristic heuristic = Heuristic::PosUnsat;
  // 0: deterministic first-found branching. Nonzero: the PosUnsat heuristic
  // picks uniformly among all admissible literals, reproducibly per seed.
  std::uint64_t seed = 0;
  GroupOptions group;
};

struct SolveResult {
  bool sat = false;
  // For satisfiable problems: one literal per variable, ascending by
  // variable. Variables the search never touched default to false.
  std::vector<Literal> model;
  SolverStats stats;
};

/// Runs unit propagation to fixpoint over the ground database. When some
/// clause is falsified, resolves it against the reason of its most recently
/// assigned literal (a branch reason leaves the clause as is) and reports
/// the result as the conflict nogood.
///
/// Falsified clauses are detected eagerly: each round scans the whole
/// database for a falsified clause before looking for unit ones.
PropagationResult unit_propagate_ground(const std::vector<Clause> &db,
                                        AnnotatedAssignment &p,
                                        SolverStats *stats = nullptr);

/// First group element (in lexicographic search order over the chain
/// anchored at the base clause's points) whose instance has no satisfied
/// literal and at most one unvalued one. Absent when no such instance
/// exists. Instances with zero unvalued literals are falsified and count.
std::optional<Permutation> find_unit_instance(const AugmentedClause &ac,
                                              const AnnotatedAssignment &p);

/// Augmented unit propagation. Instances found by find_unit_instance extend
/// the assignment with the instance itself as reason; a falsified instance
/// triggers conflict analysis by augmented resolution against the reason of
/// its most recently assigned literal, with the full clause groups as
/// witnesses. Ground reasons in p are treated as carrying the trivial group.
PropagationResult unit_propagate_augmented(const std::vector<AugmentedClause> &db,
                                           AnnotatedAssignment &p,
                                           SolverStats *stats = nullptr,
                                           const GroupOptions &opts = {});

/// True when some instance has at most k unfalsified literals, i.e.
/// poss(c^g, p) <= k for some g. Clauses of length <= k+1 qualify outright.
bool has_relevant_instance(const AugmentedClause &ac,
                           const AnnotatedAssignment &p, unsigned k);

/// Branch literal for the current state; p must not be total. PosUnsat
/// scans clauses in database order (originals then learned) for an instance
/// whose literals are all falsified except one positive unvalued literal at
/// the lowest possible base position, and returns that literal. When no
/// such instance exists anywhere it falls back to the lowest unvalued
/// variable in positive phase and counts the event in stats.
Literal branch_select(const std::vector<AugmentedClause> &c,
                      const std::vector<AugmentedClause> &d,
                      const AnnotatedAssignment &p, Heuristic heuristic,
                      SolverStats *stats = nullptr);
Literal branch_select(const std::vector<Clause> &c,
                      const std::vector<Clause> &d,
                      const AnnotatedAssignment &p, Heuristic heuristic,
                      SolverStats *stats = nullptr);

/// Relevance-bounded learning. Branches, propagates, and on each conflict
/// learns the analyzed nogood, backtracks until it is unit, asserts its
/// remaining literal, and drops learned clauses with no instance of poss
/// <= k. Deriving an empty nogood proves unsatisfiability; a total
/// assignment (checked instance by instance) yields the model.
SolveResult rbl_solve(const std::vector<AugmentedClause> &db,
                      const SolveOptions &opts = {});
SolveResult rbl_solve(const std::vector<Clause> &db, unsigned nvars,
                      const SolveOptions &opts = {});

}  // namespace zap
