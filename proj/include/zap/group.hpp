#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zap/perm.hpp"

namespace zap {

using uint128 = unsigned __int128;

std::string uint128_str(uint128 v);

/// Base and strong generating set for a permutation group, built by
/// deterministic incremental Schreier-Sims. Immutable once constructed.
class StabChain {
 public:
  struct Level {
    Point base;
    std::vector<Point> orbit;  // discovery order, orbit[0] == base
    std::vector<int> orbit_pos;  // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // u with base^u == orbit[i]
    std::vector<Permutation> transversal_inv;
    // Work watermarks, per strong generator: orbit rows already expanded
    // and orbit rows whose Schreier generators were already sifted.
    std::vector<std::size_t> expanded;
    std::vector<std::size_t> checked;
  };

  StabChain(unsigned nvars, const std::vector<Permutation> &gens,
            const std::vector<Point> &prescribed_base = {});

  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return 2 * nvars_; }
  const std::vector<Level> &levels() const { return levels_; }
  std::vector<Point> base() const;

  uint128 order() const;
  bool contains(const Permutation &g) const;
  /// Peels transversal factors off g starting at `level`; returns the residue
  /// and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift_from(std::size_t level,
                                                Permutation g) const;

  /// All strong generators, shallow levels first.
  std::vector<Permutation> strong_generators() const;
  /// Strong generators of the pointwise stabilizer of the first `prefix`
  /// base points.
  std::vector<Permutation> stabilizer_generators(std::size_t prefix) const;

  Permutation random_element(std::mt19937_64 &rng) const;
  std::vector<Permutation> enumerate_elements(std::uint64_t cap) const;

  /// Budgeted element search over images of the first `constrained` base
  /// points. `filter(level, target)` returns the budget cost of mapping
  /// base[level] to target, or -1 to forbid it. Candidate targets are tried
  /// in ascending point order, so the first hit carries the lexicographically
  /// least admissible image tuple.
  ///
  /// When the caller can promise that every cost-0 target lies in `scarce`,
  /// passing those points enables a matching cutoff: a branch dies as soon as
  /// the unused scarce points reachable in each stabilizer orbit cannot cover
  /// the remaining positions the budget will not.
  using TargetFilter = std::function<int(std::size_t, Point)>;
  std::optional<Permutation> search_element(
      std::size_t constrained, const TargetFilter &filter, int budget,
      std::uint64_t node_cap = 50'000'000,
      const std::vector<Point> &scarce = {}) const;

 private:
  void append_level(Point b);
  std::size_t place_gen(Permutation g);
  void expand_orbit(std::size_t level);
  std::optional<std::size_t> process_level(std::size_t level);
  const std::vector<std::vector<int>> &point_orbit_ids() const;

  unsigned nvars_;
  std::vector<Level> levels_;
  // Global strong generator list; sgen_level_[k] is the shallowest level
  // whose effective generating set includes sgens_[k], i.e. the generator
  // fixes the first sgen_level_[k] base points.
  std::vector<Permutation> sgens_;
  std::vector<std::size_t> sgen_level_;
  // Orbit partition of all points per level, for the matching cutoff.
  mutable std::once_flag orbit_ids_once_;
  mutable std::vector<std::vector<int>> orbit_ids_;
};

struct GroupOptions {
  std::uint64_t enum_threshold = 1'000'000;  // brute-force fallback bound
  std::uint64_t node_cap = 50'000'000;       // backtrack search guard
};

/// A permutation group over a literal space, all generators sign-respecting.
/// Cheap to copy; the stabilizer chain and prefix-rebased variants of it are
/// shared and built on demand.
class PermGroup {
 public:
  static PermGroup trivial(unsigned nvars);
  PermGroup(unsigned nvars, std::vector<Permutation> generators);

  unsigned nvars() const;
  unsigned degree() const { return 2 * nvars(); }
  const std::vector<Permutation> &generators() const;

  uint128 order() const;  // saturates at the uint128 maximum
  std::string order_str() const;  // exact
  bool is_trivial() const { return order() == 1; }
  bool contains(const Permutation &g) const;

  std::vector<Literal> orbit(Literal x) const;
  /// Union of the orbits of the given literals.
  std::vector<Literal> closure(const std::vector<Literal> &xs) const;
  /// Orbits of all 2n literal points, each sorted, ordered by first literal.
  std::vector<std::vector<Literal>> orbit_partition() const;

  PermGroup pointwise_stabilizer(const std::vector<Literal> &pts) const;
  PermGroup set_stabilizer(const std::vector<Literal> &set,
                           const GroupOptions &opts = {}) const;
  static PermGroup intersect(const PermGroup &a, const PermGroup &b,
                             const GroupOptions &opts = {});

  /// Sift-filtered generating set: every generator that enlarges the group
  /// generated by its predecessors, at most log2(order) of them.
  std::vector<Permutation> reduced_generators() const;

  Permutation random_element(std::mt19937_64 &rng) const;
  std::vector<Permutation> enumerate_elements(std::uint64_t cap) const;

  bool is_subgroup_of(const PermGroup &other) const;
  bool same_group_as(const PermGroup &other) const;

  std::shared_ptr<const StabChain> chain() const;
  /// Chain whose base starts with the given points, cached per prefix.
  std::shared_ptr<const StabChain> chain_with_prefix(
      const std::vector<Point> &prefix) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Orbit of a clause under the group, sorted; throws TooManyInstances past cap.
std::vector<Clause> clause_orbit(const Clause &c, const PermGroup &g,
                                 std::uint64_t cap);

/// Some rho' in G agreeing with rho on its domain, found by descending the
/// stabilizer chain along the domain points; throws NoLift when none exists.
Permutation lift_restriction(
    const PermGroup &g,
    const std::vector<std::pair<Literal, Literal>> &rho);

struct ShrinkOptions {
  double draw_multiplier = 1.0;  // scales the draw count
  bool verify = true;            // recheck the orbit, throw on mismatch
  std::uint64_t orbit_cap = 1'000'000;
};

/// Random subgroup H <= G whose orbit of c matches G's with probability at
/// least 1 - eps: draws ceil(multiplier * log_{4/3}(d / eps)) uniform random
/// elements, where d is the exact orbit size, and returns the sift-reduced
/// subgroup they generate.
PermGroup shrink_to_transitive(const PermGroup &g, const Clause &c, double eps,
                               std::mt19937_64 &rng,
                               const ShrinkOptions &opts = {});

/// Generators of the full sign-respecting symmetry on the given variables:
/// all permutations of them combined with all sign flips.
std::vector<Permutation> signed_symmetry_generators(
    unsigned nvars, const std::vector<unsigned> &vars);

}  // namespace zap
