#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zap/augmented.hpp"

namespace zap {

/// Subgroups h1 <= G1 and h2 <= G2 selecting one particular (noncanonical)
/// resolvent of two augmented clauses.
struct ResolventWitness {
  PermGroup h1;
  PermGroup h2;
};

/// All variable permutations of an nvars-variable literal space that agree,
/// on each literal set ks[i], with some element of gs[i]. The result is a
/// plain set of permutations; it is generally not closed under composition.
/// Throws TooLarge when nvars! exceeds the cap.
std::vector<Permutation> extn_enumerate(
    const std::vector<std::vector<Literal>> &ks,
    const std::vector<PermGroup> &gs, unsigned nvars,
    std::uint64_t cap = 5'000'000);

/// The group of sign-respecting permutations that agree, on the closure of
/// each ks[i] under gs[i], with some element of gs[i]. Unlike the plain
/// agreement set above this is always a group: it is computed as the
/// intersection of one factor per constraint, each factor acting as gs[i] on
/// the (negation-completed) closure and freely on the remaining variables.
PermGroup stab_group(const std::vector<std::vector<Literal>> &ks,
                     const std::vector<PermGroup> &gs, unsigned nvars,
                     const GroupOptions &opts = {});

/// Resolves the base clauses and attaches the group of stable extensions of
/// the witness subgroups (the full clause groups when no witness is given).
/// The group is trimmed to act only on variables inside the clause closures;
/// the free action elsewhere cannot change any instance of the resolvent.
AugmentedClause resolve_augmented(
    const AugmentedClause &a, const AugmentedClause &b,
    const std::optional<ResolventWitness> &witness = std::nullopt,
    const GroupOptions &opts = {});

/// Polynomial resolvent test: the candidate base must equal the ground
/// resolvent of the inputs, and each generator of the candidate group must
/// agree on each base clause's closure with some element of the matching
/// witness subgroup (checked by lifting the restriction into the subgroup).
bool check_resolvent(const AugmentedClause &candidate, const AugmentedClause &a,
                     const AugmentedClause &b, const ResolventWitness &witness);

}  // namespace zap
