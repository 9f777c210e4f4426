#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zap/core.hpp"
#include "zap/group.hpp"

namespace zap {

/// A ground clause paired with a sign-respecting permutation group. The pair
/// stands for the conjunction of every image of the clause under the group;
/// those images are its instances and the stored clause is the base instance.
class AugmentedClause {
 public:
  AugmentedClause(Clause base, PermGroup group);

  const Clause &base() const { return base_; }
  const PermGroup &group() const { return group_; }
  unsigned nvars() const { return group_.nvars(); }

  /// Full instance set, sorted; throws TooManyInstances past the cap.
  std::vector<Clause> instances(std::uint64_t cap = 1'000'000) const;

  bool is_instance(const Clause &c) const;
  /// A group element mapping the base onto c, when one exists. Found by
  /// backtrack search over the stabilizer chain anchored at the base's
  /// literal points, so no instance enumeration happens.
  std::optional<Permutation> instance_witness(const Clause &c) const;

  /// Identical instance sets.
  bool equivalent(const AugmentedClause &other,
                  std::uint64_t cap = 1'000'000) const;

  /// The same conjunction re-anchored at another instance.
  AugmentedClause rebase(const Clause &c_new) const;

  std::string str() const;

 private:
  Clause base_;
  PermGroup group_;
};

}  // namespace zap
