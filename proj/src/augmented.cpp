#include "zap/augmented.hpp"

#include <utility>

namespace zap {

AugmentedClause::AugmentedClause(Clause base, PermGroup group)
    : base_(std::move(base)), group_(std::move(group)) {
  if (base_.max_var() > group_.nvars())
    throw Error("augmented clause base mentions x" +
                std::to_string(base_.max_var()) + " but the group acts on " +
                std::to_string(group_.nvars()) + " variables");
}

std::vector<Clause> AugmentedClause::instances(std::uint64_t cap) const {
  return clause_orbit(base_, group_, cap);
}

std::optional<Permutation> AugmentedClause::instance_witness(
    const Clause &c) const {
  if (c.size() != base_.size()) return std::nullopt;
  const unsigned n = nvars();
  if (c.max_var() > n) return std::nullopt;

  std::vector<Point> prefix;
  prefix.reserve(base_.size());
  for (const Literal &l : base_.literals()) prefix.push_back(l.point(n));

  std::vector<char> wanted(2 * n, 0);
  for (const Literal &l : c.literals()) wanted[l.point(n)] = 1;

  // Distinct images inside a target set of equal size force the image of the
  // base's point set to be exactly c's point set, so any leaf is a witness.
  auto chain = group_.chain_with_prefix(prefix);
  const std::size_t m = prefix.size();
  auto filter = [&](std::size_t level, Point t) -> int {
    return (level >= m || wanted[t]) ? 0 : -1;
  };
  return chain->search_element(m, filter, 0);
}

bool AugmentedClause::is_instance(const Clause &c) const {
  return instance_witness(c).has_value();
}

bool AugmentedClause::equivalent(const AugmentedClause &other,
                                 std::uint64_t cap) const {
  return instances(cap) == other.instances(cap);
}

AugmentedClause AugmentedClause::rebase(const Clause &c_new) const {
  if (!is_instance(c_new))
    throw NotAnInstance("rebase target " + c_new.str() +
                        " is not an instance of " + str());
  return AugmentedClause(c_new, group_);
}

std::string AugmentedClause::str() const {
  std::string s = "(" + base_.str() + ", <";
  const auto &gens = group_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += format_cycles(gens[i]);
  }
  return s + ">)";
}

}  // namespace zap
