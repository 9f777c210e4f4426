#include "zap/resolution.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <utility>

namespace zap {

namespace {

// g's action on an invariant, negation-closed point mask, identity elsewhere.
Permutation masked_restriction(const Permutation &g,
                               const std::vector<char> &mask) {
  std::vector<Point> img(g.degree());
  for (Point p = 0; p < g.degree(); ++p) img[p] = mask[p] ? g.apply(p) : p;
  return Permutation(g.nvars(), std::move(img));
}

// Negation-completed point mask of the closure of k under g.
std::vector<char> closure_mask(const std::vector<Literal> &k,
                               const PermGroup &g, unsigned nvars) {
  std::vector<char> mask(2 * nvars, 0);
  for (const Literal &l : g.closure(k)) {
    Point p = l.point(nvars);
    mask[p] = 1;
    mask[negated_point(p, nvars)] = 1;
  }
  return mask;
}

std::vector<unsigned> uncovered_vars(const std::vector<char> &mask,
                                     unsigned nvars) {
  std::vector<unsigned> vars;
  for (unsigned v = 1; v <= nvars; ++v)
    if (!mask[v - 1]) vars.push_back(v);
  return vars;
}

// One constraint's factor group: agrees with some element of g on the closure
// of k and is unconstrained on the untouched variables. A sign-respecting
// permutation agrees with g on the closure exactly when it agrees on the
// negation-completed closure, so the factor decomposes as (g restricted to
// the closure) x (full signed symmetry elsewhere). When the closure touches
// every variable the factor is g itself.
PermGroup restriction_factor(const std::vector<Literal> &k, const PermGroup &g,
                             unsigned nvars) {
  std::vector<char> mask = closure_mask(k, g, nvars);
  std::vector<unsigned> off = uncovered_vars(mask, nvars);
  if (off.empty()) return g;
  std::vector<Permutation> gens;
  for (const Permutation &gen : g.generators()) {
    Permutation r = masked_restriction(gen, mask);
    if (!r.is_identity()) gens.push_back(std::move(r));
  }
  std::vector<Permutation> sym = signed_symmetry_generators(nvars, off);
  gens.insert(gens.end(), std::make_move_iterator(sym.begin()),
              std::make_move_iterator(sym.end()));
  return PermGroup(nvars, std::move(gens));
}

}  // namespace

std::vector<Permutation> extn_enumerate(
    const std::vector<std::vector<Literal>> &ks,
    const std::vector<PermGroup> &gs, unsigned nvars, std::uint64_t cap) {
  if (ks.size() != gs.size())
    throw Error("extn_enumerate: constraint lists differ in length");
  std::uint64_t sweep = 1;
  for (unsigned i = 2; i <= nvars; ++i) {
    sweep *= i;
    if (sweep > cap)
      throw TooLarge("extn_enumerate over " + std::to_string(nvars) +
                     " variables exceeds the enumeration cap");
  }

  // Per constraint, the admissible image tuples of ks[i]'s points: the orbit
  // of the point tuple under gs[i].
  std::vector<std::vector<Point>> domains(ks.size());
  std::vector<std::set<std::vector<Point>>> admissible(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (gs[i].nvars() != nvars)
      throw Error("extn_enumerate: group acts on the wrong variable count");
    std::vector<Point> tuple;
    tuple.reserve(ks[i].size());
    for (const Literal &l : ks[i]) tuple.push_back(l.point(nvars));
    domains[i] = tuple;
    admissible[i].insert(tuple);
    std::vector<std::vector<Point>> queue{std::move(tuple)};
    while (!queue.empty()) {
      std::vector<Point> t = std::move(queue.back());
      queue.pop_back();
      for (const Permutation &g : gs[i].generators()) {
        std::vector<Point> u(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) u[j] = g.apply(t[j]);
        if (admissible[i].insert(u).second) {
          if (admissible[i].size() > cap)
            throw TooLarge("extn_enumerate: constraint orbit exceeds the cap");
          queue.push_back(std::move(u));
        }
      }
    }
  }

  std::vector<Permutation> found;
  std::vector<unsigned> pvar(nvars);  // 0-based variable images
  std::iota(pvar.begin(), pvar.end(), 0u);
  std::vector<Point> image;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < domains.size(); ++i) {
      image.assign(domains[i].size(), 0);
      for (std::size_t j = 0; j < domains[i].size(); ++j) {
        Point p = domains[i][j];
        image[j] = p < nvars ? pvar[p] : nvars + pvar[p - nvars];
      }
      ok = admissible[i].count(image) > 0;
    }
    if (!ok) continue;
    std::vector<Point> img(2 * nvars);
    for (unsigned v = 0; v < nvars; ++v) {
      img[v] = pvar[v];
      img[nvars + v] = nvars + pvar[v];
    }
    found.emplace_back(nvars, std::move(img));
  } while (std::next_permutation(pvar.begin(), pvar.end()));
  return found;
}

PermGroup stab_group(const std::vector<std::vector<Literal>> &ks,
                     const std::vector<PermGroup> &gs, unsigned nvars,
                     const GroupOptions &opts) {
  if (ks.size() != gs.size())
    throw Error("stab_group: constraint lists differ in length");
  std::optional<PermGroup> acc;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (gs[i].nvars() != nvars)
      throw Error("stab_group: group acts on the wrong variable count");
    PermGroup r = restriction_factor(ks[i], gs[i], nvars);
    acc = acc ? PermGroup::intersect(*acc, r, opts) : std::move(r);
  }
  if (acc) return *acc;
  std::vector<unsigned> all(nvars);
  std::iota(all.begin(), all.end(), 1u);
  return PermGroup(nvars, signed_symmetry_generators(nvars, all));
}

AugmentedClause resolve_augmented(const AugmentedClause &a,
                                  const AugmentedClause &b,
                                  const std::optional<ResolventWitness> &witness,
                                  const GroupOptions &opts) {
  if (a.nvars() != b.nvars())
    throw Error("resolving augmented clauses over different literal spaces");
  const unsigned n = a.nvars();
  Clause resolvent = resolve_ground(a.base(), b.base());

  PermGroup h1 = witness ? witness->h1 : a.group();
  PermGroup h2 = witness ? witness->h2 : b.group();
  if (witness) {
    if (h1.nvars() != n || h2.nvars() != n ||
        !h1.is_subgroup_of(a.group()) || !h2.is_subgroup_of(b.group()))
      throw Error(
          "resolution witness is not a subgroup pair of the clause groups");
  }

  PermGroup stab = stab_group({a.base().literals(), b.base().literals()},
                              {h1, h2}, n, opts);

  // Stable extensions act freely on variables outside both closures; that
  // factor moves no literal of the resolvent, so drop it. Every trimmed
  // generator still agrees with the originals on the closures.
  std::vector<char> mask = closure_mask(a.base().literals(), h1, n);
  std::vector<char> mask2 = closure_mask(b.base().literals(), h2, n);
  for (std::size_t p = 0; p < mask.size(); ++p)
    mask[p] = mask[p] | mask2[p];
  if (uncovered_vars(mask, n).empty())
    return AugmentedClause(std::move(resolvent), std::move(stab));

  std::vector<Permutation> gens;
  for (const Permutation &g : stab.generators()) {
    Permutation r = masked_restriction(g, mask);
    if (!r.is_identity()) gens.push_back(std::move(r));
  }
  return AugmentedClause(std::move(resolvent), PermGroup(n, std::move(gens)));
}

bool check_resolvent(const AugmentedClause &candidate, const AugmentedClause &a,
                     const AugmentedClause &b, const ResolventWitness &witness) {
  const unsigned n = a.nvars();
  if (b.nvars() != n || candidate.nvars() != n) return false;
  if (witness.h1.nvars() != n || witness.h2.nvars() != n ||
      !witness.h1.is_subgroup_of(a.group()) ||
      !witness.h2.is_subgroup_of(b.group()))
    throw Error(
        "resolution witness is not a subgroup pair of the clause groups");

  Clause expected;
  try {
    expected = resolve_ground(a.base(), b.base());
  } catch (const NotResolvable &) {
    return false;
  }
  if (candidate.base() != expected) return false;

  for (int side = 0; side < 2; ++side) {
    const PermGroup &h = side ? witness.h2 : witness.h1;
    const Clause &c = side ? b.base() : a.base();
    std::vector<Literal> closure = h.closure(c.literals());
    for (const Permutation &w : candidate.group().generators()) {
      std::vector<std::pair<Literal, Literal>> rho;
      rho.reserve(closure.size());
      for (const Literal &l : closure) rho.emplace_back(l, w.apply(l));
      try {
        lift_restriction(h, rho);
      } catch (const NoLift &) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace zap
