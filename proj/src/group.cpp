#include "zap/group.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <tuple>
#include <unordered_set>

#include "zap/errors.hpp"

namespace zap {

std::string uint128_str(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

// Exact product of the factors in decimal, via base-1e9 limbs.
std::string product_decimal(const std::vector<std::uint64_t> &factors) {
  std::vector<std::uint64_t> limbs{1};
  for (std::uint64_t f : factors) {
    std::uint64_t carry = 0;
    for (auto &limb : limbs) {
      uint128 cur = static_cast<uint128>(limb) * f + carry;
      limb = static_cast<std::uint64_t>(cur % 1000000000u);
      carry = static_cast<std::uint64_t>(cur / 1000000000u);
    }
    while (carry) {
      limbs.push_back(carry % 1000000000u);
      carry /= 1000000000u;
    }
  }
  std::string s = std::to_string(limbs.back());
  for (std::size_t i = limbs.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

// Keeps each element that enlarges the group generated by those kept so far.
std::vector<Permutation> sift_filter(unsigned nvars,
                                     const std::vector<Permutation> &elems) {
  std::vector<Permutation> kept;
  auto chain = std::make_unique<StabChain>(nvars, kept);
  for (const auto &e : elems) {
    if (e.is_identity() || chain->contains(e)) continue;
    kept.push_back(e);
    chain = std::make_unique<StabChain>(nvars, kept);
  }
  return kept;
}

}  // namespace

StabChain::StabChain(unsigned nvars, const std::vector<Permutation> &gens,
                     const std::vector<Point> &prescribed_base)
    : nvars_(nvars) {
  std::vector<char> used(2 * nvars, 0);
  for (Point b : prescribed_base) {
    if (b >= 2 * nvars) throw Error("base point out of range");
    if (!used[b]) {
      used[b] = 1;
      append_level(b);
    }
  }
  for (const auto &g : gens) {
    if (g.nvars() != nvars) throw Error("generator degree mismatch");
    if (!g.is_identity()) place_gen(g);
  }
  // Bottom-up Schreier closure. When a residue enlarges a deeper stabilizer
  // the work jumps down to that level, so sifting at any level only ever
  // runs against an already complete subchain below it and residues are
  // never spurious.
  for (int i = static_cast<int>(levels_.size()) - 1; i >= 0;) {
    auto jump = process_level(static_cast<std::size_t>(i));
    if (jump)
      i = static_cast<int>(*jump);
    else
      --i;
  }
}

void StabChain::append_level(Point b) {
  Level lv;
  lv.base = b;
  lv.orbit = {b};
  lv.orbit_pos.assign(2 * nvars_, -1);
  lv.orbit_pos[b] = 0;
  lv.transversal = {Permutation(nvars_)};
  lv.transversal_inv = {Permutation(nvars_)};
  lv.expanded.assign(sgens_.size(), 0);
  lv.checked.assign(sgens_.size(), 0);
  levels_.push_back(std::move(lv));
}

// Registers a strong generator at the deepest level whose base prefix it
// fixes, creating a fresh level when it fixes every current base point.
std::size_t StabChain::place_gen(Permutation g) {
  std::size_t at = levels_.size();
  for (std::size_t l = 0; l < levels_.size(); ++l)
    if (g.apply(levels_[l].base) != levels_[l].base) {
      at = l;
      break;
    }
  if (at == levels_.size()) append_level(g.support().front());
  sgens_.push_back(std::move(g));
  sgen_level_.push_back(at);
  for (auto &lv : levels_) {
    lv.expanded.resize(sgens_.size(), 0);
    lv.checked.resize(sgens_.size(), 0);
  }
  return at;
}

void StabChain::expand_orbit(std::size_t level) {
  Level &lv = levels_[level];
  bool more = true;
  while (more) {
    more = false;
    for (std::size_t k = 0; k < sgens_.size(); ++k) {
      if (sgen_level_[k] < level) continue;
      const Permutation &s = sgens_[k];
      std::size_t rows = lv.orbit.size();
      for (std::size_t r = lv.expanded[k]; r < rows; ++r) {
        Point q = s.apply(lv.orbit[r]);
        if (lv.orbit_pos[q] < 0) {
          lv.orbit_pos[q] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(compose(lv.transversal[r], s));
          lv.transversal_inv.push_back(lv.transversal.back().inverse());
        }
      }
      lv.expanded[k] = rows;
      if (lv.orbit.size() > rows) more = true;
    }
  }
}

// Sifts the outstanding Schreier generators of one level. Returns the level
// a genuinely new residue was placed at, or nothing once the level is fully
// checked. Watermarks make re-entry after a jump cheap.
std::optional<std::size_t> StabChain::process_level(std::size_t level) {
  expand_orbit(level);
  for (std::size_t k = 0; k < sgens_.size(); ++k) {
    if (sgen_level_[k] < level) continue;
    for (std::size_t r = levels_[level].checked[k];
         r < levels_[level].orbit.size(); ++r) {
      // levels_ may reallocate when a residue creates a new level, so
      // re-index instead of holding references across place_gen
      const Permutation &s = sgens_[k];
      Point q = s.apply(levels_[level].orbit[r]);
      int qi = levels_[level].orbit_pos[q];
      Permutation w = compose(compose(levels_[level].transversal[r], s),
                              levels_[level].transversal_inv[qi]);
      levels_[level].checked[k] = r + 1;
      if (w.is_identity()) continue;
      auto [res, at] = sift_from(level + 1, std::move(w));
      (void)at;
      if (!res.is_identity()) return place_gen(std::move(res));
    }
  }
  return std::nullopt;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto &lv : levels_) b.push_back(lv.base);
  return b;
}

uint128 StabChain::order() const {
  uint128 o = 1;
  for (const auto &lv : levels_) {
    uint128 s = lv.orbit.size();
    if (o > static_cast<uint128>(-1) / s) return static_cast<uint128>(-1);
    o *= s;
  }
  return o;
}

std::pair<Permutation, std::size_t> StabChain::sift_from(std::size_t level,
                                                         Permutation g) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const Level &lv = levels_[l];
    int idx = lv.orbit_pos[g.apply(lv.base)];
    if (idx < 0) return {std::move(g), l};
    g = compose(g, lv.transversal_inv[idx]);
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation &g) const {
  if (g.nvars() != nvars_) return false;
  return sift_from(0, g).first.is_identity();
}

std::vector<Permutation> StabChain::strong_generators() const {
  return stabilizer_generators(0);
}

std::vector<Permutation> StabChain::stabilizer_generators(
    std::size_t prefix) const {
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < sgens_.size(); ++k)
    if (sgen_level_[k] >= prefix) out.push_back(sgens_[k]);
  return out;
}

Permutation StabChain::random_element(std::mt19937_64 &rng) const {
  Permutation g(nvars_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0,
                                                    levels_[l].orbit.size() - 1);
    g = compose(g, levels_[l].transversal[pick(rng)]);
  }
  return g;
}

std::vector<Permutation> StabChain::enumerate_elements(
    std::uint64_t cap) const {
  if (order() > cap)
    throw TooManyInstances("group order exceeds enumeration cap " +
                           std::to_string(cap));
  std::vector<Permutation> out{Permutation(nvars_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].orbit.size());
    for (const auto &e : out)
      for (const auto &u : levels_[l].transversal) next.push_back(compose(e, u));
    out = std::move(next);
  }
  return out;
}

const std::vector<std::vector<int>> &StabChain::point_orbit_ids() const {
  std::call_once(orbit_ids_once_, [&] {
    orbit_ids_.resize(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      auto &ids = orbit_ids_[l];
      ids.assign(2 * nvars_, -1);
      int next = 0;
      for (Point s = 0; s < 2 * nvars_; ++s) {
        if (ids[s] >= 0) continue;
        ids[s] = next;
        std::vector<Point> work{s};
        while (!work.empty()) {
          Point a = work.back();
          work.pop_back();
          for (std::size_t k = 0; k < sgens_.size(); ++k) {
            if (sgen_level_[k] < l) continue;
            Point b = sgens_[k].apply(a);
            if (ids[b] < 0) {
              ids[b] = next;
              work.push_back(b);
            }
          }
        }
        ++next;
      }
    }
  });
  return orbit_ids_;
}

std::optional<Permutation> StabChain::search_element(
    std::size_t constrained, const TargetFilter &filter, int budget,
    std::uint64_t node_cap, const std::vector<Point> &scarce) const {
  assert(constrained <= levels_.size());
  const bool matching = !scarce.empty();
  std::vector<char> scarce_mask, used;
  std::vector<std::vector<std::pair<int, int>>> need;  // level -> (orbit, n)
  std::vector<int> supply, touched;
  if (matching) {
    const auto &ids = point_orbit_ids();
    scarce_mask.assign(2 * nvars_, 0);
    for (Point q : scarce) scarce_mask[q] = 1;
    used.assign(2 * nvars_, 0);
    need.resize(constrained);
    for (std::size_t l = 0; l < constrained; ++l) {
      std::vector<int> cnt(2 * nvars_, 0);
      for (std::size_t j = l; j < constrained; ++j)
        ++cnt[ids[l][levels_[j].base]];
      for (std::size_t o = 0; o < cnt.size(); ++o)
        if (cnt[o]) need[l].emplace_back(static_cast<int>(o), cnt[o]);
    }
    supply.assign(2 * nvars_, 0);
  }
  std::uint64_t nodes = 0;
  std::function<std::optional<Permutation>(std::size_t, const Permutation &,
                                           const Permutation &, int)>
      go = [&](std::size_t level, const Permutation &pp,
               const Permutation &ppinv, int left) -> std::optional<Permutation> {
    if (level >= constrained) return pp;
    if (++nodes > node_cap)
      throw SearchBudgetExceeded("element search exceeded " +
                                 std::to_string(node_cap) + " nodes");
    if (matching) {
      // Positions the budget cannot excuse must each take a distinct unused
      // scarce point from their own stabilizer orbit; bound that matching by
      // orbit counts and give up if it cannot reach.
      int required = static_cast<int>(constrained - level) - left;
      if (required > 0) {
        const auto &ids = point_orbit_ids()[level];
        touched.clear();
        for (Point q : scarce)
          if (!used[q]) {
            int o = ids[ppinv.apply(q)];
            if (!supply[o]) touched.push_back(o);
            ++supply[o];
          }
        int cover = 0;
        for (auto [o, cnt] : need[level]) cover += std::min(cnt, supply[o]);
        for (int o : touched) supply[o] = 0;
        if (cover < required) return std::nullopt;
      }
    }
    const Level &lv = levels_[level];
    // Admission first: most candidates fail the filter, so sorting only the
    // admitted ones keeps the per-node cost near the admitted count.
    std::vector<std::tuple<Point, int, int>> cands;  // (target, idx, cost)
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point target = pp.apply(lv.orbit[i]);
      int cost = filter(level, target);
      if (cost < 0 || cost > left) continue;
      cands.emplace_back(target, static_cast<int>(i), cost);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [target, idx, cost] : cands) {
      bool consume = matching && cost == 0 && scarce_mask[target];
      if (consume) used[target] = 1;
      std::optional<Permutation> hit;
      if (matching)
        hit = go(level + 1, compose(lv.transversal[idx], pp),
                 compose(ppinv, lv.transversal_inv[idx]), left - cost);
      else
        hit = go(level + 1, compose(lv.transversal[idx], pp), ppinv, left - cost);
      if (consume) used[target] = 0;
      if (hit) return hit;
    }
    return std::nullopt;
  };
  Permutation id(nvars_);
  return go(0, id, id, budget);
}

namespace {

// Callback surface for the subgroup backtrack: per-level target admission
// plus a full-element test at the leaves. Pushes and pops arrive strictly
// stack-wise.
struct SubgroupClient {
  virtual ~SubgroupClient() = default;
  virtual bool push(std::size_t level, Point target) = 0;
  virtual void pop(std::size_t level) = 0;
  virtual bool accept(const Permutation &leaf) = 0;
};

// Backtrack search for a subgroup X of the chain's group, where membership is
// what the client admits. Found generators are accumulated into a known
// subgroup K used two ways: on all-basepoint spine prefixes only the minimal
// point of each K-stabilizer orbit is explored, and once a branch that left
// the spine yields an element the search resumes at the level where the
// branch forked off, since the rest of that subtree generates nothing K and
// the spine do not already cover.
std::vector<Permutation> subgroup_backtrack(unsigned nvars,
                                            const StabChain &chain,
                                            SubgroupClient &client,
                                            std::uint64_t node_cap) {
  std::vector<Permutation> found;
  const std::vector<Point> base = chain.base();
  const std::size_t depth = chain.levels().size();
  auto known = std::make_unique<StabChain>(nvars, found, base);
  std::vector<std::vector<Point>> orbit_min;  // [level][point] under K^(level)
  auto refresh_orbit_min = [&]() {
    orbit_min.assign(depth, std::vector<Point>(2 * nvars));
    for (std::size_t lev = 0; lev < depth; ++lev) {
      const auto gens = known->stabilizer_generators(lev);
      std::vector<char> seen(2 * nvars, 0);
      for (Point p = 0; p < 2 * nvars; ++p) {
        if (seen[p]) continue;
        std::vector<Point> comp{p};
        seen[p] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (const auto &s : gens) {
            Point q = s.apply(comp[i]);
            if (!seen[q]) {
              seen[q] = 1;
              comp.push_back(q);
            }
          }
        for (Point q : comp) orbit_min[lev][q] = p;
      }
    }
  };
  refresh_orbit_min();

  std::uint64_t nodes = 0;
  // Returns the level at which exploration should resume.
  std::function<std::size_t(std::size_t, const Permutation &, std::size_t)> go =
      [&](std::size_t level, const Permutation &pp,
          std::size_t spine) -> std::size_t {
    if (++nodes > node_cap)
      throw SearchBudgetExceeded("subgroup search exceeded " +
                                 std::to_string(node_cap) + " nodes");
    if (level == depth) {
      if (!pp.is_identity() && client.accept(pp) && !known->contains(pp)) {
        found.push_back(pp);
        known = std::make_unique<StabChain>(nvars, found, base);
        refresh_orbit_min();
        return spine;
      }
      return level;
    }
    const auto &lv = chain.levels()[level];
    std::vector<std::pair<Point, int>> cands;
    cands.reserve(lv.orbit.size());
    for (std::size_t i = 0; i < lv.orbit.size(); ++i)
      cands.emplace_back(pp.apply(lv.orbit[i]), static_cast<int>(i));
    std::sort(cands.begin(), cands.end());
    const bool on_spine = (spine == level);
    for (auto [target, idx] : cands) {
      if (on_spine && orbit_min[level][target] < target) continue;
      if (!client.push(level, target)) continue;
      std::size_t next_spine =
          (on_spine && target == lv.base) ? spine + 1 : spine;
      std::size_t resume =
          go(level + 1, compose(lv.transversal[idx], pp), next_spine);
      client.pop(level);
      if (resume < level) return resume;
    }
    return level;
  };
  go(0, Permutation(nvars), 0);
  return found;
}

struct SetStabClient final : SubgroupClient {
  std::size_t constrained;
  const std::vector<char> &mask;
  SetStabClient(std::size_t c, const std::vector<char> &m)
      : constrained(c), mask(m) {}
  bool push(std::size_t level, Point target) override {
    return level >= constrained || mask[target];
  }
  void pop(std::size_t) override {}
  bool accept(const Permutation &) override { return true; }
};

// Mirrors the descent in a second chain sharing the same base; a leaf is in
// the intersection exactly when both partial products agree.
struct IntersectClient final : SubgroupClient {
  const StabChain &other;
  std::vector<std::pair<Permutation, Permutation>> stack;  // (pp2, pp2^-1)
  explicit IntersectClient(const StabChain &o, unsigned nvars) : other(o) {
    stack.emplace_back(Permutation(nvars), Permutation(nvars));
  }
  bool push(std::size_t level, Point target) override {
    const auto &lv = other.levels()[level];
    const auto &[pp2, pp2inv] = stack.back();
    int idx = lv.orbit_pos[pp2inv.apply(target)];
    if (idx < 0) return false;
    stack.emplace_back(compose(lv.transversal[idx], pp2),
                       compose(pp2inv, lv.transversal_inv[idx]));
    return true;
  }
  void pop(std::size_t) override { stack.pop_back(); }
  bool accept(const Permutation &leaf) override {
    return leaf == stack.back().first;
  }
};

}  // namespace

struct PermGroup::Impl {
  unsigned nvars = 0;
  std::vector<Permutation> gens;
  mutable std::mutex mu;
  mutable std::shared_ptr<const StabChain> natural;
  mutable std::map<std::vector<Point>, std::shared_ptr<const StabChain>>
      prefixed;
};

PermGroup PermGroup::trivial(unsigned nvars) { return PermGroup(nvars, {}); }

PermGroup::PermGroup(unsigned nvars, std::vector<Permutation> generators) {
  for (const auto &g : generators) {
    if (g.nvars() != nvars) throw Error("generator degree mismatch");
    if (!g.sign_respecting())
      throw WnConflict("generator does not respect negation: " +
                       format_cycles(g));
  }
  impl_ = std::make_shared<Impl>();
  impl_->nvars = nvars;
  impl_->gens = std::move(generators);
}

unsigned PermGroup::nvars() const { return impl_->nvars; }

const std::vector<Permutation> &PermGroup::generators() const {
  return impl_->gens;
}

std::shared_ptr<const StabChain> PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->natural)
    impl_->natural =
        std::make_shared<const StabChain>(impl_->nvars, impl_->gens);
  return impl_->natural;
}

std::shared_ptr<const StabChain> PermGroup::chain_with_prefix(
    const std::vector<Point> &prefix) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->prefixed.find(prefix);
  if (it != impl_->prefixed.end()) return it->second;
  auto ch =
      std::make_shared<const StabChain>(impl_->nvars, impl_->gens, prefix);
  impl_->prefixed.emplace(prefix, ch);
  return ch;
}

uint128 PermGroup::order() const { return chain()->order(); }

std::string PermGroup::order_str() const {
  std::vector<std::uint64_t> factors;
  for (const auto &lv : chain()->levels()) factors.push_back(lv.orbit.size());
  return product_decimal(factors);
}

bool PermGroup::contains(const Permutation &g) const {
  return chain()->contains(g);
}

std::vector<Literal> PermGroup::orbit(Literal x) const {
  return closure({x});
}

std::vector<Literal> PermGroup::closure(const std::vector<Literal> &xs) const {
  unsigned nv = nvars();
  std::vector<char> seen(2 * nv, 0);
  std::vector<Point> work;
  for (Literal l : xs) {
    Point p = l.point(nv);
    if (!seen[p]) {
      seen[p] = 1;
      work.push_back(p);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto &g : impl_->gens) {
      Point q = g.apply(work[i]);
      if (!seen[q]) {
        seen[q] = 1;
        work.push_back(q);
      }
    }
  std::vector<Literal> out;
  out.reserve(work.size());
  for (Point p : work) out.push_back(Literal::from_point(p, nv));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Literal>> PermGroup::orbit_partition() const {
  unsigned nv = nvars();
  std::vector<char> seen(2 * nv, 0);
  std::vector<std::vector<Literal>> out;
  for (Point p = 0; p < 2 * nv; ++p) {
    if (seen[p]) continue;
    std::vector<Point> comp{p};
    seen[p] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto &g : impl_->gens) {
        Point q = g.apply(comp[i]);
        if (!seen[q]) {
          seen[q] = 1;
          comp.push_back(q);
        }
      }
    std::vector<Literal> lits;
    lits.reserve(comp.size());
    for (Point q : comp) lits.push_back(Literal::from_point(q, nv));
    std::sort(lits.begin(), lits.end());
    out.push_back(std::move(lits));
  }
  return out;
}

PermGroup PermGroup::pointwise_stabilizer(
    const std::vector<Literal> &pts) const {
  unsigned nv = nvars();
  std::vector<Point> prefix;
  for (Literal l : pts) prefix.push_back(l.point(nv));
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  auto ch = chain_with_prefix(prefix);
  return PermGroup(nv, ch->stabilizer_generators(prefix.size()));
}

PermGroup PermGroup::set_stabilizer(const std::vector<Literal> &set,
                                    const GroupOptions &opts) const {
  unsigned nv = nvars();
  std::vector<Point> pts;
  for (Literal l : set) pts.push_back(l.point(nv));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<char> mask(2 * nv, 0);
  for (Point p : pts) mask[p] = 1;
  if (order() <= opts.enum_threshold) {
    std::vector<Permutation> keep;
    for (const auto &e : chain()->enumerate_elements(opts.enum_threshold)) {
      if (e.is_identity()) continue;
      bool ok = true;
      for (Point p : pts)
        if (!mask[e.apply(p)]) {
          ok = false;
          break;
        }
      if (ok) keep.push_back(e);
    }
    return PermGroup(nv, sift_filter(nv, keep));
  }
  auto ch = chain_with_prefix(pts);
  SetStabClient client(pts.size(), mask);
  return PermGroup(nv, subgroup_backtrack(nv, *ch, client, opts.node_cap));
}

PermGroup PermGroup::intersect(const PermGroup &a, const PermGroup &b,
                               const GroupOptions &opts) {
  if (a.nvars() != b.nvars()) throw Error("intersect: degree mismatch");
  unsigned nv = a.nvars();
  if (a.impl_ == b.impl_) return a;
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  const PermGroup &small = a.order() <= b.order() ? a : b;
  const PermGroup &large = a.order() <= b.order() ? b : a;
  if (small.order() <= opts.enum_threshold) {
    std::vector<Permutation> keep;
    for (const auto &e : small.chain()->enumerate_elements(opts.enum_threshold))
      if (!e.is_identity() && large.contains(e)) keep.push_back(e);
    return PermGroup(nv, sift_filter(nv, keep));
  }
  auto base1 = a.chain()->base();
  auto bchain = std::make_shared<const StabChain>(nv, b.generators(), base1);
  auto achain =
      std::make_shared<const StabChain>(nv, a.generators(), bchain->base());
  IntersectClient client(*bchain, nv);
  return PermGroup(nv, subgroup_backtrack(nv, *achain, client, opts.node_cap));
}

std::vector<Permutation> PermGroup::reduced_generators() const {
  return sift_filter(nvars(), impl_->gens);
}

Permutation PermGroup::random_element(std::mt19937_64 &rng) const {
  return chain()->random_element(rng);
}

std::vector<Permutation> PermGroup::enumerate_elements(
    std::uint64_t cap) const {
  return chain()->enumerate_elements(cap);
}

bool PermGroup::is_subgroup_of(const PermGroup &other) const {
  for (const auto &g : impl_->gens)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup &other) const {
  return is_subgroup_of(other) && other.is_subgroup_of(*this);
}

std::vector<Clause> clause_orbit(const Clause &c, const PermGroup &g,
                                 std::uint64_t cap) {
  std::unordered_set<Clause, ClauseHash> seen{c};
  std::vector<Clause> work{c};
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto &s : g.generators()) {
      Clause img = s.apply(work[i]);
      if (seen.insert(img).second) {
        if (seen.size() > cap)
          throw TooManyInstances("clause orbit exceeds cap " +
                                 std::to_string(cap));
        work.push_back(std::move(img));
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

Permutation lift_restriction(
    const PermGroup &g,
    const std::vector<std::pair<Literal, Literal>> &rho) {
  unsigned nv = g.nvars();
  std::vector<int> target(2 * nv, -1);
  std::vector<Point> domain;
  for (const auto &[from, to] : rho) {
    Point p = from.point(nv);
    Point q = to.point(nv);
    if (target[p] >= 0) {
      if (target[p] != static_cast<int>(q))
        throw NoLift("restriction maps " + from.str() + " two ways");
      continue;
    }
    target[p] = static_cast<int>(q);
    domain.push_back(p);
  }
  auto ch = g.chain_with_prefix(domain);
  auto hit = ch->search_element(
      domain.size(),
      [&](std::size_t level, Point t) {
        return t == static_cast<Point>(target[domain[level]]) ? 0 : -1;
      },
      0);
  if (!hit) throw NoLift("no group element extends the restriction");
  return *hit;
}

PermGroup shrink_to_transitive(const PermGroup &g, const Clause &c, double eps,
                               std::mt19937_64 &rng,
                               const ShrinkOptions &opts) {
  if (!(eps > 0.0 && eps < 1.0))
    throw BadThreshold("eps must lie strictly between 0 and 1");
  unsigned nv = g.nvars();
  std::uint64_t d = clause_orbit(c, g, opts.orbit_cap).size();
  if (d <= 1) return PermGroup::trivial(nv);
  double raw = std::log(static_cast<double>(d) / eps) / std::log(4.0 / 3.0);
  auto draws = static_cast<std::uint64_t>(
      std::ceil(opts.draw_multiplier * raw));
  if (draws < 1) draws = 1;
  auto ch = g.chain();
  std::vector<Permutation> sample;
  sample.reserve(draws);
  for (std::uint64_t i = 0; i < draws; ++i)
    sample.push_back(ch->random_element(rng));
  PermGroup h(nv, sift_filter(nv, sample));
  if (opts.verify) {
    std::uint64_t dh = clause_orbit(c, h, opts.orbit_cap).size();
    if (dh != d)
      throw InstanceCountMismatch("shrunk subgroup reaches " +
                                  std::to_string(dh) + " of " +
                                  std::to_string(d) + " instances");
  }
  return h;
}

std::vector<Permutation> signed_symmetry_generators(
    unsigned nvars, const std::vector<unsigned> &vars) {
  std::vector<Permutation> out;
  if (vars.empty()) return out;
  if (vars.size() >= 2) out.push_back(var_transposition(nvars, vars[0], vars[1]));
  if (vars.size() >= 3)
    out.push_back(
        var_cycle(nvars, std::vector<unsigned>(vars.begin() + 1, vars.end())));
  out.push_back(var_flip(nvars, vars[0]));
  return out;
}

}  // namespace zap
