#include "zap/solver.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>
#include <utility>

#include "zap/resolution.hpp"

namespace zap {

namespace {

constexpr std::size_t kNeverScanned = static_cast<std::size_t>(-1);
// Past this many trail entries since a clause's last full miss, one search
// from scratch beats a pinned search per entry and base position.
constexpr std::size_t kAnchorLimit = 16;

int unvalued_count(const Clause &c, const AnnotatedAssignment &p) {
  int n = 0;
  for (const Literal &l : c.literals())
    if (!p.values_var(l.var())) ++n;
  return n;
}

bool satisfied(const Clause &c, const AnnotatedAssignment &p) {
  for (const Literal &l : c.literals())
    if (p.contains(l)) return true;
  return false;
}

Literal sole_unvalued(const Clause &c, const AnnotatedAssignment &p) {
  for (const Literal &l : c.literals())
    if (!p.values_var(l.var())) return l;
  throw Error("expected an unvalued literal in " + c.str());
}

// Entry index of the most recently assigned literal; the clause must be
// nonempty and fully valued.
std::size_t deepest_entry(const Clause &c, const AnnotatedAssignment &p) {
  int best = -1;
  for (const Literal &l : c.literals())
    best = std::max(best, p.index_of_var(l.var()));
  return static_cast<std::size_t>(best);
}

std::vector<Point> base_points(const AugmentedClause &ac) {
  std::vector<Point> pts;
  pts.reserve(ac.base().size());
  for (const Literal &l : ac.base().literals())
    pts.push_back(l.point(ac.nvars()));
  return pts;
}

// Points whose literals the assignment falsifies: the only cost-free targets
// any instance search below can take, which is what makes them usable as the
// scarce set for the matching cutoff.
std::vector<Point> falsified_points(const AnnotatedAssignment &p, unsigned n) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out.push_back((-p.entry(i).lit).point(n));
  return out;
}

// Budgeted instance search shared by propagation and relevance testing.
// Satisfied targets are forbidden, falsified ones free, unvalued ones cost
// one unit of budget; budget 0 therefore admits only falsified instances.
std::optional<Permutation> instance_search(const AugmentedClause &ac,
                                           const AnnotatedAssignment &p,
                                           int budget,
                                           std::uint64_t node_cap) {
  std::vector<Point> pts = base_points(ac);
  auto chain = ac.group().chain_with_prefix(pts);
  unsigned n = ac.nvars();
  StabChain::TargetFilter filter = [&](std::size_t, Point t) -> int {
    Literal lt = Literal::from_point(t, n);
    if (p.contains(lt)) return -1;
    return p.falsifies(lt) ? 0 : 1;
  };
  return chain->search_element(pts.size(), filter, budget, node_cap,
                               falsified_points(p, n));
}

std::vector<Point> rotated_front(const std::vector<Point> &pts,
                                 std::size_t j) {
  std::vector<Point> out;
  out.reserve(pts.size());
  out.push_back(pts[j]);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != j) out.push_back(pts[i]);
  return out;
}

// Instance search over images placing the anchor point q at base position j.
// Rebasing the chain so the pinned position comes first reduces its level to
// a single candidate; anchors are freshly falsified points, so the pin is
// free and the budget applies to the remaining positions.
std::optional<Permutation> pinned_search(const AugmentedClause &ac,
                                         const std::vector<Point> &pts,
                                         const AnnotatedAssignment &p,
                                         std::size_t j, Point q, int budget,
                                         std::uint64_t node_cap) {
  auto chain = ac.group().chain_with_prefix(rotated_front(pts, j));
  unsigned n = ac.nvars();
  StabChain::TargetFilter filter = [&](std::size_t level, Point t) -> int {
    if (level == 0) return t == q ? 0 : -1;
    Literal lt = Literal::from_point(t, n);
    if (p.contains(lt)) return -1;
    return p.falsifies(lt) ? 0 : 1;
  };
  return chain->search_element(pts.size(), filter, budget, node_cap,
                               falsified_points(p, n));
}

// Base positions up to symmetry: generators fixing the base as a set act on
// positions, and any image placing a point at some position converts into
// one placing it at the orbit representative with the same instance set, so
// pinned probes only need one position per orbit.
std::vector<std::size_t> pin_representatives(const AugmentedClause &ac,
                                             const std::vector<Point> &pts) {
  std::size_t m = pts.size();
  std::vector<std::size_t> parent(m);
  for (std::size_t i = 0; i < m; ++i) parent[i] = i;
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const Permutation &g : ac.group().generators()) {
    std::vector<std::size_t> image(m);
    bool preserves = true;
    for (std::size_t i = 0; i < m && preserves; ++i) {
      Point q = g.apply(pts[i]);
      auto it = std::find(pts.begin(), pts.end(), q);
      if (it == pts.end())
        preserves = false;
      else
        image[i] = static_cast<std::size_t>(it - pts.begin());
    }
    if (!preserves) continue;
    for (std::size_t i = 0; i < m; ++i) parent[root(i)] = root(image[i]);
  }
  // Least position of each orbit, ascending.
  std::vector<std::size_t> reps;
  std::vector<char> seen(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = root(i);
    if (!seen[r]) {
      seen[r] = 1;
      reps.push_back(i);
    }
  }
  return reps;
}

// Clause plus scan bookkeeping. unit_miss / fals_miss record trail sizes at
// which a full search came up empty and whose prefixes are still intact; an
// instance turning unit (or falsified) after such a point must pick up a
// literal falsified since, so a rescan only needs one pinned search per new
// trail entry and representative base position. Backtracking drops stale
// sizes.
struct Tracked {
  AugmentedClause clause;
  std::vector<std::size_t> reps;
  std::vector<std::size_t> unit_miss;
  std::vector<std::size_t> fals_miss;
  std::optional<Permutation> relevance_hint;

  explicit Tracked(AugmentedClause c) : clause(std::move(c)) {
    reps = pin_representatives(clause, base_points(clause));
  }
};

std::optional<Permutation> scan_query(Tracked &tc,
                                      std::vector<std::size_t> &miss,
                                      const AnnotatedAssignment &p, int budget,
                                      const GroupOptions &opts) {
  std::size_t base = miss.empty() ? kNeverScanned : miss.back();
  std::optional<Permutation> g;
  if (base == p.size()) return std::nullopt;
  std::size_t m = tc.clause.base().size();
  if (m > p.size() + static_cast<std::size_t>(budget)) {
    // Fewer falsified points than the instance would need.
  } else if (base == kNeverScanned || p.size() - base > kAnchorLimit) {
    g = instance_search(tc.clause, p, budget, opts.node_cap);
  } else {
    std::vector<Point> pts = base_points(tc.clause);
    unsigned n = tc.clause.nvars();
    for (std::size_t t = base; t < p.size() && !g; ++t) {
      Point q = (-p.entry(t).lit).point(n);
      for (std::size_t j : tc.reps) {
        g = pinned_search(tc.clause, pts, p, j, q, budget, opts.node_cap);
        if (g) break;
      }
    }
  }
  if (!g && (miss.empty() || miss.back() != p.size()))
    miss.push_back(p.size());
  return g;
}

std::optional<Permutation> fals_query(Tracked &tc,
                                      const AnnotatedAssignment &p,
                                      const GroupOptions &opts) {
  return scan_query(tc, tc.fals_miss, p, 0, opts);
}

std::optional<Permutation> unit_query(Tracked &tc,
                                      const AnnotatedAssignment &p,
                                      const GroupOptions &opts) {
  return scan_query(tc, tc.unit_miss, p, 1, opts);
}

bool all_instances_satisfied(const AugmentedClause &ac,
                             const AnnotatedAssignment &p,
                             std::uint64_t node_cap) {
  std::vector<Point> pts = base_points(ac);
  auto chain = ac.group().chain_with_prefix(pts);
  unsigned n = ac.nvars();
  StabChain::TargetFilter filter = [&](std::size_t, Point t) -> int {
    return p.contains(Literal::from_point(t, n)) ? -1 : 0;
  };
  return !chain->search_element(pts.size(), filter, 0, node_cap).has_value();
}

PropagationResult propagate(const std::vector<Clause> &c0,
                            const std::vector<Clause> &d0,
                            AnnotatedAssignment &p, SolverStats *st) {
  auto find = [&](int want) -> const Clause * {
    for (const std::vector<Clause> *part : {&c0, &d0})
      for (const Clause &c : *part) {
        if (satisfied(c, p)) continue;
        if (unvalued_count(c, p) == want) return &c;
      }
    return nullptr;
  };
  for (;;) {
    // A falsified clause anywhere takes priority over pending units.
    if (const Clause *bad = find(0)) {
      if (bad->empty()) return {Reason::ground(*bad)};
      const Reason &why = p.entry(deepest_entry(*bad, p)).reason;
      return {resolve_reasons(Reason::ground(*bad), why)};
    }
    const Clause *unit = find(1);
    if (!unit) return {};
    p.append(sole_unvalued(*unit, p), Reason::ground(*unit));
    if (st) ++st->propagations;
  }
}

// Conflict analysis for a falsified instance: one resolution step against
// the reason of its most recently assigned literal. Branch reasons leave
// the instance itself as the nogood; the instance keeps the full clause
// group either way.
Reason analyze_conflict(Clause inst, const PermGroup &g,
                        const AnnotatedAssignment &p,
                        const GroupOptions &opts) {
  if (inst.empty())
    return Reason::augmented(std::move(inst), std::make_shared<PermGroup>(g));
  const Reason &why = p.entry(deepest_entry(inst, p)).reason;
  if (why.is_branch())
    return Reason::augmented(std::move(inst), std::make_shared<PermGroup>(g));
  PermGroup wg = why.group ? *why.group : PermGroup::trivial(g.nvars());
  AugmentedClause res =
      resolve_augmented(AugmentedClause(std::move(inst), g),
                        AugmentedClause(why.clause, std::move(wg)),
                        std::nullopt, opts);
  return Reason::augmented(res.base(), std::make_shared<PermGroup>(res.group()));
}

PropagationResult propagate(std::vector<Tracked> &c0, std::vector<Tracked> &d0,
                            AnnotatedAssignment &p, SolverStats *st,
                            const GroupOptions &opts) {
  using Query = std::optional<Permutation> (*)(Tracked &,
                                               const AnnotatedAssignment &,
                                               const GroupOptions &);
  using Hit = std::pair<const AugmentedClause *, Permutation>;
  auto find = [&](Query query) -> std::optional<Hit> {
    for (std::vector<Tracked> *part : {&c0, &d0})
      for (Tracked &tc : *part)
        if (auto g = query(tc, p, opts)) return Hit(&tc.clause, *g);
    return std::nullopt;
  };
  for (;;) {
    // A falsified instance anywhere takes priority over pending units.
    if (auto hit = find(fals_query)) {
      Clause inst = hit->second.apply(hit->first->base());
      return {analyze_conflict(std::move(inst), hit->first->group(), p, opts)};
    }
    auto hit = find(unit_query);
    if (!hit) return {};
    // With no falsified instance anywhere, the hit has exactly one
    // unvalued literal; the instance itself is the reason.
    Clause inst = hit->second.apply(hit->first->base());
    Literal l = sole_unvalued(inst, p);
    p.append(l, Reason::augmented(std::move(inst),
                                  std::make_shared<PermGroup>(
                                      hit->first->group())));
    if (st) ++st->propagations;
  }
}

std::optional<Permutation> relevance_witness(const AugmentedClause &ac,
                                             const AnnotatedAssignment &p,
                                             unsigned k,
                                             std::uint64_t node_cap) {
  // poss(c^g, p) <= k iff at most k+1 literals of c^g are unfalsified.
  std::vector<Point> pts = base_points(ac);
  auto chain = ac.group().chain_with_prefix(pts);
  unsigned n = ac.nvars();
  StabChain::TargetFilter filter = [&](std::size_t, Point t) -> int {
    return p.falsifies(Literal::from_point(t, n)) ? 0 : 1;
  };
  return chain->search_element(pts.size(), filter, static_cast<int>(k) + 1,
                               node_cap, falsified_points(p, n));
}

// Relevance check with a cached witness instance: as long as the last
// witness still has poss at most k, no search runs at all.
bool keep_relevant(Tracked &tc, const AnnotatedAssignment &p, unsigned k,
                   const GroupOptions &opts) {
  const Clause &b = tc.clause.base();
  if (b.size() <= static_cast<std::size_t>(k) + 1) return true;
  if (tc.relevance_hint) {
    if (poss(tc.relevance_hint->apply(b), p) <= static_cast<int>(k))
      return true;
    tc.relevance_hint.reset();
  }
  if (auto w = relevance_witness(tc.clause, p, k, opts.node_cap)) {
    tc.relevance_hint = std::move(w);
    return true;
  }
  return false;
}

std::optional<Literal> pos_unsat_pick(const Clause &c,
                                      const AnnotatedAssignment &p) {
  if (satisfied(c, p)) return std::nullopt;
  for (const Literal &l : c.literals())
    if (l.positive() && !p.values_var(l.var())) return l;
  return std::nullopt;
}

// Earliest base position admitting a positive unvalued literal within some
// unsatisfied instance, smallest admissible image point first. Rebasing the
// chain so the probed position comes first keeps the whole search pinned.
std::optional<Literal> pos_unsat_pick(const AugmentedClause &ac,
                                      const AnnotatedAssignment &p) {
  std::vector<Point> pts = base_points(ac);
  unsigned n = ac.nvars();
  for (std::size_t j : pin_representatives(ac, pts)) {
    auto chain = ac.group().chain_with_prefix(rotated_front(pts, j));
    StabChain::TargetFilter filter = [&](std::size_t level, Point t) -> int {
      Literal lt = Literal::from_point(t, n);
      if (p.contains(lt)) return -1;
      if (level == 0)
        return lt.positive() && !p.values_var(lt.var()) ? 0 : -1;
      return 0;
    };
    if (auto g = chain->search_element(pts.size(), filter, 0))
      return Literal::from_point(g->apply(pts[j]), n);
  }
  return std::nullopt;
}

// Whether some unsatisfied instance of ac contains the (unvalued) point.
bool instance_covers(const AugmentedClause &ac, const AnnotatedAssignment &p,
                     Point pt, std::uint64_t node_cap) {
  std::vector<Point> pts = base_points(ac);
  unsigned n = ac.nvars();
  for (std::size_t j : pin_representatives(ac, pts)) {
    auto chain = ac.group().chain_with_prefix(rotated_front(pts, j));
    StabChain::TargetFilter filter = [&](std::size_t level, Point t) -> int {
      if (level == 0) return t == pt ? 0 : -1;
      return p.contains(Literal::from_point(t, n)) ? -1 : 0;
    };
    if (chain->search_element(pts.size(), filter, 0, node_cap)) return true;
  }
  return false;
}

Literal first_unassigned(const AnnotatedAssignment &p) {
  for (unsigned v = 1; v <= p.nvars(); ++v)
    if (!p.values_var(v)) return Literal(static_cast<int>(v));
  throw NoBranchAvailable("assignment is total");
}

// Branching inside the solver loop. With a seeded generator the PosUnsat
// heuristic draws uniformly from every admissible literal instead of taking
// the first one found.
Literal select_branch(std::vector<Tracked> &c, std::vector<Tracked> &d,
                      const AnnotatedAssignment &p, const SolveOptions &opts,
                      SolverStats &st, std::mt19937_64 *rng) {
  if (p.size() >= p.nvars()) throw NoBranchAvailable("assignment is total");
  if (opts.heuristic == Heuristic::PosUnsat) {
    if (!rng) {
      for (std::vector<Tracked> *part : {&c, &d})
        for (Tracked &tc : *part)
          if (auto l = pos_unsat_pick(tc.clause, p)) return *l;
    } else {
      std::vector<Literal> cand;
      for (unsigned v = 1; v <= p.nvars(); ++v) {
        if (p.values_var(v)) continue;
        Literal l(static_cast<int>(v));
        Point pt = l.point(p.nvars());
        for (std::vector<Tracked> *part : {&c, &d}) {
          bool hit = false;
          for (Tracked &tc : *part)
            if (instance_covers(tc.clause, p, pt, opts.group.node_cap)) {
              cand.push_back(l);
              hit = true;
              break;
            }
          if (hit) break;
        }
      }
      if (!cand.empty()) return cand[(*rng)() % cand.size()];
    }
    ++st.heuristic_fallbacks;
  }
  return first_unassigned(p);
}

Literal select_branch(const std::vector<Clause> &c,
                      const std::vector<Clause> &d,
                      const AnnotatedAssignment &p, const SolveOptions &opts,
                      SolverStats &st, std::mt19937_64 *rng) {
  if (p.size() >= p.nvars()) throw NoBranchAvailable("assignment is total");
  if (opts.heuristic == Heuristic::PosUnsat) {
    if (!rng) {
      for (const std::vector<Clause> *part : {&c, &d})
        for (const Clause &cl : *part)
          if (auto l = pos_unsat_pick(cl, p)) return *l;
    } else {
      std::vector<Literal> cand;
      std::vector<char> seen(p.nvars() + 1, 0);
      for (const std::vector<Clause> *part : {&c, &d})
        for (const Clause &cl : *part) {
          if (satisfied(cl, p)) continue;
          for (const Literal &l : cl.literals())
            if (l.positive() && !p.values_var(l.var()) && !seen[l.var()]) {
              seen[l.var()] = 1;
              cand.push_back(l);
            }
        }
      if (!cand.empty()) {
        std::sort(cand.begin(), cand.end());
        return cand[(*rng)() % cand.size()];
      }
    }
    ++st.heuristic_fallbacks;
  }
  return first_unassigned(p);
}

}  // namespace

std::string SolverStats::str() const {
  std::ostringstream os;
  os << "branches=" << branches << '\n'
     << "propagations=" << propagations << '\n'
     << "conflicts=" << conflicts << '\n'
     << "learned=" << learned << '\n'
     << "purged=" << purged << '\n'
     << "max_learned_db=" << max_learned_db << '\n'
     << "heuristic_fallbacks=" << heuristic_fallbacks << '\n';
  return os.str();
}

PropagationResult unit_propagate_ground(const std::vector<Clause> &db,
                                        AnnotatedAssignment &p,
                                        SolverStats *stats) {
  static const std::vector<Clause> none;
  return propagate(db, none, p, stats);
}

std::optional<Permutation> find_unit_instance(const AugmentedClause &ac,
                                              const AnnotatedAssignment &p) {
  return instance_search(ac, p, 1, GroupOptions().node_cap);
}

PropagationResult unit_propagate_augmented(
    const std::vector<AugmentedClause> &db, AnnotatedAssignment &p,
    SolverStats *stats, const GroupOptions &opts) {
  std::vector<Tracked> c;
  c.reserve(db.size());
  for (const AugmentedClause &ac : db) c.emplace_back(ac);
  std::vector<Tracked> d;
  return propagate(c, d, p, stats, opts);
}

bool has_relevant_instance(const AugmentedClause &ac,
                           const AnnotatedAssignment &p, unsigned k) {
  if (ac.base().size() <= static_cast<std::size_t>(k) + 1) return true;
  return relevance_witness(ac, p, k, GroupOptions().node_cap).has_value();
}

Literal branch_select(const std::vector<AugmentedClause> &c,
                      const std::vector<AugmentedClause> &d,
                      const AnnotatedAssignment &p, Heuristic heuristic,
                      SolverStats *stats) {
  if (p.size() >= p.nvars()) throw NoBranchAvailable("assignment is total");
  if (heuristic == Heuristic::PosUnsat) {
    for (const std::vector<AugmentedClause> *part : {&c, &d})
      for (const AugmentedClause &ac : *part)
        if (auto l = pos_unsat_pick(ac, p)) return *l;
    if (stats) ++stats->heuristic_fallbacks;
  }
  return first_unassigned(p);
}

Literal branch_select(const std::vector<Clause> &c,
                      const std::vector<Clause> &d,
                      const AnnotatedAssignment &p, Heuristic heuristic,
                      SolverStats *stats) {
  if (p.size() >= p.nvars()) throw NoBranchAvailable("assignment is total");
  if (heuristic == Heuristic::PosUnsat) {
    for (const std::vector<Clause> *part : {&c, &d})
      for (const Clause &cl : *part)
        if (auto l = pos_unsat_pick(cl, p)) return *l;
    if (stats) ++stats->heuristic_fallbacks;
  }
  return first_unassigned(p);
}

namespace {

std::vector<Literal> read_model(const AnnotatedAssignment &p) {
  std::vector<Literal> model;
  model.reserve(p.nvars());
  for (unsigned v = 1; v <= p.nvars(); ++v) {
    int s = static_cast<int>(v);
    model.push_back(p.contains(Literal(s)) ? Literal(s) : Literal(-s));
  }
  return model;
}

}  // namespace

SolveResult rbl_solve(const std::vector<Clause> &db, unsigned nvars,
                      const SolveOptions &opts) {
  for (const Clause &c : db)
    if (c.max_var() > nvars)
      throw Error("clause variable out of range: " + c.str());
  AnnotatedAssignment p(nvars);
  std::vector<Clause> learned;
  std::mt19937_64 rng(opts.seed);
  std::mt19937_64 *rp = opts.seed ? &rng : nullptr;
  SolveResult out;
  SolverStats &st = out.stats;
  for (;;) {
    PropagationResult pr = propagate(db, learned, p, &st);
    if (!pr.ok()) {
      ++st.conflicts;
      const Clause &ng = pr.conflict->clause;
      if (ng.empty()) return out;
      while (unvalued_count(ng, p) < 1) p.pop();
      if (std::find(learned.begin(), learned.end(), ng) == learned.end()) {
        learned.push_back(ng);
        ++st.learned;
      }
      std::size_t before = learned.size();
      std::erase_if(learned, [&](const Clause &c) {
        return poss(c, p) > static_cast<int>(opts.k);
      });
      st.purged += before - learned.size();
      st.max_learned_db =
          std::max<std::uint64_t>(st.max_learned_db, learned.size());
      // The nogood is unit after backtracking; assert it right away so the
      // next round propagates from the learned clause instead of
      // rediscovering the same conflict.
      p.append(sole_unvalued(ng, p), *pr.conflict);
      ++st.propagations;
    } else {
      bool solution = true;
      for (const Clause &c : db)
        if (!satisfied(c, p)) {
          solution = false;
          break;
        }
      if (solution) {
        out.sat = true;
        out.model = read_model(p);
        return out;
      }
      p.append(select_branch(db, learned, p, opts, st, rp), Reason::branch());
      ++st.branches;
    }
  }
}

SolveResult rbl_solve(const std::vector<AugmentedClause> &db,
                      const SolveOptions &opts) {
  unsigned nvars = db.empty() ? 0 : db.front().nvars();
  for (const AugmentedClause &ac : db)
    if (ac.nvars() != nvars)
      throw Error("augmented database mixes variable counts");
  AnnotatedAssignment p(nvars);
  std::vector<Tracked> cs;
  cs.reserve(db.size());
  for (const AugmentedClause &ac : db) cs.emplace_back(ac);
  std::vector<Tracked> ds;
  std::mt19937_64 rng(opts.seed);
  std::mt19937_64 *rp = opts.seed ? &rng : nullptr;
  SolveResult out;
  SolverStats &st = out.stats;
  auto drop_stale_misses = [&]() {
    for (std::vector<Tracked> *part : {&cs, &ds})
      for (Tracked &tc : *part)
        for (std::vector<std::size_t> *m : {&tc.unit_miss, &tc.fals_miss})
          while (!m->empty() && m->back() > p.size()) m->pop_back();
  };
  for (;;) {
    PropagationResult pr = propagate(cs, ds, p, &st, opts.group);
    if (!pr.ok()) {
      ++st.conflicts;
      const Reason &cf = *pr.conflict;
      if (cf.clause.empty()) return out;
      while (unvalued_count(cf.clause, p) < 1) p.pop();
      drop_stale_misses();
      bool known = false;
      for (const Tracked &tc : ds)
        if (tc.clause.base() == cf.clause &&
            tc.clause.group().same_group_as(*cf.group)) {
          known = true;
          break;
        }
      if (!known) {
        ds.emplace_back(AugmentedClause(cf.clause, *cf.group));
        // The nogood itself is unit after the backtrack, so the identity
        // witnesses its relevance until the trail moves on.
        ds.back().relevance_hint = Permutation(nvars);
        ++st.learned;
      }
      std::size_t before = ds.size();
      std::erase_if(ds, [&](Tracked &tc) {
        return !keep_relevant(tc, p, opts.k, opts.group);
      });
      st.purged += before - ds.size();
      st.max_learned_db = std::max<std::uint64_t>(st.max_learned_db,
                                                  ds.size());
      p.append(sole_unvalued(cf.clause, p), cf);
      ++st.propagations;
    } else {
      bool solution = true;
      for (const Tracked &tc : cs)
        if (!all_instances_satisfied(tc.clause, p, opts.group.node_cap)) {
          solution = false;
          break;
        }
      if (solution) {
        out.sat = true;
        out.model = read_model(p);
        return out;
      }
      p.append(select_branch(cs, ds, p, opts, st, rp), Reason::branch());
      ++st.branches;
    }
  }
}

}  // namespace zap
