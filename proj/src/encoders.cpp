#include "zap/encoders.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace zap {

namespace {

constexpr unsigned kAtomBudget = 10'000;

unsigned ambient_nvars(const std::vector<unsigned> &vars, unsigned nvars) {
  unsigned need = 0;
  for (unsigned v : vars) {
    if (v == 0) throw Error("variables are numbered from 1");
    need = std::max(need, v);
  }
  if (nvars == 0) return need;
  if (nvars < need) throw Error("variable outside the declared space");
  return nvars;
}

void require_distinct(const std::vector<unsigned> &vars) {
  std::set<unsigned> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size())
    throw Error("variable list contains a duplicate");
}

// Lifts a permutation of variables (1-based image array) to literal points.
Permutation perm_from_var_map(unsigned nvars,
                              const std::vector<unsigned> &img) {
  std::vector<Point> pts(2 * nvars);
  for (unsigned v = 1; v <= nvars; ++v) {
    pts[v - 1] = img[v] - 1;
    pts[nvars + v - 1] = nvars + img[v] - 1;
  }
  return Permutation(nvars, std::move(pts));
}

std::vector<unsigned> identity_var_map(unsigned nvars) {
  std::vector<unsigned> img(nvars + 1);
  for (unsigned v = 1; v <= nvars; ++v) img[v] = v;
  return img;
}

}  // namespace

Encoded encode_cardinality(const std::vector<unsigned> &vars, unsigned k,
                           unsigned nvars) {
  unsigned m = static_cast<unsigned>(vars.size());
  if (k < 1 || k > m)
    throw BadThreshold("threshold must satisfy 1 <= k <= " +
                       std::to_string(m));
  require_distinct(vars);
  unsigned n = ambient_nvars(vars, nvars);
  std::vector<Literal> lits;
  for (unsigned i = 0; i + k <= m; ++i)
    lits.emplace_back(static_cast<int>(vars[i]));
  std::vector<Permutation> gens;
  if (m >= 2) {
    gens.push_back(var_transposition(n, vars[0], vars[1]));
    gens.push_back(
        var_cycle(n, std::vector<unsigned>(vars.begin() + 1, vars.end())));
  }
  return Encoded{AugmentedClause(Clause(std::move(lits)), PermGroup(n, gens)),
                 2, m + 1};
}

Encoded encode_parity(const ParityConstraint &c, unsigned nvars,
                      bool compact) {
  if (c.vars.empty()) throw Error("parity constraint over no variables");
  std::vector<unsigned> vars = c.vars;
  std::sort(vars.begin(), vars.end());
  require_distinct(vars);
  unsigned n = ambient_nvars(vars, nvars);
  unsigned k = static_cast<unsigned>(vars.size());
  std::vector<Literal> lits;
  lits.emplace_back(c.rhs ? static_cast<int>(vars[0])
                          : -static_cast<int>(vars[0]));
  for (unsigned i = 1; i < k; ++i) lits.emplace_back(static_cast<int>(vars[i]));
  auto flip_pair = [&](unsigned a, unsigned b) {
    return compose(var_flip(n, a), var_flip(n, b));
  };
  std::vector<Permutation> gens;
  if (k >= 2) {
    if (compact) {
      gens.push_back(flip_pair(vars[0], vars[1]));
      gens.push_back(var_transposition(n, vars[0], vars[1]));
      gens.push_back(
          var_cycle(n, std::vector<unsigned>(vars.begin() + 1, vars.end())));
    } else {
      for (unsigned i = 1; i < k; ++i)
        gens.push_back(flip_pair(vars[0], vars[i]));
    }
  }
  unsigned count = k < 2 ? 0 : (compact ? 3 : k - 1);
  unsigned size = k < 2 ? 0 : (compact ? k + 5 : 4 * (k - 1));
  return Encoded{AugmentedClause(Clause(std::move(lits)), PermGroup(n, gens)),
                 count, size};
}

unsigned QpropTheory::atom(const std::string &relation,
                           const std::vector<unsigned> &args) const {
  for (const QpropRelation &r : relations) {
    if (r.name != relation) continue;
    if (args.size() != r.domain_sizes.size())
      throw Error("wrong arity for relation " + relation);
    unsigned idx = 0;
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (args[j] >= r.domain_sizes[j])
        throw DomainTooSmall("argument outside the domain of " + relation);
      idx = idx * r.domain_sizes[j] + args[j];
    }
    return r.first_var + idx;
  }
  throw Error("unknown relation " + relation);
}

QpropTheory encode_qprop_theory(const std::vector<QuantifiedClause> &qs) {
  // Slot domains: a slot may host at most one distinct variable per clause,
  // and variable domains for the same slot must agree across clauses;
  // constants only need to fit.
  struct Slot {
    unsigned var_size = 0;   // 0 until a variable fixes the slot's domain
    unsigned const_min = 0;  // 1 + largest constant seen
  };
  struct Rel {
    std::string name;
    std::vector<Slot> slots;
  };
  std::vector<Rel> rels;
  auto rel_index = [&](const std::string &name, std::size_t arity) {
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (rels[i].name == name) {
        if (rels[i].slots.size() != arity)
          throw Error("relation " + name + " used with two arities");
        return i;
      }
    rels.push_back(Rel{name, std::vector<Slot>(arity)});
    return rels.size() - 1;
  };
  for (const QuantifiedClause &q : qs) {
    std::map<std::string, unsigned> domain;
    for (const auto &[name, size] : q.variables) {
      if (size == 0) throw DomainTooSmall("empty domain for " + name);
      if (!domain.emplace(name, size).second)
        throw Error("variable " + name + " declared twice");
    }
    std::set<std::string> used;
    if (q.literals.empty()) throw Error("quantified clause with no literals");
    for (const QpropLiteral &lit : q.literals) {
      std::size_t r = rel_index(lit.relation, lit.args.size());
      std::set<std::string> in_literal;
      for (std::size_t j = 0; j < lit.args.size(); ++j) {
        const QpropArg &a = lit.args[j];
        Slot &slot = rels[r].slots[j];
        if (a.is_var) {
          auto it = domain.find(a.var);
          if (it == domain.end())
            throw Error("undeclared variable " + a.var);
          if (!in_literal.insert(a.var).second)
            throw Error("variable " + a.var +
                        " repeated within one literal of " + lit.relation);
          if (slot.var_size != 0 && slot.var_size != it->second)
            throw Error("conflicting domains for an argument of " +
                        lit.relation);
          slot.var_size = it->second;
          used.insert(a.var);
        } else {
          slot.const_min = std::max(slot.const_min, a.index + 1);
        }
      }
    }
    for (const auto &[name, size] : q.variables)
      if (!used.count(name)) throw Error("variable " + name + " never used");
  }

  QpropTheory out;
  unsigned next = 1;
  for (const Rel &r : rels) {
    QpropRelation pr{r.name, next, {}};
    unsigned block = 1;
    for (const Slot &s : r.slots) {
      if (s.var_size != 0 && s.const_min > s.var_size)
        throw DomainTooSmall("constant outside an argument domain of " +
                             r.name);
      unsigned size = s.var_size != 0 ? s.var_size : s.const_min;
      if (size == 0)
        throw DomainTooSmall("argument of " + r.name + " never constrained");
      pr.domain_sizes.push_back(size);
      block *= size;
    }
    if (next - 1 + block > kAtomBudget)
      throw TooLarge("ground atom count exceeds " +
                     std::to_string(kAtomBudget));
    next += block;
    out.relations.push_back(std::move(pr));
  }
  out.nvars = next - 1;

  for (const QuantifiedClause &q : qs) {
    std::map<std::string, unsigned> domain(q.variables.begin(),
                                           q.variables.end());
    // Slots each variable occupies, per relation, for this clause's action.
    std::map<std::string, std::map<std::string, std::set<std::size_t>>> where;
    for (const QpropLiteral &lit : q.literals)
      for (std::size_t j = 0; j < lit.args.size(); ++j)
        if (lit.args[j].is_var) {
          auto &vars_here = where[lit.args[j].var];
          auto &slots = vars_here[lit.relation];
          slots.insert(j);
          for (const auto &[other, other_slots] : where)
            if (other != lit.args[j].var &&
                other_slots.count(lit.relation) &&
                other_slots.at(lit.relation).count(j))
              throw Error("two variables share an argument slot of " +
                          lit.relation);
        }

    std::vector<Literal> lits;
    for (const QpropLiteral &lit : q.literals) {
      std::vector<unsigned> args;
      for (const QpropArg &a : lit.args) args.push_back(a.is_var ? 0 : a.index);
      unsigned v = out.atom(lit.relation, args);
      lits.emplace_back(lit.positive ? static_cast<int>(v)
                                     : -static_cast<int>(v));
    }

    // rho image of a domain permutation: move the variable's slots of every
    // atom of every relation it occupies.
    auto rho = [&](const std::string &var,
                   const std::vector<unsigned> &omega) {
      std::vector<unsigned> img = identity_var_map(out.nvars);
      auto it = where.find(var);
      if (it != where.end())
        for (const auto &[rel_name, slots] : it->second) {
          const QpropRelation *pr = nullptr;
          for (const QpropRelation &r : out.relations)
            if (r.name == rel_name) pr = &r;
          unsigned block = 1;
          for (unsigned s : pr->domain_sizes) block *= s;
          std::vector<unsigned> tuple(pr->domain_sizes.size(), 0);
          for (unsigned idx = 0; idx < block; ++idx) {
            std::vector<unsigned> image = tuple;
            for (std::size_t j : slots) image[j] = omega[tuple[j]];
            img[out.atom(rel_name, tuple)] = out.atom(rel_name, image);
            for (std::size_t j = tuple.size(); j-- > 0;) {
              if (++tuple[j] < pr->domain_sizes[j]) break;
              tuple[j] = 0;
            }
          }
        }
      return perm_from_var_map(out.nvars, img);
    };

    std::vector<Permutation> gens;
    unsigned size_total = 0;
    for (const auto &[name, d] : q.variables) {
      std::vector<unsigned> swap01(d), cycle_rest(d);
      for (unsigned i = 0; i < d; ++i) swap01[i] = cycle_rest[i] = i;
      if (d >= 2) std::swap(swap01[0], swap01[1]);
      if (d >= 3)
        for (unsigned i = 1; i < d; ++i) cycle_rest[i] = i == d - 1 ? 1 : i + 1;
      gens.push_back(rho(name, swap01));
      gens.push_back(rho(name, cycle_rest));
      size_total += d + 1;
    }
    out.clauses.push_back(
        Encoded{AugmentedClause(Clause(std::move(lits)),
                                PermGroup(out.nvars, std::move(gens))),
                2 * static_cast<unsigned>(q.variables.size()), size_total});
  }
  return out;
}

Encoded encode_qprop(const QuantifiedClause &q) {
  return std::move(encode_qprop_theory({q}).clauses.front());
}

std::vector<AugmentedClause> encode_pigeonhole(unsigned n) {
  if (n < 1) throw BadSize("need at least one hole");
  unsigned m = n + 1;
  unsigned nv = m * n;
  auto p = [&](unsigned i, unsigned j) { return (i - 1) * n + j; };
  std::vector<Permutation> gens;
  {
    auto img = identity_var_map(nv);
    for (unsigned j = 1; j <= n; ++j) std::swap(img[p(1, j)], img[p(2, j)]);
    gens.push_back(perm_from_var_map(nv, img));
  }
  {
    auto img = identity_var_map(nv);
    for (unsigned j = 1; j <= n; ++j)
      for (unsigned i = 2; i <= m; ++i)
        img[p(i, j)] = p(i == m ? 2 : i + 1, j);
    gens.push_back(perm_from_var_map(nv, img));
  }
  {
    auto img = identity_var_map(nv);
    if (n >= 2)
      for (unsigned i = 1; i <= m; ++i) std::swap(img[p(i, 1)], img[p(i, 2)]);
    gens.push_back(perm_from_var_map(nv, img));
  }
  {
    auto img = identity_var_map(nv);
    if (n >= 3)
      for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 2; j <= n; ++j)
          img[p(i, j)] = p(i, j == n ? 2 : j + 1);
    gens.push_back(perm_from_var_map(nv, img));
  }
  PermGroup g(nv, std::move(gens));
  std::vector<Literal> row;
  for (unsigned j = 1; j <= n; ++j)
    row.emplace_back(static_cast<int>(p(1, j)));
  std::vector<AugmentedClause> out;
  out.emplace_back(Clause(std::move(row)), g);
  out.emplace_back(Clause({Literal(-static_cast<int>(p(1, 1))),
                           Literal(-static_cast<int>(p(2, 1)))}),
                   g);
  return out;
}

std::vector<AugmentedClause> encode_clique_coloring(unsigned m, unsigned n) {
  if (n < 1 || m < n + 1)
    throw BadSize("need m >= n+1 nodes for an n+1 clique");
  unsigned ecount = m * (m - 1) / 2;
  auto e = [&](unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    return (i - 1) * m - i * (i - 1) / 2 + (j - i);
  };
  auto c = [&](unsigned i, unsigned j) { return ecount + (i - 1) * n + j; };
  auto q = [&](unsigned i, unsigned j) {
    return ecount + m * n + (i - 1) * m + j;
  };
  unsigned nv = ecount + m * n + (n + 1) * m;

  // One shared group: all node, color, and clique-element symmetries.
  auto node_map = [&](const std::vector<unsigned> &sigma) {
    auto img = identity_var_map(nv);
    for (unsigned i = 1; i <= m; ++i) {
      for (unsigned j = i + 1; j <= m; ++j) img[e(i, j)] = e(sigma[i], sigma[j]);
      for (unsigned l = 1; l <= n; ++l) img[c(i, l)] = c(sigma[i], l);
      for (unsigned k = 1; k <= n + 1; ++k) img[q(k, i)] = q(k, sigma[i]);
    }
    return perm_from_var_map(nv, img);
  };
  auto color_map = [&](const std::vector<unsigned> &tau) {
    auto img = identity_var_map(nv);
    for (unsigned i = 1; i <= m; ++i)
      for (unsigned l = 1; l <= n; ++l) img[c(i, l)] = c(i, tau[l]);
    return perm_from_var_map(nv, img);
  };
  auto clique_map = [&](const std::vector<unsigned> &pi) {
    auto img = identity_var_map(nv);
    for (unsigned k = 1; k <= n + 1; ++k)
      for (unsigned j = 1; j <= m; ++j) img[q(k, j)] = q(pi[k], j);
    return perm_from_var_map(nv, img);
  };
  auto swap12 = [](unsigned count) {
    std::vector<unsigned> s(count + 1);
    for (unsigned i = 1; i <= count; ++i) s[i] = i;
    if (count >= 2) std::swap(s[1], s[2]);
    return s;
  };
  auto cycle_rest = [](unsigned count) {
    std::vector<unsigned> s(count + 1);
    for (unsigned i = 1; i <= count; ++i) s[i] = i;
    if (count >= 3)
      for (unsigned i = 2; i <= count; ++i) s[i] = i == count ? 2 : i + 1;
    return s;
  };
  PermGroup g(nv, {node_map(swap12(m)), node_map(cycle_rest(m)),
                   color_map(swap12(n)), color_map(cycle_rest(n)),
                   clique_map(swap12(n + 1)), clique_map(cycle_rest(n + 1))});

  auto lit = [](unsigned v, bool pos) {
    return Literal(pos ? static_cast<int>(v) : -static_cast<int>(v));
  };
  std::vector<AugmentedClause> out;
  out.emplace_back(
      Clause({lit(e(1, 2), false), lit(c(1, 1), false), lit(c(2, 1), false)}),
      g);
  {
    std::vector<Literal> row;
    for (unsigned l = 1; l <= n; ++l) row.push_back(lit(c(1, l), true));
    out.emplace_back(Clause(std::move(row)), g);
  }
  {
    std::vector<Literal> row;
    for (unsigned j = 1; j <= m; ++j) row.push_back(lit(q(1, j), true));
    out.emplace_back(Clause(std::move(row)), g);
  }
  out.emplace_back(Clause({lit(q(1, 1), false), lit(q(2, 1), false)}), g);
  out.emplace_back(
      Clause({lit(e(1, 2), true), lit(q(1, 1), false), lit(q(2, 2), false)}),
      g);
  return out;
}

std::vector<ParityConstraint> random_parity_theory(unsigned n, unsigned m,
                                                   std::uint64_t seed) {
  if (n < 1 || m < 1) throw Error("need at least one variable and constraint");
  std::mt19937_64 rng(seed);
  std::vector<ParityConstraint> out;
  out.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    ParityConstraint pc;
    for (unsigned v = 1; v <= n; ++v)
      if (rng() & 1) pc.vars.push_back(v);
    if (pc.vars.empty())
      pc.vars.push_back(1 + static_cast<unsigned>(rng() % n));
    pc.rhs = rng() & 1;
    out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace zap
