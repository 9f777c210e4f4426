#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "zap/errors.hpp"

namespace zap {

class PermGroup;

/// A signed propositional literal in DIMACS convention: +v or -v, v >= 1.
class Literal {
 public:
  explicit Literal(int value) : v_(value) {
    if (value == 0) throw Error("literal value must be nonzero");
  }

  int value() const { return v_; }
  unsigned var() const { return static_cast<unsigned>(v_ < 0 ? -v_ : v_); }
  bool positive() const { return v_ > 0; }
  Literal operator-() const { return Literal(-v_); }

  // Point encoding used by permutations: positive literals occupy points
  // 0..n-1, negative literals n..2n-1.
  unsigned point(unsigned nvars) const {
    return positive() ? var() - 1 : nvars + var() - 1;
  }
  static Literal from_point(unsigned p, unsigned nvars) {
    return p < nvars ? Literal(static_cast<int>(p) + 1)
                     : Literal(-(static_cast<int>(p - nvars) + 1));
  }

  std::string str() const {
    return (positive() ? "x" : "-x") + std::to_string(var());
  }

  bool operator==(const Literal &o) const { return v_ == o.v_; }
  bool operator!=(const Literal &o) const { return v_ != o.v_; }
  // Canonical order: by variable, positive before negative.
  bool operator<(const Literal &o) const {
    if (var() != o.var()) return var() < o.var();
    return positive() && !o.positive();
  }

 private:
  int v_;
};

/// A duplicate-free disjunction of literals kept in canonical sorted order.
/// Construction merges duplicates and rejects tautologies.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits);
  static Clause of(std::initializer_list<int> values);

  const std::vector<Literal> &literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal l) const;
  unsigned max_var() const;

  std::string str() const;  // "x1 | -x2" style, for diagnostics

  bool operator==(const Clause &o) const { return lits_ == o.lits_; }
  bool operator!=(const Clause &o) const { return lits_ != o.lits_; }
  bool operator<(const Clause &o) const;

 private:
  std::vector<Literal> lits_;
};

struct ClauseHash {
  std::size_t operator()(const Clause &c) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Literal &l : c.literals())
      h = h * 1000003u ^ static_cast<std::size_t>(l.value() + (1 << 24));
    return h;
  }
};

/// Why a literal entered the assignment: a branch decision, or a clause that
/// was unit at the time. Augmented reasons carry the group alongside the
/// propagating instance; ground reasons leave `group` null.
struct Reason {
  enum class Kind { Branch, Clause } kind = Kind::Branch;
  zap::Clause clause;
  std::shared_ptr<const PermGroup> group;

  static Reason branch() { return Reason{}; }
  static Reason ground(zap::Clause c) {
    return Reason{Kind::Clause, std::move(c), nullptr};
  }
  static Reason augmented(zap::Clause c, std::shared_ptr<const PermGroup> g) {
    return Reason{Kind::Clause, std::move(c), std::move(g)};
  }
  bool is_branch() const { return kind == Kind::Branch; }
};

/// An ordered, consistent partial assignment where every entry records the
/// literal chosen and the reason it was chosen.
class AnnotatedAssignment {
 public:
  explicit AnnotatedAssignment(unsigned nvars);

  struct Entry {
    Literal lit;
    Reason reason;
  };

  unsigned nvars() const { return nvars_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry> &entries() const { return entries_; }
  const Entry &entry(std::size_t i) const { return entries_[i]; }

  void append(Literal l, Reason r);
  void pop();

  /// True when l itself has been assigned true.
  bool contains(Literal l) const;
  /// True when -l has been assigned true.
  bool falsifies(Literal l) const;
  bool values_var(unsigned var) const;
  /// Index of the entry valuing l's variable; -1 when unvalued.
  int index_of_var(unsigned var) const;

 private:
  unsigned nvars_;
  std::vector<Entry> entries_;
  std::vector<std::int8_t> value_;  // 1-based by var: 0 unset, +1 true, -1 false
  std::vector<int> where_;
};

/// Number of literals of c not falsified by P, minus one. The empty clause
/// has poss -1; a unit clause has poss 0.
int poss(const Clause &c, const AnnotatedAssignment &P);

/// Number of literals of c satisfied by P, minus one.
int curr(const Clause &c, const AnnotatedAssignment &P);

/// Ground resolution on the unique clashing pair; throws NotResolvable when
/// there is no clashing pair or more than one.
Clause resolve_ground(const Clause &c1, const Clause &c2);

/// Resolution lifted to reasons: a branch reason passes the other side
/// through untouched; two clause reasons resolve their clauses (the result
/// carries no group).
Reason resolve_reasons(const Reason &r1, const Reason &r2);

}  // namespace zap
