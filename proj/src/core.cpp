#include "zap/core.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace zap {

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 0; i + 1 < lits_.size(); ++i)
    if (lits_[i].var() == lits_[i + 1].var())
      throw TautologyError("clause contains " + std::to_string(lits_[i].value()) +
                           " and its negation");
}

Clause Clause::of(std::initializer_list<int> values) {
  std::vector<Literal> ls;
  ls.reserve(values.size());
  for (int v : values) ls.emplace_back(v);
  return Clause(std::move(ls));
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

unsigned Clause::max_var() const {
  unsigned m = 0;
  for (const Literal &l : lits_) m = std::max(m, l.var());
  return m;
}

std::string Clause::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) os << " | ";
    os << lits_[i].str();
  }
  if (lits_.empty()) os << "<empty>";
  return os.str();
}

bool Clause::operator<(const Clause &o) const {
  return std::lexicographical_compare(lits_.begin(), lits_.end(),
                                      o.lits_.begin(), o.lits_.end());
}

AnnotatedAssignment::AnnotatedAssignment(unsigned nvars)
    : nvars_(nvars), value_(nvars + 1, 0), where_(nvars + 1, -1) {}

void AnnotatedAssignment::append(Literal l, Reason r) {
  if (l.var() > nvars_) throw Error("literal out of range for assignment");
  if (value_[l.var()] != 0)
    throw Error("assignment already values variable " + std::to_string(l.var()));
  value_[l.var()] = l.positive() ? 1 : -1;
  where_[l.var()] = static_cast<int>(entries_.size());
  entries_.push_back(Entry{l, std::move(r)});
}

void AnnotatedAssignment::pop() {
  assert(!entries_.empty());
  unsigned v = entries_.back().lit.var();
  value_[v] = 0;
  where_[v] = -1;
  entries_.pop_back();
}

bool AnnotatedAssignment::contains(Literal l) const {
  if (l.var() > nvars_) return false;
  int sign = l.positive() ? 1 : -1;
  return value_[l.var()] == sign;
}

bool AnnotatedAssignment::falsifies(Literal l) const { return contains(-l); }

bool AnnotatedAssignment::values_var(unsigned var) const {
  return var <= nvars_ && value_[var] != 0;
}

int AnnotatedAssignment::index_of_var(unsigned var) const {
  return var <= nvars_ ? where_[var] : -1;
}

int poss(const Clause &c, const AnnotatedAssignment &P) {
  int n = 0;
  for (const Literal &l : c.literals())
    if (!P.falsifies(l)) ++n;
  return n - 1;
}

int curr(const Clause &c, const AnnotatedAssignment &P) {
  int n = 0;
  for (const Literal &l : c.literals())
    if (P.contains(l)) ++n;
  return n - 1;
}

Clause resolve_ground(const Clause &c1, const Clause &c2) {
  int clashes = 0;
  Literal pivot(1);
  for (const Literal &l : c1.literals())
    if (c2.contains(-l)) {
      ++clashes;
      pivot = l;
    }
  if (clashes == 0) throw NotResolvable("no clashing literal");
  if (clashes > 1) throw NotResolvable("more than one clashing literal");

  std::vector<Literal> out;
  out.reserve(c1.size() + c2.size() - 2);
  for (const Literal &l : c1.literals())
    if (l != pivot) out.push_back(l);
  for (const Literal &l : c2.literals())
    if (l != -pivot) out.push_back(l);
  return Clause(std::move(out));
}

Reason resolve_reasons(const Reason &r1, const Reason &r2) {
  if (r1.is_branch()) return r2;
  if (r2.is_branch()) return r1;
  return Reason::ground(resolve_ground(r1.clause, r2.clause));
}

}  // namespace zap
