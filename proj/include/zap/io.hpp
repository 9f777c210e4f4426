#pragma once

#include <string>
#include <vector>

#include "zap/augmented.hpp"

namespace zap {

/// On-disk form of an augmented clause database. Grammar, one entry per
/// line: comments `c ...`, one header `p zap <nvars>`, clauses
/// `a <lit>* 0`, and zero or more `g <cycles>` lines attaching generators
/// to the preceding clause.
struct ZapFile {
  unsigned nvars = 0;
  std::vector<AugmentedClause> clauses;
  std::vector<std::string> comments;  // without the leading "c "
};

/// Parse errors carry the 1-based line number; generator validation
/// failures (sign-respect conflicts) surface as WnConflict.
ZapFile parse_zap(const std::string &text);

/// Canonical text: comments first, then the header, then each clause with
/// its literals in canonical order and generators in canonical cycle form.
/// write_zap(parse_zap(t)) is a fixpoint of parse_zap.
std::string write_zap(const ZapFile &f);

/// DIMACS CNF read as trivial-group augmented clauses. Clauses may span
/// lines; the declared clause count is checked.
ZapFile parse_dimacs(const std::string &text);

std::string write_dimacs(const std::vector<Clause> &clauses, unsigned nvars);

}  // namespace zap
