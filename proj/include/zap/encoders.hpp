#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zap/augmented.hpp"

namespace zap {

/// An augmented clause plus the nominal generator accounting of its family:
/// generator count and total size, sizes counted as cycle lengths (a flip
/// pair (x,-x)(y,-y) counts 4, a variable c-cycle counts c). Degenerate
/// generators keep their nominal size so the table stays a closed formula.
struct Encoded {
  AugmentedClause clause;
  unsigned gen_count = 0;
  unsigned gen_size_total = 0;
};

/// "At least k of vars are true": base clause is the first m-k+1 variables,
/// group the full symmetric group on all m, generated by a transposition and
/// an (m-1)-cycle. nvars of 0 sizes the space to the largest variable.
Encoded encode_cardinality(const std::vector<unsigned> &vars, unsigned k,
                           unsigned nvars = 0);

struct ParityConstraint {
  std::vector<unsigned> vars;  // distinct, nonempty
  bool rhs = false;            // parity of the sum
};

/// Base clause is the plain disjunction, first variable negated when the sum
/// must be even; the group flips even-size subsets of the variables, given
/// by k-1 flip pairs. The compact form trades those for one flip pair plus
/// the symmetric group on the variables; the instance set is identical.
Encoded encode_parity(const ParityConstraint &c, unsigned nvars = 0,
                      bool compact = false);

/// One argument slot of a quantified literal: either a bound variable or a
/// fixed domain element.
struct QpropArg {
  bool is_var = false;
  std::string var;     // when is_var
  unsigned index = 0;  // when !is_var

  static QpropArg variable(std::string name) {
    QpropArg a;
    a.is_var = true;
    a.var = std::move(name);
    return a;
  }
  static QpropArg constant(unsigned index) {
    QpropArg a;
    a.index = index;
    return a;
  }
};

struct QpropLiteral {
  std::string relation;
  bool positive = true;
  std::vector<QpropArg> args;
};

/// A universally quantified clause over finite domains. Every declared
/// variable must occur in some literal, arity and argument-slot domains must
/// be consistent, and a variable may not occur twice in one literal nor
/// share a slot with another variable, since the ground-atom maps must stay
/// injective for the domain symmetries to act on atoms.
struct QuantifiedClause {
  std::vector<std::pair<std::string, unsigned>> variables;  // name, domain
  std::vector<QpropLiteral> literals;
};

struct QpropRelation {
  std::string name;
  unsigned first_var = 0;  // 1-based start of the row-major atom block
  std::vector<unsigned> domain_sizes;
};

/// A set of quantified clauses encoded over one shared ground-atom space:
/// relation blocks in first-appearance order, argument tuples row-major with
/// the last slot fastest. Each clause's base instance grounds every variable
/// at domain element 0, and its group is generated per variable by the
/// images of the domain transposition (0,1) and the cycle (1,...,d-1) under
/// the variable's action on atoms.
struct QpropTheory {
  std::vector<Encoded> clauses;
  std::vector<QpropRelation> relations;
  unsigned nvars = 0;

  /// DIMACS variable of a ground atom; args are domain element indices.
  unsigned atom(const std::string &relation,
                const std::vector<unsigned> &args) const;
};

QpropTheory encode_qprop_theory(const std::vector<QuantifiedClause> &qs);

/// Single-clause convenience wrapper around encode_qprop_theory.
Encoded encode_qprop(const QuantifiedClause &q);

/// Pigeonhole problem with n holes and n+1 pigeons over variables p_ij
/// numbered row-major ((i-1)*n + j). Two augmented clauses, the "pigeon 1
/// sits somewhere" row then the "hole 1 holds at most one" pair, both under
/// the pigeon-times-hole symmetry group built from four generators.
std::vector<AugmentedClause> encode_pigeonhole(unsigned n);

/// Clique-coloring theory: an m-node graph containing an (n+1)-clique that
/// is n-colorable. Variables in blocks: e_ij (i<j, lexicographic), then c_ij
/// row-major, then q_ij row-major. Five clause families, each carrying the
/// full node/color/clique-element symmetry group; the group maps each base
/// exactly onto its family.
std::vector<AugmentedClause> encode_clique_coloring(unsigned m, unsigned n);

/// m constraints over random nonempty subsets of 1..n with random parity,
/// reproducible from the seed.
std::vector<ParityConstraint> random_parity_theory(unsigned n, unsigned m,
                                                   std::uint64_t seed);

}  // namespace zap
