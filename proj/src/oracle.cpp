#include "zap/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zap/errors.hpp"

namespace zap {

namespace {

void check_clauses(const std::vector<std::vector<int>> &clauses,
                   unsigned nvars) {
  for (const auto &c : clauses)
    for (int l : c) {
      unsigned v = static_cast<unsigned>(l < 0 ? -l : l);
      if (l == 0 || v > nvars)
        throw Error("literal " + std::to_string(l) + " outside 1.." +
                    std::to_string(nvars));
    }
}

bool clause_true(const std::vector<int> &c, const std::vector<int8_t> &val) {
  for (int l : c) {
    int8_t v = val[static_cast<unsigned>(l < 0 ? -l : l) - 1];
    if ((l > 0 && v == 1) || (l < 0 && v == -1)) return true;
  }
  return false;
}

// 1 satisfied, -1 conflict, 0 undecided; unit literal reported via *unit.
int clause_state(const std::vector<int> &c, const std::vector<int8_t> &val,
                 int *unit) {
  int open = 0;
  *unit = 0;
  for (int l : c) {
    int8_t v = val[static_cast<unsigned>(l < 0 ? -l : l) - 1];
    if (v == 0) {
      ++open;
      *unit = l;
    } else if ((l > 0) == (v == 1)) {
      return 1;
    }
  }
  if (open == 0) return -1;
  if (open > 1) *unit = 0;
  return 0;
}

bool dpll(const std::vector<std::vector<int>> &clauses,
          std::vector<int8_t> &val) {
  std::vector<unsigned> forced;
  bool again = true;
  while (again) {
    again = false;
    for (const auto &c : clauses) {
      int unit = 0;
      int st = clause_state(c, val, &unit);
      if (st == -1) {
        for (unsigned v : forced) val[v] = 0;
        return false;
      }
      if (st == 0 && unit != 0) {
        unsigned v = static_cast<unsigned>(unit < 0 ? -unit : unit) - 1;
        val[v] = unit > 0 ? 1 : -1;
        forced.push_back(v);
        again = true;
      }
    }
  }
  unsigned pick = 0;
  while (pick < val.size() && val[pick] != 0) ++pick;
  if (pick == val.size()) return true;
  for (int8_t phase : {int8_t{1}, int8_t{-1}}) {
    val[pick] = phase;
    if (dpll(clauses, val)) return true;
  }
  val[pick] = 0;
  for (unsigned v : forced) val[v] = 0;
  return false;
}

}  // namespace

OracleResult dpll_solve(const std::vector<std::vector<int>> &clauses,
                        unsigned nvars, unsigned budget) {
  if (nvars > budget)
    throw BudgetExceeded(std::to_string(nvars) + " variables over the " +
                         std::to_string(budget) + " variable oracle budget");
  check_clauses(clauses, nvars);
  std::vector<int8_t> val(nvars, 0);
  if (!dpll(clauses, val)) return {};
  OracleResult r;
  r.sat = true;
  r.model.resize(nvars);
  for (unsigned v = 0; v < nvars; ++v) r.model[v] = val[v] == 1;
  std::vector<int8_t> full(nvars);
  for (unsigned v = 0; v < nvars; ++v) full[v] = r.model[v] ? 1 : -1;
  for (const auto &c : clauses)
    if (!clause_true(c, full))
      throw std::logic_error("oracle produced a non-model");
  return r;
}

OracleResult gf2_solve(const std::vector<ParityConstraint> &constraints,
                       unsigned nvars) {
  // Row-reduced system: rows[i] is a coefficient bitmap plus rhs bit,
  // pivot[i] the leading variable (0-based).
  std::vector<std::vector<bool>> rows;
  std::vector<unsigned> pivots;
  for (const ParityConstraint &pc : constraints) {
    std::vector<bool> row(nvars + 1, false);
    for (unsigned v : pc.vars) {
      if (v < 1 || v > nvars) throw Error("parity variable out of range");
      row[v - 1] = !row[v - 1];
    }
    row[nvars] = row[nvars] != pc.rhs;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (row[pivots[i]])
        for (unsigned j = 0; j <= nvars; ++j)
          row[j] = row[j] != rows[i][j];
    unsigned lead = 0;
    while (lead < nvars && !row[lead]) ++lead;
    if (lead == nvars) {
      if (row[nvars]) return {};  // 0 = 1
      continue;
    }
    rows.push_back(std::move(row));
    pivots.push_back(lead);
  }
  OracleResult r;
  r.sat = true;
  r.model.assign(nvars, false);
  // Back-substitute in decreasing pivot order; free variables stay false.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] > pivots[b]; });
  for (std::size_t i : order) {
    bool sum = rows[i][nvars];
    for (unsigned j = pivots[i] + 1; j < nvars; ++j)
      if (rows[i][j] && r.model[j]) sum = !sum;
    r.model[pivots[i]] = sum;
  }
  for (const ParityConstraint &pc : constraints) {
    bool sum = false;
    for (unsigned v : pc.vars)
      if (r.model[v - 1]) sum = !sum;
    if (sum != pc.rhs) throw std::logic_error("oracle produced a non-model");
  }
  return r;
}

std::uint64_t enumerate_models(const std::vector<std::vector<int>> &clauses,
                               unsigned nvars, unsigned budget) {
  if (nvars > budget)
    throw BudgetExceeded(std::to_string(nvars) + " variables over the " +
                         std::to_string(budget) + " variable oracle budget");
  check_clauses(clauses, nvars);
  std::uint64_t count = 0;
  std::vector<int8_t> val(nvars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nvars); ++bits) {
    for (unsigned v = 0; v < nvars; ++v)
      val[v] = (bits >> v) & 1 ? 1 : -1;
    bool ok = true;
    for (const auto &c : clauses)
      if (!clause_true(c, val)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace zap
