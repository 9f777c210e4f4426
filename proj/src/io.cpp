#include "zap/io.hpp"

#include <sstream>

#include "zap/errors.hpp"

namespace zap {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string &tok, std::size_t line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::exception &) {
    fail(line, "bad integer '" + tok + "'");
  }
}

std::vector<std::string> tokens(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

ZapFile parse_zap(const std::string &text) {
  ZapFile f;
  bool have_header = false;
  struct Pending {
    std::vector<Literal> lits;
    std::vector<Permutation> gens;
    std::size_t line;
  };
  std::vector<Pending> pending;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokens(raw);
    if (toks.empty()) continue;
    const std::string &tag = toks[0];
    if (tag == "c") {
      std::size_t at = raw.find('c');
      std::size_t start = raw.find_first_not_of(" \t", at + 1);
      f.comments.push_back(start == std::string::npos ? ""
                                                      : raw.substr(start));
    } else if (tag == "p") {
      if (have_header) fail(lineno, "duplicate header");
      if (toks.size() != 3 || toks[1] != "zap")
        fail(lineno, "expected 'p zap <nvars>'");
      int n = parse_int(toks[2], lineno);
      if (n < 1) fail(lineno, "variable count must be positive");
      f.nvars = static_cast<unsigned>(n);
      have_header = true;
    } else if (tag == "a") {
      if (!have_header) fail(lineno, "clause before header");
      if (toks.size() < 2 || toks.back() != "0")
        fail(lineno, "clause line must end with 0");
      std::vector<Literal> lits;
      for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
        int v = parse_int(toks[i], lineno);
        unsigned var = static_cast<unsigned>(v < 0 ? -v : v);
        if (v == 0) fail(lineno, "literal 0 before the terminator");
        if (var > f.nvars)
          fail(lineno, "literal " + toks[i] + " outside the header range");
        lits.emplace_back(v);
      }
      pending.push_back({std::move(lits), {}, lineno});
    } else if (tag == "g") {
      if (pending.empty()) fail(lineno, "generator before any clause");
      std::size_t at = raw.find('g');
      try {
        pending.back().gens.push_back(
            parse_cycles(raw.substr(at + 1), f.nvars));
      } catch (const WnConflict &) {
        throw;
      } catch (const ParseError &e) {
        fail(lineno, e.what());
      }
    } else {
      fail(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'p zap' header");
  for (Pending &p : pending) {
    try {
      f.clauses.emplace_back(Clause(std::move(p.lits)),
                             PermGroup(f.nvars, std::move(p.gens)));
    } catch (const WnConflict &) {
      throw;
    } catch (const Error &e) {
      fail(p.line, e.what());
    }
  }
  return f;
}

std::string write_zap(const ZapFile &f) {
  std::ostringstream out;
  for (const std::string &c : f.comments)
    out << (c.empty() ? "c" : "c " + c) << '\n';
  out << "p zap " << f.nvars << '\n';
  for (const AugmentedClause &ac : f.clauses) {
    out << 'a';
    for (Literal l : ac.base().literals()) out << ' ' << l.value();
    out << " 0\n";
    for (const Permutation &g : ac.group().generators())
      if (!g.is_identity()) out << "g " << format_cycles(g) << '\n';
  }
  return out.str();
}

ZapFile parse_dimacs(const std::string &text) {
  ZapFile f;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<Literal> current;
  std::vector<Clause> clauses;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokens(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) fail(lineno, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf")
        fail(lineno, "expected 'p cnf <nvars> <nclauses>'");
      int n = parse_int(toks[2], lineno);
      int m = parse_int(toks[3], lineno);
      if (n < 0 || m < 0) fail(lineno, "negative header counts");
      f.nvars = static_cast<unsigned>(n);
      declared = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    if (!have_header) fail(lineno, "clause before header");
    for (const std::string &t : toks) {
      int v = parse_int(t, lineno);
      if (v == 0) {
        try {
          clauses.emplace_back(std::move(current));
        } catch (const Error &e) {
          fail(lineno, e.what());
        }
        current.clear();
      } else {
        unsigned var = static_cast<unsigned>(v < 0 ? -v : v);
        if (var > f.nvars)
          fail(lineno, "literal " + t + " outside the header range");
        current.emplace_back(v);
      }
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("unterminated final clause");
  if (clauses.size() != declared)
    throw ParseError("header declares " + std::to_string(declared) +
                     " clauses, found " + std::to_string(clauses.size()));
  PermGroup trivial = PermGroup::trivial(f.nvars);
  for (Clause &c : clauses) f.clauses.emplace_back(std::move(c), trivial);
  return f;
}

std::string write_dimacs(const std::vector<Clause> &clauses, unsigned nvars) {
  std::ostringstream out;
  out << "p cnf " << nvars << ' ' << clauses.size() << '\n';
  for (const Clause &c : clauses) {
    for (Literal l : c.literals()) out << l.value() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace zap
