#include "zap/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zap/encoders.hpp"
#include "zap/errors.hpp"
#include "zap/io.hpp"
#include "zap/oracle.hpp"
#include "zap/resolution.hpp"
#include "zap/solver.hpp"

namespace zap {

namespace {

ZapFile load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream t(line);
    std::string tag, kind;
    if (!(t >> tag) || tag == "c") continue;
    if (tag == "p" && t >> kind && kind == "cnf") return parse_dimacs(text);
    break;
  }
  return parse_zap(text);
}

struct SolveFlags {
  unsigned relevance = 3;
  std::string branch = "pos-unsat";
  std::uint64_t seed = 0;
  std::uint64_t enum_threshold = 1'000'000;
  bool stats = false;

  SolveOptions options() const {
    SolveOptions o;
    o.k = relevance;
    o.heuristic =
        branch == "first" ? Heuristic::FirstUnassigned : Heuristic::PosUnsat;
    o.seed = seed;
    o.group.enum_threshold = enum_threshold;
    return o;
  }
};

void add_solve_flags(CLI::App *cmd, SolveFlags &f) {
  cmd->add_option("--relevance", f.relevance,
                  "relevance bound for learned clauses");
  cmd->add_option("--branch", f.branch, "branch heuristic")
      ->check(CLI::IsMember({"pos-unsat", "first"}));
  cmd->add_option("--seed", f.seed, "tie-breaking seed, 0 is deterministic");
  cmd->add_option("--enum-threshold", f.enum_threshold,
                  "group order below which searches may enumerate");
}

SolveResult run_solver(const ZapFile &f, const SolveFlags &flags) {
  bool ground = true;
  for (const AugmentedClause &ac : f.clauses)
    if (!ac.group().is_trivial()) ground = false;
  if (ground) {
    std::vector<Clause> cs;
    for (const AugmentedClause &ac : f.clauses) cs.push_back(ac.base());
    return rbl_solve(cs, f.nvars, flags.options());
  }
  return rbl_solve(f.clauses, flags.options());
}

int cmd_solve(const std::string &path, const SolveFlags &flags) {
  SolveResult r = run_solver(load(path), flags);
  std::cout << (r.sat ? "s SATISFIABLE" : "s UNSATISFIABLE") << '\n';
  if (r.sat) {
    std::cout << 'v';
    for (Literal l : r.model) std::cout << ' ' << l.value();
    std::cout << " 0\n";
  }
  if (flags.stats) std::cout << r.stats.str();
  return r.sat ? 10 : 20;
}

int cmd_expand(const std::string &path, std::uint64_t cap) {
  ZapFile f = load(path);
  std::vector<Clause> out;
  for (const AugmentedClause &ac : f.clauses)
    for (Clause &c : ac.instances(cap)) out.push_back(std::move(c));
  std::cout << write_dimacs(out, f.nvars);
  return 0;
}

int cmd_check(const std::string &path, const SolveFlags &flags,
              std::uint64_t cap) {
  ZapFile f = load(path);
  SolveResult r = run_solver(f, flags);
  std::vector<std::vector<int>> theory;
  for (const AugmentedClause &ac : f.clauses)
    for (const Clause &c : ac.instances(cap)) {
      std::vector<int> row;
      for (Literal l : c.literals()) row.push_back(l.value());
      theory.push_back(std::move(row));
    }
  bool oracle = dpll_solve(theory, f.nvars).sat;
  if (r.sat == oracle) {
    std::cout << "agree verdict=" << (oracle ? "SAT" : "UNSAT") << '\n';
    return 0;
  }
  std::cout << "MISMATCH solver=" << (r.sat ? "SAT" : "UNSAT")
            << " oracle=" << (oracle ? "SAT" : "UNSAT") << '\n';
  return 1;
}

int cmd_resolve(const std::string &path) {
  ZapFile f = load(path);
  if (f.clauses.size() < 2)
    throw Error("resolve needs a file with at least two clauses");
  ZapFile out;
  out.nvars = f.nvars;
  out.comments = {"clause 1: canonical resolvent",
                  "clause 2: ground-witness resolvent"};
  out.clauses.push_back(resolve_augmented(f.clauses[0], f.clauses[1]));
  ResolventWitness ground{PermGroup::trivial(f.nvars),
                          PermGroup::trivial(f.nvars)};
  out.clauses.push_back(resolve_augmented(f.clauses[0], f.clauses[1], ground));
  std::cout << write_zap(out);
  return 0;
}

int cmd_group(const std::string &path) {
  ZapFile f = load(path);
  std::size_t i = 0;
  for (const AugmentedClause &ac : f.clauses) {
    std::cout << "clause " << ++i << ": order=" << ac.group().order_str()
              << " generators=" << ac.group().generators().size() << '\n';
    for (const auto &orbit : ac.group().orbit_partition()) {
      std::cout << "orbit:";
      for (Literal l : orbit) std::cout << ' ' << l.value();
      std::cout << '\n';
    }
  }
  return 0;
}

// encode helpers: each family prints a ZapFile on standard output.

ZapFile from_encoded(std::vector<AugmentedClause> clauses, unsigned nvars,
                     std::string comment) {
  ZapFile f;
  f.nvars = nvars;
  f.clauses = std::move(clauses);
  f.comments = {std::move(comment)};
  return f;
}

QuantifiedClause parse_qprop_clause(
    const std::vector<std::pair<std::string, unsigned>> &domains,
    const std::string &text) {
  QuantifiedClause q;
  auto is_ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  while (true) {
    skip_space();
    QpropLiteral lit;
    if (pos < text.size() && text[pos] == '-') {
      lit.positive = false;
      ++pos;
      skip_space();
    }
    std::size_t start = pos;
    while (pos < text.size() && is_ident(text[pos])) ++pos;
    if (start == pos) throw ParseError("expected a relation name in '" + text + "'");
    lit.relation = text.substr(start, pos - start);
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        skip_space();
        start = pos;
        while (pos < text.size() && is_ident(text[pos])) ++pos;
        if (start == pos) throw ParseError("expected an argument in '" + text + "'");
        std::string arg = text.substr(start, pos - start);
        if (std::isdigit(static_cast<unsigned char>(arg[0])))
          lit.args.push_back(
              QpropArg::constant(static_cast<unsigned>(std::stoul(arg))));
        else
          lit.args.push_back(QpropArg::variable(arg));
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError("expected ',' or ')' in '" + text + "'");
      }
    }
    q.literals.push_back(std::move(lit));
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '|')
      throw ParseError("expected '|' between literals in '" + text + "'");
    ++pos;
  }
  // Declare only the variables this clause mentions, in declaration order.
  for (const auto &[name, size] : domains) {
    bool used = false;
    for (const QpropLiteral &lit : q.literals)
      for (const QpropArg &a : lit.args)
        if (a.is_var && a.var == name) used = true;
    if (used) q.variables.emplace_back(name, size);
  }
  return q;
}

}  // namespace

int cli_main(int argc, const char *const *argv) {
  CLI::App app{"augmented-clause satisfiability tool"};
  app.require_subcommand(1);
  int rc = 0;

  std::string path;
  SolveFlags flags;
  std::uint64_t cap = 1'000'000;

  CLI::App *solve = app.add_subcommand("solve", "decide a zap or cnf file");
  solve->add_option("file", path)->required();
  add_solve_flags(solve, flags);
  solve->add_flag("--stats", flags.stats, "print solver statistics");
  solve->callback([&] { rc = cmd_solve(path, flags); });

  CLI::App *expand = app.add_subcommand("expand", "ground a zap file to cnf");
  expand->add_option("file", path)->required();
  expand->add_option("--expansion-cap", cap, "instance cap per clause");
  expand->callback([&] { rc = cmd_expand(path, cap); });

  CLI::App *check =
      app.add_subcommand("check", "cross-validate against the dpll oracle");
  check->add_option("file", path)->required();
  add_solve_flags(check, flags);
  check->add_option("--expansion-cap", cap, "instance cap per clause");
  check->callback([&] { rc = cmd_check(path, flags, cap); });

  CLI::App *resolve =
      app.add_subcommand("resolve", "resolve the first two clauses of a file");
  resolve->add_option("file", path)->required();
  resolve->callback([&] { rc = cmd_resolve(path); });

  CLI::App *group =
      app.add_subcommand("group", "print group order and orbit structure");
  group->add_option("file", path)->required();
  group->callback([&] { rc = cmd_group(path); });

  CLI::App *encode = app.add_subcommand("encode", "write a zap file");
  encode->require_subcommand(1);

  unsigned holes = 3, nodes = 4, colors = 3, nv = 3, threshold = 1,
           constraints = 4;
  bool rhs = false, compact = false;
  std::uint64_t seed = 1;
  std::vector<std::string> domain_args, clause_args;

  CLI::App *php = encode->add_subcommand("pigeonhole");
  php->add_option("--holes", holes)->required();
  php->callback([&] {
    auto db = encode_pigeonhole(holes);
    std::cout << write_zap(from_encoded(std::move(db), holes * (holes + 1),
                                        "pigeonhole holes=" +
                                            std::to_string(holes)));
  });

  CLI::App *clique = encode->add_subcommand("clique");
  clique->add_option("--nodes", nodes)->required();
  clique->add_option("--colors", colors)->required();
  clique->callback([&] {
    auto db = encode_clique_coloring(nodes, colors);
    unsigned n = db.front().nvars();
    std::cout << write_zap(from_encoded(
        std::move(db), n,
        "clique nodes=" + std::to_string(nodes) +
            " colors=" + std::to_string(colors)));
  });

  CLI::App *card = encode->add_subcommand("cardinality");
  card->add_option("--vars", nv)->required();
  card->add_option("--threshold", threshold)->required();
  card->callback([&] {
    std::vector<unsigned> vars;
    for (unsigned v = 1; v <= nv; ++v) vars.push_back(v);
    Encoded e = encode_cardinality(vars, threshold);
    std::cout << write_zap(from_encoded(
        {e.clause}, nv,
        "cardinality vars=" + std::to_string(nv) +
            " threshold=" + std::to_string(threshold)));
  });

  CLI::App *parity = encode->add_subcommand("parity");
  parity->add_option("--vars", nv)->required();
  parity->add_option("--rhs", rhs);
  parity->add_flag("--compact", compact);
  parity->callback([&] {
    ParityConstraint pc;
    for (unsigned v = 1; v <= nv; ++v) pc.vars.push_back(v);
    pc.rhs = rhs;
    Encoded e = encode_parity(pc, 0, compact);
    std::cout << write_zap(from_encoded(
        {e.clause}, nv,
        "parity vars=" + std::to_string(nv) + " rhs=" + (rhs ? "1" : "0")));
  });

  CLI::App *rparity = encode->add_subcommand("random-parity");
  rparity->add_option("--vars", nv)->required();
  rparity->add_option("--constraints", constraints)->required();
  rparity->add_option("--seed", seed);
  rparity->callback([&] {
    std::vector<AugmentedClause> db;
    for (const ParityConstraint &pc :
         random_parity_theory(nv, constraints, seed))
      db.push_back(encode_parity(pc, nv).clause);
    std::cout << write_zap(from_encoded(
        std::move(db), nv,
        "random-parity vars=" + std::to_string(nv) +
            " constraints=" + std::to_string(constraints) +
            " seed=" + std::to_string(seed)));
  });

  CLI::App *qprop = encode->add_subcommand("qprop");
  qprop->add_option("--domain", domain_args, "variable=size, repeatable")
      ->required();
  qprop->add_option("--clause", clause_args,
                    "e.g. 'a(x,y)|-b(y,0)', repeatable")
      ->required();
  qprop->callback([&] {
    std::vector<std::pair<std::string, unsigned>> domains;
    for (const std::string &d : domain_args) {
      std::size_t eq = d.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError("expected variable=size, got '" + d + "'");
      domains.emplace_back(d.substr(0, eq),
                           static_cast<unsigned>(std::stoul(d.substr(eq + 1))));
    }
    std::vector<QuantifiedClause> qs;
    for (const std::string &c : clause_args)
      qs.push_back(parse_qprop_clause(domains, c));
    QpropTheory t = encode_qprop_theory(qs);
    std::vector<AugmentedClause> db;
    for (Encoded &e : t.clauses) db.push_back(std::move(e.clause));
    std::cout << write_zap(
        from_encoded(std::move(db), t.nvars, "qprop clauses=" +
                                                 std::to_string(qs.size())));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

}  // namespace zap
