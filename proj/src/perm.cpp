#include "zap/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace zap {

Permutation::Permutation(unsigned nvars) : nvars_(nvars), img_(2 * nvars) {
  for (Point p = 0; p < img_.size(); ++p) img_[p] = p;
}

Permutation::Permutation(unsigned nvars, std::vector<Point> images)
    : nvars_(nvars), img_(std::move(images)) {
  assert(img_.size() == 2 * static_cast<std::size_t>(nvars));
#ifndef NDEBUG
  std::vector<bool> seen(img_.size(), false);
  for (Point p : img_) {
    assert(p < img_.size() && !seen[p]);
    seen[p] = true;
  }
#endif
}

Clause Permutation::apply(const Clause &c) const {
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal &l : c.literals()) out.push_back(apply(l));
  return Clause(std::move(out));
}

bool Permutation::is_identity() const {
  for (Point p = 0; p < img_.size(); ++p)
    if (img_[p] != p) return false;
  return true;
}

bool Permutation::sign_respecting() const {
  for (Point p = 0; p < img_.size(); ++p)
    if (img_[negated_point(p, nvars_)] != negated_point(img_[p], nvars_))
      return false;
  return true;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (Point p = 0; p < img_.size(); ++p)
    if (img_[p] != p) s.push_back(p);
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(img_.size());
  for (Point p = 0; p < img_.size(); ++p) inv[img_[p]] = p;
  return Permutation(nvars_, std::move(inv));
}

Permutation compose(const Permutation &f, const Permutation &g) {
  assert(f.nvars() == g.nvars());
  std::vector<Point> out(f.degree());
  for (Point p = 0; p < f.degree(); ++p) out[p] = g.apply(f.apply(p));
  return Permutation(f.nvars(), std::move(out));
}

namespace {

std::vector<std::vector<int>> tokenize_cycles(const std::string &text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      bool neg = false;
      if (text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected literal in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v == 0) throw ParseError("literal 0 not allowed in cycle notation");
      cyc.push_back(neg ? -v : v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation parse_cycles(const std::string &text, unsigned nvars) {
  const Point none = ~Point(0);
  std::vector<Point> img(2 * nvars, none);
  // Whether an image was written by the sign-respect completion rather than
  // an explicit cycle entry.
  std::vector<bool> completed(2 * nvars, false);

  auto set_image = [&](Point from, Point to, bool is_completion) {
    if (img[from] == none) {
      img[from] = to;
      completed[from] = is_completion;
      return;
    }
    if (img[from] == to) return;
    if (is_completion || completed[from])
      throw WnConflict("image of point contradicts sign-respect completion");
    throw NotBijective("point mapped twice in cycle notation");
  };

  for (const auto &cyc : tokenize_cycles(text)) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k];
      int b = cyc[(k + 1) % cyc.size()];
      if (static_cast<unsigned>(std::abs(a)) > nvars ||
          static_cast<unsigned>(std::abs(b)) > nvars)
        throw ParseError("cycle literal exceeds variable count");
      Point pa = Literal(a).point(nvars), pb = Literal(b).point(nvars);
      set_image(pa, pb, false);
      set_image(negated_point(pa, nvars), negated_point(pb, nvars), true);
    }
  }

  for (Point p = 0; p < img.size(); ++p)
    if (img[p] == none) img[p] = p;

  std::vector<bool> hit(img.size(), false);
  for (Point p : img) {
    if (hit[p]) throw NotBijective("two points share an image");
    hit[p] = true;
  }
  return Permutation(nvars, std::move(img));
}

std::string format_cycles(const Permutation &perm) {
  unsigned n = perm.nvars();
  std::vector<bool> visited(perm.degree(), false);
  std::vector<std::vector<Point>> cycles;
  for (Point p = 0; p < perm.degree(); ++p) {
    if (visited[p] || perm.apply(p) == p) continue;
    std::vector<Point> cyc;
    Point q = p;
    do {
      visited[q] = true;
      cyc.push_back(q);
      q = perm.apply(q);
    } while (q != p);
    cycles.push_back(std::move(cyc));
  }
  if (cycles.empty()) return "()";

  // Suppress the sign-mate of an already kept cycle when it is a distinct
  // cycle; self-paired cycles such as (1 -1) stay.
  std::vector<std::vector<Point>> kept;
  std::vector<bool> suppressed(cycles.size(), false);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (suppressed[i]) continue;
    kept.push_back(cycles[i]);
    std::vector<bool> in_cycle(perm.degree(), false);
    for (Point p : cycles[i]) in_cycle[p] = true;
    Point mate_start = negated_point(cycles[i][0], n);
    if (in_cycle[mate_start]) continue;
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (!suppressed[j] &&
          std::find(cycles[j].begin(), cycles[j].end(), mate_start) != cycles[j].end())
        suppressed[j] = true;
  }

  for (auto &cyc : kept) {
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto &a, const auto &b) { return a[0] < b[0]; });

  std::ostringstream os;
  for (const auto &cyc : kept) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << Literal::from_point(cyc[k], n).value();
    }
    os << ')';
  }
  return os.str();
}

Permutation var_transposition(unsigned nvars, unsigned a, unsigned b) {
  std::vector<Point> img(2 * nvars);
  for (Point p = 0; p < img.size(); ++p) img[p] = p;
  std::swap(img[a - 1], img[b - 1]);
  std::swap(img[nvars + a - 1], img[nvars + b - 1]);
  return Permutation(nvars, std::move(img));
}

Permutation var_cycle(unsigned nvars, const std::vector<unsigned> &vs) {
  std::vector<Point> img(2 * nvars);
  for (Point p = 0; p < img.size(); ++p) img[p] = p;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    unsigned from = vs[i], to = vs[(i + 1) % vs.size()];
    img[from - 1] = to - 1;
    img[nvars + from - 1] = nvars + to - 1;
  }
  return Permutation(nvars, std::move(img));
}

Permutation var_flip(unsigned nvars, unsigned v) {
  std::vector<Point> img(2 * nvars);
  for (Point p = 0; p < img.size(); ++p) img[p] = p;
  std::swap(img[v - 1], img[nvars + v - 1]);
  return Permutation(nvars, std::move(img));
}

}  // namespace zap
