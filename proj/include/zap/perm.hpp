#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zap/core.hpp"

namespace zap {

using Point = unsigned;

/// A permutation of the 2n literal points of an n-variable literal space,
/// stored as a dense image array. Most permutations in the engine respect
/// signs (l -> m implies -l -> -m); arbitrary images are representable so
/// that tests can build counterexamples.
class Permutation {
 public:
  /// Identity on n variables.
  explicit Permutation(unsigned nvars);
  Permutation(unsigned nvars, std::vector<Point> images);

  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return static_cast<unsigned>(img_.size()); }

  Point apply(Point p) const { return img_[p]; }
  Literal apply(Literal l) const {
    return Literal::from_point(img_[l.point(nvars_)], nvars_);
  }
  Clause apply(const Clause &c) const;

  bool is_identity() const;
  bool sign_respecting() const;
  std::vector<Point> support() const;  // moved points, ascending

  Permutation inverse() const;

  bool operator==(const Permutation &o) const { return img_ == o.img_; }
  bool operator!=(const Permutation &o) const { return img_ != o.img_; }

  const std::vector<Point> &images() const { return img_; }

 private:
  unsigned nvars_;
  std::vector<Point> img_;
};

/// Left-to-right composition: apply f first, then g.
Permutation compose(const Permutation &f, const Permutation &g);

/// The point paired with p by negation under the positive-then-negative
/// point layout.
inline Point negated_point(Point p, unsigned nvars) {
  return p < nvars ? p + nvars : p - nvars;
}

/// Parses disjoint-cycle notation over signed literals, e.g. "(1 3 4)(2 5)".
/// Images implied by sign-respect are filled in automatically; an explicit
/// image contradicting the completion raises WnConflict, a repeated point
/// raises NotBijective.
Permutation parse_cycles(const std::string &text, unsigned nvars);

/// Canonical cycle form: cycles sorted by smallest point, each rotated to
/// start at its smallest point, and cycles fully determined by a printed
/// sign-mate suppressed. The identity prints as "()".
std::string format_cycles(const Permutation &p);

/// Swaps variables a and b, both signs.
Permutation var_transposition(unsigned nvars, unsigned a, unsigned b);
/// Cycles the variables left to right (vs[0] -> vs[1] -> ... -> vs[0]),
/// both signs.
Permutation var_cycle(unsigned nvars, const std::vector<unsigned> &vs);
/// Exchanges v with its negation.
Permutation var_flip(unsigned nvars, unsigned v);

struct PermHash {
  std::size_t operator()(const Permutation &p) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace zap
