#pragma once
// Permutations in one-line notation, the projection of braid words to
// permutations, strand-pair crossing counts, and the shortest positive word
// realizing a permutation (each strand pair crossing at most once).

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// A permutation of {1..n}.  Composition convention is diagrammatic:
// p.then(q) applies p first, so (p.then(q))(x) = q(p(x)).  This matches
// reading braid words left to right.
class Permutation {
 public:
  explicit Permutation(int n = 1);  // identity
  static Permutation from_one_line(std::vector<int> images);
  static Permutation transposition(int n, int i);  // adjacent swap of i, i+1

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int x) const;  // image of x, 1-based
  const std::vector<int>& one_line() const { return img_; }

  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;
  // Positions i with p(i) > p(i+1).
  std::set<int> descents() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

std::string to_text(const Permutation& p);  // "[3,2,1]"

// Image of a word under the projection to permutations; letter signs are
// ignored (a crossing and its inverse move strands the same way).
Permutation underlying_permutation(const BraidWord& w);

// For each unordered strand pair {a,b} (strands named by their starting
// positions), how many letters of w cross that pair.  Every pair appears in
// the result, including pairs that never cross.
std::map<std::pair<int, int>, long> pair_crossings(const BraidWord& w);

// The unique positive word of length inversions(p) with underlying
// permutation p in which each strand pair crosses at most once.  Built by
// bubble-sorting the one-line form and emitting one generator per adjacent
// swap.
BraidWord permutation_braid(const Permutation& p);

}  // namespace braid
