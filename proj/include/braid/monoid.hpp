#pragma once
// Positive-braid monoid algorithms: the word equivalence class under the
// length-preserving braid moves, the left-greedy normal form, starting and
// finishing sets, the left-weighted factorization, and minimality.

#include <set>
#include <utility>
#include <vector>

#include "braid/permutation.hpp"
#include "braid/word.hpp"

namespace braid {

inline constexpr int kDefaultBudget = 100000;

// Left-greedy normal form of a positive braid: the factor permutations in
// order, each a non-identity permutation realized by its minimal word.  Two
// positive words are monoid-equal iff their normal forms coincide.
struct NormalForm {
  int n = 1;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// All positive words connected to w by the two length-preserving moves
// (the braid relation on adjacent generators and commutation of distant
// ones), sorted lexicographically.  Throws BudgetError when the class
// exceeds `budget` distinct words.
std::vector<BraidWord> positive_class(const BraidWord& w,
                                      int budget = kDefaultBudget);

NormalForm normal_form(const BraidWord& w);

// Concatenation of the factors' minimal words: the canonical spelling.
BraidWord word_of(const NormalForm& nf);

// Generators that can begin / end some positive word equal to w.
std::set<int> starting_set(const BraidWord& w);
std::set<int> finishing_set(const BraidWord& w);

// Equality in the positive monoid (same strand count required).
bool monoid_equal(const BraidWord& a, const BraidWord& b);

// True when no shorter positive word spells the same braid, equivalently
// when every strand pair crosses at most once.
bool is_minimal(const BraidWord& w);

// Splits w as tau * omega with tau the longest minimal prefix divisor; the
// starting set of omega is contained in the finishing set of tau, which
// guarantees a squared-generator redex whenever omega is nonempty.  The
// empty word yields two empty words.
std::pair<BraidWord, BraidWord> left_weighted_factorization(const BraidWord& w);

// --- factor surgery on minimal braids (used by the normal form and the
// reducer; each factor is stored as its permutation) ---

std::set<int> starting_set(const Permutation& p);   // descents of p
std::set<int> finishing_set(const Permutation& p);  // descents of p^-1

// Whether p * sigma_i is still minimal (strands ending at i, i+1 uncrossed).
bool can_append(const Permutation& p, int i);
Permutation append_letter(const Permutation& p, int i);  // p * sigma_i

// Whether sigma_i can be split off the front / back of p.
bool can_remove_front(const Permutation& p, int i);
Permutation remove_front(const Permutation& p, int i);  // sigma_i^-1 * p
bool can_remove_back(const Permutation& p, int i);
Permutation remove_back(const Permutation& p, int i);  // p * sigma_i^-1

}  // namespace braid
