#pragma once
// Markings label ordered pairs of letter positions in a positive word and
// follow the length-preserving moves: a braid move swaps its two outer
// positions, a commutation swaps its two positions, and cancellation steps
// are unsupported.  Generic situations pair two cancellation redexes across
// a move chain and classify how their marked positions overlap.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braid/rewrite.hpp"
#include "braid/word.hpp"

namespace braid {

// label -> ordered pair of distinct 0-based letter positions.
struct Marking {
  std::map<std::string, std::pair<int, int>> positions;

  friend bool operator==(const Marking&, const Marking&) = default;
};

// Throws ValidationError unless every pair is distinct and within the word.
void validate_marking(const Marking& m, const BraidWord& w);

// Where the letter at `pos` lands under the length-preserving step r
// (positions outside the redex window are fixed).  r must be basic YB or C.
int transfer_position(const BasicReduction& r, int pos);

// The step undoing r at the same window (braid moves swap direction,
// commutations swap their letters).  Basic YB/C only.
BasicReduction inverse_move(const BasicReduction& r);

// Pushes every marked position through r (composite YB/C forms are expanded;
// V steps raise ValidationError).  m must be valid on w, and r must apply
// to w.
Marking transfer_marking(const Marking& m, const BraidWord& w,
                         const BasicReduction& r);

// Absolute position difference per label.
std::map<std::string, int> distance(const Marking& m);

// A squared-generator redex on `word`, a chain of length-preserving moves,
// and a second squared-generator redex on the moved word.  The canonical
// marking labels the first redex "x" and the pullback of the second redex
// through the chain "y".
struct GenericSituation {
  BraidWord word;
  std::vector<BasicReduction> moves;  // YB/C only
  BasicReduction v;                   // applies to word
  BasicReduction v_prime;             // applies to word after the moves
  Marking canonical_marking;
};

enum class GenericCase { BothShared, OneShared, Disjoint };

const char* to_text(GenericCase c);

// Validates the pieces and computes the canonical marking.
GenericSituation make_generic_situation(const BraidWord& word,
                                        std::vector<BasicReduction> moves,
                                        const BasicReduction& v,
                                        const BasicReduction& v_prime);

// How the x-pair and y-pair of the canonical marking overlap as sets:
// equal, sharing exactly one position, or disjoint.
GenericCase classify_generic(const GenericSituation& g);

}  // namespace braid
