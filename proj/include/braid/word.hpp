#pragma once
// Braid words on a fixed number of strands, with the one-line text format
// "n: s1 s2 s1" (sK = positive generator K, SK = its inverse, empty word
// allowed as "n:").

#include <string>
#include <string_view>
#include <vector>

#include "braid/errors.hpp"

namespace braid {

// A word in the braid group on `n` strands.  Letters are signed generator
// indices: +i is the positive crossing of strands i and i+1, -i its inverse,
// with 1 <= i <= n-1.  Most algorithms in this library require positive
// words (no negative letters); the sign is carried so inverse block braids
// can be represented and printed.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// True when no letter is negative.
bool is_positive(const BraidWord& w);

// Throws ValidationError unless n >= 1 and every letter k has 1 <= |k| <= n-1.
void validate(const BraidWord& w);

// validate() plus positivity; throws ValidationError otherwise.
void require_positive(const BraidWord& w);

std::size_t length(const BraidWord& w);

// Renders "3: s1 s2 S1"; the empty word on n strands renders as "3:".
std::string to_text(const BraidWord& w);

// Parses the format produced by to_text.  Throws ParseError with a 1-based
// column for malformed syntax and out-of-range generator indices.
BraidWord word_from_text(std::string_view text);

// Concatenation; both words must share the same strand count.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Re-embeds w into `n` strands shifting every generator index by `offset`
// (sign preserved).  Throws ValidationError if an index leaves [1, n-1].
BraidWord shifted_embed(const BraidWord& w, int offset, int n);

// Letter order reversed, signs kept: the word read back to front.
BraidWord reversed(const BraidWord& w);

// Group inverse: letter order reversed and every sign flipped.
BraidWord inverse(const BraidWord& w);

}  // namespace braid
