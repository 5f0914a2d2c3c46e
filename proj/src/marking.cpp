#include "braid/marking.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <set>

namespace braid {

void validate_marking(const Marking& m, const BraidWord& w) {
  int len = static_cast<int>(w.letters.size());
  for (const auto& [label, pair] : m.positions) {
    auto [a, b] = pair;
    if (a == b) {
      throw ValidationError("marking label '" + label +
                            "' repeats position " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= len || b >= len) {
      throw ValidationError("marking label '" + label +
                            "' points outside the word");
    }
  }
}

int transfer_position(const BasicReduction& r, int pos) {
  switch (r.kind) {
    case ReductionKind::YbUp:
    case ReductionKind::YbDown:
      if (pos == r.position) return r.position + 2;
      if (pos == r.position + 2) return r.position;
      return pos;
    case ReductionKind::C:
      if (pos == r.position) return r.position + 1;
      if (pos == r.position + 1) return r.position;
      return pos;
    default:
      throw ValidationError(
          "only length-preserving basic steps transfer positions");
  }
}

BasicReduction inverse_move(const BasicReduction& r) {
  BasicReduction inv = r;
  switch (r.kind) {
    case ReductionKind::YbUp:
      inv.kind = ReductionKind::YbDown;
      return inv;
    case ReductionKind::YbDown:
      inv.kind = ReductionKind::YbUp;
      return inv;
    case ReductionKind::C:
      std::swap(inv.i, inv.j);
      return inv;
    default:
      throw ValidationError("only length-preserving basic steps have inverses");
  }
}

Marking transfer_marking(const Marking& m, const BraidWord& w,
                         const BasicReduction& r) {
  if (r.kind == ReductionKind::V) {
    throw ValidationError("cancellation steps do not transfer markings");
  }
  validate_marking(m, w);
  BraidWord cur = w;
  Marking out = m;
  for (const BasicReduction& step : expand_composite(r)) {
    cur = apply_basic(cur, step);  // validates the pattern as we go
    for (auto& [label, pair] : out.positions) {
      pair.first = transfer_position(step, pair.first);
      pair.second = transfer_position(step, pair.second);
    }
  }
  return out;
}

std::map<std::string, int> distance(const Marking& m) {
  std::map<std::string, int> out;
  for (const auto& [label, pair] : m.positions) {
    out[label] = std::abs(pair.first - pair.second);
  }
  return out;
}

const char* to_text(GenericCase c) {
  switch (c) {
    case GenericCase::BothShared:
      return "BothShared";
    case GenericCase::OneShared:
      return "OneShared";
    default:
      return "Disjoint";
  }
}

GenericSituation make_generic_situation(const BraidWord& word,
                                        std::vector<BasicReduction> moves,
                                        const BasicReduction& v,
                                        const BasicReduction& v_prime) {
  require_positive(word);
  if (v.kind != ReductionKind::V || v_prime.kind != ReductionKind::V) {
    throw ValidationError("generic situations need two cancellation redexes");
  }
  apply_basic(word, v);  // validates that v matches word
  BraidWord moved = word;
  for (const BasicReduction& f : moves) {
    if (f.kind == ReductionKind::V) {
      throw ValidationError("the move chain must be length-preserving");
    }
    moved = apply_basic(moved, f);
  }
  apply_basic(moved, v_prime);  // validates v' against the moved word

  // Pull the second redex's positions back through the chain.  Each move's
  // position map is an involution, so applying it again inverts it.
  std::pair<int, int> y{v_prime.position, v_prime.position + 1};
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    for (const BasicReduction& step : [&] {
           auto basic = expand_composite(*it);
           std::reverse(basic.begin(), basic.end());
           return basic;
         }()) {
      y.first = transfer_position(inverse_move(step), y.first);
      y.second = transfer_position(inverse_move(step), y.second);
    }
  }

  GenericSituation g;
  g.word = word;
  g.moves = std::move(moves);
  g.v = v;
  g.v_prime = v_prime;
  g.canonical_marking.positions["x"] = {v.position, v.position + 1};
  g.canonical_marking.positions["y"] = y;
  validate_marking(g.canonical_marking, word);
  return g;
}

GenericCase classify_generic(const GenericSituation& g) {
  const auto& pos = g.canonical_marking.positions;
  auto [x1, x2] = pos.at("x");
  auto [y1, y2] = pos.at("y");
  std::set<int> xs{x1, x2};
  std::set<int> ys{y1, y2};
  std::vector<int> shared;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                        std::back_inserter(shared));
  if (shared.size() == 2) return GenericCase::BothShared;
  if (shared.size() == 1) return GenericCase::OneShared;
  return GenericCase::Disjoint;
}

}  // namespace braid
