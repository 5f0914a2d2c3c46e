#pragma once
// The reduction calculus on positive words: one-step moves (braid move up
// and down, distant commutation, squared-generator cancellation), composite
// forms, replayable traces with a bit-exact text format, recorded move
// paths, the complete-reduction algorithm, and the confluence harness.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braid/monoid.hpp"
#include "braid/word.hpp"

namespace braid {

// Step kinds.  YbUp rewrites (i, i+1, i) -> (i+1, i, i+1); YbDown is the
// reverse pattern; C swaps distant commuting letters; V deletes a squared
// generator.  The *N kinds are composite powers that expand to basic steps.
enum class ReductionKind { YbUp, YbDown, C, V, YbUpN, YbDownN, CN };

struct BasicReduction {
  ReductionKind kind = ReductionKind::YbUp;
  int position = 0;  // 0-based index of the leftmost affected letter
  int i = 0;         // generator index (C: left letter; V: the letter)
  int j = 0;         // C only: right letter
  int power = 1;     // composite kinds only, >= 1

  friend bool operator==(const BasicReduction&, const BasicReduction&) = default;
};

bool is_composite(const BasicReduction& r);

// The basic step list a composite stands for; basic steps expand to
// themselves.  A composite with power 1 expands to its basic form.
std::vector<BasicReduction> expand_composite(const BasicReduction& r);

// All applicable basic steps, positions ascending (at most one basic step
// matches any given position).
std::vector<BasicReduction> enumerate_redexes(const BraidWord& w);

// Applies one step (composites are expanded first).  Throws RedexError when
// the pattern at r.position does not match.
BraidWord apply_basic(const BraidWord& w, const BasicReduction& r);

// A replayable reduction: applying `steps` to `source` in order must yield
// `target` letter for letter.  Steps are stored in basic form; composite
// origins are kept as side annotations (step index -> note) and are not
// serialized.
struct ReductionTrace {
  BraidWord source;
  BraidWord target;
  std::vector<BasicReduction> steps;
  std::vector<std::pair<std::size_t, std::string>> annotations;

  friend bool operator==(const ReductionTrace& a, const ReductionTrace& b) {
    return a.source == b.source && a.target == b.target && a.steps == b.steps;
  }
};

// Number of V steps.
int reduction_length(const ReductionTrace& t);

struct TraceCheck {
  bool ok = true;
  std::size_t failed_step = 0;  // index of the first failing step
  std::string reason;           // empty when ok
};

TraceCheck verify_trace_detail(const ReductionTrace& t);
bool verify_trace(const ReductionTrace& t);

// Text format: "source: <word>" line, "target: <word>" line, then one step
// per line ("YB+ @3", "YB- @0", "C @2 (1,3)", "V @5 (2)").  Round trips
// bit-exactly.
std::string to_text(const ReductionTrace& t);
ReductionTrace trace_from_text(std::string_view text);

std::string to_text(const BasicReduction& r);  // one step line, no newline

// Records an explicit step list of length-preserving moves from one positive
// word to another spelling of the same braid, by surfacing the target's
// letters one at a time (no search).  Throws ValidationError when the words
// are not monoid-equal, BudgetError if the step list exceeds the budget.
std::vector<BasicReduction> find_move_path(const BraidWord& from,
                                           const BraidWord& to,
                                           int budget = kDefaultBudget);

// Breadth-first search oracle for the same problem; used to validate
// find_move_path on small inputs.  Budget bounds the number of distinct
// words explored.
std::vector<BasicReduction> find_move_path_bfs(const BraidWord& from,
                                               const BraidWord& to,
                                               int budget = kDefaultBudget);

// Reduces w to a minimal word: repeatedly factor as tau * omega, surface the
// smallest generator that starts omega next to its copy ending tau, cancel
// the square, and continue.  The trace replays from w to the target; a
// minimal input yields an empty trace.
ReductionTrace complete_reduce(const BraidWord& w, int budget = kDefaultBudget);

struct ConfluenceBranch {
  BasicReduction first;  // the one-step redex this branch starts with
  BraidWord target;      // minimal target after completing the reduction
  int v_count = 0;       // V steps including the first step if it was V
};

struct ConfluenceReport {
  BraidWord word;
  std::vector<ConfluenceBranch> branches;
  int v_count = 0;  // V count of the direct complete reduction
  bool targets_equal = true;
  bool v_counts_equal = true;
  bool diamonds_ok = true;
  int pairs_checked = 0;
  bool partial = false;  // a budget ran out before finishing

  bool confluent() const {
    return targets_equal && v_counts_equal && diamonds_ok && !partial;
  }
};

// Completes every one-step reduct of w and checks that all reached minimal
// targets agree, that every strategy spends the same number of V steps, and
// that each pair of one-step reducts rejoins.
ConfluenceReport check_confluence(const BraidWord& w,
                                  int budget = kDefaultBudget);

std::string to_text(const ConfluenceReport& r);

}  // namespace braid
