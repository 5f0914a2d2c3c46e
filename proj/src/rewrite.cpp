#include "braid/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace braid {

bool is_composite(const BasicReduction& r) {
  return r.kind == ReductionKind::YbUpN || r.kind == ReductionKind::YbDownN ||
         r.kind == ReductionKind::CN;
}

std::vector<BasicReduction> expand_composite(const BasicReduction& r) {
  if (!is_composite(r)) return {r};
  if (r.power < 1) {
    throw ValidationError("composite power must be >= 1, got " +
                          std::to_string(r.power));
  }
  std::vector<BasicReduction> out;
  out.reserve(static_cast<std::size_t>(r.power));
  switch (r.kind) {
    case ReductionKind::YbUpN:
      // (i, i+1, i^n) -> (i+1^n, i, i+1): braid moves sweeping left to right.
      for (int k = 0; k < r.power; ++k) {
        out.push_back({ReductionKind::YbUp, r.position + k, r.i, 0, 1});
      }
      break;
    case ReductionKind::YbDownN:
      // (i+1, i, i+1^n) -> (i^n, i+1, i).
      for (int k = 0; k < r.power; ++k) {
        out.push_back({ReductionKind::YbDown, r.position + k, r.i, 0, 1});
      }
      break;
    case ReductionKind::CN:
      // (i^n, j) -> (j, i^n): commute j leftwards across each copy.
      for (int k = r.power - 1; k >= 0; --k) {
        out.push_back({ReductionKind::C, r.position + k, r.i, r.j, 1});
      }
      break;
    default:
      break;
  }
  return out;
}

std::vector<BasicReduction> enumerate_redexes(const BraidWord& w) {
  require_positive(w);
  std::vector<BasicReduction> out;
  const auto& L = w.letters;
  std::size_t len = L.size();
  for (std::size_t p = 0; p < len; ++p) {
    if (p + 2 < len && L[p + 1] == L[p] + 1 && L[p + 2] == L[p]) {
      out.push_back({ReductionKind::YbUp, static_cast<int>(p), L[p], 0, 1});
      continue;
    }
    if (p + 2 < len && L[p + 1] == L[p] - 1 && L[p + 2] == L[p]) {
      out.push_back(
          {ReductionKind::YbDown, static_cast<int>(p), L[p + 1], 0, 1});
      continue;
    }
    if (p + 1 < len && std::abs(L[p] - L[p + 1]) > 1) {
      out.push_back(
          {ReductionKind::C, static_cast<int>(p), L[p], L[p + 1], 1});
      continue;
    }
    if (p + 1 < len && L[p] == L[p + 1]) {
      out.push_back({ReductionKind::V, static_cast<int>(p), L[p], 0, 1});
    }
  }
  return out;
}

namespace {

[[noreturn]] void redex_fail(const BasicReduction& r, const std::string& expected) {
  throw RedexError("step at position " + std::to_string(r.position) +
                   " does not match: expected " + expected);
}

BraidWord apply_one(const BraidWord& w, const BasicReduction& r) {
  const auto& L = w.letters;
  std::size_t len = L.size();
  std::size_t p = static_cast<std::size_t>(r.position);
  if (r.position < 0) redex_fail(r, "a nonnegative position");
  BraidWord out = w;
  switch (r.kind) {
    case ReductionKind::YbUp: {
      if (len < 3 || p > len - 3) redex_fail(r, "pattern (i, i+1, i)");
      int i = L[p];
      if (L[p + 1] != i + 1 || L[p + 2] != i) redex_fail(r, "pattern (i, i+1, i)");
      if (r.i != 0 && r.i != i) redex_fail(r, "generator " + std::to_string(r.i));
      out.letters[p] = i + 1;
      out.letters[p + 1] = i;
      out.letters[p + 2] = i + 1;
      return out;
    }
    case ReductionKind::YbDown: {
      if (len < 3 || p > len - 3) redex_fail(r, "pattern (i+1, i, i+1)");
      int i = L[p + 1];
      if (L[p] != i + 1 || L[p + 2] != i + 1) redex_fail(r, "pattern (i+1, i, i+1)");
      if (r.i != 0 && r.i != i) redex_fail(r, "generator " + std::to_string(r.i));
      out.letters[p] = i;
      out.letters[p + 1] = i + 1;
      out.letters[p + 2] = i;
      return out;
    }
    case ReductionKind::C: {
      if (len < 2 || p > len - 2) redex_fail(r, "two distant letters");
      int a = L[p], b = L[p + 1];
      if (std::abs(a - b) <= 1) redex_fail(r, "two distant letters");
      if (r.i != 0 && r.i != a) redex_fail(r, "left letter " + std::to_string(r.i));
      if (r.j != 0 && r.j != b) redex_fail(r, "right letter " + std::to_string(r.j));
      std::swap(out.letters[p], out.letters[p + 1]);
      return out;
    }
    case ReductionKind::V: {
      if (len < 2 || p > len - 2) redex_fail(r, "a squared generator");
      int a = L[p];
      if (L[p + 1] != a) redex_fail(r, "a squared generator");
      if (r.i != 0 && r.i != a) redex_fail(r, "generator " + std::to_string(r.i));
      out.letters.erase(out.letters.begin() + static_cast<long>(p),
                        out.letters.begin() + static_cast<long>(p) + 2);
      return out;
    }
    default:
      redex_fail(r, "a basic step kind");
  }
}

}  // namespace

BraidWord apply_basic(const BraidWord& w, const BasicReduction& r) {
  require_positive(w);
  BraidWord cur = w;
  for (const BasicReduction& step : expand_composite(r)) {
    cur = apply_one(cur, step);
  }
  return cur;
}

int reduction_length(const ReductionTrace& t) {
  return static_cast<int>(
      std::count_if(t.steps.begin(), t.steps.end(), [](const BasicReduction& s) {
        return s.kind == ReductionKind::V;
      }));
}

TraceCheck verify_trace_detail(const ReductionTrace& t) {
  TraceCheck check;
  if (t.source.n != t.target.n) {
    return {false, 0, "source and target strand counts differ"};
  }
  BraidWord cur = t.source;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    if (is_composite(t.steps[k])) {
      return {false, k, "composite step stored in trace"};
    }
    try {
      cur = apply_basic(cur, t.steps[k]);
    } catch (const Error& e) {
      return {false, k, std::string("step ") + std::to_string(k) +
                            " failed to apply: " + e.what()};
    }
  }
  if (!(cur == t.target)) {
    return {false, t.steps.size(),
            "replay ends at " + to_text(cur) + ", trace claims " +
                to_text(t.target)};
  }
  return check;
}

bool verify_trace(const ReductionTrace& t) { return verify_trace_detail(t).ok; }

std::string to_text(const BasicReduction& r) {
  switch (r.kind) {
    case ReductionKind::YbUp:
      return "YB+ @" + std::to_string(r.position);
    case ReductionKind::YbDown:
      return "YB- @" + std::to_string(r.position);
    case ReductionKind::C:
      return "C @" + std::to_string(r.position) + " (" + std::to_string(r.i) +
             "," + std::to_string(r.j) + ")";
    case ReductionKind::V:
      return "V @" + std::to_string(r.position) + " (" + std::to_string(r.i) +
             ")";
    default:
      throw ValidationError("composite steps have no serialized form");
  }
}

std::string to_text(const ReductionTrace& t) {
  std::string out = "source: " + to_text(t.source) + "\n";
  out += "target: " + to_text(t.target) + "\n";
  for (const BasicReduction& s : t.steps) out += to_text(s) + "\n";
  return out;
}

namespace {

// Parses one step line; `line_no` is 1-based for error reporting.
BasicReduction step_from_line(const std::string& line, std::size_t line_no) {
  auto fail = [&](const std::string& msg, std::size_t col) -> BasicReduction {
    throw ParseError(msg, line_no, col);
  };
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < line.size() && line[pos] == ' ') ++pos; };
  auto read_int = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start) fail(std::string("expected ") + what, pos + 1);
    return std::atoi(line.substr(start, pos - start).c_str());
  };

  skip_ws();
  BasicReduction r;
  if (line.compare(pos, 3, "YB+") == 0) {
    r.kind = ReductionKind::YbUp;
    pos += 3;
  } else if (line.compare(pos, 3, "YB-") == 0) {
    r.kind = ReductionKind::YbDown;
    pos += 3;
  } else if (line.compare(pos, 1, "C") == 0) {
    r.kind = ReductionKind::C;
    pos += 1;
  } else if (line.compare(pos, 1, "V") == 0) {
    r.kind = ReductionKind::V;
    pos += 1;
  } else {
    fail("expected step kind YB+, YB-, C, or V", pos + 1);
  }
  skip_ws();
  if (pos >= line.size() || line[pos] != '@') fail("expected '@position'", pos + 1);
  ++pos;
  r.position = read_int("position");
  if (r.kind == ReductionKind::C) {
    skip_ws();
    if (pos >= line.size() || line[pos] != '(') fail("expected '(i,j)'", pos + 1);
    ++pos;
    r.i = read_int("generator index");
    skip_ws();
    if (pos >= line.size() || line[pos] != ',') fail("expected ','", pos + 1);
    ++pos;
    r.j = read_int("generator index");
    skip_ws();
    if (pos >= line.size() || line[pos] != ')') fail("expected ')'", pos + 1);
    ++pos;
  } else if (r.kind == ReductionKind::V) {
    skip_ws();
    if (pos >= line.size() || line[pos] != '(') fail("expected '(i)'", pos + 1);
    ++pos;
    r.i = read_int("generator index");
    skip_ws();
    if (pos >= line.size() || line[pos] != ')') fail("expected ')'", pos + 1);
    ++pos;
  }
  skip_ws();
  if (pos != line.size()) fail("unexpected trailing input", pos + 1);
  return r;
}

}  // namespace

ReductionTrace trace_from_text(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.size() < 2) throw ParseError("expected source and target lines", 1, 1);
  if (lines[0].rfind("source:", 0) != 0) {
    throw ParseError("expected 'source: <word>'", 1, 1);
  }
  if (lines[1].rfind("target:", 0) != 0) {
    throw ParseError("expected 'target: <word>'", 2, 1);
  }
  ReductionTrace t;
  try {
    t.source = word_from_text(std::string_view(lines[0]).substr(7));
  } catch (const ParseError& e) {
    throw ParseError("bad source word: " + std::string(e.what()), 1, 8 + e.column() - 1);
  }
  try {
    t.target = word_from_text(std::string_view(lines[1]).substr(7));
  } catch (const ParseError& e) {
    throw ParseError("bad target word: " + std::string(e.what()), 2, 8 + e.column() - 1);
  }
  for (std::size_t k = 2; k < lines.size(); ++k) {
    if (lines[k].empty()) continue;
    t.steps.push_back(step_from_line(lines[k], k + 1));
  }
  return t;
}

namespace {

// Brings one occurrence of generator g to position `pos` of w (mutating w in
// place and recording the applied steps).  Precondition: g starts the braid
// spelled by w[pos..]; violations surface as validation errors.
void surface_letter(BraidWord& w, std::size_t pos, int g,
                    std::vector<BasicReduction>& steps, int budget) {
  if (static_cast<int>(steps.size()) > budget) {
    throw BudgetError("move path exceeds budget of " + std::to_string(budget) +
                      " steps");
  }
  if (pos >= w.letters.size()) {
    throw ValidationError("no move path: words are not monoid-equal");
  }
  if (w.letters[pos] == g) return;
  int k = w.letters[pos];
  if (std::abs(k - g) > 1) {
    surface_letter(w, pos + 1, g, steps, budget);
    BasicReduction c{ReductionKind::C, static_cast<int>(pos), k, g, 1};
    w = apply_basic(w, c);
    steps.push_back(c);
  } else {
    surface_letter(w, pos + 1, g, steps, budget);
    surface_letter(w, pos + 2, k, steps, budget);
    // w[pos..pos+2] is now (k, g, k) with |k - g| = 1.
    BasicReduction yb{k < g ? ReductionKind::YbUp : ReductionKind::YbDown,
                      static_cast<int>(pos), std::min(k, g), 0, 1};
    w = apply_basic(w, yb);
    steps.push_back(yb);
  }
}

}  // namespace

std::vector<BasicReduction> find_move_path(const BraidWord& from,
                                           const BraidWord& to, int budget) {
  require_positive(from);
  require_positive(to);
  if (!monoid_equal(from, to)) {
    throw ValidationError("no move path: words are not monoid-equal");
  }
  BraidWord cur = from;
  std::vector<BasicReduction> steps;
  for (std::size_t k = 0; k < to.letters.size(); ++k) {
    surface_letter(cur, k, to.letters[k], steps, budget);
  }
  if (!(cur == to)) {
    throw Error("internal: letter extraction missed its target word");
  }
  return steps;
}

std::vector<BasicReduction> find_move_path_bfs(const BraidWord& from,
                                               const BraidWord& to,
                                               int budget) {
  require_positive(from);
  require_positive(to);
  if (from.n != to.n) {
    throw ValidationError("words live on different strand counts");
  }
  if (from.letters == to.letters) return {};
  struct Parent {
    std::vector<int> word;
    BasicReduction step;
  };
  std::map<std::vector<int>, Parent> parent;
  std::deque<std::vector<int>> queue{from.letters};
  std::set<std::vector<int>> seen{from.letters};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    BraidWord cw{from.n, cur};
    for (const BasicReduction& r : enumerate_redexes(cw)) {
      if (r.kind == ReductionKind::V) continue;  // length-preserving moves only
      BraidWord nb = apply_basic(cw, r);
      if (seen.contains(nb.letters)) continue;
      if (static_cast<int>(seen.size()) >= budget) {
        throw BudgetError("move path search exceeds budget of " +
                          std::to_string(budget) + " words");
      }
      seen.insert(nb.letters);
      parent[nb.letters] = {cur, r};
      if (nb.letters == to.letters) {
        std::vector<BasicReduction> steps;
        std::vector<int> at = nb.letters;
        while (at != from.letters) {
          const Parent& p = parent.at(at);
          steps.push_back(p.step);
          at = p.word;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
      }
      queue.push_back(nb.letters);
    }
  }
  throw ValidationError("no move path: words are not monoid-equal");
}

ReductionTrace complete_reduce(const BraidWord& w, int budget) {
  require_positive(w);
  ReductionTrace trace;
  trace.source = w;
  BraidWord cur = w;
  while (true) {
    NormalForm nf = normal_form(cur);
    if (nf.factors.size() <= 1) break;  // minimal word reached
    const Permutation& f1 = nf.factors[0];
    const Permutation& f2 = nf.factors[1];
    int i = *starting_set(f2).begin();  // smallest admissible generator
    // f1 ends with sigma_i because the pair (f1, f2) is left-weighted.
    BraidWord head = permutation_braid(remove_back(f1, i));
    BraidWord staged = head;
    staged.letters.push_back(i);
    staged.letters.push_back(i);
    BraidWord f2w = permutation_braid(remove_front(f2, i));
    staged.letters.insert(staged.letters.end(), f2w.letters.begin(),
                          f2w.letters.end());
    for (std::size_t j = 2; j < nf.factors.size(); ++j) {
      BraidWord fw = permutation_braid(nf.factors[j]);
      staged.letters.insert(staged.letters.end(), fw.letters.begin(),
                            fw.letters.end());
    }
    for (const BasicReduction& s : find_move_path(cur, staged, budget)) {
      trace.steps.push_back(s);
    }
    BasicReduction v{ReductionKind::V, static_cast<int>(head.letters.size()), i,
                     0, 1};
    trace.steps.push_back(v);
    cur = apply_basic(staged, v);
  }
  trace.target = cur;
  return trace;
}

ConfluenceReport check_confluence(const BraidWord& w, int budget) {
  require_positive(w);
  ConfluenceReport rep;
  rep.word = w;
  try {
    ReductionTrace direct = complete_reduce(w, budget);
    rep.v_count = reduction_length(direct);
    for (const BasicReduction& r : enumerate_redexes(w)) {
      BraidWord u = apply_basic(w, r);
      ReductionTrace t = complete_reduce(u, budget);
      ConfluenceBranch branch;
      branch.first = r;
      branch.target = t.target;
      branch.v_count = reduction_length(t) + (r.kind == ReductionKind::V ? 1 : 0);
      rep.targets_equal &= monoid_equal(branch.target, direct.target);
      rep.v_counts_equal &= branch.v_count == rep.v_count;
      rep.branches.push_back(std::move(branch));
    }
    for (std::size_t a = 0; a < rep.branches.size(); ++a) {
      for (std::size_t b = a + 1; b < rep.branches.size(); ++b) {
        rep.diamonds_ok &=
            monoid_equal(rep.branches[a].target, rep.branches[b].target);
        ++rep.pairs_checked;
      }
    }
  } catch (const BudgetError&) {
    rep.partial = true;
  }
  return rep;
}

std::string to_text(const ConfluenceReport& r) {
  std::ostringstream out;
  out << "word: " << to_text(r.word) << "\n";
  out << "redexes: " << r.branches.size() << "\n";
  for (const ConfluenceBranch& b : r.branches) {
    out << "branch " << to_text(b.first) << " -> " << to_text(b.target)
        << " ; v=" << b.v_count << "\n";
  }
  out << "targets equal: " << (r.targets_equal ? "yes" : "no") << "\n";
  out << "v-counts equal: " << (r.v_counts_equal ? "yes" : "no") << "\n";
  out << "diamonds ok: " << (r.diamonds_ok ? "yes" : "no") << " ("
      << r.pairs_checked << " pairs)\n";
  if (r.partial) out << "partial: budget exceeded\n";
  out << "confluent: " << (r.confluent() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace braid
