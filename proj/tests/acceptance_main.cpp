// Acceptance gate: one check per shipped guarantee, one PASS/FAIL line each.
// Exercises the reduction engine, the enumeration oracles, marking transfer,
// the coherence decision, the word/permutation functors, the cube operad and
// path catalogue, and the command-line tool, at desk scale.  Exits nonzero
// if any line fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braid/cubes.hpp"
#include "braid/errors.hpp"
#include "braid/marking.hpp"
#include "braid/monoid.hpp"
#include "braid/rewrite.hpp"
#include "braid/term.hpp"

using namespace braid;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// All positive words on n strands with the given length, in odometer order.
void for_each_word(int n, int len, const std::function<void(const BraidWord&)>& fn) {
  std::vector<int> digits(static_cast<std::size_t>(len), 1);
  if (len == 0) {
    fn(BraidWord{n, {}});
    return;
  }
  for (;;) {
    fn(BraidWord{n, digits});
    int k = len - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == n - 1) {
      digits[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++digits[static_cast<std::size_t>(k)];
  }
}

std::vector<BraidWord> exhaustive_corpus(int max_n, int max_len) {
  std::vector<BraidWord> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int len = 0; len <= max_len; ++len) {
      for_each_word(n, len, [&](const BraidWord& w) { out.push_back(w); });
    }
  }
  return out;
}

BraidWord random_word(std::mt19937& rng, int n_lo, int n_hi, int len_lo,
                      int len_hi) {
  int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
  int len = std::uniform_int_distribution<int>(len_lo, len_hi)(rng);
  BraidWord w{n, {}};
  std::uniform_int_distribution<int> letter(1, n - 1);
  for (int k = 0; k < len; ++k) w.letters.push_back(letter(rng));
  return w;
}

// Memoized move-class lookup: one breadth-first enumeration per class, the
// result shared by every member word.
class ClassOracle {
 public:
  using Class = std::shared_ptr<const std::vector<BraidWord>>;

  Class class_of(const BraidWord& w) {
    std::string key = to_text(w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto cls = std::make_shared<const std::vector<BraidWord>>(positive_class(w));
    for (const BraidWord& m : *cls) memo_[to_text(m)] = cls;
    return cls;
  }

  std::set<int> oracle_starting(const BraidWord& w) {
    std::set<int> out;
    for (const BraidWord& m : *class_of(w)) {
      if (!m.letters.empty()) out.insert(m.letters.front());
    }
    return out;
  }

  std::set<int> oracle_finishing(const BraidWord& w) {
    std::set<int> out;
    for (const BraidWord& m : *class_of(w)) {
      if (!m.letters.empty()) out.insert(m.letters.back());
    }
    return out;
  }

  // Left-divisibility of w by the braid spelled by `letters`, decided by
  // stripping letters through the move class (valid by cancellativity).
  bool left_divides(const std::vector<int>& letters, const BraidWord& w) {
    BraidWord rest = w;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const int l = letters[k];
      bool found = false;
      for (const BraidWord& m : *class_of(rest)) {
        if (!m.letters.empty() && m.letters.front() == l) {
          rest = BraidWord{m.n, {m.letters.begin() + 1, m.letters.end()}};
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

 private:
  std::map<std::string, Class> memo_;
};

std::string nf_text(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  std::string out = std::to_string(nf.n) + "|";
  for (const Permutation& p : nf.factors) out += to_text(p);
  return out;
}

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  for (int i : s) out += std::to_string(i) + ",";
  return out + "}";
}

// --- random well-typed cells ------------------------------------------------

ObjPtr random_obj(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (depth == 0 || pct(rng) < 45) {
    if (pct(rng) < 15) return Obj::unit();
    // Heavy label repetition keeps random parallel targets frequent.
    return Obj::gen(pct(rng) < 75 ? "a" : "b");
  }
  return Obj::tensor(random_obj(rng, depth - 1), random_obj(rng, depth - 1));
}

CellPtr random_cell_from(const ObjPtr& source, std::mt19937& rng, int depth) {
  enum Choice { kId, kAssoc, kAssocInv, kLUnit, kRUnit, kLUnitInv, kRUnitInv,
                kBraid, kBraidInv, kTensor, kCompose };
  std::vector<Choice> menu = {kId, kLUnitInv, kRUnitInv};
  if (source->kind == Obj::Kind::Tensor) {
    menu.insert(menu.end(), {kBraid, kBraid, kBraidInv, kTensor, kTensor});
    if (source->left->kind == Obj::Kind::Tensor) menu.push_back(kAssoc);
    if (source->right->kind == Obj::Kind::Tensor) menu.push_back(kAssocInv);
    if (source->left->kind == Obj::Kind::Unit) menu.push_back(kLUnit);
    if (source->right->kind == Obj::Kind::Unit) menu.push_back(kRUnit);
  }
  if (depth > 0) menu.insert(menu.end(), {kCompose, kCompose, kCompose});
  Choice c = menu[std::uniform_int_distribution<std::size_t>(
      0, menu.size() - 1)(rng)];
  switch (c) {
    case kId: return Cell::id(source);
    case kAssoc:
      return Cell::assoc(source->left->left, source->left->right,
                         source->right);
    case kAssocInv:
      return Cell::assoc_inv(source->left, source->right->left,
                             source->right->right);
    case kLUnit: return Cell::lunit(source->right);
    case kRUnit: return Cell::runit(source->left);
    case kLUnitInv: return Cell::lunit_inv(source);
    case kRUnitInv: return Cell::runit_inv(source);
    case kBraid: return Cell::braid(source->left, source->right);
    case kBraidInv: return Cell::braid_inv(source->left, source->right);
    case kTensor:
      return Cell::tensor(random_cell_from(source->left, rng, depth - 1),
                          random_cell_from(source->right, rng, depth - 1));
    case kCompose: {
      CellPtr h1 = random_cell_from(source, rng, depth - 1);
      CellPtr h2 = random_cell_from(typecheck(h1).target, rng, depth - 1);
      return Cell::compose(h2, h1);
    }
  }
  return Cell::id(source);
}

// --- criteria ---------------------------------------------------------------

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

Outcome normal_form_uniqueness() {
  auto start = Clock::now();
  std::vector<BraidWord> corpus = exhaustive_corpus(4, 6);
  std::size_t exhaustive = corpus.size();
  std::mt19937 rng(20260801);
  for (int k = 0; k < 1000; ++k) corpus.push_back(random_word(rng, 2, 6, 1, 10));
  for (const BraidWord& w : corpus) {
    ReductionTrace t = complete_reduce(w);
    if (!verify_trace(t)) return fail("trace replay failed on " + to_text(w));
    if (!is_minimal(t.target)) {
      return fail("non-minimal target for " + to_text(w));
    }
    BraidWord canon = permutation_braid(underlying_permutation(w));
    if (!monoid_equal(t.target, canon)) {
      return fail("target of " + to_text(w) + " is not the minimal braid of " +
                  to_text(underlying_permutation(w)));
    }
    ConfluenceReport rep = check_confluence(w);
    if (!rep.targets_equal || rep.partial) {
      return fail("branch targets disagree on " + to_text(w));
    }
  }
  double secs = seconds_since(start);
  if (secs >= 60.0) return fail("exceeded 60 s budget");
  std::ostringstream os;
  os << exhaustive << " exhaustive + 1000 random words, all branch targets"
     << " identical, " << std::fixed;
  os.precision(1);
  os << secs << "s";
  return {true, os.str()};
}

Outcome v_count_rigidity() {
  std::vector<BraidWord> corpus = exhaustive_corpus(4, 6);
  std::mt19937 rng(20260801);  // the same corpus as the first criterion
  for (int k = 0; k < 1000; ++k) corpus.push_back(random_word(rng, 2, 6, 1, 10));
  for (const BraidWord& w : corpus) {
    int len = static_cast<int>(w.letters.size());
    int inv = underlying_permutation(w).inversions();
    if ((len - inv) % 2 != 0) {
      return fail("length minus inversions is odd on " + to_text(w));
    }
    if (reduction_length(complete_reduce(w)) != (len - inv) / 2) {
      return fail("cancellation count off on " + to_text(w));
    }
  }
  return {true, std::to_string(corpus.size()) +
                    " words, cancellations = (length - inversions)/2 exactly"};
}

Outcome oracle_agreement() {
  ClassOracle oracle;
  std::vector<BraidWord> corpus = exhaustive_corpus(4, 8);
  std::map<std::string, std::string> rep_to_nf;
  std::map<std::string, std::string> nf_to_rep;
  for (const BraidWord& w : corpus) {
    if (starting_set(w) != oracle.oracle_starting(w)) {
      return fail("starting set " + set_text(starting_set(w)) +
                  " != class oracle " + set_text(oracle.oracle_starting(w)) +
                  " on " + to_text(w));
    }
    if (finishing_set(w) != oracle.oracle_finishing(w)) {
      return fail("finishing set mismatch on " + to_text(w));
    }
    const BraidWord& rep = oracle.class_of(w)->front();
    if (!monoid_equal(w, rep)) {
      return fail("word not equal to its class representative: " + to_text(w));
    }
    // Equality agrees with the class oracle on the whole corpus exactly when
    // normal forms and class representatives determine each other.
    std::string r = to_text(rep), f = nf_text(w);
    auto [it1, new1] = rep_to_nf.emplace(r, f);
    if (!new1 && it1->second != f) {
      return fail("one class, two normal forms: " + to_text(w));
    }
    auto [it2, new2] = nf_to_rep.emplace(f, r);
    if (!new2 && it2->second != r) {
      return fail("one normal form, two classes: " + to_text(w));
    }
  }
  return {true, std::to_string(corpus.size()) + " words, " +
                    std::to_string(rep_to_nf.size()) +
                    " classes in bijection with normal forms"};
}

Outcome factorization_contract() {
  ClassOracle oracle;
  std::vector<BraidWord> corpus = exhaustive_corpus(4, 8);
  for (const BraidWord& w : corpus) {
    auto [tau, omega] = left_weighted_factorization(w);
    if (!is_minimal(tau)) return fail("head factor not minimal on " + to_text(w));
    if (!monoid_equal(concat(tau, omega), w)) {
      return fail("factors do not multiply back on " + to_text(w));
    }
    std::set<int> fin = finishing_set(tau);
    for (int i : starting_set(omega)) {
      if (!fin.count(i)) {
        return fail("tail can start with " + std::to_string(i) +
                    " but head cannot finish with it on " + to_text(w));
      }
    }
    // Maximality: no minimal braid left-divisor of w is longer than tau.
    int n = w.n;
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = k + 1;
    std::size_t best = 0;
    do {
      BraidWord cand = permutation_braid(Permutation::from_one_line(line));
      if (cand.letters.size() > best && cand.letters.size() <= w.letters.size() &&
          oracle.left_divides(cand.letters, w)) {
        best = cand.letters.size();
      }
    } while (std::next_permutation(line.begin(), line.end()));
    if (tau.letters.size() != best) {
      return fail("head factor length " + std::to_string(tau.letters.size()) +
                  " but a divisor of length " + std::to_string(best) +
                  " exists on " + to_text(w));
    }
  }
  return {true, std::to_string(corpus.size()) +
                    " words, head factor maximal against exhaustive divisor search"};
}

Outcome marking_transfer() {
  // The three table rows, letter for letter: the braid move reverses its
  // window, the commutation move swaps its two letters.
  BraidWord up = word_from_text("3: s1 s2 s1");
  BasicReduction r_up{ReductionKind::YbUp, 0, 1};
  if (transfer_position(r_up, 0) != 2 || transfer_position(r_up, 1) != 1 ||
      transfer_position(r_up, 2) != 0) {
    return fail("rising braid move does not reverse its window");
  }
  BraidWord down = word_from_text("3: s2 s1 s2");
  BasicReduction r_down{ReductionKind::YbDown, 0, 1};
  if (transfer_position(r_down, 0) != 2 || transfer_position(r_down, 1) != 1 ||
      transfer_position(r_down, 2) != 0) {
    return fail("falling braid move does not reverse its window");
  }
  BraidWord far = word_from_text("4: s1 s3");
  BasicReduction r_c{ReductionKind::C, 0, 1, 3};
  if (transfer_position(r_c, 0) != 1 || transfer_position(r_c, 1) != 0) {
    return fail("commutation move does not swap its letters");
  }
  // Unmarked crossings stay unmarked and positions outside the window stay
  // fixed.
  Marking outside{{{"x", {3, 4}}}};
  BraidWord wide = word_from_text("3: s1 s2 s1 s1 s2");
  if (transfer_marking(outside, wide, r_up) != outside) {
    return fail("positions outside the window moved");
  }
  if (!transfer_marking(Marking{}, wide, r_up).positions.empty()) {
    return fail("an unmarked word acquired marks");
  }

  std::mt19937 rng(20260805);
  int trials = 0;
  while (trials < 1000) {
    BraidWord w = random_word(rng, 2, 6, 2, 10);
    std::vector<BasicReduction> moves;
    for (const BasicReduction& r : enumerate_redexes(w)) {
      if (r.kind != ReductionKind::V) moves.push_back(r);
    }
    if (moves.empty()) continue;
    BasicReduction r = moves[std::uniform_int_distribution<std::size_t>(
        0, moves.size() - 1)(rng)];
    int len = static_cast<int>(w.letters.size());
    std::uniform_int_distribution<int> pos(0, len - 1);
    int a = pos(rng), b = pos(rng);
    while (b == a) b = pos(rng);
    Marking m{{{"x", {a, b}}}};
    BraidWord moved = apply_basic(w, r);
    Marking there = transfer_marking(m, w, r);
    Marking back = transfer_marking(there, moved, inverse_move(r));
    if (back != m) {
      return fail("transfer then inverse transfer moved a mark on " +
                  to_text(w));
    }
    ++trials;
  }
  return {true, "3 table rows pinned, 1000 random round trips exact"};
}

Outcome coherence_decision() {
  std::mt19937 rng(20260811);
  int pairs = 0, with_certificate = 0, without = 0, attempts = 0;
  while (pairs < 1000) {
    if (++attempts > 200000) return fail("generator starved");
    ObjPtr source = random_obj(rng, 2);
    CellPtr f = random_cell_from(source, rng, 2);
    std::vector<std::string> want = flatten(typecheck(f).target);
    CellPtr g;
    bool found = false;
    for (int t = 0; t < 200; ++t) {
      g = random_cell_from(source, rng, 2);
      if (flatten(typecheck(g).target) == want) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    bool expect = pi_functor(f) == pi_functor(g);
    std::optional<Certificate> cert = coherent(f, g);
    if (cert.has_value() != expect) {
      return fail(std::string("certificate ") +
                  (cert ? "produced" : "missing") +
                  " though projections " + (expect ? "agree" : "differ") +
                  " for " + to_text(f) + " vs " + to_text(g));
    }
    if (cert) {
      CertCheck check = verify_certificate_detail(*cert);
      if (!check.ok) {
        return fail("certificate fails " + check.failed_check + " for " +
                    to_text(f) + " vs " + to_text(g));
      }
      ++with_certificate;
    } else {
      ++without;
    }
    ++pairs;
  }
  if (with_certificate == 0 || without == 0) {
    return fail("generator produced only one kind of pair");
  }
  std::ostringstream os;
  os << "1000 parallel pairs, " << with_certificate
     << " certified + " << without
     << " refused, certificates verified, decision matches projections";
  return {true, os.str()};
}

Outcome functor_compatibility() {
  std::mt19937 rng(20260817);
  for (int k = 0; k < 1000; ++k) {
    CellPtr f = random_cell_from(random_obj(rng, 2), rng, 3);
    Permutation pi = pi_functor(f);
    if (underlying_permutation(rho_functor(f)) != pi) {
      return fail("word of " + to_text(f) + " projects to a different"
                  " permutation");
    }
    if (pi_functor(positivize(f)) != pi) {
      return fail("positive form of " + to_text(f) + " changed projection");
    }
  }
  return {true, "1000 random cells, word and positive-form projections match"};
}

Outcome cubes_operad_paths() {
  auto start = Clock::now();
  std::mt19937 rng(20260819);
  auto rational_cube = [&](int dims) {
    LittleCube<Rational> c;
    std::uniform_int_distribution<long long> den(2, 12);
    for (int k = 0; k < dims; ++k) {
      long long q = den(rng);
      long long p = std::uniform_int_distribution<long long>(1, q - 1)(rng);
      c.center.push_back(Rational(p, q));
    }
    c.side = Rational(1, den(rng));
    return c;
  };
  auto rational_config = [&](int dims, int arity) {
    CubeConfig<Rational> cfg;
    for (int k = 0; k < arity; ++k) cfg.push_back(rational_cube(dims));
    return cfg;
  };
  for (int trial = 0; trial < 200; ++trial) {
    int dims = std::uniform_int_distribution<int>(1, 4)(rng);
    int arity = std::uniform_int_distribution<int>(1, 3)(rng);
    CubeConfig<Rational> a = rational_config(dims, arity);
    CubeConfig<Rational> unit_outer = {unit_cube<Rational>(dims)};
    if (compose_operad(unit_outer, {a}) != a) {
      return fail("unit outer composition changed a configuration");
    }
    std::vector<CubeConfig<Rational>> unit_inners(
        a.size(), CubeConfig<Rational>{unit_cube<Rational>(dims)});
    if (compose_operad(a, unit_inners) != a) {
      return fail("unit inner composition changed a configuration");
    }
    // Associativity: substituting in two stages in either order agrees.
    std::vector<CubeConfig<Rational>> mids;
    std::vector<int> mid_arity;
    for (std::size_t k = 0; k < a.size(); ++k) {
      int ar = std::uniform_int_distribution<int>(1, 2)(rng);
      mid_arity.push_back(ar);
      mids.push_back(rational_config(dims, ar));
    }
    CubeConfig<Rational> ab = compose_operad(a, mids);
    std::vector<CubeConfig<Rational>> inners;
    for (std::size_t k = 0; k < ab.size(); ++k) {
      inners.push_back(rational_config(dims, 1));
    }
    CubeConfig<Rational> left = compose_operad(ab, inners);
    std::vector<CubeConfig<Rational>> grouped;
    std::size_t at = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::vector<CubeConfig<Rational>> slice(
          inners.begin() + static_cast<std::ptrdiff_t>(at),
          inners.begin() +
              static_cast<std::ptrdiff_t>(at + mid_arity[k]));
      grouped.push_back(compose_operad(mids[k], slice));
      at += static_cast<std::size_t>(mid_arity[k]);
    }
    if (left != compose_operad(a, grouped)) {
      return fail("two-stage substitution orders disagree");
    }
  }

  // The static two-cube configuration sits at the exact stated centers.
  CubeConfig<double> m = eval_path(PathId::M, {}, default_side(PathId::M));
  const std::vector<double> c0 = {0.3, 0.5, 0.5, 0.5};
  const std::vector<double> c1 = {0.7, 0.5, 0.5, 0.5};
  if (m.size() != 2 || m[0].center != c0 || m[1].center != c1) {
    return fail("static configuration centers are off");
  }

  double min_sep = 1.0;
  for (PathId id : all_paths()) {
    HomotopyReport rep = verify_homotopy(id, 64, 0.05, 1e-9);
    if (!rep.all_pass) {
      return fail("path " + to_text(id) + " fails at grid 64:\n" +
                  to_text(rep));
    }
    if (rep.min_sep < min_sep) min_sep = rep.min_sep;
  }
  HomotopyReport m_default = verify_homotopy(PathId::M, 64, 0, 1e-9);
  if (!m_default.all_pass) {
    return fail("static configuration fails at its default side");
  }
  double secs = seconds_since(start);
  if (secs >= 30.0) return fail("exceeded 30 s budget");
  std::ostringstream os;
  os << "operad laws exact on 200 rational configs, 9 paths clean at grid 64"
     << " (min separation " << min_sep << "), " << std::fixed;
  os.precision(1);
  os << secs << "s";
  return {true, os.str()};
}

Outcome cli_determinism() {
  const char* tool_env = std::getenv("BRAIDTOOL");
  std::string tool = tool_env ? tool_env : "./braidtool";
  const char* golden_env = std::getenv("GOLDEN_DIR");
  std::string golden = golden_env ? golden_env : "../tests/golden/cases";
  if (!fs::exists(tool)) return fail("tool not found at " + tool);
  if (!fs::is_directory(golden)) {
    return fail("golden corpus not found at " + golden);
  }
  std::set<std::string> covered;
  for (const fs::directory_entry& e : fs::directory_iterator(golden)) {
    if (!e.is_directory()) continue;
    std::ifstream args(e.path() / "args.txt");
    std::string verb;
    while (std::getline(args, verb) && verb == "--json") {
    }
    if (!fs::exists(e.path() / "expected_stdout.txt") ||
        !fs::exists(e.path() / "expected_exit.txt")) {
      return fail("incomplete golden case " + e.path().filename().string());
    }
    covered.insert(verb);
  }
  for (const char* verb :
       {"perm", "minimal", "startset", "finishset", "factor", "reduce", "eq",
        "coherent", "verify", "confluence", "cubes"}) {
    if (!covered.count(verb)) {
      return fail(std::string("no golden case for verb ") + verb);
    }
  }

  auto capture = [&](const std::string& cmd) -> std::pair<int, std::string> {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    char buf[256];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) {
      out.append(buf, got);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  };
  std::string q = "\"" + tool + "\"";
  auto first = capture(q + " perm \"3: s1 s2 s1\"");
  auto second = capture(q + " perm \"3: s1 s2 s1\"");
  if (first.second != "[3,2,1]\n" || first != second) {
    return fail("repeated runs differ or printed the wrong projection");
  }
  auto piped = capture(q + " reduce \"3: s1 s1 s2 s2 s1 s1\" --trace - | " +
                       q + " verify -");
  if (piped.first != 0 || piped.second != "OK\n") {
    return fail("reduce-then-verify pipe did not accept its own trace");
  }
  return {true, "golden cases cover all " + std::to_string(covered.size()) +
                    " verbs, trace pipe replays OK"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::array<Criterion, 9> criteria = {{
      {"normal-form-uniqueness", normal_form_uniqueness},
      {"v-count-rigidity", v_count_rigidity},
      {"oracle-agreement", oracle_agreement},
      {"factorization-contract", factorization_contract},
      {"marking-transfer", marking_transfer},
      {"coherence-decision", coherence_decision},
      {"functor-compatibility", functor_compatibility},
      {"cubes-operad-paths", cubes_operad_paths},
      {"cli-determinism", cli_determinism},
  }};
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      out = criteria[k].run();
    } catch (const std::exception& e) {
      out = fail(std::string("unexpected exception: ") + e.what());
    }
    all = all && out.pass;
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << k + 1 << " "
              << criteria[k].name << " — " << out.detail << "\n";
  }
  return all ? 0 : 1;
}
