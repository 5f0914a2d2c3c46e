#include "braid/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>

namespace braid {

namespace {

// Length-preserving one-step neighbours: braid moves on adjacent-generator
// triples and swaps of distant commuting letters.
void for_each_neighbor(const std::vector<int>& letters,
                       const std::function<void(std::vector<int>)>& emit) {
  std::size_t len = letters.size();
  for (std::size_t p = 0; p < len; ++p) {
    if (p + 2 < len) {
      int a = letters[p], b = letters[p + 1], c = letters[p + 2];
      if (b == a + 1 && c == a) {  // (i, i+1, i) -> (i+1, i, i+1)
        std::vector<int> nb = letters;
        nb[p] = a + 1;
        nb[p + 1] = a;
        nb[p + 2] = a + 1;
        emit(std::move(nb));
      } else if (b == a - 1 && c == a) {  // (i+1, i, i+1) -> (i, i+1, i)
        std::vector<int> nb = letters;
        nb[p] = a - 1;
        nb[p + 1] = a;
        nb[p + 2] = a - 1;
        emit(std::move(nb));
      }
    }
    if (p + 1 < len && std::abs(letters[p] - letters[p + 1]) > 1) {
      std::vector<int> nb = letters;
      std::swap(nb[p], nb[p + 1]);
      emit(std::move(nb));
    }
  }
}

}  // namespace

std::vector<BraidWord> positive_class(const BraidWord& w, int budget) {
  require_positive(w);
  std::set<std::vector<int>> seen{w.letters};
  std::deque<std::vector<int>> queue{w.letters};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(cur, [&](std::vector<int> nb) {
      if (seen.contains(nb)) return;
      if (static_cast<int>(seen.size()) >= budget) {
        throw BudgetError("positive class exceeds budget of " +
                          std::to_string(budget) + " words");
      }
      seen.insert(nb);
      queue.push_back(std::move(nb));
    });
  }
  std::vector<BraidWord> out;
  out.reserve(seen.size());
  for (const auto& letters : seen) out.push_back(BraidWord{w.n, letters});
  return out;  // std::set iteration is already lexicographic
}

std::set<int> starting_set(const Permutation& p) { return p.descents(); }

std::set<int> finishing_set(const Permutation& p) {
  return p.inverse().descents();
}

bool can_append(const Permutation& p, int i) {
  // Appendable iff the strands ending at positions i, i+1 have not crossed,
  // i.e. i is not a descent of p^-1.
  return !finishing_set(p).contains(i);
}

Permutation append_letter(const Permutation& p, int i) {
  if (!can_append(p, i)) {
    throw ValidationError("appending generator " + std::to_string(i) +
                          " would cross a strand pair twice");
  }
  return p.then(Permutation::transposition(p.n(), i));
}

bool can_remove_front(const Permutation& p, int i) {
  return starting_set(p).contains(i);
}

Permutation remove_front(const Permutation& p, int i) {
  if (!can_remove_front(p, i)) {
    throw ValidationError("generator " + std::to_string(i) +
                          " does not start this minimal braid");
  }
  return Permutation::transposition(p.n(), i).then(p);
}

bool can_remove_back(const Permutation& p, int i) {
  return finishing_set(p).contains(i);
}

Permutation remove_back(const Permutation& p, int i) {
  if (!can_remove_back(p, i)) {
    throw ValidationError("generator " + std::to_string(i) +
                          " does not end this minimal braid");
  }
  return p.then(Permutation::transposition(p.n(), i));
}

namespace {

// Makes the adjacent factor pair (a, b) left-weighted: migrates every
// front letter of b that a can absorb.  Returns whether anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  bool moved = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : starting_set(b)) {
      if (can_append(a, i)) {
        a = append_letter(a, i);
        b = remove_front(b, i);
        moved = progress = true;
        break;
      }
    }
  }
  return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  require_positive(w);
  NormalForm nf;
  nf.n = w.n;
  for (int k : w.letters) {
    nf.factors.push_back(Permutation::transposition(w.n, k));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
      changed |= left_weight_pair(nf.factors[j], nf.factors[j + 1]);
    }
    auto it = std::remove_if(nf.factors.begin(), nf.factors.end(),
                             [](const Permutation& p) { return p.is_identity(); });
    if (it != nf.factors.end()) {
      nf.factors.erase(it, nf.factors.end());
      changed = true;
    }
  }
  return nf;
}

BraidWord word_of(const NormalForm& nf) {
  BraidWord out;
  out.n = nf.n;
  for (const Permutation& p : nf.factors) {
    BraidWord fw = permutation_braid(p);
    out.letters.insert(out.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return out;
}

std::set<int> starting_set(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  if (nf.factors.empty()) return {};
  return starting_set(nf.factors.front());
}

std::set<int> finishing_set(const BraidWord& w) {
  require_positive(w);
  return starting_set(reversed(w));
}

bool monoid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) {
    throw ValidationError("cannot compare words on " + std::to_string(a.n) +
                          " and " + std::to_string(b.n) + " strands");
  }
  return normal_form(a) == normal_form(b);
}

bool is_minimal(const BraidWord& w) {
  require_positive(w);
  return static_cast<int>(w.letters.size()) ==
         underlying_permutation(w).inversions();
}

std::pair<BraidWord, BraidWord> left_weighted_factorization(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  BraidWord tau{w.n, {}};
  BraidWord omega{w.n, {}};
  if (nf.factors.empty()) return {tau, omega};
  tau = permutation_braid(nf.factors.front());
  for (std::size_t j = 1; j < nf.factors.size(); ++j) {
    BraidWord fw = permutation_braid(nf.factors[j]);
    omega.letters.insert(omega.letters.end(), fw.letters.begin(),
                         fw.letters.end());
  }
  return {tau, omega};
}

}  // namespace braid
