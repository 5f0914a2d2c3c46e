#include "braid/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace braid {

Permutation::Permutation(int n) {
  if (n < 1) {
    throw ValidationError("permutation degree must be >= 1, got " +
                          std::to_string(n));
  }
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw ValidationError("one-line form must be nonempty");
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) {
      throw ValidationError("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
  Permutation p(n);
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw ValidationError("adjacent transposition index " + std::to_string(i) +
                          " out of range for degree " + std::to_string(n));
  }
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

int Permutation::apply(int x) const {
  if (x < 1 || x > n()) {
    throw ValidationError("permutation applied outside 1.." +
                          std::to_string(n()));
  }
  return img_[x - 1];
}

Permutation Permutation::then(const Permutation& q) const {
  if (n() != q.n()) {
    throw ValidationError("cannot compose permutations of degrees " +
                          std::to_string(n()) + " and " + std::to_string(q.n()));
  }
  Permutation r(n());
  for (int x = 1; x <= n(); ++x) r.img_[x - 1] = q.img_[img_[x - 1] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(n());
  for (int x = 1; x <= n(); ++x) r.img_[img_[x - 1] - 1] = x;
  return r;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= n(); ++x) {
    if (img_[x - 1] != x) return false;
  }
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (int a = 0; a < n(); ++a) {
    for (int b = a + 1; b < n(); ++b) {
      if (img_[a] > img_[b]) ++count;
    }
  }
  return count;
}

std::set<int> Permutation::descents() const {
  std::set<int> out;
  for (int i = 1; i <= n() - 1; ++i) {
    if (img_[i - 1] > img_[i]) out.insert(i);
  }
  return out;
}

std::string to_text(const Permutation& p) {
  std::string out = "[";
  const auto& img = p.one_line();
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(img[i]);
  }
  out += "]";
  return out;
}

Permutation underlying_permutation(const BraidWord& w) {
  validate(w);
  Permutation p(w.n);
  for (int k : w.letters) {
    p = p.then(Permutation::transposition(w.n, std::abs(k)));
  }
  return p;
}

std::map<std::pair<int, int>, long> pair_crossings(const BraidWord& w) {
  validate(w);
  std::map<std::pair<int, int>, long> counts;
  for (int a = 1; a <= w.n; ++a) {
    for (int b = a + 1; b <= w.n; ++b) counts[{a, b}] = 0;
  }
  std::vector<int> strand_at(w.n);  // strand_at[pos-1] = strand occupying pos
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int k : w.letters) {
    int i = std::abs(k);
    int a = strand_at[i - 1];
    int b = strand_at[i];
    ++counts[{std::min(a, b), std::max(a, b)}];
    std::swap(strand_at[i - 1], strand_at[i]);
  }
  return counts;
}

BraidWord permutation_braid(const Permutation& p) {
  std::vector<int> q = p.one_line();
  int n = p.n();
  BraidWord w;
  w.n = n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        w.letters.push_back(i + 1);
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace braid
