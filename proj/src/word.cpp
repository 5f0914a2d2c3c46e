#include "braid/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace braid {

bool is_positive(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [](int k) { return k > 0; });
}

void validate(const BraidWord& w) {
  if (w.n < 1) {
    throw ValidationError("strand count must be >= 1, got " +
                          std::to_string(w.n));
  }
  for (int k : w.letters) {
    int a = std::abs(k);
    if (a < 1 || a > w.n - 1) {
      throw ValidationError("generator index " + std::to_string(k) +
                            " out of range for " + std::to_string(w.n) +
                            " strands");
    }
  }
}

void require_positive(const BraidWord& w) {
  validate(w);
  if (!is_positive(w)) {
    throw ValidationError("word is not positive: " + to_text(w));
  }
}

std::size_t length(const BraidWord& w) { return w.letters.size(); }

std::string to_text(const BraidWord& w) {
  std::string out = std::to_string(w.n) + ":";
  for (int k : w.letters) {
    out += k > 0 ? " s" : " S";
    out += std::to_string(std::abs(k));
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& msg, std::size_t column) {
  throw ParseError(msg, 1, column);
}

}  // namespace

BraidWord word_from_text(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_ws();
  std::size_t n_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == n_start) fail("expected strand count", pos + 1);
  int n = std::atoi(std::string(text.substr(n_start, pos - n_start)).c_str());
  if (n < 1) fail("strand count must be >= 1", n_start + 1);
  if (pos >= text.size() || text[pos] != ':') fail("expected ':' after strand count", pos + 1);
  ++pos;

  BraidWord w;
  w.n = n;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] == '\n' || text[pos] == '\r') break;
    char c = text[pos];
    if (c != 's' && c != 'S') fail("expected generator token sK or SK", pos + 1);
    int sign = c == 's' ? 1 : -1;
    std::size_t tok = pos;
    ++pos;
    std::size_t d_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == d_start) fail("expected generator index after 's'", pos + 1);
    int idx = std::atoi(std::string(text.substr(d_start, pos - d_start)).c_str());
    if (idx < 1 || idx > n - 1) {
      fail("generator index " + std::to_string(idx) + " out of range for " +
               std::to_string(n) + " strands",
           tok + 1);
    }
    w.letters.push_back(sign * idx);
  }
  // Nothing but whitespace/newline may follow the last token.
  while (pos < text.size()) {
    char c = text[pos];
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      fail("unexpected trailing input", pos + 1);
    }
    ++pos;
  }
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) {
    throw ValidationError("cannot concatenate words on " + std::to_string(a.n) +
                          " and " + std::to_string(b.n) + " strands");
  }
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord shifted_embed(const BraidWord& w, int offset, int n) {
  BraidWord out;
  out.n = n;
  out.letters.reserve(w.letters.size());
  for (int k : w.letters) {
    int a = std::abs(k) + offset;
    if (a < 1 || a > n - 1) {
      throw ValidationError("shifted generator index " + std::to_string(a) +
                            " out of range for " + std::to_string(n) +
                            " strands");
    }
    out.letters.push_back(k > 0 ? a : -a);
  }
  return out;
}

BraidWord reversed(const BraidWord& w) {
  BraidWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out = reversed(w);
  for (int& k : out.letters) k = -k;
  return out;
}

}  // namespace braid
