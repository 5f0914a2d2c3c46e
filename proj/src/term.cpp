#include "braid/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "braid/errors.hpp"
#include "braid/monoid.hpp"

namespace braid {

// --- objects ---------------------------------------------------------------

ObjPtr Obj::unit() {
  static const ObjPtr u = std::make_shared<Obj>(Obj{Kind::Unit, "", {}, {}});
  return u;
}

ObjPtr Obj::gen(std::string label) {
  return std::make_shared<Obj>(Obj{Kind::Gen, std::move(label), {}, {}});
}

ObjPtr Obj::tensor(ObjPtr left, ObjPtr right) {
  return std::make_shared<Obj>(
      Obj{Kind::Tensor, "", std::move(left), std::move(right)});
}

bool obj_equal(const ObjPtr& a, const ObjPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Obj::Kind::Unit:
      return true;
    case Obj::Kind::Gen:
      return a->label == b->label;
    case Obj::Kind::Tensor:
      return obj_equal(a->left, b->left) && obj_equal(a->right, b->right);
  }
  return false;
}

namespace {

void flatten_into(const ObjPtr& x, std::vector<std::string>& out) {
  switch (x->kind) {
    case Obj::Kind::Unit:
      return;
    case Obj::Kind::Gen:
      out.push_back(x->label);
      return;
    case Obj::Kind::Tensor:
      flatten_into(x->left, out);
      flatten_into(x->right, out);
      return;
  }
}

}  // namespace

std::vector<std::string> flatten(const ObjPtr& x) {
  std::vector<std::string> out;
  flatten_into(x, out);
  return out;
}

std::string to_text(const ObjPtr& x) {
  switch (x->kind) {
    case Obj::Kind::Unit:
      return "I";
    case Obj::Kind::Gen:
      return x->label;
    case Obj::Kind::Tensor:
      return "(tensor " + to_text(x->left) + " " + to_text(x->right) + ")";
  }
  throw Error("unreachable object kind");
}

// --- S-expression reader ---------------------------------------------------

namespace {

struct Token {
  enum class Kind { LParen, RParen, Atom, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '\'' || c == '*';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", line, column});
      ++column;
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", line, column});
      ++column;
      ++i;
      continue;
    }
    if (is_atom_char(c)) {
      int start_col = column;
      std::string atom;
      while (i < text.size() && is_atom_char(text[i])) {
        atom.push_back(text[i]);
        ++i;
        ++column;
      }
      out.push_back({Token::Kind::Atom, std::move(atom), line, start_col});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     column);
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : tokens_(lex(text)) {}

  ObjPtr read_obj() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::Atom:
        return t.text == "I" ? Obj::unit() : Obj::gen(t.text);
      case Token::Kind::LParen: {
        const Token& head = next();
        if (head.kind != Token::Kind::Atom || head.text != "tensor") {
          throw ParseError("expected 'tensor' after '(' in an object",
                           head.line, head.column);
        }
        ObjPtr a = read_obj();
        ObjPtr b = read_obj();
        expect_rparen();
        return Obj::tensor(std::move(a), std::move(b));
      }
      case Token::Kind::RParen:
        throw ParseError("unexpected ')'", t.line, t.column);
      case Token::Kind::End:
        throw ParseError("unexpected end of input", t.line, t.column);
    }
    throw Error("unreachable token kind");
  }

  CellPtr read_cell() {
    const Token& t = next();
    if (t.kind == Token::Kind::End) {
      throw ParseError("unexpected end of input", t.line, t.column);
    }
    if (t.kind != Token::Kind::LParen) {
      throw ParseError("expected '(' to start a cell", t.line, t.column);
    }
    const Token& head = next();
    if (head.kind != Token::Kind::Atom) {
      throw ParseError("expected a cell operator after '('", head.line,
                       head.column);
    }
    CellPtr out;
    if (head.text == "id") {
      out = Cell::id(read_obj());
    } else if (head.text == "assoc") {
      ObjPtr x = read_obj(), y = read_obj(), z = read_obj();
      out = Cell::assoc(x, y, z);
    } else if (head.text == "assoc*") {
      ObjPtr x = read_obj(), y = read_obj(), z = read_obj();
      out = Cell::assoc_inv(x, y, z);
    } else if (head.text == "lunit") {
      out = Cell::lunit(read_obj());
    } else if (head.text == "lunit*") {
      out = Cell::lunit_inv(read_obj());
    } else if (head.text == "runit") {
      out = Cell::runit(read_obj());
    } else if (head.text == "runit*") {
      out = Cell::runit_inv(read_obj());
    } else if (head.text == "braid") {
      ObjPtr x = read_obj(), y = read_obj();
      out = Cell::braid(x, y);
    } else if (head.text == "braid*") {
      ObjPtr x = read_obj(), y = read_obj();
      out = Cell::braid_inv(x, y);
    } else if (head.text == "comp") {
      CellPtr g = read_cell();
      CellPtr f = read_cell();
      out = Cell::compose(g, f);
    } else if (head.text == "ten") {
      CellPtr f = read_cell();
      CellPtr g = read_cell();
      out = Cell::tensor(f, g);
    } else {
      throw ParseError("unknown cell operator '" + head.text + "'", head.line,
                       head.column);
    }
    expect_rparen();
    return out;
  }

  void expect_end() const {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End) {
      throw ParseError("trailing input after expression", t.line, t.column);
    }
  }

 private:
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }

  void expect_rparen() {
    const Token& t = next();
    if (t.kind != Token::Kind::RParen) {
      throw ParseError("expected ')'", t.line, t.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ObjPtr obj_from_text(std::string_view text) {
  Reader r(text);
  ObjPtr out = r.read_obj();
  r.expect_end();
  return out;
}

CellPtr cell_from_text(std::string_view text) {
  Reader r(text);
  CellPtr out = r.read_cell();
  r.expect_end();
  return out;
}

// --- cells -----------------------------------------------------------------

namespace {

CellPtr make_cell(Cell c) { return std::make_shared<Cell>(std::move(c)); }

}  // namespace

CellPtr Cell::id(ObjPtr x) {
  return make_cell({Kind::Id, std::move(x), {}, {}, {}, {}});
}
CellPtr Cell::assoc(ObjPtr x, ObjPtr y, ObjPtr z) {
  return make_cell(
      {Kind::Assoc, std::move(x), std::move(y), std::move(z), {}, {}});
}
CellPtr Cell::assoc_inv(ObjPtr x, ObjPtr y, ObjPtr z) {
  return make_cell(
      {Kind::AssocInv, std::move(x), std::move(y), std::move(z), {}, {}});
}
CellPtr Cell::lunit(ObjPtr x) {
  return make_cell({Kind::LUnit, std::move(x), {}, {}, {}, {}});
}
CellPtr Cell::lunit_inv(ObjPtr x) {
  return make_cell({Kind::LUnitInv, std::move(x), {}, {}, {}, {}});
}
CellPtr Cell::runit(ObjPtr x) {
  return make_cell({Kind::RUnit, std::move(x), {}, {}, {}, {}});
}
CellPtr Cell::runit_inv(ObjPtr x) {
  return make_cell({Kind::RUnitInv, std::move(x), {}, {}, {}, {}});
}
CellPtr Cell::braid(ObjPtr x, ObjPtr y) {
  return make_cell({Kind::Braid, std::move(x), std::move(y), {}, {}, {}});
}
CellPtr Cell::braid_inv(ObjPtr x, ObjPtr y) {
  return make_cell({Kind::BraidInv, std::move(x), std::move(y), {}, {}, {}});
}
CellPtr Cell::compose(CellPtr g, CellPtr f) {
  return make_cell({Kind::Compose, {}, {}, {}, std::move(f), std::move(g)});
}
CellPtr Cell::tensor(CellPtr f, CellPtr g) {
  return make_cell({Kind::TensorCell, {}, {}, {}, std::move(f), std::move(g)});
}

namespace {

CellType typecheck_at(const CellPtr& c, const std::string& path) {
  switch (c->kind) {
    case Cell::Kind::Id:
      return {c->x, c->x};
    case Cell::Kind::Assoc:
      return {Obj::tensor(Obj::tensor(c->x, c->y), c->z),
              Obj::tensor(c->x, Obj::tensor(c->y, c->z))};
    case Cell::Kind::AssocInv:
      return {Obj::tensor(c->x, Obj::tensor(c->y, c->z)),
              Obj::tensor(Obj::tensor(c->x, c->y), c->z)};
    case Cell::Kind::LUnit:
      return {Obj::tensor(Obj::unit(), c->x), c->x};
    case Cell::Kind::LUnitInv:
      return {c->x, Obj::tensor(Obj::unit(), c->x)};
    case Cell::Kind::RUnit:
      return {Obj::tensor(c->x, Obj::unit()), c->x};
    case Cell::Kind::RUnitInv:
      return {c->x, Obj::tensor(c->x, Obj::unit())};
    case Cell::Kind::Braid:
    case Cell::Kind::BraidInv:
      return {Obj::tensor(c->x, c->y), Obj::tensor(c->y, c->x)};
    case Cell::Kind::Compose: {
      CellType tf = typecheck_at(c->f, path + "/f");
      CellType tg = typecheck_at(c->g, path + "/g");
      if (!obj_equal(tf.target, tg.source)) {
        throw ValidationError("ill-typed composite at " +
                              (path.empty() ? std::string("/") : path) +
                              ": target of f is " + to_text(tf.target) +
                              " but source of g is " + to_text(tg.source));
      }
      return {tf.source, tg.target};
    }
    case Cell::Kind::TensorCell: {
      CellType tf = typecheck_at(c->f, path + "/f");
      CellType tg = typecheck_at(c->g, path + "/g");
      return {Obj::tensor(tf.source, tg.source),
              Obj::tensor(tf.target, tg.target)};
    }
  }
  throw Error("unreachable cell kind");
}

int obj_strands(const ObjPtr& x) {
  switch (x->kind) {
    case Obj::Kind::Unit:
      return 0;
    case Obj::Kind::Gen:
      return 1;
    case Obj::Kind::Tensor:
      return obj_strands(x->left) + obj_strands(x->right);
  }
  return 0;
}

// The permutation of nx + ny strands moving the first nx past the last ny as
// blocks (order preserved within each block).
Permutation block_transposition(int nx, int ny) {
  int n = nx + ny;
  if (n == 0) return Permutation(1);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= nx; ++i) img[static_cast<std::size_t>(i - 1)] = i + ny;
  for (int j = 1; j <= ny; ++j) img[static_cast<std::size_t>(nx + j - 1)] = j;
  return Permutation::from_one_line(std::move(img));
}

}  // namespace

CellType typecheck(const CellPtr& c) { return typecheck_at(c, ""); }

int strand_count(const CellPtr& c) {
  switch (c->kind) {
    case Cell::Kind::Id:
    case Cell::Kind::LUnit:
    case Cell::Kind::LUnitInv:
    case Cell::Kind::RUnit:
    case Cell::Kind::RUnitInv:
      return obj_strands(c->x);
    case Cell::Kind::Assoc:
    case Cell::Kind::AssocInv:
      return obj_strands(c->x) + obj_strands(c->y) + obj_strands(c->z);
    case Cell::Kind::Braid:
    case Cell::Kind::BraidInv:
      return obj_strands(c->x) + obj_strands(c->y);
    case Cell::Kind::Compose:
      return strand_count(c->f);
    case Cell::Kind::TensorCell:
      return strand_count(c->f) + strand_count(c->g);
  }
  return 0;
}

Permutation pi_functor(const CellPtr& c) {
  switch (c->kind) {
    case Cell::Kind::Id:
    case Cell::Kind::Assoc:
    case Cell::Kind::AssocInv:
    case Cell::Kind::LUnit:
    case Cell::Kind::LUnitInv:
    case Cell::Kind::RUnit:
    case Cell::Kind::RUnitInv:
      return Permutation(std::max(1, strand_count(c)));
    case Cell::Kind::Braid:
      return block_transposition(obj_strands(c->x), obj_strands(c->y));
    case Cell::Kind::BraidInv:
      // Inverse crossing: the inverse of the positive block transposition.
      return block_transposition(obj_strands(c->y), obj_strands(c->x));
    case Cell::Kind::Compose:
      return pi_functor(c->f).then(pi_functor(c->g));
    case Cell::Kind::TensorCell: {
      int m1 = strand_count(c->f);
      int m2 = strand_count(c->g);
      int n = std::max(1, m1 + m2);
      Permutation pf = pi_functor(c->f);
      Permutation pg = pi_functor(c->g);
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
      for (int i = 1; i <= m1; ++i) {
        img[static_cast<std::size_t>(i - 1)] = pf.apply(i);
      }
      for (int j = 1; j <= m2; ++j) {
        img[static_cast<std::size_t>(m1 + j - 1)] = m1 + pg.apply(j);
      }
      return Permutation::from_one_line(std::move(img));
    }
  }
  throw Error("unreachable cell kind");
}

BraidWord rho_functor(const CellPtr& c) {
  switch (c->kind) {
    case Cell::Kind::Id:
    case Cell::Kind::Assoc:
    case Cell::Kind::AssocInv:
    case Cell::Kind::LUnit:
    case Cell::Kind::LUnitInv:
    case Cell::Kind::RUnit:
    case Cell::Kind::RUnitInv:
      return BraidWord{std::max(1, strand_count(c)), {}};
    case Cell::Kind::Braid:
      return permutation_braid(
          block_transposition(obj_strands(c->x), obj_strands(c->y)));
    case Cell::Kind::BraidInv:
      return inverse(permutation_braid(
          block_transposition(obj_strands(c->x), obj_strands(c->y))));
    case Cell::Kind::Compose:
      return concat(rho_functor(c->f), rho_functor(c->g));
    case Cell::Kind::TensorCell: {
      int m1 = strand_count(c->f);
      int m2 = strand_count(c->g);
      int n = std::max(1, m1 + m2);
      BraidWord out = shifted_embed(rho_functor(c->f), 0, n);
      if (m2 > 0) {
        BraidWord right = shifted_embed(rho_functor(c->g), m1, n);
        out.letters.insert(out.letters.end(), right.letters.begin(),
                           right.letters.end());
      }
      return out;
    }
  }
  throw Error("unreachable cell kind");
}

CellPtr positivize(const CellPtr& c) {
  switch (c->kind) {
    case Cell::Kind::BraidInv:
      return Cell::braid(c->y, c->x);
    case Cell::Kind::Compose: {
      CellPtr f = positivize(c->f);
      CellPtr g = positivize(c->g);
      if (f.get() == c->f.get() && g.get() == c->g.get()) return c;
      return Cell::compose(std::move(g), std::move(f));
    }
    case Cell::Kind::TensorCell: {
      CellPtr f = positivize(c->f);
      CellPtr g = positivize(c->g);
      if (f.get() == c->f.get() && g.get() == c->g.get()) return c;
      return Cell::tensor(std::move(f), std::move(g));
    }
    default:
      return c;
  }
}

std::string to_text(const CellPtr& c) {
  switch (c->kind) {
    case Cell::Kind::Id:
      return "(id " + to_text(c->x) + ")";
    case Cell::Kind::Assoc:
      return "(assoc " + to_text(c->x) + " " + to_text(c->y) + " " +
             to_text(c->z) + ")";
    case Cell::Kind::AssocInv:
      return "(assoc* " + to_text(c->x) + " " + to_text(c->y) + " " +
             to_text(c->z) + ")";
    case Cell::Kind::LUnit:
      return "(lunit " + to_text(c->x) + ")";
    case Cell::Kind::LUnitInv:
      return "(lunit* " + to_text(c->x) + ")";
    case Cell::Kind::RUnit:
      return "(runit " + to_text(c->x) + ")";
    case Cell::Kind::RUnitInv:
      return "(runit* " + to_text(c->x) + ")";
    case Cell::Kind::Braid:
      return "(braid " + to_text(c->x) + " " + to_text(c->y) + ")";
    case Cell::Kind::BraidInv:
      return "(braid* " + to_text(c->x) + " " + to_text(c->y) + ")";
    case Cell::Kind::Compose:
      return "(comp " + to_text(c->g) + " " + to_text(c->f) + ")";
    case Cell::Kind::TensorCell:
      return "(ten " + to_text(c->f) + " " + to_text(c->g) + ")";
  }
  throw Error("unreachable cell kind");
}

// --- coherence -------------------------------------------------------------

std::optional<Certificate> coherent(const CellPtr& f, const CellPtr& g,
                                    int budget) {
  CellType tf = typecheck(f);
  CellType tg = typecheck(g);
  if (flatten(tf.source) != flatten(tg.source) ||
      flatten(tf.target) != flatten(tg.target)) {
    throw ValidationError("cells are not parallel");
  }
  Permutation pf = pi_functor(f);
  Permutation pg = pi_functor(g);
  if (pf != pg) return std::nullopt;

  BraidWord wf = rho_functor(positivize(f));
  BraidWord wg = rho_functor(positivize(g));
  ReductionTrace trace_f = complete_reduce(wf, budget);
  ReductionTrace trace_g = complete_reduce(wg, budget);

  // Both reduced words are minimal spellings of the common permutation;
  // steer each to the canonical one so the traces end letter-identical.
  BraidWord common = permutation_braid(pf);
  for (const BasicReduction& r : find_move_path(trace_f.target, common, budget))
    trace_f.steps.push_back(r);
  for (const BasicReduction& r : find_move_path(trace_g.target, common, budget))
    trace_g.steps.push_back(r);
  trace_f.target = common;
  trace_g.target = common;
  return Certificate{f, g, std::move(trace_f), std::move(trace_g), common};
}

CertCheck verify_certificate_detail(const Certificate& c) {
  struct NamedCheck {
    const char* name;
    std::function<bool()> run;
  };
  const std::vector<NamedCheck> checks = {
      {"typecheck_f",
       [&] {
         typecheck(c.f);
         return true;
       }},
      {"typecheck_g",
       [&] {
         typecheck(c.g);
         return true;
       }},
      {"parallel",
       [&] {
         CellType tf = typecheck(c.f);
         CellType tg = typecheck(c.g);
         return flatten(tf.source) == flatten(tg.source) &&
                flatten(tf.target) == flatten(tg.target);
       }},
      {"pi_equal", [&] { return pi_functor(c.f) == pi_functor(c.g); }},
      {"source_f",
       [&] { return c.trace_f.source == rho_functor(positivize(c.f)); }},
      {"source_g",
       [&] { return c.trace_g.source == rho_functor(positivize(c.g)); }},
      {"replay_f", [&] { return verify_trace(c.trace_f); }},
      {"replay_g", [&] { return verify_trace(c.trace_g); }},
      {"target_f", [&] { return c.trace_f.target == c.common_target; }},
      {"target_g", [&] { return c.trace_g.target == c.common_target; }},
      {"minimal", [&] { return is_minimal(c.common_target); }},
      {"perm",
       [&] {
         return underlying_permutation(c.common_target) == pi_functor(c.f);
       }},
  };
  for (const NamedCheck& check : checks) {
    bool ok = false;
    try {
      ok = check.run();
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) return {false, check.name};
  }
  return {true, ""};
}

bool verify_certificate(const Certificate& c) {
  return verify_certificate_detail(c).ok;
}

std::string to_text(const Certificate& c) {
  return "common: " + to_text(c.common_target) + "\ntrace F:\n" +
         to_text(c.trace_f) + "trace G:\n" + to_text(c.trace_g);
}

}  // namespace braid
