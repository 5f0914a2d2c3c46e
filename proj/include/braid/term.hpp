#pragma once
// Object and cell expressions for a labeled monoidal calculus with a braiding
// and its formal inverse, S-expression I/O, projections to permutations and
// braid words, positivization, and the coherence decision with replayable
// certificates.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braid/permutation.hpp"
#include "braid/rewrite.hpp"
#include "braid/word.hpp"

namespace braid {

// --- objects ---------------------------------------------------------------

struct Obj;
using ObjPtr = std::shared_ptr<const Obj>;

// Unit | Gen(label) | Tensor(left, right).  Immutable trees.
struct Obj {
  enum class Kind { Unit, Gen, Tensor };
  Kind kind = Kind::Unit;
  std::string label;  // Gen only
  ObjPtr left, right;  // Tensor only

  static ObjPtr unit();
  static ObjPtr gen(std::string label);
  static ObjPtr tensor(ObjPtr left, ObjPtr right);
};

bool obj_equal(const ObjPtr& a, const ObjPtr& b);  // structural tree equality

// In-order generator labels; Unit leaves contribute nothing.
std::vector<std::string> flatten(const ObjPtr& x);

std::string to_text(const ObjPtr& x);       // "I", "a", "(tensor a b)"
ObjPtr obj_from_text(std::string_view text);

// --- cells -----------------------------------------------------------------

struct Cell;
using CellPtr = std::shared_ptr<const Cell>;

// Structural 1-cells over objects.  Compose(g, f) is "g after f".  Braid and
// BraidInv both go x (x) y -> y (x) x; BraidInv is the formal inverse
// crossing.  Every constructor is well-formed on its own; typecheck()
// verifies composition seams.
struct Cell {
  enum class Kind {
    Id,        // X -> X
    Assoc,     // (x y) z -> x (y z)
    AssocInv,  // x (y z) -> (x y) z
    LUnit,     // I x -> x
    LUnitInv,  // x -> I x
    RUnit,     // x I -> x
    RUnitInv,  // x -> x I
    Braid,     // x y -> y x, positive crossing block
    BraidInv,  // x y -> y x, inverse crossing block
    Compose,   // g after f
    TensorCell // f (x) g
  };
  Kind kind = Kind::Id;
  ObjPtr x, y, z;  // object arguments, per constructor arity
  CellPtr f, g;    // Compose(g, f) stores both; TensorCell(f, g) likewise

  static CellPtr id(ObjPtr x);
  static CellPtr assoc(ObjPtr x, ObjPtr y, ObjPtr z);
  static CellPtr assoc_inv(ObjPtr x, ObjPtr y, ObjPtr z);
  static CellPtr lunit(ObjPtr x);
  static CellPtr lunit_inv(ObjPtr x);
  static CellPtr runit(ObjPtr x);
  static CellPtr runit_inv(ObjPtr x);
  static CellPtr braid(ObjPtr x, ObjPtr y);
  static CellPtr braid_inv(ObjPtr x, ObjPtr y);
  static CellPtr compose(CellPtr g, CellPtr f);  // g after f
  static CellPtr tensor(CellPtr f, CellPtr g);
};

struct CellType {
  ObjPtr source;
  ObjPtr target;
};

// Source/target per the typing rules; throws ValidationError naming the
// offending subterm path when a composition seam does not match as trees.
CellType typecheck(const CellPtr& c);

// Number of strands the cell acts on (= flattened boundary length).
int strand_count(const CellPtr& c);

// Projection to permutations: structural cells are the identity, a braiding
// block moves the first block past the second, composition multiplies in
// diagram order, tensor takes the block sum.  The inverse crossing projects
// to the inverse block transposition (its braid word has the same sign-blind
// permutation as the word read backwards).  Evaluation is structural: seams
// are not re-typechecked here, so positivized composites stay evaluable.
Permutation pi_functor(const CellPtr& c);

// Projection to braid words: structural cells are empty, a braiding block is
// the minimal positive block word, the inverse crossing is its group
// inverse (negative letters), composition concatenates in diagram order,
// tensor juxtaposes with shifted generators.  Structural like pi_functor.
BraidWord rho_functor(const CellPtr& c);

// Replaces every inverse crossing BraidInv(x, y) by Braid(y, x), leaving all
// other constructors in place.  The result has a positive word projection
// and the same permutation projection.
CellPtr positivize(const CellPtr& c);

std::string to_text(const CellPtr& c);
CellPtr cell_from_text(std::string_view text);

// --- coherence -------------------------------------------------------------

// Witness that two parallel cells are isomorphic: complete reductions of
// both positivized braid words, extended to end at the identical minimal
// word (the canonical spelling of the common permutation).
struct Certificate {
  CellPtr f, g;
  ReductionTrace trace_f, trace_g;
  BraidWord common_target;
};

// Decides coherence: throws ValidationError unless both cells typecheck and
// have equal flattened boundaries; returns nothing when the permutations
// differ; otherwise returns a Certificate that passes verify_certificate.
std::optional<Certificate> coherent(const CellPtr& f, const CellPtr& g,
                                    int budget = kDefaultBudget);

struct CertCheck {
  bool ok = true;
  std::string failed_check;  // name of the first failing check
};

CertCheck verify_certificate_detail(const Certificate& c);
bool verify_certificate(const Certificate& c);

std::string to_text(const Certificate& c);

}  // namespace braid
