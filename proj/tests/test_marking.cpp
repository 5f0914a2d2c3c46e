#include "doctest.h"

#include "braid/errors.hpp"
#include "braid/marking.hpp"

using namespace braid;

namespace {
BraidWord w(const char* t) { return word_from_text(t); }
}  // namespace

TEST_CASE("position transfer through single moves") {
  // A braid move swaps the outer positions of its window and fixes the
  // middle; everything outside stays put.
  BasicReduction yb{ReductionKind::YbUp, 0, 1};
  CHECK(transfer_position(yb, 0) == 2);
  CHECK(transfer_position(yb, 1) == 1);
  CHECK(transfer_position(yb, 2) == 0);
  CHECK(transfer_position(yb, 3) == 3);

  BasicReduction c{ReductionKind::C, 0, 1, 3};
  CHECK(transfer_position(c, 0) == 1);
  CHECK(transfer_position(c, 1) == 0);
  CHECK(transfer_position(c, 2) == 2);

  CHECK_THROWS_AS(transfer_position({ReductionKind::V, 0, 1}, 0),
                  ValidationError);
}

TEST_CASE("inverse moves") {
  BasicReduction up{ReductionKind::YbUp, 4, 2};
  BasicReduction down = inverse_move(up);
  CHECK(down.kind == ReductionKind::YbDown);
  CHECK(down.position == 4);
  CHECK(down.i == 2);
  CHECK(inverse_move(down) == up);

  BasicReduction c{ReductionKind::C, 1, 1, 3};
  BasicReduction ci = inverse_move(c);
  CHECK(ci.kind == ReductionKind::C);
  CHECK(ci.position == 1);
  CHECK(ci.i == 3);
  CHECK(ci.j == 1);

  CHECK_THROWS_AS(inverse_move({ReductionKind::V, 0, 1}), ValidationError);
}

TEST_CASE("marking transfer follows the moved letters") {
  Marking m;
  m.positions["x"] = {0, 2};
  Marking out = transfer_marking(m, w("3: s1 s2 s1"),
                                 {ReductionKind::YbUp, 0, 1});
  CHECK(out.positions.at("x") == std::pair<int, int>{2, 0});

  Marking c;
  c.positions["a"] = {0, 1};
  Marking cout = transfer_marking(c, w("4: s1 s3"), {ReductionKind::C, 0});
  CHECK(cout.positions.at("a") == std::pair<int, int>{1, 0});

  // Unmarked positions stay unmarked; labels not touching the window are
  // fixed.
  Marking far;
  far.positions["k"] = {3, 4};
  Marking fout = transfer_marking(far, w("4: s1 s2 s1 s3 s3"),
                                  {ReductionKind::YbUp, 0, 1});
  CHECK(fout.positions.at("k") == std::pair<int, int>{3, 4});
  CHECK(fout.positions.size() == 1);

  // Cancellations do not transfer markings.
  Marking v;
  v.positions["x"] = {0, 1};
  CHECK_THROWS_AS(
      transfer_marking(v, w("2: s1 s1"), {ReductionKind::V, 0, 1}),
      ValidationError);

  // The marking must fit the word and the step must apply.
  Marking bad;
  bad.positions["x"] = {0, 9};
  CHECK_THROWS_AS(
      transfer_marking(bad, w("3: s1 s2 s1"), {ReductionKind::YbUp, 0}),
      ValidationError);
  CHECK_THROWS_AS(
      transfer_marking(m, w("3: s1 s2 s1"), {ReductionKind::YbDown, 0}),
      RedexError);
}

TEST_CASE("transfer composed with its inverse is the identity") {
  BraidWord word = w("4: s1 s2 s1 s3");
  BasicReduction step{ReductionKind::YbUp, 0, 1};
  BraidWord moved = apply_basic(word, step);
  Marking m;
  m.positions["p"] = {0, 3};
  m.positions["q"] = {2, 1};
  Marking there = transfer_marking(m, word, step);
  Marking back = transfer_marking(there, moved, inverse_move(step));
  CHECK(back == m);
}

TEST_CASE("marking distance") {
  Marking m;
  m.positions["x"] = {0, 3};
  m.positions["y"] = {5, 2};
  auto d = distance(m);
  CHECK(d.at("x") == 3);
  CHECK(d.at("y") == 3);
}

TEST_CASE("generic situations classify overlap of the two redexes") {
  // Same square seen on both sides of a commutation chain that walks the
  // distant letter around it: both positions shared.
  {
    BraidWord word = w("4: s1 s1 s3");
    GenericSituation g = make_generic_situation(
        word,
        {{ReductionKind::C, 1, 1, 3}, {ReductionKind::C, 0, 1, 3}},
        {ReductionKind::V, 0, 1}, {ReductionKind::V, 1, 1});
    CHECK(classify_generic(g) == GenericCase::BothShared);
    CHECK(g.canonical_marking.positions.at("x") == std::pair<int, int>{0, 1});
    CHECK(g.canonical_marking.positions.at("y") == std::pair<int, int>{0, 1});
  }
  // Overlapping squares in s1 s1 s1: share one position.
  {
    BraidWord word = w("2: s1 s1 s1");
    GenericSituation g =
        make_generic_situation(word, {}, {ReductionKind::V, 0, 1},
                               {ReductionKind::V, 1, 1});
    CHECK(classify_generic(g) == GenericCase::OneShared);
  }
  // Separated squares: disjoint.
  {
    BraidWord word = w("3: s1 s1 s2 s2");
    GenericSituation g =
        make_generic_situation(word, {}, {ReductionKind::V, 0, 1},
                               {ReductionKind::V, 2, 2});
    CHECK(classify_generic(g) == GenericCase::Disjoint);
  }
  CHECK(std::string(to_text(GenericCase::BothShared)) == "BothShared");
  CHECK(std::string(to_text(GenericCase::OneShared)) == "OneShared");
  CHECK(std::string(to_text(GenericCase::Disjoint)) == "Disjoint");

  // The moves must be length-preserving and the redexes must apply.
  CHECK_THROWS_AS(
      make_generic_situation(w("2: s1 s1"), {{ReductionKind::V, 0, 1}},
                             {ReductionKind::V, 0, 1},
                             {ReductionKind::V, 0, 1}),
      ValidationError);
  CHECK_THROWS_AS(
      make_generic_situation(w("2: s1 s1"), {}, {ReductionKind::V, 1, 1},
                             {ReductionKind::V, 0, 1}),
      RedexError);
}
