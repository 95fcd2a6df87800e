#include <set>

#include "doctest.h"
#include "kfmodal/formula.hpp"

using namespace kfmodal;

TEST_CASE("parse and print round trip") {
  for (const char* text : {
           "p0",
           "~p0",
           "[]p0",
           "p0 /\\ p1",
           "p0 \\/ ~p1",
           "~(p0 /\\ p1)",
           "[](p0 \\/ p1) /\\ ~[]p2",
           "p0 /\\ p1 /\\ p2",
           "p0 \\/ p1 /\\ p2",
           "T",
           "F",
           "p12",
       }) {
    Formula f = parse(text);
    CHECK(print(f) == text);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("arrow sugar expands to negation and disjunction") {
  CHECK(parse("p0 -> p1") ==
        Formula::disj(Formula::neg(Formula::atom(0)), Formula::atom(1)));
  CHECK(parse("[]p0 -> p0") ==
        Formula::disj(Formula::neg(Formula::box(Formula::atom(0))),
                      Formula::atom(0)));
  Formula iff = parse("p0 <-> p1");
  CHECK(iff.is(Conn::conj));
  CHECK(iff.left() == parse("p0 -> p1"));
  CHECK(iff.right() == parse("p1 -> p0"));
}

TEST_CASE("fc arrow needs the fc dialect and associates right") {
  CHECK_THROWS_AS(parse("p0 ->> p1"), ParseError);
  Formula f = parse("p0 ->> p1 ->> p2", Dialect::fc);
  CHECK(f == Formula::fc(Formula::atom(0),
                         Formula::fc(Formula::atom(1), Formula::atom(2))));
  CHECK(print(f) == "p0 ->> p1 ->> p2");
  CHECK(print(Formula::fc(Formula::fc(Formula::atom(0), Formula::atom(1)),
                          Formula::atom(2))) == "(p0 ->> p1) ->> p2");
}

TEST_CASE("parse rejects malformed input with a position") {
  CHECK_THROWS_AS(parse("p0 /\\"), ParseError);
  CHECK_THROWS_AS(parse("(p0"), ParseError);
  CHECK_THROWS_AS(parse("q0"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p0 p1"), ParseError);
}

TEST_CASE("structural measures") {
  Formula f = parse("[](p0 \\/ ~p1) /\\ ~[]p0");
  CHECK(prop_set(f) == std::vector<int>{0, 1});
  CHECK(modal_depth(f) == 1);
  CHECK(modal_depth(parse("[][]p0 \\/ p1")) == 2);
  CHECK(syntactic_depth(parse("p0")) == 0);
  CHECK(syntactic_depth(parse("~p0 /\\ p1")) == 2);
  CHECK(has_fc(parse("p0 ->> p1", Dialect::fc)));
  CHECK_FALSE(has_fc(f));
}

TEST_CASE("nabla helpers build the undecidedness formulas") {
  Formula p = Formula::atom(0);
  CHECK(print(nabla_bar(p)) == "[]p0 \\/ []~p0");
  CHECK(print(nabla(p)) == "~([]p0 \\/ []~p0)");
  CHECK(nabla_bar_pair(p, Formula::atom(1)) ==
        Formula::conj(nabla_bar(p), nabla_bar(Formula::atom(1))));
}

TEST_CASE("substitute replaces atoms structurally") {
  Formula f = parse("p0 /\\ []p1");
  Formula g = substitute(f, {{0, parse("~p2")}, {1, parse("p0")}});
  CHECK(g == parse("~p2 /\\ []p0"));
}

TEST_CASE("formula sets behave as sets") {
  Formula a = parse("p0"), b = parse("p1");
  FormulaSet s = make_set({b, a, a, b});
  CHECK(s.size() == 2);
  CHECK(set_contains(s, a));
  CHECK(set_remove(s, a) == make_set({b}));
  CHECK(set_add(s, a) == s);
  Sequent left({a, b}, {a});
  Sequent right({b, a, b}, {a});
  CHECK(left == right);
  CHECK(print(left) == "p0, p1 => p0");
  CHECK(print(Sequent({}, {})) == " => ");
}

TEST_CASE("enumerate_formulas is exhaustive and duplicate free") {
  auto pool = enumerate_formulas(1, 1, true, false);
  CHECK(pool.size() == 27);
  auto with_fc = enumerate_formulas(1, 1, true, true);
  CHECK(with_fc.size() == 36);
  auto no_box = enumerate_formulas(2, 1, false, false);
  std::set<Formula> dedup(no_box.begin(), no_box.end());
  CHECK(dedup.size() == no_box.size());
  for (const Formula& f : no_box) {
    CHECK(syntactic_depth(f) <= 1);
    CHECK(modal_depth(f) == 0);
  }
}
