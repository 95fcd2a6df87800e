#include <vector>

#include "doctest.h"
#include "kfmodal/formula.hpp"
#include "kfmodal/manyvalued.hpp"

using namespace kfmodal;

namespace {

TruthValue ev(const char* text, std::vector<TruthValue> val, Scheme s) {
  return eval_single(parse(text, Dialect::fc), val, s);
}

}  // namespace

TEST_CASE("value order and lattice") {
  CHECK(designated(TruthValue::one));
  CHECK(designated(TruthValue::b));
  CHECK_FALSE(designated(TruthValue::zero));
  CHECK_FALSE(designated(TruthValue::n));
  CHECK(negate(TruthValue::n) == TruthValue::n);
  CHECK(negate(TruthValue::b) == TruthValue::b);
  CHECK(negate(TruthValue::one) == TruthValue::zero);
  CHECK(lattice_meet(TruthValue::n, TruthValue::b) == TruthValue::zero);
  CHECK(lattice_join(TruthValue::n, TruthValue::b) == TruthValue::one);
  CHECK(linear_min(TruthValue::n, TruthValue::zero) == TruthValue::n);
  CHECK(linear_min(TruthValue::zero, TruthValue::one) == TruthValue::zero);
  for (TruthValue v : kAllValues)
    CHECK(truth_value_from_string(to_string(v)) == v);
}

TEST_CASE("legal valuations per scheme") {
  CHECK(legal_valuations(1, Scheme::fde).size() == 4);
  CHECK(legal_valuations(1, Scheme::k3).size() == 3);
  CHECK(legal_valuations(1, Scheme::lp).size() == 3);
  CHECK(legal_valuations(2, Scheme::fde).size() == 16);
  CHECK(legal_valuations(2, Scheme::ks3).size() == 14);
  CHECK(legal_valuations(2, Scheme::b3).size() == 9);
  CHECK(legal_valuations(2, Scheme::f3).size() == 9);
  for (const auto& v : legal_valuations(2, Scheme::k3))
    for (TruthValue x : v) CHECK(x != TruthValue::b);
  for (const auto& v : legal_valuations(2, Scheme::ks3)) {
    bool has_n = false, has_b = false;
    for (TruthValue x : v) {
      has_n |= x == TruthValue::n;
      has_b |= x == TruthValue::b;
    }
    CHECK_FALSE((has_n && has_b));
  }
}

TEST_CASE("strong tables agree with the lattice, weak tables infect") {
  using V = TruthValue;
  CHECK(ev("p0 /\\ p1", {V::n, V::b}, Scheme::fde) == V::zero);
  CHECK(ev("p0 \\/ p1", {V::n, V::b}, Scheme::fde) == V::one);
  CHECK(ev("p0 \\/ p1", {V::n, V::one}, Scheme::fde) == V::one);
  CHECK(ev("p0 \\/ p1", {V::n, V::one}, Scheme::b3) == V::n);
  CHECK(ev("p0 /\\ p1", {V::n, V::zero}, Scheme::b3) == V::n);
  CHECK(ev("p0 /\\ p1", {V::zero, V::one}, Scheme::b3) == V::zero);
  CHECK(ev("p0 \\/ ~p0", {V::n}, Scheme::k3) == V::n);
  CHECK(ev("p0 /\\ ~p0", {V::b}, Scheme::lp) == V::b);
}

TEST_CASE("de morgan holds under the strong scheme") {
  Formula lhs = parse("~(p0 /\\ p1)");
  Formula rhs = parse("~p0 \\/ ~p1");
  for (const auto& v : legal_valuations(2, Scheme::fde))
    CHECK(eval_single(lhs, v, Scheme::fde) == eval_single(rhs, v, Scheme::fde));
}

TEST_CASE("fc clauses") {
  using V = TruthValue;
  CHECK(ev("p0 ->> p1", {V::zero, V::n}, Scheme::f3) == V::one);
  CHECK(ev("p0 ->> p1", {V::one, V::one}, Scheme::f3) == V::one);
  CHECK(ev("p0 ->> p1", {V::one, V::zero}, Scheme::f3) == V::zero);
  CHECK(ev("p0 ->> p1", {V::n, V::one}, Scheme::f3) == V::n);
  CHECK(ev("p0 ->> p1", {V::one, V::n}, Scheme::f3) == V::n);
  CHECK_THROWS_AS(ev("p0 ->> p1", {V::one, V::n}, Scheme::b3),
                  IllegalConnective);
}

TEST_CASE("box is the infimum over successors and 1 over none") {
  PlainModel m;
  m.successors = {{1, 2}, {}, {}};
  m.val = {{{0, TruthValue::one}}, {{0, TruthValue::one}},
           {{0, TruthValue::n}}};
  Formula f = parse("[]p0");
  CHECK(eval(m, 0, f, Scheme::fde) == TruthValue::n);
  CHECK(eval(m, 1, f, Scheme::fde) == TruthValue::one);
  PlainModel weak = m;
  weak.val[2][0] = TruthValue::zero;
  CHECK(eval(weak, 0, f, Scheme::b3) == TruthValue::zero);
  weak.val[2][0] = TruthValue::n;
  CHECK(eval(weak, 0, f, Scheme::b3) == TruthValue::n);
}

TEST_CASE("model validation rejects off-scheme values") {
  PlainModel m;
  m.successors = {{}};
  m.val = {{{0, TruthValue::b}}};
  CHECK_NOTHROW(validate(m, Scheme::fde));
  CHECK_THROWS_AS(validate(m, Scheme::k3), IllegalValueForScheme);
}

TEST_CASE("internal consequence over one-world models") {
  Formula p = parse("p0"), np = parse("~p0");
  CHECK(internal_consequence({p}, {p}, Scheme::fde).holds);
  CHECK_FALSE(internal_consequence({}, {parse("p0 \\/ ~p0")}, Scheme::fde).holds);
  CHECK(internal_consequence({}, {parse("p0 \\/ ~p0")}, Scheme::lp).holds);
  CHECK(internal_consequence({p, np}, {parse("p1")}, Scheme::k3).holds);
  CHECK_FALSE(internal_consequence({p, np}, {parse("p1")}, Scheme::lp).holds);

  ConsequenceResult r =
      internal_consequence({}, {parse("p0 \\/ ~p0")}, Scheme::k3);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.atoms == std::vector<int>{0});
  CHECK(r.witness == std::vector<TruthValue>{TruthValue::n});
}

TEST_CASE("boxes are transparent in single world consequence") {
  CHECK(internal_consequence({parse("[]p0")}, {parse("p0")}, Scheme::fde).holds);
  CHECK(internal_consequence({parse("p0")}, {parse("[]p0")}, Scheme::fde).holds);
}

TEST_CASE("truth tables enumerate legal rows in canonical order") {
  TruthTable t = eval_truth_table(parse("p0 /\\ ~p0"), Scheme::lp);
  REQUIRE(t.atoms == std::vector<int>{0});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].v == std::vector<TruthValue>{TruthValue::b});
  CHECK(t.rows[0].value == TruthValue::b);
  CHECK(t.rows[1].value == TruthValue::zero);
  CHECK(t.rows[2].value == TruthValue::zero);
}
