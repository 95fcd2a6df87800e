#include "doctest.h"
#include "kfmodal/kftruth.hpp"

#include <algorithm>

using namespace kfmodal;

namespace {

bool has(const std::vector<SentenceId>& v, SentenceId id) {
  return std::find(v.begin(), v.end(), id) != v.end();
}

}  // namespace

TEST_CASE("sentences are interned") {
  SentenceUniverse u;
  SentenceId a = u.eq(0, 0);
  CHECK(u.eq(0, 0) == a);
  SentenceId c = u.conj(a, u.eq(0, 1));
  CHECK(u.conj(a, u.eq(0, 1)) == c);
  CHECK(u.neg(u.neg(a)) != a);

  SentenceId t = u.tr(a);
  CHECK(u.at(t).form == SForm::tr);
  CHECK(u.at(t).a == a);
  CHECK(u.find_neg(a).has_value());

  SentenceId tt = u.truth_teller(0);
  CHECK(u.truth_teller(0) == tt);
  CHECK(u.find_truth_teller(0) == tt);
  CHECK_FALSE(u.find_truth_teller(7).has_value());
  CHECK(u.at(tt).form == SForm::tr);
  CHECK(u.at(tt).a == tt);

  SentenceId l = u.liar();
  CHECK(u.at(l).form == SForm::neg);
  CHECK(u.at(u.at(l).a).form == SForm::tr);
  CHECK(u.at(u.at(l).a).a == l);
  CHECK(u.find_liar() == l);
}

TEST_CASE("sentence surface syntax") {
  SentenceUniverse u;
  CHECK(parse_sentence(u, "0=0") == u.eq(0, 0));
  CHECK(parse_sentence(u, "~0=1") == u.neg(u.eq(0, 1)));
  CHECK(parse_sentence(u, "t3") == u.truth_teller(3));
  CHECK(parse_sentence(u, "lam") == u.liar());
  CHECK(parse_sentence(u, "t0 /\\ ~t1") ==
        u.conj(u.truth_teller(0), u.neg(u.truth_teller(1))));
  CHECK(parse_sentence(u, "(0=0 \\/ 0=1) ->> t0") ==
        u.fc(u.disj(u.eq(0, 0), u.eq(0, 1)), u.truth_teller(0)));
  CHECK(u.form_string(u.eq(0, 0)) == "0=0");
  CHECK(u.form_string(u.liar()).substr(0, 6) == "not T(");
  CHECK(u.form_string(u.conj(u.eq(0, 0), u.eq(0, 1))) == "(0=0 and 0=1)");
  CHECK_THROWS_AS(parse_sentence(u, "T(3)"), ParseError);
  CHECK_THROWS_AS(parse_sentence(u, "t0 t1"), ParseError);
  CHECK_THROWS_AS(parse_sentence(u, "0="), ParseError);

  CHECK(parse_seed(u, "+t0,-t1") ==
        std::vector<SentenceId>{u.truth_teller(0), u.neg(u.truth_teller(1))});
  CHECK(parse_seed(u, "+lam") == std::vector<SentenceId>{u.liar()});
  CHECK_THROWS_AS(parse_seed(u, "t0"), Error);
}

TEST_CASE("least fixed point over the empty seed") {
  SentenceUniverse u;
  SentenceId eq00 = u.eq(0, 0);
  SentenceId eq01 = u.eq(0, 1);
  SentenceId neq01 = u.neg(eq01);
  SentenceId t0 = u.truth_teller(0);
  SentenceId nt0 = u.neg(t0);
  SentenceId l = u.liar();
  SentenceId good = u.disj(eq01, u.conj(eq00, neq01));
  SentenceId treq = u.tr(eq00);

  FixedPoint fp = lfp(u, JumpTag::sk, {});
  CHECK(fp.contains(eq00));
  CHECK(fp.contains(neq01));
  CHECK(fp.contains(good));
  CHECK(fp.contains(treq));
  CHECK_FALSE(fp.contains(eq01));
  CHECK_FALSE(fp.contains(t0));
  CHECK_FALSE(fp.contains(l));
  CHECK(fp.consistent);
  CHECK_FALSE(fp.complete_over_u);
  CHECK(classical_sat(fp, eq00));
  CHECK_FALSE(classical_sat(fp, eq01));
  CHECK(classical_sat(fp, nt0));
}

TEST_CASE("seeds must be sustainable") {
  SentenceUniverse u;
  SentenceId bad = u.conj(u.eq(0, 0), u.eq(0, 1));
  CHECK_THROWS_AS(lfp(u, JumpTag::sk, {bad}), NotAFixedPoint);
  CHECK_THROWS_AS(lfp(u, JumpTag::sk, {u.eq(0, 1)}), NotAFixedPoint);

  SentenceId t0 = u.truth_teller(0);
  FixedPoint fp = lfp(u, JumpTag::sk, {t0});
  CHECK(fp.contains(t0));
  CHECK(fp.consistent);
  FixedPoint fn = lfp(u, JumpTag::sk, {u.neg(t0)});
  CHECK(fn.contains(u.neg(t0)));
  CHECK_FALSE(fn.contains(t0));
}

TEST_CASE("the liar separates empty and seeded fixed points") {
  SentenceUniverse u;
  SentenceId l = u.liar();
  SentenceId trl = u.at(l).a;

  FixedPoint fp = lfp(u, JumpTag::sk, {});
  CHECK_FALSE(fp.contains(l));
  CHECK_FALSE(fp.contains(trl));
  CHECK(fp.consistent);
  CHECK(classical_sat(fp, l));

  FixedPoint seeded = lfp(u, JumpTag::sk, {l});
  CHECK(seeded.contains(l));
  CHECK(seeded.contains(trl));
  CHECK_FALSE(seeded.consistent);
  CHECK_FALSE(classical_sat(seeded, l));
}

TEST_CASE("weak jump guards disjunction with determinateness") {
  SentenceUniverse u;
  SentenceId d = u.disj(u.eq(0, 0), u.truth_teller(0));
  FixedPoint strong = lfp(u, JumpTag::sk, {});
  CHECK(strong.contains(d));
  FixedPoint weak = lfp(u, JumpTag::wk, {});
  CHECK_FALSE(weak.contains(d));
  FixedPoint decided = lfp(u, JumpTag::wk, {u.neg(u.truth_teller(0))});
  CHECK(decided.contains(d));
}

TEST_CASE("conditional sentences need the af jump") {
  SentenceUniverse u;
  u.neg(u.eq(0, 0));
  u.neg(u.eq(0, 1));
  SentenceId good = u.fc(u.eq(0, 1), u.truth_teller(0));
  SentenceId bad = u.fc(u.eq(0, 0), u.eq(0, 1));
  SentenceId nbad = u.neg(bad);
  CHECK_THROWS_AS(lfp(u, JumpTag::sk, {}), Error);
  FixedPoint fp = lfp(u, JumpTag::af, {});
  CHECK(fp.contains(good));
  CHECK_FALSE(fp.contains(bad));
  CHECK(fp.contains(nbad));
  CHECK(jump_for_scheme(Scheme::f3) == JumpTag::af);
  CHECK(jump_for_scheme(Scheme::b3) == JumpTag::wk);
  CHECK(jump_for_scheme(Scheme::fde) == JumpTag::sk);
}

TEST_CASE("translate maps boxes to truth ascriptions") {
  SentenceUniverse u;
  Realization star;
  star.map[0] = u.eq(0, 0);
  star.map[1] = u.truth_teller(0);
  SentenceId s = translate(u, star, parse("[](p0 /\\ ~p1)"));
  CHECK(u.at(s).form == SForm::tr);
  CHECK(u.at(s).a == u.conj(u.eq(0, 0), u.neg(u.truth_teller(0))));
  CHECK(translate(u, star, Formula::top()) == u.eq(0, 0));
  CHECK(translate(u, star, Formula::bot()) == u.eq(0, 1));
  CHECK_THROWS_AS(translate(u, star, parse("p2")), Error);
}

TEST_CASE("model seeds follow the valuation clauses") {
  SentenceUniverse u;
  MixedModel m = single_rooted({{0, TruthValue::n}}, {{0, TruthValue::zero}});
  CHECK(seed_from_model(u, m, {0}, Scheme::fde).empty());

  MixedModel both1 =
      single_rooted({{0, TruthValue::one}}, {{0, TruthValue::one}});
  std::vector<SentenceId> s = seed_from_model(u, both1, {0}, Scheme::fde);
  CHECK(s.size() == 2);
  CHECK(has(s, u.truth_teller(0)));
  CHECK(has(s, u.neg(u.truth_teller(1))));

  MixedModel glut =
      single_rooted({{0, TruthValue::b}}, {{0, TruthValue::one}});
  std::vector<SentenceId> g = seed_from_model(u, glut, {0}, Scheme::fde);
  CHECK(has(g, u.truth_teller(0)));
  CHECK(has(g, u.neg(u.truth_teller(0))));
  CHECK(has(g, u.neg(u.truth_teller(1))));
  CHECK_FALSE(has(g, u.truth_teller(1)));
  FixedPoint fp = lfp(u, JumpTag::sk, g);
  CHECK_FALSE(fp.consistent);

  CHECK_THROWS_AS(seed_from_model(u, both1, {0}, Scheme::b3), Error);
}

TEST_CASE("witness bridge holds on hand-picked models") {
  for (auto [z, w] : std::vector<std::pair<TruthValue, TruthValue>>{
           {TruthValue::n, TruthValue::zero},
           {TruthValue::n, TruthValue::one},
           {TruthValue::one, TruthValue::one},
           {TruthValue::b, TruthValue::zero}}) {
    MixedModel m = single_rooted({{0, z}}, {{0, w}});
    for (const char* text : {"p0", "~p0", "[]p0", "[](p0 \\/ ~p0)"}) {
      BridgeReport r =
          verify_bridge(m, Scheme::fde, parse(text), BridgeMode::witness);
      CAPTURE(to_string(z));
      CAPTURE(text);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("circ realization covers the consistent classes") {
  SentenceUniverse u;
  MixedModel m;
  m.z_val = {{{0, TruthValue::one},
              {1, TruthValue::zero},
              {2, TruthValue::n},
              {3, TruthValue::n}}};
  m.w_val = {{{0, TruthValue::one},
              {1, TruthValue::zero},
              {2, TruthValue::one},
              {3, TruthValue::zero}}};
  m.sees = {0};
  Realization r = circ_realization(u, m, BridgeMode::circ);
  CHECK(r.map.at(0) == u.eq(0, 0));
  CHECK(r.map.at(1) == u.eq(0, 1));
  CHECK(r.map.at(2) == u.liar());
  CHECK(r.map.at(3) == u.neg(u.liar()));

  MixedModel glut = single_rooted({{0, TruthValue::b}}, {{0, TruthValue::one}});
  SentenceUniverse u2;
  CHECK_THROWS_AS(circ_realization(u2, glut, BridgeMode::circ), Error);
  Realization d = circ_realization(u2, glut, BridgeMode::dagger);
  CHECK(d.map.at(0) == u2.neg(u2.liar()));
  MixedModel gap = single_rooted({{0, TruthValue::n}}, {{0, TruthValue::one}});
  CHECK_THROWS_AS(circ_realization(u2, gap, BridgeMode::dagger), Error);
}

TEST_CASE("circ and dagger bridges on single atoms") {
  MixedModel gap = single_rooted({{0, TruthValue::n}}, {{0, TruthValue::one}});
  BridgeSetup circ = prepare_bridge(gap, Scheme::k3, BridgeMode::circ);
  CHECK(circ.tag == JumpTag::sk);
  CHECK(circ.seed.empty());
  CHECK_FALSE(circ.free_tellers.empty());
  BridgeReport cr = run_bridge(circ, gap, Scheme::k3, parse("[]p0 \\/ ~p0"));
  CHECK(cr.ok);

  MixedModel glut = single_rooted({{0, TruthValue::b}}, {{0, TruthValue::zero}});
  BridgeSetup dag = prepare_bridge(glut, Scheme::lp, BridgeMode::dagger);
  CHECK_FALSE(dag.seed.empty());
  BridgeReport dr = run_bridge(dag, glut, Scheme::lp, parse("p0 /\\ []p0"));
  CHECK(dr.ok);
  for (const BridgeCheck& c : dr.checks) {
    CAPTURE(print(c.subformula));
    CHECK(c.z_ok);
    CHECK(c.w_ok);
  }
}
