#include "doctest.h"
#include "kfmodal/prover.hpp"

#include <functional>
#include <vector>

#include "kfmodal/formula.hpp"
#include "kfmodal/manyvalued.hpp"

using namespace kfmodal;

namespace {

bool same_tree(const Derivation& a, const Derivation& b) {
  if (a.sequent != b.sequent || a.rule != b.rule ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!same_tree(a.children[i], b.children[i])) return false;
  }
  return true;
}

Sequent seq(std::vector<Formula> ant, std::vector<Formula> suc) {
  return Sequent(std::move(ant), std::move(suc));
}

const Formula p0 = Formula::atom(0);
const Formula p1 = Formula::atom(1);

}  // namespace

TEST_CASE("search derives representative theorems per calculus") {
  struct Goal {
    CalculusId c;
    Sequent s;
  };
  std::vector<Goal> goals = {
      {{BaseCalculus::FDE, ModalKind::none},
       seq({parse("p0 /\\ p1")}, {parse("p1 \\/ p2")})},
      {{BaseCalculus::K3, ModalKind::none}, seq({p0, parse("~p0")}, {p1})},
      {{BaseCalculus::LP, ModalKind::none}, seq({p1}, {p0, parse("~p0")})},
      {{BaseCalculus::KS3, ModalKind::none},
       seq({p0, parse("~p0")}, {p1, parse("~p1")})},
      {{BaseCalculus::B3, ModalKind::none},
       seq({p0, p1}, {parse("p0 /\\ p1")})},
      {{BaseCalculus::F3, ModalKind::none},
       seq({p0, p1}, {parse("p0 ->> p1", Dialect::fc)})},
      {{BaseCalculus::FDE, ModalKind::box},
       seq({parse("[](p0 /\\ p1)")}, {parse("[]p0")})},
      {{BaseCalculus::FDE, ModalKind::blackbox},
       seq({parse("[]p0")}, {parse("[]p0")})},
  };
  for (const Goal& g : goals) {
    CAPTURE(print(g.s));
    ProveResult r = prove(g.c, g.s);
    REQUIRE(r.status == ProveStatus::derived);
    CHECK(r.derivation.sequent == g.s);
    CHECK(check_derivation(g.c, r.derivation).valid);
    CHECK(r.expanded > 0);
  }
}

TEST_CASE("saturation matches semantic failure on classical shapes") {
  CalculusId fde{BaseCalculus::FDE, ModalKind::none};
  Sequent lem = seq({}, {parse("p0 \\/ ~p0")});
  CHECK(prove(fde, lem).status == ProveStatus::saturated);
  CHECK_FALSE(internal_consequence({}, lem.suc(), Scheme::fde).holds);

  CHECK(prove({BaseCalculus::K3, ModalKind::none}, lem).status ==
        ProveStatus::saturated);
  CHECK(prove({BaseCalculus::LP, ModalKind::none}, lem).status ==
        ProveStatus::derived);
}

TEST_CASE("zero budget reports budget exceeded") {
  ProveResult r = prove({BaseCalculus::FDE, ModalKind::box},
                        seq({parse("[](p0 /\\ p1)")}, {parse("[]p0")}), 0);
  CHECK(r.status == ProveStatus::budget_exceeded);
  CHECK(to_string(ProveStatus::budget_exceeded) == "budgetExceeded");
}

TEST_CASE("random derivations are deterministic and always check") {
  std::vector<CalculusId> calculi;
  for (BaseCalculus b : {BaseCalculus::FDE, BaseCalculus::K3, BaseCalculus::LP,
                         BaseCalculus::KS3, BaseCalculus::B3,
                         BaseCalculus::F3}) {
    for (ModalKind m :
         {ModalKind::none, ModalKind::box, ModalKind::blackbox}) {
      calculi.push_back({b, m});
    }
  }
  for (const CalculusId& c : calculi) {
    for (std::uint64_t s : {1ull, 2ull, 77ull}) {
      Derivation d = random_derivation(c, s);
      CAPTURE(to_string(c));
      CAPTURE(s);
      CHECK(check_derivation(c, d).valid);
      CHECK(same_tree(d, random_derivation(c, s)));
    }
    CHECK_FALSE(same_tree(random_derivation(c, 1), random_derivation(c, 2)));
  }
}

TEST_CASE("random derivation roots are sound") {
  for (BaseCalculus b : {BaseCalculus::FDE, BaseCalculus::KS3,
                         BaseCalculus::B3}) {
    CalculusId c{b, ModalKind::none};
    for (std::uint64_t s = 0; s < 40; ++s) {
      Derivation d = random_derivation(c, s, 2, 10);
      ConsequenceResult ic = internal_consequence(
          d.sequent.ant(), d.sequent.suc(), base_scheme(b));
      CAPTURE(print(d.sequent));
      CHECK(ic.holds);
    }
  }
}

namespace {

// The calculi have no rules for negated constants, so validity that hinges
// on ~T or ~F is invisible to the search; that is the only incompleteness
// the depth-1 space exhibits.
bool constant_under_negation(const Formula& f) {
  switch (f.conn()) {
    case Conn::atom:
    case Conn::top:
    case Conn::bot:
      return false;
    case Conn::neg: {
      std::string body = print(f.child());
      return body.find('T') != std::string::npos ||
             body.find('F') != std::string::npos ||
             constant_under_negation(f.child());
    }
    case Conn::box:
      return constant_under_negation(f.child());
    default:
      return constant_under_negation(f.left()) ||
             constant_under_negation(f.right());
  }
}

bool constant_under_negation(const Sequent& s) {
  for (const Formula& f : s.ant())
    if (constant_under_negation(f)) return true;
  for (const Formula& f : s.suc())
    if (constant_under_negation(f)) return true;
  return false;
}

}  // namespace

TEST_CASE("adequacy crosscheck over a small exhaustive corpus") {
  std::vector<Formula> pool = enumerate_formulas(1, 1, false, false);
  std::vector<Sequent> corpus;
  for (const Formula& a : pool) {
    for (const Formula& b : pool) {
      corpus.push_back(seq({a}, {b}));
    }
  }
  for (BaseCalculus b : {BaseCalculus::FDE, BaseCalculus::K3}) {
    CalculusId c{b, ModalKind::none};
    AdequacyReport rep = crosscheck_adequacy(c, corpus);
    CHECK(rep.soundness_violations.empty());
    CHECK(rep.budget_exceeded == 0);
    CHECK(rep.both_yes > 0);
    CHECK(rep.both_yes + rep.both_no + rep.search_incomplete ==
          corpus.size());
    CHECK(rep.search_incomplete > 0);
    for (const Sequent& s : corpus) {
      ConsequenceResult ic =
          internal_consequence(s.ant(), s.suc(), base_scheme(b));
      bool derived = prove(c, s).status == ProveStatus::derived;
      if (ic.holds && !derived) {
        CAPTURE(print(s));
        CHECK(constant_under_negation(s));
      }
    }
  }
}

TEST_CASE("bounded refutation finds a blackbox countermodel") {
  CalculusId c{BaseCalculus::FDE, ModalKind::blackbox};
  RefuteResult r = blackbox_refute(c, seq({parse("[]p0")}, {p0}), 2);
  REQUIRE(r.refuted);
  CHECK(r.profiles > 0);
  PlainModel& m = r.model;
  CHECK(designated(eval(m, r.world, parse("[]p0"), Scheme::fde)));
  CHECK_FALSE(designated(eval(m, r.world, p0, Scheme::fde)));

  CHECK_FALSE(blackbox_refute(c, seq({p0}, {p0}), 2).refuted);
  CHECK_FALSE(
      blackbox_refute(c, seq({parse("[](p0 /\\ p1)")}, {parse("[]p0")}), 2)
          .refuted);
}
