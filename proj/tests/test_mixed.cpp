#include <map>

#include "doctest.h"
#include "kfmodal/formula.hpp"
#include "kfmodal/mixed.hpp"

using namespace kfmodal;

namespace {

MixedModel model(TruthValue z, TruthValue w) {
  return single_rooted({{0, z}}, {{0, w}});
}

}  // namespace

TEST_CASE("logic names round trip") {
  for (ClassicalLogicId id : kAllLogics)
    CHECK(logic_from_string(to_string(id)) == id);
  CHECK_THROWS_AS(logic_from_string("KD45"), Error);
}

TEST_CASE("box at the classical root reads designation at the seen world") {
  Formula boxp = parse("[]p0");
  CHECK(eval_mixed_at_w(boxp, {TruthValue::b}, {TruthValue::zero},
                        Scheme::fde) == TruthValue::one);
  CHECK(eval_mixed_at_w(boxp, {TruthValue::n}, {TruthValue::one},
                        Scheme::fde) == TruthValue::zero);
  MixedModel m = model(TruthValue::b, TruthValue::zero);
  CHECK(eval_mixed(m, true, 0, boxp, Scheme::fde) == TruthValue::one);
  CHECK(eval_mixed(m, true, 0, parse("p0"), Scheme::fde) == TruthValue::zero);
  CHECK(eval_mixed(m, false, 0, boxp, Scheme::fde) == TruthValue::b);
}

TEST_CASE("faithfulness propagates classical values only") {
  CHECK(is_faithful(model(TruthValue::one, TruthValue::one)));
  CHECK_FALSE(is_faithful(model(TruthValue::one, TruthValue::zero)));
  CHECK(is_faithful(model(TruthValue::zero, TruthValue::zero)));
  CHECK_FALSE(is_faithful(model(TruthValue::zero, TruthValue::one)));
  CHECK(is_faithful(model(TruthValue::n, TruthValue::one)));
  CHECK(is_faithful(model(TruthValue::b, TruthValue::zero)));
}

TEST_CASE("faith instances characterize faithfulness") {
  for (TruthValue z : kAllValues) {
    for (TruthValue w : {TruthValue::zero, TruthValue::one}) {
      FaithReport r = check_faithfulness_equivalence(model(z, w));
      CHECK(r.agree);
      CHECK(r.instances_hold == r.faithful);
    }
  }
}

TEST_CASE("faith axiom separates the faithful logics") {
  Formula faith = parse("[]p0 /\\ ~[]~p0 -> p0");
  MixedDecision base = decide(ClassicalLogicId::BMminus, faith);
  REQUIRE_FALSE(base.valid);
  CHECK(base.countermodel.z_val[0].at(0) == TruthValue::one);
  CHECK(base.countermodel.w_val[0].at(0) == TruthValue::zero);
  CHECK_FALSE(base.countermodel_faithful);
  CHECK(decide(ClassicalLogicId::BM, faith).valid);
}

TEST_CASE("reflection theorems of the richer logics fail over BM") {
  Formula refl = parse("[]p0 -> p0");
  Formula corefl = parse("p0 -> []p0");
  CHECK(decide(ClassicalLogicId::Mn, refl).valid);
  CHECK(decide(ClassicalLogicId::Mb, corefl).valid);
  for (const Formula& f : {refl, corefl}) {
    MixedDecision d = decide(ClassicalLogicId::BM, f);
    CHECK_FALSE(d.valid);
    CHECK_FALSE(d.countermodel.z_val.empty());
  }
}

TEST_CASE("faith on compounds already forces the split theorem") {
  Formula split = parse("([]p0 -> p0) \\/ (p1 -> []p1)");
  CHECK(decide(ClassicalLogicId::M, split).valid);
  CHECK(decide(ClassicalLogicId::BM, split).valid);
  MixedDecision base = decide(ClassicalLogicId::BMminus, split);
  REQUIRE_FALSE(base.valid);
  CHECK(base.countermodel.z_val[0].at(0) == TruthValue::b);
  CHECK(base.countermodel.z_val[0].at(1) == TruthValue::n);

  Formula dd = parse("(~[]~p0 \\/ ~[]p0) \\/ ([]~p1 \\/ []p1)");
  CHECK(decide(ClassicalLogicId::BM, dd).valid);
  CHECK_FALSE(decide(ClassicalLogicId::BMminus, dd).valid);
}

TEST_CASE("faith instances on compounds survive mixed valuations") {
  Formula f = parse("p0 \\/ ~p1");
  CHECK(decide(ClassicalLogicId::BM, faith_instance(f)).valid);
  CHECK_FALSE(decide(ClassicalLogicId::BMminus, faith_instance(f)).valid);
}

TEST_CASE("decide is deterministic") {
  Formula f = parse("[]p0 -> p0");
  MixedDecision a = decide(ClassicalLogicId::BM, f);
  MixedDecision b = decide(ClassicalLogicId::BM, f);
  REQUIRE_FALSE(a.valid);
  CHECK(a.countermodel.z_val[0] == b.countermodel.z_val[0]);
  CHECK(a.countermodel.w_val[0] == b.countermodel.w_val[0]);
}

TEST_CASE("classical consequence at the root") {
  Formula boxp = parse("[]p0");
  Formula p = parse("p0");
  CHECK(consequence_classical(ClassicalLogicId::Mn, {boxp}, p).valid);
  CHECK_FALSE(consequence_classical(ClassicalLogicId::M, {boxp}, p).valid);
  CHECK(consequence_classical(ClassicalLogicId::BMminus, {p}, p).valid);
}

TEST_CASE("class models enumerate the advertised frames") {
  CHECK(class_models(ClassicalLogicId::BMminus, 1).size() == 8);
  CHECK(class_models(ClassicalLogicId::BM, 1).size() == 6);
  CHECK(class_models(ClassicalLogicId::Mn, 1).size() == 4);
  CHECK(class_models(ClassicalLogicId::BMminus, 2).size() == 64);
  CHECK(class_models(ClassicalLogicId::BM, 2).size() == 28);
  CHECK(class_models(ClassicalLogicId::M, 2).size() == 28);
  for (const auto& [z, w] : class_models(ClassicalLogicId::Mb, 2))
    for (TruthValue v : z) CHECK(v != TruthValue::n);
}

TEST_CASE("axiom audits pass on small pools") {
  for (ClassicalLogicId id :
       {ClassicalLogicId::BM, ClassicalLogicId::Mn, ClassicalLogicId::Mf}) {
    AuditReport r = axiom_audit(id, 1, 1);
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
  CHECK(axiom_audit(ClassicalLogicId::BM, 2, 2).ok());
}

TEST_CASE("fc locked to the fc logics") {
  Formula f = parse("p0 ->> p0", Dialect::fc);
  CHECK(decide(ClassicalLogicId::Mf, f).valid);
  CHECK_THROWS_AS(decide(ClassicalLogicId::M, f), IllegalConnective);
}

TEST_CASE("validate_mixed enforces the class") {
  MixedModel m = model(TruthValue::b, TruthValue::one);
  CHECK_NOTHROW(validate_mixed(m, SchemeClass::four_valued));
  CHECK_THROWS_AS(validate_mixed(m, SchemeClass::consistent),
                  IllegalValueForScheme);
}
