#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kfmodal/formula.hpp"
#include "kfmodal/manyvalued.hpp"

namespace kfmodal {

enum class SchemeClass : std::uint8_t {
  four_valued,
  consistent,
  complete,
  symmetric
};

std::string to_string(SchemeClass c);

// Scheme whose value legality matches the class.
Scheme class_scheme(SchemeClass c);

// Mixed idiosyncratic model: classical worlds each see exactly one
// nonclassical world, nonclassical worlds see exactly themselves.
struct MixedModel {
  std::vector<std::map<int, TruthValue>> w_val;  // classical worlds, {0,1}
  std::vector<std::map<int, TruthValue>> z_val;  // nonclassical worlds
  std::vector<int> sees;                         // sees[w] = index into z_val
  std::vector<bool> z_complete_polarity;         // symmetric class; may be empty

  int num_classical() const { return static_cast<int>(w_val.size()); }
  int num_nonclassical() const { return static_cast<int>(z_val.size()); }
};

MixedModel single_rooted(std::map<int, TruthValue> z,
                         std::map<int, TruthValue> w);

void validate_mixed(const MixedModel& m, SchemeClass klass);

// V is faithful when a classical value at a seen nonclassical world forces
// the same value at the classical world.
bool is_faithful(const MixedModel& m);

std::vector<int> atoms_of(const MixedModel& m);

// Truth at a world of the model.  Nonclassical worlds follow the scheme's
// clauses with [] transparent; classical worlds evaluate classically with
// []g true exactly when the seen world designates g.
TruthValue eval_mixed(const MixedModel& m, bool at_classical, int world,
                      const Formula& f, Scheme s);

// Fast single-rooted evaluation over dense valuations indexed by atom id.
TruthValue eval_mixed_at_w(const Formula& f, const std::vector<TruthValue>& z,
                           const std::vector<TruthValue>& w, Scheme s);

enum class ClassicalLogicId : std::uint8_t {
  BMminus,
  BM,
  Mminus,
  M,
  Mn,
  Mb,
  Mwminus,
  Mw,
  Mfminus,
  Mf
};

constexpr ClassicalLogicId kAllLogics[] = {
    ClassicalLogicId::BMminus, ClassicalLogicId::BM,
    ClassicalLogicId::Mminus,  ClassicalLogicId::M,
    ClassicalLogicId::Mn,      ClassicalLogicId::Mb,
    ClassicalLogicId::Mwminus, ClassicalLogicId::Mw,
    ClassicalLogicId::Mfminus, ClassicalLogicId::Mf};

std::string to_string(ClassicalLogicId id);
ClassicalLogicId logic_from_string(const std::string& s);

Scheme logic_scheme(ClassicalLogicId id);        // evaluation scheme at z
SchemeClass logic_class(ClassicalLogicId id);    // admissible z valuations
bool logic_faithful(ClassicalLogicId id);        // restrict to faithful V
bool logic_allows_fc(ClassicalLogicId id);

// []f /\ ~[]~f -> f with the arrow expanded.
Formula faith_instance(const Formula& f);

// Single-rooted models of the logic's class over atom slots 0..n-1, as dense
// (z, w) valuation pairs; z-major in the canonical value order, w in 0 < 1
// order, so the first falsifying entry is the canonical countermodel.
// For the faith logics the class requires every formula, not just every atom,
// to keep a classical z-value at w; over four-valued z this also rules out
// valuations mixing n and b, which would classicize a disjunction at z alone.
std::vector<std::pair<std::vector<TruthValue>, std::vector<TruthValue>>>
class_models(ClassicalLogicId id, int num_atoms);

struct MixedDecision {
  bool valid = false;
  MixedModel countermodel;  // single-rooted; meaningful only when !valid
  Scheme scheme = Scheme::fde;
  bool countermodel_faithful = false;
};

// Theoremhood of f in the logic: designated at the classical root of every
// single-rooted model of the logic's class (faithful where the logic says
// so).  Exhaustive enumeration; accepts up to 8 atoms.
MixedDecision decide(ClassicalLogicId id, const Formula& f);

// Premises designated at the root force f designated at the root.
MixedDecision consequence_classical(ClassicalLogicId id,
                                    const std::vector<Formula>& premises,
                                    const Formula& f);

struct FaithReport {
  bool instances_hold = false;  // all []p /\ ~[]~p -> p style instances
  bool faithful = false;
  bool agree = false;
  std::string detail;  // first disagreeing instance, when any
};

// Both sides of the faithful-model characterization: the atom and negated
// atom instances of the faith axiom hold at every classical world iff the
// valuation is faithful.
FaithReport check_faithfulness_equivalence(const MixedModel& m);

struct AxiomSchema {
  std::string name;
  Formula shape;  // over slot atoms p0 (and p1 when binary)
  int arity = 1;
};

std::vector<AxiomSchema> axiom_schemas(ClassicalLogicId id);

Formula instantiate(const AxiomSchema& schema, const Formula& a,
                    const Formula& b);

struct AuditFailure {
  std::string schema;
  Formula instance;
  std::map<int, TruthValue> z;
  std::map<int, TruthValue> w;
};

struct AuditReport {
  std::uint64_t instances = 0;  // schema instances covered
  std::uint64_t models = 0;
  std::vector<AuditFailure> failures;  // capped
  bool ok() const { return failures.empty(); }
};

// Checks every instance of every axiom schema of the logic over the pool of
// formulas with num_atoms atoms up to max_depth.  Instances are grouped by
// the value profile of their components per model, which decides all
// instances sharing the profile at once.
AuditReport axiom_audit(ClassicalLogicId id, int num_atoms, int max_depth);

}  // namespace kfmodal
