#ifndef KFMODAL_KFTRUTH_HPP
#define KFMODAL_KFTRUTH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kfmodal/formula.hpp"
#include "kfmodal/mixed.hpp"

namespace kfmodal {

enum class SForm : std::uint8_t { eq, tr, neg, conj, disj, fc };

using SentenceId = int;

struct TSentence {
  SForm form = SForm::eq;
  int a = 0;  // eq: left numeral; tr: coded sentence; neg: child; binary: left
  int b = 0;  // eq: right numeral; binary: right
};

struct NotAFixedPoint : Error {
  using Error::Error;
};

// Finite arena of quantifier-free truth sentences.  Codes are table indices
// and constructors hash-cons, so structurally equal sentences share an id.
// Every Tr node keeps its coded sentence and that sentence's negation in the
// table, which is what the jump clauses consult.
class SentenceUniverse {
 public:
  SentenceId eq(int m, int n);
  SentenceId tr(SentenceId code);
  SentenceId neg(SentenceId s);
  SentenceId conj(SentenceId x, SentenceId y);
  SentenceId disj(SentenceId x, SentenceId y);
  SentenceId fc(SentenceId x, SentenceId y);

  // Tr(c) with c resolving to the sentence itself.
  SentenceId truth_teller(int i);
  // ~Tr(l) with l resolving to the whole negated sentence.
  SentenceId liar();

  const TSentence& at(SentenceId id) const;
  int size() const { return static_cast<int>(table_.size()); }
  bool has_fc_sentence() const { return has_fc_; }
  std::optional<SentenceId> find_neg(SentenceId id) const;
  std::optional<SentenceId> find_truth_teller(int i) const;
  std::optional<SentenceId> find_liar() const;

  // "0=0", "T(5)", "not X", "(X and Y)", "(X or Y)", "(X fc Y)"
  std::string form_string(SentenceId id) const;

 private:
  SentenceId intern(TSentence s);
  std::vector<TSentence> table_;
  std::map<std::uint64_t, SentenceId> index_;
  std::map<int, SentenceId> tellers_;
  SentenceId liar_ = -1;
  bool has_fc_ = false;
};

enum class JumpTag : std::uint8_t { sk, wk, af };

std::string to_string(JumpTag t);
JumpTag jump_tag_from_string(const std::string& s);

// Jump matching a nonclassical evaluation scheme: b3 -> wk, f3 -> af,
// otherwise sk.
JumpTag jump_for_scheme(Scheme s);

// One application of the jump clauses over the universe.  Equations are
// decided by numeral arithmetic, Tr / negated Tr by code resolution, the
// connective clauses by membership of the immediate subsentences; wk and af
// guard the negated conjunction (and the derived disjunction clause) with
// determinateness of both components.  Sentences with ↠ require tag af.
std::vector<bool> jump(const SentenceUniverse& u, JumpTag tag,
                       const std::vector<bool>& in_S);

struct FixedPoint {
  const SentenceUniverse* universe = nullptr;
  JumpTag tag = JumpTag::sk;
  std::vector<bool> in_S;
  bool consistent = true;
  bool complete_over_u = false;

  bool contains(SentenceId id) const;
  std::vector<SentenceId> members() const;
};

// Iterates seed ∪ jump(·) to stabilization and verifies the result is a
// genuine fixed point; NotAFixedPoint signals a seed the jump cannot
// sustain.  Truth-teller and liar literals are self-supporting.
FixedPoint lfp(const SentenceUniverse& u, JumpTag tag,
               const std::vector<SentenceId>& seed);

// Classical evaluation over the fixed point: equations by arithmetic, Tr by
// membership in S, connectives classically, ↠ as material implication.
bool classical_sat(const FixedPoint& fp, SentenceId s);

struct Realization {
  std::map<int, SentenceId> map;  // atom index -> sentence
};

// Structural translation: atoms through the realization, ⊤ ↦ 0=0, ⊥ ↦ 0=1,
// □ψ ↦ Tr(code of the translated ψ); extends the universe by closure.
SentenceId translate(SentenceUniverse& u, const Realization& star,
                     const Formula& f);

// p_j ↦ τ_2j ∧ ¬τ_2j+1
Realization witness_realization(SentenceUniverse& u,
                                const std::vector<int>& atoms);

// Truth-teller seed tied to a single-rooted model: τ_2j iff p_j holds at w
// or at z; ¬τ_2j iff ¬p_j holds at z; τ_2j+1 iff ¬p_j holds at w and p_j at
// z; ¬τ_2j+1 iff p_j holds at z.  Rejects the weak schemes.
std::vector<SentenceId> seed_from_model(SentenceUniverse& u,
                                        const MixedModel& m,
                                        const std::vector<int>& atoms,
                                        Scheme scheme);

enum class BridgeMode : std::uint8_t { witness, circ, dagger };

std::string to_string(BridgeMode m);
BridgeMode bridge_mode_from_string(const std::string& s);

// circ (consistent models): 0=0 if V_z(p)=1; λ if V_w(p)=1, V_z(p)=n;
// ¬λ if V_w(p)=0, V_z(p)=n; 0=1 if V_z(p)=0.
// dagger (complete models): 0=1 if V_z(p)=0; ¬λ if V_w(p)=1, V_z(p)=b;
// λ if V_w(p)=0, V_z(p)=b; 0=0 if V_z(p)=1.
Realization circ_realization(SentenceUniverse& u, const MixedModel& m,
                             BridgeMode kind);

struct BridgeCheck {
  Formula subformula;
  bool z_ok = true;  // membership of the translation in S matches z
  bool w_ok = true;  // designation at w implies classical truth
};

struct BridgeReport {
  BridgeMode mode = BridgeMode::witness;
  JumpTag tag = JumpTag::sk;
  bool ok = true;
  std::vector<BridgeCheck> checks;
};

struct BridgeSetup {
  SentenceUniverse u;
  Realization star;
  BridgeMode mode = BridgeMode::witness;
  JumpTag tag = JumpTag::sk;
  std::vector<SentenceId> seed;           // canonical seed for the mode
  std::vector<SentenceId> free_tellers;   // unbound truth-tellers (circ/dagger)
};

// Universe, realization, jump tag and canonical seed for a single-rooted
// model: witness seeds from the model, circ starts empty, dagger seeds the
// liar cluster.
BridgeSetup prepare_bridge(const MixedModel& m, Scheme scheme,
                           BridgeMode mode);

// Translates every subformula of f and its negation, computes
// lfp(seed ∪ extra_seed) and checks each subformula ψ: designation at z
// matches membership of the translation, and designation at w implies its
// classical truth.
BridgeReport run_bridge(BridgeSetup& setup, const MixedModel& m, Scheme scheme,
                        const Formula& f,
                        const std::vector<SentenceId>& extra_seed = {});

BridgeReport verify_bridge(const MixedModel& m, Scheme scheme, const Formula& f,
                           BridgeMode mode);

// Surface syntax for realization files and seed strings: truth-tellers t0,
// t1, ..., the liar lam, equations 0=0 and 0=1, connectives ~ /\ \/ ->> and
// parentheses.  Explicit T(...) codes are rejected.
SentenceId parse_sentence(SentenceUniverse& u, const std::string& text);

// Comma-separated signed truth-teller / liar literals: "+t0,-t1", "+lam".
std::vector<SentenceId> parse_seed(SentenceUniverse& u,
                                   const std::string& text);

}  // namespace kfmodal

#endif
