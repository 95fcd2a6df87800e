#ifndef KFMODAL_PROVER_HPP
#define KFMODAL_PROVER_HPP

#include <cstdint>
#include <vector>

#include "kfmodal/calculus.hpp"
#include "kfmodal/manyvalued.hpp"

namespace kfmodal {

enum class ProveStatus : uint8_t { derived, saturated, budget_exceeded };

std::string to_string(ProveStatus s);

struct ProveResult {
  ProveStatus status = ProveStatus::saturated;
  Derivation derivation;  // meaningful when status == derived
  std::uint64_t expanded = 0;
};

// Backward cut-free search with loop detection on sequent repetition.
// "saturated" means the cut-free space was exhausted; derivability with cut
// may still hold.
ProveResult prove(CalculusId c, const Sequent& goal,
                  std::uint64_t budget = 20000);

// Forward-generated derivation: starts from axioms and applies random rule
// instances, so the result passes check_derivation and its root is sound by
// construction.
Derivation random_derivation(CalculusId c, std::uint64_t seed,
                             int num_atoms = 3, int steps = 12);

struct AdequacyReport {
  std::uint64_t both_yes = 0;
  std::uint64_t both_no = 0;
  std::uint64_t search_incomplete = 0;  // holds semantically, search saturated
  std::uint64_t budget_exceeded = 0;
  std::vector<Sequent> soundness_violations;  // derived yet refuted
};

// Compares prove against internal_consequence over the corpus; soundness
// violations are collected rather than thrown so callers can report them.
AdequacyReport crosscheck_adequacy(CalculusId c,
                                   const std::vector<Sequent>& corpus,
                                   std::uint64_t budget = 20000);

struct RefuteResult {
  bool refuted = false;
  PlainModel model;  // tree model witnessing the refutation
  int world = 0;     // root world
  std::uint64_t profiles = 0;
};

// Searches tree models of depth <= modal depth of the goal and branching
// <= frame_bound for a world designating every antecedent formula and no
// succedent formula.  Distinct value profiles are merged, so the search is
// exhaustive for the bounded class.
RefuteResult blackbox_refute(CalculusId c, const Sequent& goal,
                             int frame_bound);

}  // namespace kfmodal

#endif
