#ifndef KFMODAL_LEMMAS_HPP
#define KFMODAL_LEMMAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kfmodal/kftruth.hpp"
#include "kfmodal/mixed.hpp"

namespace kfmodal {

struct LemmaReport {
  std::string name;
  bool ok = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // capped at 20
  std::string summary;
};

// Faithful-model characterization: the atom and negated-atom instances of
// []f /\ ~[]~f -> f hold at the classical root iff the valuation is
// faithful, over every single-rooted four-valued model.
LemmaReport faith_lemma(int num_atoms = 2);

// For each pair of a base calculus and its classical host logic, semantic
// consequence between Γ and Δ at the nonclassical root transfers to
// theoremhood of /\[]Γ -> \/[]Δ.  Sequent sides are swept exhaustively up to
// two members over the formula pool, deduplicated by designation profile.
LemmaReport connecting_lemma(int num_atoms = 2, int max_depth = 2);

// ~([]f \/ []~f) is a theorem exactly when it is one for some atom of f;
// neither side ever holds, because fully classical root valuations force a
// classical value on every formula.  Signatures of all formulas in the pool
// are closed exhaustively; a sample is tied back to the decision procedure.
LemmaReport nabla_lemma(int num_atoms = 3, int max_depth = 3);

// The truth-teller seed of a single-rooted faithful model yields a fixed
// point whose τ-literal memberships match the four defining clauses; the
// consistent-scheme models yield consistent fixed points.
LemmaReport modfxp_lemma(int num_atoms = 2);

// Designation at the nonclassical root coincides with membership of the
// witness translation in the seeded fixed point.
LemmaReport extnrp_lemma(int num_atoms = 2, int max_depth = 2);

// Designation at the classical root implies classical truth of the witness
// translation over the seeded fixed point.
LemmaReport maintc_lemma(int num_atoms = 2, int max_depth = 2);

// Least fixed points over the liar universe are consistent and undecided on
// the liar, which classical evaluation then affirms; seeding the liar
// cluster flips both.
LemmaReport liar_lemma();

// Over the faith-free four-valued logic, validating f -> []f on literals
// forces []~p \/ []p and the faith axiom, and validating []f -> f forces
// ~[]~p \/ ~[]p and the faith axiom, both as model sweeps and through
// consequence_classical.
LemmaReport tito_lemma(int num_atoms = 2);

// (p ->> q) <-> (p -> q) is a theorem of the fc logic while the boxed
// version is refuted, with exactly one of the two boxed sentences designated
// at the countermodel root.
LemmaReport extfcon_lemma();

std::vector<std::string> lemma_names();

// Dispatch by suite name; bound, when given, overrides the default atom
// count of the model sweeps.
LemmaReport verify_lemma(const std::string& name,
                         std::optional<int> bound = std::nullopt);

}  // namespace kfmodal

#endif
