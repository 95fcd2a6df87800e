#ifndef KFMODAL_CALCULUS_HPP
#define KFMODAL_CALCULUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kfmodal/formula.hpp"
#include "kfmodal/manyvalued.hpp"

namespace kfmodal {

enum class BaseCalculus : uint8_t { FDE, K3, LP, KS3, B3, F3 };
enum class ModalKind : uint8_t { none, box, blackbox };

struct CalculusId {
  BaseCalculus base = BaseCalculus::FDE;
  ModalKind modal = ModalKind::none;
  bool operator==(const CalculusId&) const = default;
};

inline constexpr BaseCalculus kAllBases[] = {BaseCalculus::FDE, BaseCalculus::K3,
                                             BaseCalculus::LP,  BaseCalculus::KS3,
                                             BaseCalculus::B3,  BaseCalculus::F3};

std::string to_string(BaseCalculus b);
std::string to_string(ModalKind m);
std::string to_string(CalculusId c);
BaseCalculus base_from_string(const std::string& s);
ModalKind modal_from_string(const std::string& s);

// Scheme evaluating the base connectives; bridges derivability to semantics.
Scheme base_scheme(BaseCalculus b);
bool base_allows_fc(BaseCalculus b);

// Rule names as they appear in derivations, with their premise counts.
std::vector<std::pair<std::string, int>> rule_table(CalculusId c);

struct Derivation {
  Sequent sequent;
  std::string rule;
  std::vector<Formula> principal;  // optional annotation; checked when given
  std::vector<Derivation> children;
};

// Nodes on the longest branch, minus one.
int derivation_length(const Derivation& d);
int derivation_size(const Derivation& d);

struct CheckResult {
  bool valid = false;
  int node = -1;  // leftmost-innermost index of the offending node
  std::string reason;
  Sequent at;
};

// Every node must be a legal instance of a rule of c, side conditions
// included.  Contexts are sets, so each context may either keep or drop the
// principal formula; annotated principals restrict the instance search.
CheckResult check_derivation(CalculusId c, const Derivation& d);

// Adds extra_ant / extra_suc uniformly through the derivation, preserving
// length.  Not available for blackbox calculi, whose modal rules carry no
// side formulas.
Derivation weaken(CalculusId c, const Derivation& d, const FormulaSet& extra_ant,
                  const FormulaSet& extra_suc);

}  // namespace kfmodal

#endif
