#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kfmodal/formula.hpp"

namespace kfmodal {

// Enumerator order is the canonical witness order n < b < 0 < 1.
enum class TruthValue : std::uint8_t { n = 0, b = 1, zero = 2, one = 3 };

constexpr TruthValue kAllValues[] = {TruthValue::n, TruthValue::b,
                                     TruthValue::zero, TruthValue::one};

bool designated(TruthValue v);
TruthValue negate(TruthValue v);

// Logic lattice: 0 at the bottom, 1 at the top, n and b incomparable.
TruthValue lattice_meet(TruthValue a, TruthValue b);
TruthValue lattice_join(TruthValue a, TruthValue b);

// Linear information order n < 0 < 1 used by the weak schemes (b excluded).
TruthValue linear_min(TruthValue a, TruthValue b);

std::string to_string(TruthValue v);
TruthValue truth_value_from_string(const std::string& s);

enum class Scheme : std::uint8_t { fde, k3, lp, ks3, b3, f3 };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

bool scheme_allows_value(Scheme s, TruthValue v);
bool scheme_allows_fc(Scheme s);

struct IllegalValueForScheme : Error {
  using Error::Error;
};

struct IllegalConnective : Error {
  using Error::Error;
};

// Kripke model with a scheme-local valuation.  For ks3 every world carries a
// polarity flag: false restricts the world to {0,1,n}, true to {0,1,b}.
struct PlainModel {
  std::vector<std::vector<int>> successors;        // successors[w], sorted
  std::vector<std::map<int, TruthValue>> val;      // val[w][atom]
  std::vector<bool> complete_polarity;             // ks3 only; may be empty

  int num_worlds() const { return static_cast<int>(val.size()); }
};

void validate(const PlainModel& m, Scheme s);

// Truth value of f at a world.  [] takes the greatest lower bound of the
// successor values in the scheme's order; over the empty successor set it
// evaluates to the top value 1.
TruthValue eval(const PlainModel& m, int world, const Formula& f, Scheme s);

// Truth value of f at a single reflexive world whose valuation is given as a
// dense vector indexed by atom id ([] is transparent there).
TruthValue eval_single(const Formula& f, const std::vector<TruthValue>& val,
                       Scheme s);

// Clause for one binary connective (conj, disj or fc) under the scheme.
TruthValue apply_binary(Conn c, TruthValue a, TruthValue b, Scheme s);

// All scheme-legal valuations of num_atoms atom slots, lexicographic in the
// canonical value order with the first slot most significant.
std::vector<std::vector<TruthValue>> legal_valuations(int num_atoms, Scheme s);

struct ConsequenceResult {
  bool holds = false;
  std::vector<int> atoms;            // slots of the witness valuation
  std::vector<TruthValue> witness;   // empty when holds
};

// Local consequence over one-world reflexive models: every legal valuation
// designating all of ant designates some member of suc.  The witness is the
// first falsifying valuation in the canonical order.
ConsequenceResult internal_consequence(const std::vector<Formula>& ant,
                                       const std::vector<Formula>& suc,
                                       Scheme s);

struct TruthTable {
  std::vector<int> atoms;
  struct Row {
    std::vector<TruthValue> v;  // aligned with atoms
    TruthValue value;
  };
  std::vector<Row> rows;
};

// Full table of a box-free formula over all legal valuations of its atoms.
TruthTable eval_truth_table(const Formula& f, Scheme s);

}  // namespace kfmodal
