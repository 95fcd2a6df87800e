#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfmodal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

enum class Conn : std::uint8_t { atom, top, bot, neg, box, conj, disj, fc };

// Immutable formula tree over indexed atoms p0, p1, ...  Connectives are the
// primitives atom/T/F/~/[]//\/\//->>; -> and <-> exist only as input sugar.
class Formula {
 public:
  static Formula atom(int index);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  static Formula box(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula fc(Formula a, Formula b);

  Conn conn() const;
  bool is(Conn c) const;
  int atom_index() const;
  Formula child() const;  // neg, box
  Formula left() const;   // conj, disj, fc
  Formula right() const;

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::strong_ordering cmp(const Node* a, const Node* b);
  std::shared_ptr<const Node> node_;
};

struct FormulaStats {
  std::vector<int> prop_set;  // sorted, duplicate free
  int modal_depth = 0;
  int positive_complexity = 0;
};

FormulaStats stats(const Formula& f);
std::vector<int> prop_set(const Formula& f);
std::vector<int> prop_set(const std::vector<Formula>& fs);
int modal_depth(const Formula& f);
int positive_complexity(const Formula& f);
int syntactic_depth(const Formula& f);
bool has_fc(const Formula& f);

enum class Dialect : std::uint8_t { basic, fc };

// ASCII grammar: atoms p0 p1 ..., constants T F, unary ~ [] <>, binary by
// decreasing precedence /\ \/ -> ->> <->, parentheses, whitespace ignored.
// -> expands to ~a \/ b, <-> to the conjunction of both expansions, <> to
// ~[]~.  ->> is accepted only under Dialect::fc.
Formula parse(const std::string& text, Dialect dialect = Dialect::basic);

// Canonical printer; parse(print(f)) == f for every formula.
std::string print(const Formula& f);

// Determinacy abbreviations expanded into primitive connectives.
Formula nabla_bar(const Formula& f);           // []f \/ []~f
Formula nabla(const Formula& f);               // ~([]f \/ []~f)
Formula nabla_bar_pair(const Formula& f, const Formula& g);

// Uniform replacement of atoms; atoms without a mapping stay untouched.
Formula substitute(const Formula& f, const std::vector<std::pair<int, Formula>>& map);

// Sorted duplicate-free formula sets, used for sequent sides.
using FormulaSet = std::vector<Formula>;
FormulaSet make_set(std::vector<Formula> fs);
bool set_contains(const FormulaSet& s, const Formula& f);
FormulaSet set_add(FormulaSet s, const Formula& f);
FormulaSet set_remove(FormulaSet s, const Formula& f);
FormulaSet set_union(const FormulaSet& a, const FormulaSet& b);

class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> ant, std::vector<Formula> suc)
      : ant_(make_set(std::move(ant))), suc_(make_set(std::move(suc))) {}

  const FormulaSet& ant() const { return ant_; }
  const FormulaSet& suc() const { return suc_; }

  bool operator==(const Sequent& other) const = default;
  std::strong_ordering operator<=>(const Sequent& other) const;

 private:
  FormulaSet ant_;
  FormulaSet suc_;
};

std::string print(const Sequent& s);

// All formulas over atoms p0..p(num_atoms-1) of syntactic depth <= max_depth,
// in a deterministic generation order (atoms, T, F, then by depth).
std::vector<Formula> enumerate_formulas(int num_atoms, int max_depth,
                                        bool with_box, bool with_fc);

}  // namespace kfmodal
