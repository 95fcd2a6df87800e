#include "kfmodal/manyvalued.hpp"

#include <algorithm>

namespace kfmodal {

bool designated(TruthValue v) {
  return v == TruthValue::one || v == TruthValue::b;
}

TruthValue negate(TruthValue v) {
  switch (v) {
    case TruthValue::zero:
      return TruthValue::one;
    case TruthValue::one:
      return TruthValue::zero;
    default:
      return v;
  }
}

TruthValue lattice_meet(TruthValue a, TruthValue b) {
  if (a == b) return a;
  if (a == TruthValue::zero || b == TruthValue::zero) return TruthValue::zero;
  if (a == TruthValue::one) return b;
  if (b == TruthValue::one) return a;
  return TruthValue::zero;  // inf of n and b
}

TruthValue lattice_join(TruthValue a, TruthValue b) {
  if (a == b) return a;
  if (a == TruthValue::one || b == TruthValue::one) return TruthValue::one;
  if (a == TruthValue::zero) return b;
  if (b == TruthValue::zero) return a;
  return TruthValue::one;  // sup of n and b
}

namespace {

int linear_rank(TruthValue v) {
  switch (v) {
    case TruthValue::n:
      return 0;
    case TruthValue::zero:
      return 1;
    case TruthValue::one:
      return 2;
    default:
      throw IllegalValueForScheme("value b has no place in the linear order");
  }
}

}  // namespace

TruthValue linear_min(TruthValue a, TruthValue b) {
  return linear_rank(a) <= linear_rank(b) ? a : b;
}

std::string to_string(TruthValue v) {
  switch (v) {
    case TruthValue::n:
      return "n";
    case TruthValue::b:
      return "b";
    case TruthValue::zero:
      return "0";
    default:
      return "1";
  }
}

TruthValue truth_value_from_string(const std::string& s) {
  if (s == "n") return TruthValue::n;
  if (s == "b") return TruthValue::b;
  if (s == "0") return TruthValue::zero;
  if (s == "1") return TruthValue::one;
  throw Error("unknown truth value '" + s + "'");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::fde:
      return "fde";
    case Scheme::k3:
      return "k3";
    case Scheme::lp:
      return "lp";
    case Scheme::ks3:
      return "ks3";
    case Scheme::b3:
      return "b3";
    default:
      return "f3";
  }
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "fde") return Scheme::fde;
  if (s == "k3") return Scheme::k3;
  if (s == "lp") return Scheme::lp;
  if (s == "ks3") return Scheme::ks3;
  if (s == "b3") return Scheme::b3;
  if (s == "f3") return Scheme::f3;
  throw Error("unknown scheme '" + s + "'");
}

bool scheme_allows_value(Scheme s, TruthValue v) {
  switch (s) {
    case Scheme::fde:
    case Scheme::ks3:
      return true;
    case Scheme::lp:
      return v != TruthValue::n;
    default:  // k3, b3, f3
      return v != TruthValue::b;
  }
}

bool scheme_allows_fc(Scheme s) { return s == Scheme::f3; }

void validate(const PlainModel& m, Scheme s) {
  int k = m.num_worlds();
  if (k == 0) throw Error("model needs at least one world");
  if (static_cast<int>(m.successors.size()) != k)
    throw Error("successor table size mismatch");
  if (s == Scheme::ks3 && static_cast<int>(m.complete_polarity.size()) != k)
    throw Error("ks3 model needs a polarity flag per world");
  for (int w = 0; w < k; ++w) {
    for (int v : m.successors[w])
      if (v < 0 || v >= k) throw Error("successor out of range");
    for (const auto& [atom, value] : m.val[w]) {
      if (!scheme_allows_value(s, value))
        throw IllegalValueForScheme("value " + to_string(value) +
                                    " not legal under " + to_string(s));
      if (s == Scheme::ks3) {
        bool complete = m.complete_polarity[w];
        if (complete && value == TruthValue::n)
          throw IllegalValueForScheme("n at a complete-polarity ks3 world");
        if (!complete && value == TruthValue::b)
          throw IllegalValueForScheme("b at a consistent-polarity ks3 world");
      }
    }
  }
}

namespace {

bool weak_scheme(Scheme s) { return s == Scheme::b3 || s == Scheme::f3; }

TruthValue fc_value(TruthValue a, TruthValue b) {
  if (a == TruthValue::zero) return TruthValue::one;
  if (linear_min(a, b) == TruthValue::one) return TruthValue::one;
  if (a == TruthValue::one && b == TruthValue::zero) return TruthValue::zero;
  return TruthValue::n;
}

template <typename AtomFn, typename BoxFn>
TruthValue eval_value(const Formula& f, Scheme s, const AtomFn& atom_value,
                      const BoxFn& box_value) {
  switch (f.conn()) {
    case Conn::atom:
      return atom_value(f.atom_index());
    case Conn::top:
      return TruthValue::one;
    case Conn::bot:
      return TruthValue::zero;
    case Conn::neg:
      return negate(eval_value(f.child(), s, atom_value, box_value));
    case Conn::box:
      return box_value(f.child());
    default:
      return apply_binary(f.conn(),
                          eval_value(f.left(), s, atom_value, box_value),
                          eval_value(f.right(), s, atom_value, box_value), s);
  }
}

}  // namespace

TruthValue apply_binary(Conn c, TruthValue a, TruthValue b, Scheme s) {
  switch (c) {
    case Conn::conj:
      return weak_scheme(s) ? linear_min(a, b) : lattice_meet(a, b);
    case Conn::disj:
      if (weak_scheme(s)) return negate(linear_min(negate(a), negate(b)));
      return lattice_join(a, b);
    case Conn::fc:
      if (!scheme_allows_fc(s))
        throw IllegalConnective("->> requires scheme f3");
      return fc_value(a, b);
    default:
      throw Error("apply_binary on non-binary connective");
  }
}

TruthValue eval(const PlainModel& m, int world, const Formula& f, Scheme s) {
  if (world < 0 || world >= m.num_worlds()) throw Error("world out of range");
  auto atom_value = [&](int atom) {
    auto it = m.val[world].find(atom);
    if (it == m.val[world].end())
      throw Error("atom p" + std::to_string(atom) + " unvalued at world " +
                  std::to_string(world));
    return it->second;
  };
  auto box_value = [&](const Formula& body) {
    TruthValue acc = TruthValue::one;  // top of either order
    for (int v : m.successors[world]) {
      TruthValue val = eval(m, v, body, s);
      acc = weak_scheme(s) ? linear_min(acc, val) : lattice_meet(acc, val);
    }
    return acc;
  };
  return eval_value(f, s, atom_value, box_value);
}

TruthValue eval_single(const Formula& f, const std::vector<TruthValue>& val,
                       Scheme s) {
  auto atom_value = [&](int atom) {
    if (atom < 0 || atom >= static_cast<int>(val.size()))
      throw Error("atom p" + std::to_string(atom) + " unvalued");
    return val[atom];
  };
  // One reflexive world: [] is transparent.
  struct BoxFn {
    const std::vector<TruthValue>& val;
    Scheme s;
    TruthValue operator()(const Formula& body) const {
      return eval_single(body, val, s);
    }
  } box_value{val, s};
  return eval_value(f, s, atom_value, box_value);
}

std::vector<std::vector<TruthValue>> legal_valuations(int num_atoms,
                                                      Scheme s) {
  std::vector<std::vector<TruthValue>> out;
  std::vector<int> digits(num_atoms, 0);
  auto legal = [&]() {
    bool has_n = false;
    bool has_b = false;
    for (int d : digits) {
      TruthValue v = kAllValues[d];
      if (!scheme_allows_value(s, v)) return false;
      has_n |= v == TruthValue::n;
      has_b |= v == TruthValue::b;
    }
    if (s == Scheme::ks3 && has_n && has_b) return false;
    return true;
  };
  while (true) {
    if (legal()) {
      std::vector<TruthValue> tuple(num_atoms);
      for (int i = 0; i < num_atoms; ++i) tuple[i] = kAllValues[digits[i]];
      out.push_back(std::move(tuple));
    }
    int i = num_atoms - 1;
    while (i >= 0 && digits[i] == 3) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

ConsequenceResult internal_consequence(const std::vector<Formula>& ant,
                                       const std::vector<Formula>& suc,
                                       Scheme s) {
  std::vector<Formula> all(ant.begin(), ant.end());
  all.insert(all.end(), suc.begin(), suc.end());
  std::vector<int> atoms = prop_set(all);
  int max_atom = atoms.empty() ? -1 : atoms.back();

  ConsequenceResult res;
  res.atoms = atoms;
  std::vector<TruthValue> dense(max_atom + 1, TruthValue::zero);
  for (const auto& tuple : legal_valuations(static_cast<int>(atoms.size()), s)) {
    for (std::size_t i = 0; i < atoms.size(); ++i) dense[atoms[i]] = tuple[i];
    bool premises = true;
    for (const auto& f : ant)
      if (!designated(eval_single(f, dense, s))) {
        premises = false;
        break;
      }
    if (!premises) continue;
    bool conclusion = false;
    for (const auto& f : suc)
      if (designated(eval_single(f, dense, s))) {
        conclusion = true;
        break;
      }
    if (!conclusion) {
      res.holds = false;
      res.witness = tuple;
      return res;
    }
  }
  res.holds = true;
  return res;
}

TruthTable eval_truth_table(const Formula& f, Scheme s) {
  if (modal_depth(f) > 0)
    throw IllegalConnective("truth tables are for box-free formulas");
  TruthTable table;
  table.atoms = prop_set(f);
  int max_atom = table.atoms.empty() ? -1 : table.atoms.back();
  std::vector<TruthValue> dense(max_atom + 1, TruthValue::zero);
  for (const auto& tuple :
       legal_valuations(static_cast<int>(table.atoms.size()), s)) {
    for (std::size_t i = 0; i < table.atoms.size(); ++i)
      dense[table.atoms[i]] = tuple[i];
    table.rows.push_back({tuple, eval_single(f, dense, s)});
  }
  return table;
}

}  // namespace kfmodal
