#include "kfmodal/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

namespace kfmodal {

std::string to_string(ProveStatus s) {
  switch (s) {
    case ProveStatus::derived:
      return "derived";
    case ProveStatus::saturated:
      return "saturated";
    default:
      return "budgetExceeded";
  }
}

namespace {

bool is_literal(const Formula& f) {
  return f.is(Conn::atom) || (f.is(Conn::neg) && f.child().is(Conn::atom));
}

bool weak_base(BaseCalculus b) {
  return b == BaseCalculus::B3 || b == BaseCalculus::F3;
}

bool atoms_are_members(const std::vector<Formula>& parts,
                       const FormulaSet& ant) {
  for (int a : prop_set(parts))
    if (!set_contains(ant, Formula::atom(a))) return false;
  return true;
}

void require_language(CalculusId c, const Sequent& s) {
  for (const auto& f : set_union(s.ant(), s.suc())) {
    if (c.modal == ModalKind::none && modal_depth(f) > 0)
      throw IllegalConnective("□ is not in the language of " + to_string(c));
    if (has_fc(f) && !base_allows_fc(c.base))
      throw IllegalConnective("↠ is not in the language of " + to_string(c));
  }
}

std::optional<Derivation> try_axiom(CalculusId c, const Sequent& s) {
  if (set_contains(s.ant(), Formula::bot()))
    return Derivation{s, "⊥", {}, {}};
  if (set_contains(s.suc(), Formula::top()))
    return Derivation{s, "⊤", {}, {}};
  for (const auto& f : s.ant()) {
    if (!set_contains(s.suc(), f)) continue;
    if (c.modal == ModalKind::blackbox ||
        (weak_base(c.base) ? f.is(Conn::atom) : is_literal(f)))
      return Derivation{s, "ref", {f}, {}};
  }
  if (c.base == BaseCalculus::KS3) {
    bool left = false, right = false;
    for (const auto& f : s.ant())
      if (set_contains(s.ant(), Formula::neg(f))) left = true;
    for (const auto& f : s.suc())
      if (set_contains(s.suc(), Formula::neg(f))) right = true;
    if (left && right) return Derivation{s, "sym", {}, {}};
  }
  return std::nullopt;
}

struct Step {
  std::string rule;
  Formula principal;
  std::vector<Sequent> premises;
};

std::vector<Step> expansions(CalculusId c, const Sequent& goal) {
  const FormulaSet& ant = goal.ant();
  const FormulaSet& suc = goal.suc();
  bool weak = weak_base(c.base);
  bool strong = !weak;
  std::vector<Step> out;

  auto add = [&](const char* rule, const Formula& principal,
                 std::vector<Sequent> premises) {
    for (const auto& p : premises)
      if (p == goal) return;
    for (const auto& s : out)
      if (s.rule == rule && s.premises == premises) return;
    out.push_back({rule, principal, std::move(premises)});
  };

  for (const auto& f : ant) {
    FormulaSet contexts[2] = {set_remove(ant, f), ant};
    for (const auto& gamma : contexts) {
      if (f.is(Conn::neg)) {
        Formula g = f.child();
        if (strong && g.is(Conn::neg))
          add("dn-l", f, {Sequent(set_add(gamma, g.child()), suc)});
        if (strong && g.is(Conn::conj))
          add("¬∧l", f,
              {Sequent(set_add(gamma, Formula::neg(g.left())), suc),
               Sequent(set_add(gamma, Formula::neg(g.right())), suc)});
        if (strong && g.is(Conn::disj)) {
          add("¬∨l", f, {Sequent(set_add(gamma, Formula::neg(g.left())), suc)});
          add("¬∨l", f,
              {Sequent(set_add(gamma, Formula::neg(g.right())), suc)});
        }
        if (c.modal == ModalKind::box && g.is(Conn::box))
          add("¬□l", f,
              {Sequent(set_add(gamma, Formula::neg(g.child())), suc)});
        if (c.base == BaseCalculus::K3 || weak)
          add("¬l", f, {Sequent(gamma, set_add(suc, g))});
      }
      if (f.is(Conn::conj)) {
        add("∧l", f, {Sequent(set_add(gamma, f.left()), suc)});
        add("∧l", f, {Sequent(set_add(gamma, f.right()), suc)});
      }
      if (f.is(Conn::disj))
        add("∨l", f,
            {Sequent(set_add(gamma, f.left()), suc),
             Sequent(set_add(gamma, f.right()), suc)});
      if (f.is(Conn::fc))
        add("↠l", f,
            {Sequent(gamma, set_add(suc, f.left())),
             Sequent(set_add(gamma, f.right()), suc)});
      if (c.modal == ModalKind::box && f.is(Conn::box))
        add("□l", f, {Sequent(set_add(gamma, f.child()), suc)});
    }
  }

  for (const auto& f : suc) {
    FormulaSet contexts[2] = {set_remove(suc, f), suc};
    for (const auto& delta : contexts) {
      if (f.is(Conn::neg)) {
        Formula g = f.child();
        if (strong && g.is(Conn::neg))
          add("dn-r", f, {Sequent(ant, set_add(delta, g.child()))});
        if (strong && g.is(Conn::conj)) {
          add("¬∧r", f,
              {Sequent(ant, set_add(delta, Formula::neg(g.left())))});
          add("¬∧r", f,
              {Sequent(ant, set_add(delta, Formula::neg(g.right())))});
        }
        if (strong && g.is(Conn::disj))
          add("¬∨r", f,
              {Sequent(ant, set_add(delta, Formula::neg(g.left()))),
               Sequent(ant, set_add(delta, Formula::neg(g.right())))});
        if (c.modal == ModalKind::box && g.is(Conn::box))
          add("¬□r", f,
              {Sequent(ant, set_add(delta, Formula::neg(g.child())))});
        if (c.base == BaseCalculus::LP ||
            (weak && atoms_are_members({g}, ant)))
          add("¬r", f, {Sequent(set_add(ant, g), delta)});
      }
      if (f.is(Conn::conj))
        add("∧r", f,
            {Sequent(ant, set_add(delta, f.left())),
             Sequent(ant, set_add(delta, f.right()))});
      if (f.is(Conn::disj)) {
        if (!weak || atoms_are_members({f.left(), f.right()}, ant)) {
          add("∨r", f, {Sequent(ant, set_add(delta, f.left()))});
          add("∨r", f, {Sequent(ant, set_add(delta, f.right()))});
        }
      }
      if (f.is(Conn::fc)) {
        add("↠r1", f,
            {Sequent(ant, set_add(delta, Formula::neg(f.left())))});
        if (atoms_are_members({f.left(), f.right()}, ant))
          add("↠r2", f,
              {Sequent(set_add(ant, f.left()), set_add(delta, f.right()))});
      }
      if (c.modal == ModalKind::box && f.is(Conn::box))
        add("□r", f, {Sequent(ant, set_add(delta, f.child()))});
    }
  }

  if (c.modal == ModalKind::blackbox) {
    std::vector<Formula> gamma, delta, pos_l, pos_r;
    bool left_shape = true, right_shape = true;
    for (const auto& f : ant) {
      if (f.is(Conn::box)) {
        gamma.push_back(f.child());
      } else if (f.is(Conn::neg) && f.child().is(Conn::box)) {
        pos_l.push_back(f.child().child());
        right_shape = false;
      } else {
        left_shape = right_shape = false;
      }
    }
    for (const auto& f : suc) {
      if (f.is(Conn::neg) && f.child().is(Conn::box)) {
        delta.push_back(f.child().child());
      } else if (f.is(Conn::box)) {
        pos_r.push_back(f.child());
        left_shape = false;
      } else {
        left_shape = right_shape = false;
      }
    }
    FormulaSet neg_delta;
    for (const auto& d : delta) neg_delta.push_back(Formula::neg(d));
    if (left_shape && pos_l.size() == 1)
      add("■l", Formula::neg(Formula::box(pos_l[0])),
          {Sequent(set_add(make_set(gamma), Formula::neg(pos_l[0])),
                   make_set(neg_delta))});
    if (right_shape && pos_r.size() == 1)
      add("■r", Formula::box(pos_r[0]),
          {Sequent(make_set(gamma), set_add(make_set(neg_delta), pos_r[0]))});
  }
  return out;
}

struct Searcher {
  CalculusId c;
  std::uint64_t budget;
  std::uint64_t expanded = 0;
  bool budget_hit = false;
  std::set<Sequent> failed;
  std::map<Sequent, Derivation> proven;
  std::vector<Sequent> path;

  std::optional<Derivation> run(const Sequent& goal, bool& clean) {
    clean = true;
    if (auto it = proven.find(goal); it != proven.end()) return it->second;
    if (failed.count(goal)) return std::nullopt;
    if (std::find(path.begin(), path.end(), goal) != path.end()) {
      clean = false;
      return std::nullopt;
    }
    if (expanded >= budget) {
      budget_hit = true;
      clean = false;
      return std::nullopt;
    }
    ++expanded;
    if (auto leaf = try_axiom(c, goal)) {
      proven.emplace(goal, *leaf);
      return leaf;
    }
    path.push_back(goal);
    bool all_clean = true;
    std::optional<Derivation> found;
    for (auto& step : expansions(c, goal)) {
      std::vector<Derivation> kids;
      bool ok = true;
      for (const auto& p : step.premises) {
        bool sub_clean = true;
        auto d = run(p, sub_clean);
        all_clean = all_clean && sub_clean;
        if (!d) {
          ok = false;
          break;
        }
        kids.push_back(std::move(*d));
      }
      if (ok) {
        found = Derivation{goal, step.rule, {step.principal}, std::move(kids)};
        break;
      }
    }
    path.pop_back();
    if (found) {
      proven.emplace(goal, *found);
      return found;
    }
    if (all_clean)
      failed.insert(goal);
    else
      clean = false;
    return std::nullopt;
  }
};

}  // namespace

ProveResult prove(CalculusId c, const Sequent& goal, std::uint64_t budget) {
  require_language(c, goal);
  Searcher searcher{c, budget};
  bool clean = true;
  auto d = searcher.run(goal, clean);
  ProveResult result;
  result.expanded = searcher.expanded;
  if (d) {
    result.status = ProveStatus::derived;
    result.derivation = std::move(*d);
  } else {
    result.status = searcher.budget_hit ? ProveStatus::budget_exceeded
                                        : ProveStatus::saturated;
  }
  return result;
}

namespace {

struct Generator {
  CalculusId c;
  std::mt19937_64 rng;
  int num_atoms;
  bool weak;
  bool strong;
  std::vector<Derivation> pool;

  Generator(CalculusId id, std::uint64_t seed, int atoms)
      : c(id),
        rng(seed),
        num_atoms(atoms),
        weak(weak_base(id.base)),
        strong(!weak) {}

  std::size_t pick(std::size_t n) { return n ? rng() % n : 0; }
  bool coin() { return rng() & 1; }

  Formula rand_formula(int depth) {
    int options = 3 + (depth > 0 ? 3 : 0) +
                  (depth > 0 && c.modal != ModalKind::none ? 1 : 0) +
                  (depth > 0 && base_allows_fc(c.base) ? 1 : 0);
    switch (pick(static_cast<std::size_t>(options))) {
      case 0:
      case 1:
        return Formula::atom(static_cast<int>(pick(num_atoms)));
      case 2:
        return coin() ? Formula::top() : Formula::bot();
      case 3:
        return Formula::neg(rand_formula(depth - 1));
      case 4:
        return Formula::conj(rand_formula(depth - 1), rand_formula(depth - 1));
      case 5:
        return Formula::disj(rand_formula(depth - 1), rand_formula(depth - 1));
      case 6:
        if (c.modal != ModalKind::none)
          return Formula::box(rand_formula(depth - 1));
        [[fallthrough]];
      default:
        return Formula::fc(rand_formula(depth - 1), rand_formula(depth - 1));
    }
  }

  FormulaSet rand_context(int max_n) {
    FormulaSet out;
    std::size_t n = pick(static_cast<std::size_t>(max_n + 1));
    for (std::size_t i = 0; i < n; ++i) out = set_add(out, rand_formula(2));
    return out;
  }

  Derivation axiom() {
    switch (pick(c.base == BaseCalculus::KS3 ? 4 : 3)) {
      case 0: {
        Formula f = c.modal == ModalKind::blackbox
                        ? rand_formula(2)
                        : (weak ? Formula::atom(static_cast<int>(pick(num_atoms)))
                                : (coin() ? Formula::atom(static_cast<int>(
                                                pick(num_atoms)))
                                          : Formula::neg(Formula::atom(
                                                static_cast<int>(
                                                    pick(num_atoms))))));
        return {Sequent(set_add(rand_context(2), f),
                        set_add(rand_context(2), f)),
                "ref",
                {f},
                {}};
      }
      case 1:
        return {Sequent(set_add(rand_context(2), Formula::bot()),
                        rand_context(2)),
                "⊥",
                {},
                {}};
      case 2:
        return {Sequent(rand_context(2), set_add(rand_context(2),
                                                  Formula::top())),
                "⊤",
                {},
                {}};
      default: {
        Formula f = rand_formula(1), g = rand_formula(1);
        FormulaSet a = set_add(set_add(rand_context(1), f), Formula::neg(f));
        FormulaSet s = set_add(set_add(rand_context(1), g), Formula::neg(g));
        return {Sequent(a, s), "sym", {}, {}};
      }
    }
  }

  const Derivation& sample() { return pool[pick(pool.size())]; }

  std::optional<Formula> sample_member(const FormulaSet& side) {
    if (side.empty()) return std::nullopt;
    return side[pick(side.size())];
  }

  std::optional<Formula> sample_negation(const FormulaSet& side) {
    std::vector<Formula> negs;
    for (const auto& f : side)
      if (f.is(Conn::neg)) negs.push_back(f);
    if (negs.empty()) return std::nullopt;
    return negs[pick(negs.size())];
  }

  // Supplies missing side-condition atoms by weakening; fails in blackbox
  // mode, where weakening is not available.
  std::optional<Derivation> with_atoms(const Derivation& d,
                                       const std::vector<Formula>& parts) {
    FormulaSet missing;
    for (int a : prop_set(parts)) {
      Formula p = Formula::atom(a);
      if (!set_contains(d.sequent.ant(), p)) missing = set_add(missing, p);
    }
    if (missing.empty()) return d;
    if (c.modal == ModalKind::blackbox) return std::nullopt;
    return weaken(c, d, missing, {});
  }

  std::optional<Derivation> unary_left(const Derivation& d, const char* rule,
                                       const Formula& principal,
                                       const Formula& replaced) {
    FormulaSet a = coin() ? set_remove(d.sequent.ant(), replaced)
                          : d.sequent.ant();
    return Derivation{Sequent(set_add(a, principal), d.sequent.suc()),
                      rule,
                      {principal},
                      {d}};
  }

  std::optional<Derivation> unary_right(const Derivation& d, const char* rule,
                                        const Formula& principal,
                                        const Formula& replaced) {
    FormulaSet s = coin() ? set_remove(d.sequent.suc(), replaced)
                          : d.sequent.suc();
    return Derivation{Sequent(d.sequent.ant(), set_add(s, principal)),
                      rule,
                      {principal},
                      {d}};
  }

  std::optional<Derivation> attempt(const std::string& rule) {
    const Derivation& d = sample();
    const FormulaSet& a = d.sequent.ant();
    const FormulaSet& s = d.sequent.suc();

    if (rule == "dn-l") {
      auto f = sample_member(a);
      if (!f) return std::nullopt;
      return unary_left(d, "dn-l", Formula::neg(Formula::neg(*f)), *f);
    }
    if (rule == "dn-r") {
      auto f = sample_member(s);
      if (!f) return std::nullopt;
      return unary_right(d, "dn-r", Formula::neg(Formula::neg(*f)), *f);
    }
    if (rule == "∧l") {
      auto f = sample_member(a);
      if (!f) return std::nullopt;
      Formula other = rand_formula(1);
      Formula conj = coin() ? Formula::conj(*f, other)
                            : Formula::conj(other, *f);
      return unary_left(d, "∧l", conj, *f);
    }
    if (rule == "∧r") {
      auto f = sample_member(s);
      auto g = sample_member(s);
      if (!f || !g) return std::nullopt;
      Formula conj = Formula::conj(*f, *g);
      return Derivation{Sequent(a, set_add(s, conj)), "∧r", {conj}, {d, d}};
    }
    if (rule == "¬∧l") {
      auto nf = sample_negation(a);
      auto ng = sample_negation(a);
      if (!nf || !ng) return std::nullopt;
      Formula conj = Formula::conj(nf->child(), ng->child());
      Formula principal = Formula::neg(conj);
      return Derivation{Sequent(set_add(a, principal), s),
                        "¬∧l",
                        {principal},
                        {d, d}};
    }
    if (rule == "¬∧r") {
      auto nf = sample_negation(s);
      if (!nf) return std::nullopt;
      Formula other = rand_formula(1);
      Formula conj = coin() ? Formula::conj(nf->child(), other)
                            : Formula::conj(other, nf->child());
      return unary_right(d, "¬∧r", Formula::neg(conj), *nf);
    }
    if (rule == "¬∨l") {
      auto nf = sample_negation(a);
      if (!nf) return std::nullopt;
      Formula other = rand_formula(1);
      Formula disj = coin() ? Formula::disj(nf->child(), other)
                            : Formula::disj(other, nf->child());
      return unary_left(d, "¬∨l", Formula::neg(disj), *nf);
    }
    if (rule == "¬∨r") {
      auto nf = sample_negation(s);
      auto ng = sample_negation(s);
      if (!nf || !ng) return std::nullopt;
      Formula principal = Formula::neg(Formula::disj(nf->child(), ng->child()));
      return Derivation{Sequent(a, set_add(s, principal)),
                        "¬∨r",
                        {principal},
                        {d, d}};
    }
    if (rule == "∨l") {
      auto f = sample_member(a);
      auto g = sample_member(a);
      if (!f || !g) return std::nullopt;
      Formula disj = Formula::disj(*f, *g);
      return Derivation{Sequent(set_add(a, disj), s), "∨l", {disj}, {d, d}};
    }
    if (rule == "∨r") {
      auto f = sample_member(s);
      if (!f) return std::nullopt;
      Formula other = rand_formula(1);
      Formula disj = coin() ? Formula::disj(*f, other)
                            : Formula::disj(other, *f);
      if (!weak)
        return unary_right(d, "∨r", disj, *f);
      auto base = with_atoms(d, {disj.left(), disj.right()});
      if (!base) return std::nullopt;
      return Derivation{
          Sequent(base->sequent.ant(), set_add(base->sequent.suc(), disj)),
          "∨r",
          {disj},
          {*base}};
    }
    if (rule == "¬l") {
      auto f = sample_member(s);
      if (!f) return std::nullopt;
      FormulaSet delta = coin() ? set_remove(s, *f) : s;
      return Derivation{Sequent(set_add(a, Formula::neg(*f)), delta),
                        "¬l",
                        {Formula::neg(*f)},
                        {d}};
    }
    if (rule == "¬r") {
      auto f = sample_member(a);
      if (!f) return std::nullopt;
      if (!weak) {
        FormulaSet gamma = coin() ? set_remove(a, *f) : a;
        return Derivation{Sequent(gamma, set_add(s, Formula::neg(*f))),
                          "¬r",
                          {Formula::neg(*f)},
                          {d}};
      }
      auto base = with_atoms(d, {*f});
      if (!base) return std::nullopt;
      return Derivation{Sequent(base->sequent.ant(),
                                set_add(base->sequent.suc(), Formula::neg(*f))),
                        "¬r",
                        {Formula::neg(*f)},
                        {*base}};
    }
    if (rule == "↠l") {
      auto f = sample_member(s);
      auto g = sample_member(a);
      if (!f || !g) return std::nullopt;
      Formula fc = Formula::fc(*f, *g);
      return Derivation{Sequent(set_add(a, fc), s), "↠l", {fc}, {d, d}};
    }
    if (rule == "↠r1") {
      auto nf = sample_negation(s);
      if (!nf) return std::nullopt;
      Formula fc = Formula::fc(nf->child(), rand_formula(1));
      return unary_right(d, "↠r1", fc, *nf);
    }
    if (rule == "↠r2") {
      auto f = sample_member(a);
      auto g = sample_member(s);
      if (!f || !g) return std::nullopt;
      Formula fc = Formula::fc(*f, *g);
      auto base = with_atoms(d, {*f, *g});
      if (!base) return std::nullopt;
      return Derivation{
          Sequent(base->sequent.ant(), set_add(base->sequent.suc(), fc)),
          "↠r2",
          {fc},
          {*base}};
    }
    if (rule == "□l") {
      auto f = sample_member(a);
      if (!f) return std::nullopt;
      return unary_left(d, "□l", Formula::box(*f), *f);
    }
    if (rule == "□r") {
      auto f = sample_member(s);
      if (!f) return std::nullopt;
      return unary_right(d, "□r", Formula::box(*f), *f);
    }
    if (rule == "¬□l") {
      auto nf = sample_negation(a);
      if (!nf) return std::nullopt;
      return unary_left(d, "¬□l", Formula::neg(Formula::box(nf->child())),
                        *nf);
    }
    if (rule == "¬□r") {
      auto nf = sample_negation(s);
      if (!nf) return std::nullopt;
      return unary_right(d, "¬□r", Formula::neg(Formula::box(nf->child())),
                         *nf);
    }
    if (rule == "cut") {
      if (c.modal == ModalKind::blackbox) {
        for (const auto& f : a)
          if (set_contains(s, f))
            return Derivation{Sequent(a, s), "cut", {f}, {d, d}};
        return std::nullopt;
      }
      const Derivation& e = sample();
      Formula chi = rand_formula(1);
      FormulaSet ga = set_union(a, e.sequent.ant());
      FormulaSet de = set_union(s, e.sequent.suc());
      Derivation left = weaken(c, d, ga, set_add(de, chi));
      Derivation right = weaken(c, e, set_add(ga, chi), de);
      return Derivation{Sequent(ga, de), "cut", {chi}, {left, right}};
    }
    if (rule == "■l") {
      Sequent base = blackbox_left_premise();
      auto nf = sample_negation(base.ant());
      if (!nf) return std::nullopt;
      FormulaSet cant;
      for (const auto& f : set_remove(base.ant(), *nf))
        cant = set_add(cant, Formula::box(f));
      cant = set_add(cant, Formula::neg(Formula::box(nf->child())));
      FormulaSet csuc;
      for (const auto& f : base.suc())
        csuc = set_add(csuc, Formula::neg(Formula::box(f.child())));
      return Derivation{Sequent(cant, csuc),
                        "■l",
                        {Formula::neg(Formula::box(nf->child()))},
                        {Derivation{base, "ref", {}, {}}}};
    }
    if (rule == "■r") {
      Formula phi = rand_formula(1);
      Formula nd = Formula::neg(rand_formula(1));
      Sequent base(set_add(rand_context(1), phi),
                   make_set({phi, nd}));
      FormulaSet cant;
      for (const auto& f : base.ant()) cant = set_add(cant, Formula::box(f));
      FormulaSet csuc = make_set(
          {Formula::box(phi), Formula::neg(Formula::box(nd.child()))});
      return Derivation{Sequent(cant, csuc),
                        "■r",
                        {Formula::box(phi)},
                        {Derivation{base, "ref", {phi}, {}}}};
    }
    return std::nullopt;
  }

  // An initial sequent whose succedent holds negations only, ready for ■l.
  Sequent blackbox_left_premise() {
    Formula d0 = Formula::neg(rand_formula(1));
    Formula d1 = Formula::neg(rand_formula(1));
    Formula principal = Formula::neg(rand_formula(1));
    return Sequent(make_set({principal, d0}), make_set({d0, d1}));
  }

  Derivation generate(int steps) {
    pool.push_back(axiom());
    std::vector<std::string> rules;
    for (const auto& [name, arity] : rule_table(c))
      if (name != "ref" && name != "⊥" && name != "⊤" && name != "sym")
        rules.push_back(name);
    for (int i = 0; i < steps; ++i) {
      bool stepped = false;
      for (int tries = 0; tries < 24 && !stepped; ++tries) {
        if (pick(8) == 0) {
          pool.push_back(axiom());
          stepped = true;
          break;
        }
        auto next = attempt(rules[pick(rules.size())]);
        if (next) {
          pool.push_back(std::move(*next));
          stepped = true;
        }
      }
      if (!stepped) pool.push_back(axiom());
    }
    return pool.back();
  }
};

}  // namespace

Derivation random_derivation(CalculusId c, std::uint64_t seed, int num_atoms,
                             int steps) {
  Generator gen(c, seed, num_atoms);
  return gen.generate(steps);
}

AdequacyReport crosscheck_adequacy(CalculusId c,
                                   const std::vector<Sequent>& corpus,
                                   std::uint64_t budget) {
  if (c.modal == ModalKind::blackbox)
    throw Error(
        "crosscheck compares against idiosyncratic-frame semantics; use "
        "blackbox_refute for blackbox calculi");
  AdequacyReport report;
  Scheme s = base_scheme(c.base);
  for (const auto& seq : corpus) {
    bool holds = internal_consequence(seq.ant(), seq.suc(), s).holds;
    ProveResult pr = prove(c, seq, budget);
    if (pr.status == ProveStatus::derived) {
      if (holds)
        ++report.both_yes;
      else
        report.soundness_violations.push_back(seq);
    } else if (pr.status == ProveStatus::budget_exceeded) {
      ++report.budget_exceeded;
    } else if (holds) {
      ++report.search_incomplete;
    } else {
      ++report.both_no;
    }
  }
  return report;
}

RefuteResult blackbox_refute(CalculusId c, const Sequent& goal,
                             int frame_bound) {
  if (frame_bound < 1) throw Error("frame bound must be at least 1");
  require_language(c, goal);
  Scheme s = base_scheme(c.base);
  bool weak_box = s == Scheme::b3 || s == Scheme::f3;

  std::vector<Formula> closure;
  std::map<Formula, int> index;
  std::function<int(const Formula&)> intern = [&](const Formula& f) -> int {
    if (auto it = index.find(f); it != index.end()) return it->second;
    switch (f.conn()) {
      case Conn::atom:
      case Conn::top:
      case Conn::bot:
        break;
      case Conn::neg:
      case Conn::box:
        intern(f.child());
        break;
      default:
        intern(f.left());
        intern(f.right());
        break;
    }
    closure.push_back(f);
    int id = static_cast<int>(closure.size()) - 1;
    index.emplace(f, id);
    return id;
  };
  int depth = 0;
  for (const auto& f : set_union(goal.ant(), goal.suc())) {
    intern(f);
    depth = std::max(depth, modal_depth(f));
  }
  std::vector<int> atoms = prop_set(set_union(goal.ant(), goal.suc()));
  std::map<int, int> atom_slot;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    atom_slot[atoms[i]] = static_cast<int>(i);

  auto vals = legal_valuations(static_cast<int>(atoms.size()), s);

  struct Profile {
    std::vector<TruthValue> value;
    int val_index;
    std::vector<int> kids;
  };
  std::vector<Profile> profiles;
  std::set<std::vector<TruthValue>> seen;

  auto evaluate = [&](int val_index,
                      const std::vector<int>& kids) -> std::vector<TruthValue> {
    std::vector<TruthValue> v(closure.size(), TruthValue::one);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const Formula& f = closure[i];
      switch (f.conn()) {
        case Conn::atom:
          v[i] = vals[val_index][atom_slot.at(f.atom_index())];
          break;
        case Conn::top:
          v[i] = TruthValue::one;
          break;
        case Conn::bot:
          v[i] = TruthValue::zero;
          break;
        case Conn::neg:
          v[i] = negate(v[index.at(f.child())]);
          break;
        case Conn::box: {
          TruthValue acc = TruthValue::one;
          int child = index.at(f.child());
          for (int kid : kids) {
            TruthValue kv = profiles[kid].value[child];
            acc = weak_box ? linear_min(acc, kv) : lattice_meet(acc, kv);
          }
          v[i] = acc;
          break;
        }
        default:
          v[i] = apply_binary(f.conn(), v[index.at(f.left())],
                              v[index.at(f.right())], s);
          break;
      }
    }
    return v;
  };

  RefuteResult result;
  auto witnesses = [&](const Profile& p) {
    for (const auto& f : goal.ant())
      if (!designated(p.value[index.at(f)])) return false;
    for (const auto& f : goal.suc())
      if (designated(p.value[index.at(f)])) return false;
    return true;
  };
  auto emit_model = [&](int pid) {
    std::function<int(int)> emit = [&](int id) -> int {
      const Profile& p = profiles[id];
      int w = result.model.num_worlds();
      result.model.successors.emplace_back();
      std::map<int, TruthValue> val;
      bool has_b = false;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        val[atoms[i]] = vals[p.val_index][i];
        has_b = has_b || vals[p.val_index][i] == TruthValue::b;
      }
      result.model.val.push_back(std::move(val));
      result.model.complete_polarity.push_back(has_b);
      for (int kid : p.kids) {
        int cw = emit(kid);
        result.model.successors[w].push_back(cw);
      }
      return w;
    };
    result.world = emit(pid);
    result.refuted = true;
  };

  auto consider = [&](int val_index, std::vector<int> kids) -> bool {
    ++result.profiles;
    auto value = evaluate(val_index, kids);
    if (seen.count(value)) return false;
    seen.insert(value);
    profiles.push_back({std::move(value), val_index, std::move(kids)});
    if (witnesses(profiles.back())) {
      emit_model(static_cast<int>(profiles.size()) - 1);
      return true;
    }
    return false;
  };

  for (std::size_t vi = 0; vi < vals.size(); ++vi)
    if (consider(static_cast<int>(vi), {})) return result;

  for (int level = 1; level <= depth; ++level) {
    std::size_t snapshot = profiles.size();
    std::vector<int> kids;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
      if (!kids.empty()) {
        for (std::size_t vi = 0; vi < vals.size(); ++vi)
          if (consider(static_cast<int>(vi), kids)) return true;
      }
      if (kids.size() == static_cast<std::size_t>(frame_bound)) return false;
      for (std::size_t k = from; k < snapshot; ++k) {
        kids.push_back(static_cast<int>(k));
        if (choose(k)) return true;
        kids.pop_back();
      }
      return false;
    };
    if (choose(0)) return result;
    if (profiles.size() == snapshot) break;
  }
  return result;
}

}  // namespace kfmodal
