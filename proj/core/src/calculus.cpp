#include "kfmodal/calculus.hpp"

#include <algorithm>

namespace kfmodal {

std::string to_string(BaseCalculus b) {
  switch (b) {
    case BaseCalculus::FDE:
      return "FDE";
    case BaseCalculus::K3:
      return "K3";
    case BaseCalculus::LP:
      return "LP";
    case BaseCalculus::KS3:
      return "KS3";
    case BaseCalculus::B3:
      return "B3";
    default:
      return "F3";
  }
}

std::string to_string(ModalKind m) {
  switch (m) {
    case ModalKind::none:
      return "none";
    case ModalKind::box:
      return "box";
    default:
      return "blackbox";
  }
}

std::string to_string(CalculusId c) {
  if (c.modal == ModalKind::none) return to_string(c.base);
  return to_string(c.base) + "_" + to_string(c.modal);
}

BaseCalculus base_from_string(const std::string& s) {
  for (BaseCalculus b : kAllBases)
    if (to_string(b) == s) return b;
  throw Error("unknown calculus '" + s + "'");
}

ModalKind modal_from_string(const std::string& s) {
  if (s == "none") return ModalKind::none;
  if (s == "box") return ModalKind::box;
  if (s == "blackbox") return ModalKind::blackbox;
  throw Error("unknown modal kind '" + s + "'");
}

Scheme base_scheme(BaseCalculus b) {
  switch (b) {
    case BaseCalculus::FDE:
      return Scheme::fde;
    case BaseCalculus::K3:
      return Scheme::k3;
    case BaseCalculus::LP:
      return Scheme::lp;
    case BaseCalculus::KS3:
      return Scheme::ks3;
    case BaseCalculus::B3:
      return Scheme::b3;
    default:
      return Scheme::f3;
  }
}

bool base_allows_fc(BaseCalculus b) { return b == BaseCalculus::F3; }

std::vector<std::pair<std::string, int>> rule_table(CalculusId c) {
  std::vector<std::pair<std::string, int>> t = {
      {"ref", 0}, {"cut", 2}, {"⊥", 0}, {"⊤", 0}};
  if (c.base == BaseCalculus::B3 || c.base == BaseCalculus::F3) {
    t.insert(t.end(), {{"¬l", 1},
                       {"¬r", 1},
                       {"∧l", 1},
                       {"∧r", 2},
                       {"∨l", 2},
                       {"∨r", 1}});
    if (c.base == BaseCalculus::F3)
      t.insert(t.end(), {{"↠l", 2}, {"↠r1", 1}, {"↠r2", 1}});
  } else {
    t.insert(t.end(), {{"dn-l", 1},
                       {"dn-r", 1},
                       {"¬∧l", 2},
                       {"¬∧r", 1},
                       {"∧l", 1},
                       {"∧r", 2},
                       {"¬∨l", 1},
                       {"¬∨r", 2},
                       {"∨l", 2},
                       {"∨r", 1}});
    if (c.base == BaseCalculus::K3) t.emplace_back("¬l", 1);
    if (c.base == BaseCalculus::LP) t.emplace_back("¬r", 1);
    if (c.base == BaseCalculus::KS3) t.emplace_back("sym", 0);
  }
  if (c.modal == ModalKind::box)
    t.insert(t.end(), {{"□l", 1}, {"□r", 1}, {"¬□l", 1}, {"¬□r", 1}});
  if (c.modal == ModalKind::blackbox)
    t.insert(t.end(), {{"■l", 1}, {"■r", 1}});
  return t;
}

int derivation_length(const Derivation& d) {
  int deepest = 0;
  for (const auto& child : d.children)
    deepest = std::max(deepest, derivation_length(child) + 1);
  return deepest;
}

int derivation_size(const Derivation& d) {
  int n = 1;
  for (const auto& child : d.children) n += derivation_size(child);
  return n;
}

namespace {

bool is_atom_formula(const Formula& f) { return f.is(Conn::atom); }

bool is_literal(const Formula& f) {
  return f.is(Conn::atom) || (f.is(Conn::neg) && f.child().is(Conn::atom));
}

bool atoms_are_members(const std::vector<Formula>& parts,
                       const FormulaSet& ant) {
  for (int a : prop_set(parts))
    if (!set_contains(ant, Formula::atom(a))) return false;
  return true;
}

std::string atoms_text(const std::vector<Formula>& parts) {
  std::string out;
  for (int a : prop_set(parts)) {
    if (!out.empty()) out += ",";
    out += "p" + std::to_string(a);
  }
  return out;
}

// Candidate principal formulas drawn from one side of the conclusion,
// honouring an explicit annotation when present.
std::vector<Formula> candidates(const FormulaSet& side,
                                const std::vector<Formula>& principal) {
  if (principal.empty()) return side;
  std::vector<Formula> out;
  for (const auto& f : principal)
    if (set_contains(side, f)) out.push_back(f);
  return out;
}

struct NodeCheck {
  bool ok = false;
  std::string reason;
};

NodeCheck fail(std::string reason) { return {false, std::move(reason)}; }
NodeCheck pass() { return {true, {}}; }

// The contexts of the printed rules are whole sides; since sequents are
// sets, the principal may either stay in the context or not.
std::vector<FormulaSet> context_variants(const FormulaSet& side,
                                         const Formula& principal) {
  return {set_remove(side, principal), side};
}

NodeCheck check_instance(CalculusId c, const Sequent& con,
                         const std::string& rule,
                         const std::vector<Formula>& principal,
                         const std::vector<Sequent>& prem) {
  const FormulaSet& ant = con.ant();
  const FormulaSet& suc = con.suc();
  bool weak_base = c.base == BaseCalculus::B3 || c.base == BaseCalculus::F3;

  auto left_rule = [&](auto&& shape, auto&& premises_for) -> NodeCheck {
    for (const auto& f : candidates(ant, principal)) {
      if (!shape(f)) continue;
      for (const auto& gamma : context_variants(ant, f)) {
        if (premises_for(f, gamma)) return pass();
      }
    }
    return fail("no antecedent formula admits this rule");
  };
  auto right_rule = [&](auto&& shape, auto&& premises_for) -> NodeCheck {
    for (const auto& f : candidates(suc, principal)) {
      if (!shape(f)) continue;
      for (const auto& delta : context_variants(suc, f)) {
        if (premises_for(f, delta)) return pass();
      }
    }
    return fail("no succedent formula admits this rule");
  };

  if (rule == "ref") {
    for (const auto& f : candidates(ant, principal)) {
      if (!set_contains(suc, f)) continue;
      if (c.modal == ModalKind::blackbox) return pass();
      if (weak_base ? is_atom_formula(f) : is_literal(f)) return pass();
      return fail("reflexivity principal " + print(f) +
                  (weak_base ? " is not an atom" : " is not a literal"));
    }
    return fail("no shared formula between the sides");
  }
  if (rule == "⊥") {
    if (set_contains(ant, Formula::bot())) return pass();
    return fail("⊥ is not in the antecedent");
  }
  if (rule == "⊤") {
    if (set_contains(suc, Formula::top())) return pass();
    return fail("⊤ is not in the succedent");
  }
  if (rule == "sym") {
    bool left = false, right = false;
    for (const auto& f : ant)
      if (set_contains(ant, Formula::neg(f))) left = true;
    for (const auto& f : suc)
      if (set_contains(suc, Formula::neg(f))) right = true;
    if (left && right) return pass();
    return fail("needs φ,¬φ in the antecedent and ψ,¬ψ in the succedent");
  }
  if (rule == "cut") {
    for (const auto& f : prem[0].suc()) {
      if (!set_contains(prem[1].ant(), f)) continue;
      if (prem[0] == Sequent(ant, set_add(suc, f)) &&
          prem[1] == Sequent(set_add(ant, f), suc))
        return pass();
    }
    return fail("premises do not share a cut formula over this conclusion");
  }

  if (rule == "dn-l")
    return left_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::neg);
        },
        [&](const Formula& f, const FormulaSet& gamma) {
          return prem[0] == Sequent(set_add(gamma, f.child().child()), suc);
        });
  if (rule == "dn-r")
    return right_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::neg);
        },
        [&](const Formula& f, const FormulaSet& delta) {
          return prem[0] == Sequent(ant, set_add(delta, f.child().child()));
        });
  if (rule == "¬∧l")
    return left_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::conj);
        },
        [&](const Formula& f, const FormulaSet& gamma) {
          Formula a = Formula::neg(f.child().left());
          Formula b = Formula::neg(f.child().right());
          return prem[0] == Sequent(set_add(gamma, a), suc) &&
                 prem[1] == Sequent(set_add(gamma, b), suc);
        });
  if (rule == "¬∧r")
    return right_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::conj);
        },
        [&](const Formula& f, const FormulaSet& delta) {
          for (const Formula& g : {f.child().left(), f.child().right()})
            if (prem[0] == Sequent(ant, set_add(delta, Formula::neg(g))))
              return true;
          return false;
        });
  if (rule == "∧l")
    return left_rule(
        [](const Formula& f) { return f.is(Conn::conj); },
        [&](const Formula& f, const FormulaSet& gamma) {
          for (const Formula& g : {f.left(), f.right()})
            if (prem[0] == Sequent(set_add(gamma, g), suc)) return true;
          return false;
        });
  if (rule == "∧r")
    return right_rule(
        [](const Formula& f) { return f.is(Conn::conj); },
        [&](const Formula& f, const FormulaSet& delta) {
          return prem[0] == Sequent(ant, set_add(delta, f.left())) &&
                 prem[1] == Sequent(ant, set_add(delta, f.right()));
        });
  if (rule == "¬∨l")
    return left_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::disj);
        },
        [&](const Formula& f, const FormulaSet& gamma) {
          for (const Formula& g : {f.child().left(), f.child().right()})
            if (prem[0] == Sequent(set_add(gamma, Formula::neg(g)), suc))
              return true;
          return false;
        });
  if (rule == "¬∨r")
    return right_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::disj);
        },
        [&](const Formula& f, const FormulaSet& delta) {
          Formula a = Formula::neg(f.child().left());
          Formula b = Formula::neg(f.child().right());
          return prem[0] == Sequent(ant, set_add(delta, a)) &&
                 prem[1] == Sequent(ant, set_add(delta, b));
        });
  if (rule == "∨l")
    return left_rule(
        [](const Formula& f) { return f.is(Conn::disj); },
        [&](const Formula& f, const FormulaSet& gamma) {
          return prem[0] == Sequent(set_add(gamma, f.left()), suc) &&
                 prem[1] == Sequent(set_add(gamma, f.right()), suc);
        });
  if (rule == "∨r") {
    bool condition_ok = true;
    std::string condition;
    auto result = right_rule(
        [](const Formula& f) { return f.is(Conn::disj); },
        [&](const Formula& f, const FormulaSet& delta) {
          for (const Formula& g : {f.left(), f.right()}) {
            if (prem[0] != Sequent(ant, set_add(delta, g))) continue;
            if (!weak_base) return true;
            if (atoms_are_members({f.left(), f.right()}, ant)) return true;
            condition_ok = false;
            condition = atoms_text({f.left(), f.right()});
          }
          return false;
        });
    if (!result.ok && !condition_ok)
      return fail("side condition: " + condition +
                  " must occur in the antecedent");
    return result;
  }
  if (rule == "¬l") {
    if (c.base != BaseCalculus::K3 && !weak_base)
      return fail("¬l is not a rule of " + to_string(c));
    return left_rule(
        [](const Formula& f) { return f.is(Conn::neg); },
        [&](const Formula& f, const FormulaSet& gamma) {
          return prem[0] == Sequent(gamma, set_add(suc, f.child()));
        });
  }
  if (rule == "¬r") {
    if (c.base != BaseCalculus::LP && !weak_base)
      return fail("¬r is not a rule of " + to_string(c));
    bool condition_ok = true;
    std::string condition;
    auto result = right_rule(
        [](const Formula& f) { return f.is(Conn::neg); },
        [&](const Formula& f, const FormulaSet& delta) {
          if (prem[0] != Sequent(set_add(ant, f.child()), delta)) return false;
          if (!weak_base) return true;
          if (atoms_are_members({f.child()}, ant)) return true;
          condition_ok = false;
          condition = atoms_text({f.child()});
          return false;
        });
    if (!result.ok && !condition_ok)
      return fail("side condition: " + condition +
                  " must occur in the antecedent");
    return result;
  }
  if (rule == "↠l")
    return left_rule(
        [](const Formula& f) { return f.is(Conn::fc); },
        [&](const Formula& f, const FormulaSet& gamma) {
          return prem[0] == Sequent(gamma, set_add(suc, f.left())) &&
                 prem[1] == Sequent(set_add(gamma, f.right()), suc);
        });
  if (rule == "↠r1")
    return right_rule(
        [](const Formula& f) { return f.is(Conn::fc); },
        [&](const Formula& f, const FormulaSet& delta) {
          return prem[0] ==
                 Sequent(ant, set_add(delta, Formula::neg(f.left())));
        });
  if (rule == "↠r2") {
    bool condition_ok = true;
    std::string condition;
    auto result = right_rule(
        [](const Formula& f) { return f.is(Conn::fc); },
        [&](const Formula& f, const FormulaSet& delta) {
          if (prem[0] !=
              Sequent(set_add(ant, f.left()), set_add(delta, f.right())))
            return false;
          if (atoms_are_members({f.left(), f.right()}, ant)) return true;
          condition_ok = false;
          condition = atoms_text({f.left(), f.right()});
          return false;
        });
    if (!result.ok && !condition_ok)
      return fail("side condition: " + condition +
                  " must occur in the antecedent");
    return result;
  }
  if (rule == "□l")
    return left_rule(
        [](const Formula& f) { return f.is(Conn::box); },
        [&](const Formula& f, const FormulaSet& gamma) {
          return prem[0] == Sequent(set_add(gamma, f.child()), suc);
        });
  if (rule == "□r")
    return right_rule(
        [](const Formula& f) { return f.is(Conn::box); },
        [&](const Formula& f, const FormulaSet& delta) {
          return prem[0] == Sequent(ant, set_add(delta, f.child()));
        });
  if (rule == "¬□l")
    return left_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::box);
        },
        [&](const Formula& f, const FormulaSet& gamma) {
          return prem[0] ==
                 Sequent(set_add(gamma, Formula::neg(f.child().child())), suc);
        });
  if (rule == "¬□r")
    return right_rule(
        [](const Formula& f) {
          return f.is(Conn::neg) && f.child().is(Conn::box);
        },
        [&](const Formula& f, const FormulaSet& delta) {
          return prem[0] ==
                 Sequent(ant, set_add(delta, Formula::neg(f.child().child())));
        });
  if (rule == "■l" || rule == "■r") {
    // Conclusion shapes □Γ,¬□φ ⇒ ¬□Δ and □Γ ⇒ □φ,¬□Δ carry no side
    // formulas, so the premise is determined exactly.
    std::vector<Formula> gamma, delta, pos;
    const FormulaSet& box_side = ant;
    for (const auto& f : box_side) {
      if (f.is(Conn::box))
        gamma.push_back(f.child());
      else if (f.is(Conn::neg) && f.child().is(Conn::box) && rule == "■l")
        pos.push_back(f.child().child());
      else
        return fail("antecedent formula " + print(f) +
                    " fits neither □Γ nor the principal");
    }
    for (const auto& f : suc) {
      if (f.is(Conn::neg) && f.child().is(Conn::box))
        delta.push_back(f.child().child());
      else if (f.is(Conn::box) && rule == "■r")
        pos.push_back(f.child());
      else
        return fail("succedent formula " + print(f) +
                    " fits neither ¬□Δ nor the principal");
    }
    if (pos.size() != 1)
      return fail("needs exactly one principal " +
                  std::string(rule == "■l" ? "¬□φ in the antecedent"
                                           : "□φ in the succedent"));
    FormulaSet neg_delta;
    for (const auto& d : delta) neg_delta.push_back(Formula::neg(d));
    Sequent expected =
        rule == "■l"
            ? Sequent(set_add(make_set(gamma), Formula::neg(pos[0])),
                      make_set(neg_delta))
            : Sequent(make_set(gamma), set_add(make_set(neg_delta), pos[0]));
    if (prem[0] == expected) return pass();
    return fail("premise should be " + print(expected));
  }
  return fail("unknown rule '" + rule + "'");
}

struct Walker {
  CalculusId c;
  std::vector<std::pair<std::string, int>> rules;
  int counter = 0;
  CheckResult result;
  bool failed = false;

  void record(const Derivation& d, int idx, std::string reason) {
    failed = true;
    result.valid = false;
    result.node = idx;
    result.reason = std::move(reason);
    result.at = d.sequent;
  }

  void visit(const Derivation& d) {
    for (const auto& child : d.children) {
      visit(child);
      if (failed) return;
    }
    int idx = counter++;
    for (const auto& f : set_union(d.sequent.ant(), d.sequent.suc())) {
      if (c.modal == ModalKind::none && modal_depth(f) > 0)
        return record(d, idx, "□ is not in the language of " + to_string(c));
      if (!base_allows_fc(c.base) && has_fc(f))
        return record(d, idx, "↠ is not in the language of " + to_string(c));
    }
    auto it = std::find_if(rules.begin(), rules.end(),
                           [&](const auto& r) { return r.first == d.rule; });
    if (it == rules.end())
      return record(d, idx, "rule '" + d.rule + "' is not part of " +
                                to_string(c));
    if (static_cast<int>(d.children.size()) != it->second)
      return record(d, idx, "rule " + d.rule + " takes " +
                                std::to_string(it->second) + " premise(s)");
    std::vector<Sequent> prem;
    for (const auto& child : d.children) prem.push_back(child.sequent);
    NodeCheck nc = check_instance(c, d.sequent, d.rule, d.principal, prem);
    if (!nc.ok) record(d, idx, d.rule + ": " + nc.reason);
  }
};

}  // namespace

CheckResult check_derivation(CalculusId c, const Derivation& d) {
  Walker w{c, rule_table(c)};
  w.visit(d);
  if (w.failed) return w.result;
  CheckResult ok;
  ok.valid = true;
  ok.at = d.sequent;
  return ok;
}

Derivation weaken(CalculusId c, const Derivation& d, const FormulaSet& extra_ant,
                  const FormulaSet& extra_suc) {
  if (c.modal == ModalKind::blackbox)
    throw Error("weakening is not a local transformation for blackbox rules");
  Derivation out;
  out.sequent = Sequent(set_union(d.sequent.ant(), extra_ant),
                        set_union(d.sequent.suc(), extra_suc));
  out.rule = d.rule;
  out.principal = d.principal;
  out.children.reserve(d.children.size());
  for (const auto& child : d.children)
    out.children.push_back(weaken(c, child, extra_ant, extra_suc));
  return out;
}

}  // namespace kfmodal
