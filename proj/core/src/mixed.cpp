#include "kfmodal/mixed.hpp"

#include <algorithm>
#include <set>

namespace kfmodal {

std::string to_string(SchemeClass c) {
  switch (c) {
    case SchemeClass::four_valued:
      return "four-valued";
    case SchemeClass::consistent:
      return "consistent";
    case SchemeClass::complete:
      return "complete";
    default:
      return "symmetric";
  }
}

Scheme class_scheme(SchemeClass c) {
  switch (c) {
    case SchemeClass::four_valued:
      return Scheme::fde;
    case SchemeClass::consistent:
      return Scheme::k3;
    case SchemeClass::complete:
      return Scheme::lp;
    default:
      return Scheme::ks3;
  }
}

MixedModel single_rooted(std::map<int, TruthValue> z,
                         std::map<int, TruthValue> w) {
  MixedModel m;
  bool has_b = false;
  for (const auto& [atom, value] : z) has_b |= value == TruthValue::b;
  m.z_val.push_back(std::move(z));
  m.w_val.push_back(std::move(w));
  m.sees.push_back(0);
  m.z_complete_polarity.push_back(has_b);
  return m;
}

void validate_mixed(const MixedModel& m, SchemeClass klass) {
  if (m.num_classical() == 0 || m.num_nonclassical() == 0)
    throw Error("mixed model needs classical and nonclassical worlds");
  if (static_cast<int>(m.sees.size()) != m.num_classical())
    throw Error("every classical world must see exactly one world");
  for (int z : m.sees)
    if (z < 0 || z >= m.num_nonclassical())
      throw Error("seen world out of range");
  for (const auto& val : m.w_val)
    for (const auto& [atom, value] : val)
      if (value != TruthValue::zero && value != TruthValue::one)
        throw IllegalValueForScheme("classical world carries value " +
                                    to_string(value));
  Scheme legality = class_scheme(klass);
  for (int zi = 0; zi < m.num_nonclassical(); ++zi) {
    for (const auto& [atom, value] : m.z_val[zi]) {
      if (!scheme_allows_value(legality, value))
        throw IllegalValueForScheme("value " + to_string(value) +
                                    " not legal in a " + to_string(klass) +
                                    " model");
      if (klass == SchemeClass::symmetric) {
        if (m.z_complete_polarity.size() != m.z_val.size())
          throw Error("symmetric model needs a polarity flag per world");
        bool complete = m.z_complete_polarity[zi];
        if (complete && value == TruthValue::n)
          throw IllegalValueForScheme("n at a complete-polarity world");
        if (!complete && value == TruthValue::b)
          throw IllegalValueForScheme("b at a consistent-polarity world");
      }
    }
  }
}

bool is_faithful(const MixedModel& m) {
  for (int w = 0; w < m.num_classical(); ++w) {
    const auto& zv = m.z_val[m.sees[w]];
    for (const auto& [atom, value] : zv) {
      if (value != TruthValue::zero && value != TruthValue::one) continue;
      auto it = m.w_val[w].find(atom);
      if (it == m.w_val[w].end())
        throw Error("atom p" + std::to_string(atom) + " unvalued classically");
      if (it->second != value) return false;
    }
  }
  return true;
}

std::vector<int> atoms_of(const MixedModel& m) {
  std::set<int> s;
  for (const auto& val : m.w_val)
    for (const auto& [atom, value] : val) s.insert(atom);
  for (const auto& val : m.z_val)
    for (const auto& [atom, value] : val) s.insert(atom);
  return std::vector<int>(s.begin(), s.end());
}

namespace {

TruthValue eval_at_z(const MixedModel& m, int z, const Formula& f, Scheme s) {
  switch (f.conn()) {
    case Conn::atom: {
      auto it = m.z_val[z].find(f.atom_index());
      if (it == m.z_val[z].end())
        throw Error("atom p" + std::to_string(f.atom_index()) + " unvalued");
      return it->second;
    }
    case Conn::top:
      return TruthValue::one;
    case Conn::bot:
      return TruthValue::zero;
    case Conn::neg:
      return negate(eval_at_z(m, z, f.child(), s));
    case Conn::box:
      return eval_at_z(m, z, f.child(), s);
    default:
      return apply_binary(f.conn(), eval_at_z(m, z, f.left(), s),
                          eval_at_z(m, z, f.right(), s), s);
  }
}

TruthValue eval_at_w(const MixedModel& m, int w, const Formula& f, Scheme s) {
  switch (f.conn()) {
    case Conn::atom: {
      auto it = m.w_val[w].find(f.atom_index());
      if (it == m.w_val[w].end())
        throw Error("atom p" + std::to_string(f.atom_index()) + " unvalued");
      return it->second;
    }
    case Conn::top:
      return TruthValue::one;
    case Conn::bot:
      return TruthValue::zero;
    case Conn::neg:
      return negate(eval_at_w(m, w, f.child(), s));
    case Conn::box:
      return designated(eval_at_z(m, m.sees[w], f.child(), s))
                 ? TruthValue::one
                 : TruthValue::zero;
    default:
      return apply_binary(f.conn(), eval_at_w(m, w, f.left(), s),
                          eval_at_w(m, w, f.right(), s), s);
  }
}

}  // namespace

TruthValue eval_mixed(const MixedModel& m, bool at_classical, int world,
                      const Formula& f, Scheme s) {
  if (at_classical) {
    if (world < 0 || world >= m.num_classical())
      throw Error("classical world out of range");
    return eval_at_w(m, world, f, s);
  }
  if (world < 0 || world >= m.num_nonclassical())
    throw Error("nonclassical world out of range");
  return eval_at_z(m, world, f, s);
}

TruthValue eval_mixed_at_w(const Formula& f, const std::vector<TruthValue>& z,
                           const std::vector<TruthValue>& w, Scheme s) {
  switch (f.conn()) {
    case Conn::atom: {
      int a = f.atom_index();
      if (a < 0 || a >= static_cast<int>(w.size()))
        throw Error("atom p" + std::to_string(a) + " unvalued");
      return w[a];
    }
    case Conn::top:
      return TruthValue::one;
    case Conn::bot:
      return TruthValue::zero;
    case Conn::neg:
      return negate(eval_mixed_at_w(f.child(), z, w, s));
    case Conn::box:
      return designated(eval_single(f.child(), z, s)) ? TruthValue::one
                                                      : TruthValue::zero;
    default:
      return apply_binary(f.conn(), eval_mixed_at_w(f.left(), z, w, s),
                          eval_mixed_at_w(f.right(), z, w, s), s);
  }
}

std::string to_string(ClassicalLogicId id) {
  switch (id) {
    case ClassicalLogicId::BMminus:
      return "BM-";
    case ClassicalLogicId::BM:
      return "BM";
    case ClassicalLogicId::Mminus:
      return "M-";
    case ClassicalLogicId::M:
      return "M";
    case ClassicalLogicId::Mn:
      return "Mn";
    case ClassicalLogicId::Mb:
      return "Mb";
    case ClassicalLogicId::Mwminus:
      return "Mw-";
    case ClassicalLogicId::Mw:
      return "Mw";
    case ClassicalLogicId::Mfminus:
      return "Mf-";
    default:
      return "Mf";
  }
}

ClassicalLogicId logic_from_string(const std::string& s) {
  for (ClassicalLogicId id : kAllLogics)
    if (to_string(id) == s) return id;
  throw Error("unknown logic '" + s + "'");
}

Scheme logic_scheme(ClassicalLogicId id) {
  switch (id) {
    case ClassicalLogicId::BMminus:
    case ClassicalLogicId::BM:
      return Scheme::fde;
    case ClassicalLogicId::Mminus:
    case ClassicalLogicId::M:
      return Scheme::ks3;
    case ClassicalLogicId::Mn:
      return Scheme::k3;
    case ClassicalLogicId::Mb:
      return Scheme::lp;
    case ClassicalLogicId::Mwminus:
    case ClassicalLogicId::Mw:
      return Scheme::b3;
    default:
      return Scheme::f3;
  }
}

SchemeClass logic_class(ClassicalLogicId id) {
  switch (logic_scheme(id)) {
    case Scheme::fde:
      return SchemeClass::four_valued;
    case Scheme::ks3:
      return SchemeClass::symmetric;
    case Scheme::lp:
      return SchemeClass::complete;
    default:
      return SchemeClass::consistent;
  }
}

bool logic_faithful(ClassicalLogicId id) {
  switch (id) {
    case ClassicalLogicId::BMminus:
    case ClassicalLogicId::Mminus:
    case ClassicalLogicId::Mwminus:
    case ClassicalLogicId::Mfminus:
      return false;
    default:
      return true;
  }
}

bool logic_allows_fc(ClassicalLogicId id) {
  return id == ClassicalLogicId::Mfminus || id == ClassicalLogicId::Mf;
}

Formula faith_instance(const Formula& f) {
  Formula antecedent =
      Formula::conj(Formula::box(f), Formula::neg(Formula::box(Formula::neg(f))));
  return Formula::disj(Formula::neg(antecedent), f);
}

namespace {

// Faith instances range over compounds, and atom agreement alone does not
// reach them: sup(n, b) = 1, so a disjunction can turn classical at z while
// both disjuncts stay open at w. Closing the reachable (z-value, w-value)
// pairs under the connectives and rejecting any classical mismatch checks
// every instance at once.
bool classical_values_propagate(const std::vector<TruthValue>& zt,
                                const std::vector<TruthValue>& wt, Scheme s,
                                bool with_fc) {
  bool seen[4][2] = {};
  std::vector<std::pair<TruthValue, bool>> worklist;
  auto add = [&](TruthValue a, bool x) {
    bool& cell = seen[static_cast<int>(a)][x ? 1 : 0];
    if (cell) return;
    cell = true;
    worklist.emplace_back(a, x);
  };
  add(TruthValue::one, true);
  add(TruthValue::zero, false);
  for (std::size_t i = 0; i < zt.size(); ++i)
    add(zt[i], wt[i] == TruthValue::one);
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    auto [a, x] = worklist[next];
    add(negate(a), !x);
    add(a, designated(a));
    for (std::size_t j = 0; j < worklist.size(); ++j) {
      auto [b, y] = worklist[j];
      add(apply_binary(Conn::conj, a, b, s), x && y);
      add(apply_binary(Conn::disj, a, b, s), x || y);
      if (with_fc) {
        add(apply_binary(Conn::fc, a, b, s), !x || y);
        add(apply_binary(Conn::fc, b, a, s), !y || x);
      }
    }
  }
  return !seen[static_cast<int>(TruthValue::one)][0] &&
         !seen[static_cast<int>(TruthValue::zero)][1];
}

}  // namespace

std::vector<std::pair<std::vector<TruthValue>, std::vector<TruthValue>>>
class_models(ClassicalLogicId id, int num_atoms) {
  if (num_atoms > 8) throw Error("class enumeration capped at 8 atoms");
  bool faithful = logic_faithful(id);
  Scheme s = logic_scheme(id);
  bool with_fc = logic_allows_fc(id);
  std::vector<std::pair<std::vector<TruthValue>, std::vector<TruthValue>>> out;
  for (const auto& zt :
       legal_valuations(num_atoms, class_scheme(logic_class(id)))) {
    for (std::uint32_t bits = 0; bits < (1u << num_atoms); ++bits) {
      std::vector<TruthValue> wt(num_atoms);
      bool ok = true;
      for (int i = 0; i < num_atoms; ++i) {
        bool hi = (bits >> (num_atoms - 1 - i)) & 1u;
        wt[i] = hi ? TruthValue::one : TruthValue::zero;
        if (faithful &&
            (zt[i] == TruthValue::zero || zt[i] == TruthValue::one) &&
            wt[i] != zt[i]) {
          ok = false;
          break;
        }
      }
      if (ok && faithful && !classical_values_propagate(zt, wt, s, with_fc))
        ok = false;
      if (ok) out.emplace_back(zt, wt);
    }
  }
  return out;
}

namespace {

MixedModel model_from_tuples(const std::vector<int>& atoms,
                             const std::vector<TruthValue>& zt,
                             const std::vector<TruthValue>& wt) {
  std::map<int, TruthValue> z, w;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    z[atoms[i]] = zt[i];
    w[atoms[i]] = wt[i];
  }
  return single_rooted(std::move(z), std::move(w));
}

MixedDecision run_decision(ClassicalLogicId id,
                           const std::vector<Formula>& premises,
                           const Formula& f) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(f);
  for (const auto& g : all)
    if (has_fc(g) && !logic_allows_fc(id))
      throw IllegalConnective("->> is not part of " + to_string(id));
  std::vector<int> atoms = prop_set(all);
  if (atoms.size() > 8) throw Error("decision procedure capped at 8 atoms");
  Scheme s = logic_scheme(id);
  int max_atom = atoms.empty() ? -1 : atoms.back();

  MixedDecision decision;
  decision.scheme = s;
  std::vector<TruthValue> zdense(max_atom + 1, TruthValue::zero);
  std::vector<TruthValue> wdense(max_atom + 1, TruthValue::zero);
  for (const auto& [zt, wt] : class_models(id, static_cast<int>(atoms.size()))) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      zdense[atoms[i]] = zt[i];
      wdense[atoms[i]] = wt[i];
    }
    bool premises_hold = true;
    for (const auto& g : premises)
      if (!designated(eval_mixed_at_w(g, zdense, wdense, s))) {
        premises_hold = false;
        break;
      }
    if (!premises_hold) continue;
    if (!designated(eval_mixed_at_w(f, zdense, wdense, s))) {
      decision.valid = false;
      decision.countermodel = model_from_tuples(atoms, zt, wt);
      decision.countermodel_faithful = is_faithful(decision.countermodel);
      return decision;
    }
  }
  decision.valid = true;
  return decision;
}

}  // namespace

MixedDecision decide(ClassicalLogicId id, const Formula& f) {
  return run_decision(id, {}, f);
}

MixedDecision consequence_classical(ClassicalLogicId id,
                                    const std::vector<Formula>& premises,
                                    const Formula& f) {
  return run_decision(id, premises, f);
}

FaithReport check_faithfulness_equivalence(const MixedModel& m) {
  FaithReport report;
  report.instances_hold = true;
  for (int w = 0; w < m.num_classical() && report.detail.empty(); ++w) {
    for (int atom : atoms_of(m)) {
      for (bool negated : {false, true}) {
        Formula lit = negated ? Formula::neg(Formula::atom(atom))
                              : Formula::atom(atom);
        Formula inst = faith_instance(lit);
        if (!designated(eval_mixed(m, true, w, inst, Scheme::fde))) {
          report.instances_hold = false;
          report.detail = "instance " + print(inst) + " fails at classical world " +
                          std::to_string(w);
          break;
        }
      }
      if (!report.instances_hold) break;
    }
  }
  report.faithful = is_faithful(m);
  report.agree = report.instances_hold == report.faithful;
  return report;
}

namespace {

AxiomSchema make_schema(const std::string& name, const std::string& text,
                        Dialect dialect = Dialect::basic) {
  Formula shape = parse(text, dialect);
  int arity = prop_set(shape).size() >= 2 ? 2 : 1;
  return AxiomSchema{name, shape, arity};
}

}  // namespace

std::vector<AxiomSchema> axiom_schemas(ClassicalLogicId id) {
  const AxiomSchema nec_top = make_schema("nec-top", "[]T");
  const AxiomSchema nec_bot = make_schema("nec-bot", "~[]F");
  const AxiomSchema dn = make_schema("dn", "[]p0 <-> []~~p0");
  const AxiomSchema and1 =
      make_schema("and1", "[](p0 /\\ p1) <-> []p0 /\\ []p1");
  const AxiomSchema and2 =
      make_schema("and2", "[]~(p0 /\\ p1) <-> []~p0 \\/ []~p1");
  const AxiomSchema or1 = make_schema("or1", "[](p0 \\/ p1) <-> []p0 \\/ []p1");
  const AxiomSchema or2 =
      make_schema("or2", "[]~(p0 \\/ p1) <-> []~p0 /\\ []~p1");
  const AxiomSchema box1 = make_schema("box1", "[]p0 <-> [][]p0");
  const AxiomSchema box2 = make_schema("box2", "[]~p0 <-> []~[]p0");
  const AxiomSchema faith = make_schema("faith", "[]p0 /\\ ~[]~p0 -> p0");
  const AxiomSchema d = make_schema("D", "~[]~p0 \\/ ~[]p0");
  const AxiomSchema dc = make_schema("Dc", "[]~p0 \\/ []p0");
  const AxiomSchema ddc =
      make_schema("DDc", "(~[]~p0 \\/ ~[]p0) \\/ ([]~p1 \\/ []p1)");
  const AxiomSchema or3 = make_schema(
      "or3",
      "[](p0 \\/ p1) <-> (([]p0 \\/ []~p0) /\\ ([]p1 \\/ []~p1)) /\\ ([]p0 \\/ []p1)");
  const AxiomSchema and3 = make_schema(
      "and3",
      "[]~(p0 /\\ p1) <-> (([]p0 \\/ []~p0) /\\ ([]p1 \\/ []~p1)) /\\ ([]~p0 \\/ []~p1)");
  const AxiomSchema fc1 = make_schema(
      "fc1", "[](p0 ->> p1) <-> []~p0 \\/ ([]p0 /\\ []p1)", Dialect::fc);
  const AxiomSchema fc2 =
      make_schema("fc2", "[]~(p0 ->> p1) <-> []p0 /\\ []~p1", Dialect::fc);

  std::vector<AxiomSchema> core = {nec_top, nec_bot, dn,   and1, and2,
                                   or1,     or2,     box1, box2};
  std::vector<AxiomSchema> wcore = {nec_top, nec_bot, dn,   and1, or2,
                                    box1,    box2,    d,    or3,  and3};
  std::vector<AxiomSchema> out;
  switch (id) {
    case ClassicalLogicId::BMminus:
      out = core;
      break;
    case ClassicalLogicId::BM:
      out = core;
      out.push_back(faith);
      break;
    case ClassicalLogicId::Mminus:
      out = core;
      out.push_back(ddc);
      break;
    case ClassicalLogicId::M:
      out = core;
      out.push_back(faith);
      out.push_back(ddc);
      break;
    case ClassicalLogicId::Mn:
      out = core;
      out.push_back(faith);
      out.push_back(d);
      break;
    case ClassicalLogicId::Mb:
      out = core;
      out.push_back(faith);
      out.push_back(dc);
      break;
    case ClassicalLogicId::Mwminus:
      out = wcore;
      break;
    case ClassicalLogicId::Mw:
      out = wcore;
      out.push_back(faith);
      break;
    case ClassicalLogicId::Mfminus:
      out = wcore;
      out.push_back(fc1);
      out.push_back(fc2);
      break;
    default:
      out = wcore;
      out.push_back(faith);
      out.push_back(fc1);
      out.push_back(fc2);
      break;
  }
  return out;
}

Formula instantiate(const AxiomSchema& schema, const Formula& a,
                    const Formula& b) {
  return substitute(schema.shape, {{0, a}, {1, b}});
}

AuditReport axiom_audit(ClassicalLogicId id, int num_atoms, int max_depth) {
  Scheme s = logic_scheme(id);
  std::vector<Formula> pool =
      enumerate_formulas(num_atoms, max_depth, true, logic_allows_fc(id));
  std::vector<AxiomSchema> schemas = axiom_schemas(id);
  auto models = class_models(id, num_atoms);

  AuditReport report;
  report.models = models.size();
  for (const auto& schema : schemas)
    report.instances += schema.arity == 1
                            ? pool.size()
                            : static_cast<std::uint64_t>(pool.size()) *
                                  static_cast<std::uint64_t>(pool.size());

  constexpr std::size_t kFailureCap = 20;
  for (const auto& [zt, wt] : models) {
    // Distinct (value at z, value at w) profiles with a witness formula; the
    // schema instance value at the classical root depends on nothing else.
    std::vector<std::pair<std::pair<TruthValue, TruthValue>, std::size_t>>
        profiles;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      TruthValue vz = eval_single(pool[i], zt, s);
      TruthValue vw = eval_mixed_at_w(pool[i], zt, wt, s);
      std::pair<TruthValue, TruthValue> prof{vz, vw};
      bool known = false;
      for (const auto& [p, witness] : profiles)
        if (p == prof) {
          known = true;
          break;
        }
      if (!known) profiles.emplace_back(prof, i);
    }
    auto record = [&](const AxiomSchema& schema, std::size_t wi,
                      std::size_t wj) {
      if (report.failures.size() >= kFailureCap) return;
      AuditFailure fail{schema.name, instantiate(schema, pool[wi], pool[wj]),
                        {}, {}};
      for (int a = 0; a < num_atoms; ++a) {
        fail.z[a] = zt[a];
        fail.w[a] = wt[a];
      }
      report.failures.push_back(std::move(fail));
    };
    std::vector<TruthValue> zslot(2), wslot(2);
    for (const auto& schema : schemas) {
      for (const auto& [pa, wa] : profiles) {
        zslot[0] = pa.first;
        wslot[0] = pa.second;
        if (schema.arity == 1) {
          zslot[1] = pa.first;
          wslot[1] = pa.second;
          if (!designated(eval_mixed_at_w(schema.shape, zslot, wslot, s)))
            record(schema, wa, wa);
          continue;
        }
        for (const auto& [pb, wb] : profiles) {
          zslot[1] = pb.first;
          wslot[1] = pb.second;
          if (!designated(eval_mixed_at_w(schema.shape, zslot, wslot, s)))
            record(schema, wa, wb);
        }
      }
    }
  }
  return report;
}

}  // namespace kfmodal
