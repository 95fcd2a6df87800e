#include "kfmodal/lemmas.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "kfmodal/calculus.hpp"
#include "kfmodal/formula.hpp"
#include "kfmodal/manyvalued.hpp"

namespace kfmodal {

namespace {

std::map<int, TruthValue> to_map(const std::vector<TruthValue>& dense) {
  std::map<int, TruthValue> out;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i) out[i] = dense[i];
  return out;
}

std::vector<std::vector<TruthValue>> classical_worlds(int n) {
  std::vector<std::vector<TruthValue>> out;
  for (int bits = 0; bits < (1 << n); ++bits) {
    std::vector<TruthValue> w(n, TruthValue::zero);
    for (int j = 0; j < n; ++j)
      if (bits >> (n - 1 - j) & 1) w[j] = TruthValue::one;
    out.push_back(std::move(w));
  }
  return out;
}

void record(LemmaReport& r, const std::string& msg) {
  r.ok = false;
  if (r.failures.size() < 20) r.failures.push_back(msg);
}

std::string valuation_str(const std::vector<TruthValue>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string model_str(const std::vector<TruthValue>& z,
                      const std::vector<TruthValue>& w) {
  return "z=" + valuation_str(z) + " w=" + valuation_str(w);
}

Formula box_conditional(const std::vector<Formula>& ant,
                        const std::vector<Formula>& suc) {
  std::optional<Formula> lhs;
  for (const Formula& f : ant) {
    Formula b = Formula::box(f);
    lhs = lhs ? Formula::conj(*lhs, b) : b;
  }
  std::optional<Formula> rhs;
  for (const Formula& f : suc) {
    Formula b = Formula::box(f);
    rhs = rhs ? Formula::disj(*rhs, b) : b;
  }
  return Formula::disj(Formula::neg(lhs ? *lhs : Formula::top()),
                       rhs ? *rhs : Formula::bot());
}

Formula implication(const Formula& a, const Formula& b) {
  return Formula::disj(Formula::neg(a), b);
}

Formula biconditional(const Formula& a, const Formula& b) {
  return Formula::conj(implication(a, b), implication(b, a));
}

void finish(LemmaReport& r, const std::string& what) {
  std::ostringstream out;
  out << what << ": " << r.checks << " checks, " << r.failures.size()
      << " failures";
  r.summary = out.str();
}

}  // namespace

LemmaReport faith_lemma(int num_atoms) {
  LemmaReport r{.name = "faith"};
  for (int n = 1; n <= num_atoms; ++n) {
    for (const auto& z : legal_valuations(n, Scheme::fde)) {
      for (const auto& w : classical_worlds(n)) {
        MixedModel m = single_rooted(to_map(z), to_map(w));
        FaithReport fr = check_faithfulness_equivalence(m);
        ++r.checks;
        if (!fr.agree)
          record(r, model_str(z, w) + " instances " +
                        (fr.instances_hold ? "hold" : "fail") +
                        " but faithful=" + (fr.faithful ? "yes" : "no") +
                        " " + fr.detail);
      }
    }
  }
  finish(r, "faith instance / faithful valuation equivalence");
  return r;
}

LemmaReport connecting_lemma(int num_atoms, int max_depth) {
  LemmaReport r{.name = "connecting"};
  const std::pair<BaseCalculus, ClassicalLogicId> pairs[] = {
      {BaseCalculus::FDE, ClassicalLogicId::BM},
      {BaseCalculus::K3, ClassicalLogicId::Mn},
      {BaseCalculus::LP, ClassicalLogicId::Mb},
      {BaseCalculus::KS3, ClassicalLogicId::M},
      {BaseCalculus::B3, ClassicalLogicId::Mw},
      {BaseCalculus::F3, ClassicalLogicId::Mf}};
  for (const auto& [base, logic] : pairs) {
    Scheme s = base_scheme(base);
    bool use_fc = base_allows_fc(base);
    std::vector<Formula> pool =
        enumerate_formulas(num_atoms, max_depth, true, use_fc);
    auto vals = legal_valuations(num_atoms, s);

    std::vector<std::vector<TruthValue>> zs;
    {
      std::set<std::vector<TruthValue>> seen;
      for (const auto& [z, w] : class_models(logic, num_atoms))
        if (seen.insert(z).second) zs.push_back(z);
    }
    const std::uint32_t full_vals = (1u << vals.size()) - 1;
    const std::uint32_t full_zs = (1u << zs.size()) - 1;

    using MaskPair = std::pair<std::uint32_t, std::uint32_t>;
    std::vector<MaskPair> reps;
    std::vector<Formula> rep_forms;
    {
      std::set<MaskPair> seen;
      for (const Formula& f : pool) {
        MaskPair mp{0, 0};
        for (std::size_t i = 0; i < vals.size(); ++i)
          if (designated(eval_single(f, vals[i], s))) mp.first |= 1u << i;
        for (std::size_t i = 0; i < zs.size(); ++i)
          if (designated(eval_single(f, zs[i], s))) mp.second |= 1u << i;
        if (seen.insert(mp).second) {
          reps.push_back(mp);
          rep_forms.push_back(f);
        }
      }
    }

    std::set<MaskPair> ands{{full_vals, full_zs}};
    std::set<MaskPair> ors{{0, 0}};
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ands.insert(reps[i]);
      ors.insert(reps[i]);
      for (std::size_t j = i; j < reps.size(); ++j) {
        ands.insert({reps[i].first & reps[j].first,
                     reps[i].second & reps[j].second});
        ors.insert(
            {reps[i].first | reps[j].first, reps[i].second | reps[j].second});
      }
    }
    for (const MaskPair& a : ands) {
      for (const MaskPair& o : ors) {
        ++r.checks;
        bool internal = (a.first & ~o.first & full_vals) == 0;
        bool theorem = (a.second & ~o.second & full_zs) == 0;
        if (internal && !theorem)
          record(r, to_string(base) + "/" + to_string(logic) +
                        " consequence does not transfer at mask sweep");
      }
    }

    std::size_t sample = std::min<std::size_t>(rep_forms.size(), 25);
    for (std::size_t gi = 0; gi <= sample; ++gi) {
      for (std::size_t di = 0; di <= sample; ++di) {
        std::vector<Formula> ant, suc;
        if (gi > 0) ant.push_back(rep_forms[gi - 1]);
        if (di > 0) suc.push_back(rep_forms[di - 1]);
        ConsequenceResult ic = internal_consequence(ant, suc, s);
        if (!ic.holds) continue;
        MixedDecision dec = decide(logic, box_conditional(ant, suc));
        ++r.checks;
        if (!dec.valid)
          record(r, to_string(base) + "/" + to_string(logic) + " sequent " +
                        print(Sequent(ant, suc)) +
                        ": internal holds, boxed conditional refuted");
      }
    }
  }
  finish(r, "consequence transfer to boxed conditionals");
  return r;
}

LemmaReport nabla_lemma(int num_atoms, int max_depth) {
  LemmaReport r{.name = "nabla"};
  for (ClassicalLogicId logic : {ClassicalLogicId::Mw, ClassicalLogicId::Mf}) {
    Scheme s = logic_scheme(logic);
    bool use_fc = logic_allows_fc(logic);
    auto vals = legal_valuations(num_atoms, s);

    using Sig = std::vector<TruthValue>;
    std::set<Sig> seen;
    std::vector<Sig> accum;
    auto push = [&](const Sig& sig) {
      if (seen.insert(sig).second) accum.push_back(sig);
    };
    for (int j = 0; j < num_atoms; ++j) {
      Sig sig(vals.size());
      for (std::size_t i = 0; i < vals.size(); ++i) sig[i] = vals[i][j];
      push(sig);
    }
    push(Sig(vals.size(), TruthValue::one));
    push(Sig(vals.size(), TruthValue::zero));

    for (int d = 1; d <= max_depth; ++d) {
      std::vector<Sig> snapshot = accum;
      for (const Sig& a : snapshot) {
        Sig neg(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) neg[i] = negate(a[i]);
        push(neg);
      }
      for (const Sig& a : snapshot) {
        for (const Sig& b : snapshot) {
          Sig conj(a.size()), disj(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) {
            conj[i] = apply_binary(Conn::conj, a[i], b[i], s);
            disj[i] = apply_binary(Conn::disj, a[i], b[i], s);
          }
          push(conj);
          push(disj);
          if (use_fc) {
            Sig fc(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
              fc[i] = apply_binary(Conn::fc, a[i], b[i], s);
            push(fc);
          }
        }
      }
    }

    auto constant_n = [](const Sig& sig) {
      return std::all_of(sig.begin(), sig.end(),
                         [](TruthValue v) { return v == TruthValue::n; });
    };
    for (const Sig& sig : seen) {
      ++r.checks;
      if (constant_n(sig))
        record(r, to_string(logic) +
                      ": found a formula profile that is undecided at every "
                      "root valuation");
    }
    for (int j = 0; j < num_atoms; ++j) {
      ++r.checks;
      if (decide(logic, nabla(Formula::atom(j))).valid)
        record(r, to_string(logic) + ": ~([]p" + std::to_string(j) +
                      " \\/ []~p" + std::to_string(j) + ") is a theorem");
    }
    for (const Formula& f : enumerate_formulas(num_atoms, 1, true, use_fc)) {
      Sig sig(vals.size());
      for (std::size_t i = 0; i < vals.size(); ++i)
        sig[i] = eval_single(f, vals[i], s);
      ++r.checks;
      if (decide(logic, nabla(f)).valid != constant_n(sig))
        record(r, to_string(logic) + ": decision on " + print(nabla(f)) +
                      " disagrees with the designation profile of " + print(f));
    }
  }
  finish(r, "undecidedness transfers to atoms");
  return r;
}

LemmaReport modfxp_lemma(int num_atoms) {
  LemmaReport r{.name = "modfxp"};
  for (Scheme s : {Scheme::fde, Scheme::ks3, Scheme::k3, Scheme::lp}) {
    for (int n = 1; n <= num_atoms; ++n) {
      std::vector<int> atoms(n);
      for (int j = 0; j < n; ++j) atoms[j] = j;
      for (const auto& z : legal_valuations(n, s)) {
        for (const auto& w : classical_worlds(n)) {
          MixedModel m = single_rooted(to_map(z), to_map(w));
          if (!is_faithful(m)) continue;
          SentenceUniverse u;
          std::vector<SentenceId> seed = seed_from_model(u, m, atoms, s);
          FixedPoint fp = lfp(u, JumpTag::sk, seed);
          for (int j = 0; j < n; ++j) {
            SentenceId even = *u.find_truth_teller(2 * j);
            SentenceId odd = *u.find_truth_teller(2 * j + 1);
            SentenceId neven = *u.find_neg(even);
            SentenceId nodd = *u.find_neg(odd);
            bool z_p = designated(z[j]);
            bool z_np = designated(negate(z[j]));
            bool w_p = w[j] == TruthValue::one;
            auto expect = [&](SentenceId id, bool want, const char* what) {
              ++r.checks;
              if (fp.contains(id) != want)
                record(r, std::string(to_string(s)) + " " + model_str(z, w) +
                              " " + what + " membership is " +
                              (fp.contains(id) ? "in" : "out") +
                              ", clause says " + (want ? "in" : "out"));
            };
            expect(even, w_p || z_p, "even teller");
            expect(neven, z_np, "negated even teller");
            expect(odd, !w_p && z_p, "odd teller");
            expect(nodd, z_p, "negated odd teller");
          }
          if (s == Scheme::k3) {
            ++r.checks;
            if (!fp.consistent)
              record(r, "k3 " + model_str(z, w) +
                            " produced an inconsistent fixed point");
          }
        }
      }
    }
  }
  finish(r, "truth-teller seeds realize the defining clauses");
  return r;
}

namespace {

LemmaReport witness_sweep(const char* name, bool z_side, int num_atoms,
                          int max_depth) {
  LemmaReport r{.name = name};
  std::vector<Formula> pool =
      enumerate_formulas(num_atoms, max_depth, true, false);
  std::vector<int> atoms(num_atoms);
  for (int j = 0; j < num_atoms; ++j) atoms[j] = j;
  for (const auto& z : legal_valuations(num_atoms, Scheme::fde)) {
    for (const auto& w : classical_worlds(num_atoms)) {
      MixedModel m = single_rooted(to_map(z), to_map(w));
      if (!is_faithful(m)) continue;
      SentenceUniverse u;
      Realization star = witness_realization(u, atoms);
      std::vector<SentenceId> seed = seed_from_model(u, m, atoms, Scheme::fde);
      std::vector<SentenceId> ids;
      ids.reserve(pool.size());
      for (const Formula& f : pool) {
        SentenceId id = translate(u, star, f);
        u.neg(id);
        ids.push_back(id);
      }
      FixedPoint fp = lfp(u, JumpTag::sk, seed);
      for (std::size_t i = 0; i < pool.size(); ++i) {
        ++r.checks;
        if (z_side) {
          bool des = designated(eval_single(pool[i], z, Scheme::fde));
          if (des != fp.contains(ids[i]))
            record(r, model_str(z, w) + " " + print(pool[i]) +
                          (des ? " designated but translation absent"
                               : " undesignated but translation present"));
        } else {
          bool des =
              designated(eval_mixed_at_w(pool[i], z, w, Scheme::fde));
          if (des && !classical_sat(fp, ids[i]))
            record(r, model_str(z, w) + " " + print(pool[i]) +
                          " designated at w but classically false");
        }
      }
    }
  }
  finish(r, z_side ? "root designation matches fixed-point membership"
                   : "classical designation implies classical truth");
  return r;
}

}  // namespace

LemmaReport extnrp_lemma(int num_atoms, int max_depth) {
  return witness_sweep("extnrp", true, num_atoms, max_depth);
}

LemmaReport maintc_lemma(int num_atoms, int max_depth) {
  return witness_sweep("maintc", false, num_atoms, max_depth);
}

LemmaReport liar_lemma() {
  LemmaReport r{.name = "liar"};
  for (JumpTag tag : {JumpTag::sk, JumpTag::wk, JumpTag::af}) {
    SentenceUniverse u;
    SentenceId lam = u.liar();
    SentenceId tr_lam = u.tr(lam);
    SentenceId neg_lam = *u.find_neg(lam);
    SentenceId eq00 = u.eq(0, 0);
    SentenceId eq01 = u.eq(0, 1);
    u.neg(eq00);
    SentenceId neq01 = u.neg(eq01);

    FixedPoint fp = lfp(u, tag, {});
    auto expect = [&](bool got, const std::string& what) {
      ++r.checks;
      if (!got) record(r, to_string(tag) + ": " + what);
    };
    expect(fp.contains(eq00), "a true equation left out");
    expect(fp.contains(neq01), "a negated false equation left out");
    expect(!fp.contains(lam), "the liar entered the least fixed point");
    expect(!fp.contains(neg_lam),
           "the negated liar entered the least fixed point");
    expect(!fp.contains(tr_lam),
           "the liar's truth ascription entered the least fixed point");
    expect(fp.consistent, "the least fixed point is inconsistent");
    expect(classical_sat(fp, lam),
           "the liar is classically false over the least fixed point");

    FixedPoint seeded = lfp(u, tag, {lam});
    expect(seeded.contains(lam), "the seeded liar is missing");
    expect(seeded.contains(tr_lam),
           "the seeded liar's truth ascription is missing");
    expect(seeded.contains(neg_lam), "the seeded negated liar is missing");
    expect(!seeded.consistent, "the liar-seeded fixed point is consistent");
    expect(!classical_sat(seeded, lam),
           "the liar stays classically true after seeding");
  }
  finish(r, "liar facts across the three jumps");
  return r;
}

LemmaReport tito_lemma(int num_atoms) {
  LemmaReport r{.name = "tito"};
  std::vector<Formula> prem_a, prem_b, conc_a, conc_b, faiths;
  for (int j = 0; j < num_atoms; ++j) {
    Formula p = Formula::atom(j);
    Formula np = Formula::neg(p);
    for (const Formula& x : {p, np}) {
      prem_a.push_back(implication(x, Formula::box(x)));
      prem_b.push_back(implication(Formula::box(x), x));
      faiths.push_back(faith_instance(x));
    }
    conc_a.push_back(Formula::disj(Formula::box(np), Formula::box(p)));
    conc_b.push_back(Formula::disj(Formula::neg(Formula::box(np)),
                                   Formula::neg(Formula::box(p))));
  }
  auto all_hold = [](const std::vector<Formula>& fs,
                     const std::vector<TruthValue>& z,
                     const std::vector<TruthValue>& w) {
    return std::all_of(fs.begin(), fs.end(), [&](const Formula& f) {
      return designated(eval_mixed_at_w(f, z, w, Scheme::fde));
    });
  };
  for (const auto& z : legal_valuations(num_atoms, Scheme::fde)) {
    for (const auto& w : classical_worlds(num_atoms)) {
      bool ca = all_hold(conc_a, z, w) && all_hold(faiths, z, w);
      bool cb = all_hold(conc_b, z, w) && all_hold(faiths, z, w);
      if (all_hold(prem_a, z, w)) {
        ++r.checks;
        if (!ca)
          record(r, model_str(z, w) +
                        " validates f -> []f on literals but not its "
                        "consequences");
      }
      if (all_hold(prem_b, z, w)) {
        ++r.checks;
        if (!cb)
          record(r, model_str(z, w) +
                        " validates []f -> f on literals but not its "
                        "consequences");
      }
    }
  }
  for (const Formula& conc : conc_a) {
    ++r.checks;
    if (!consequence_classical(ClassicalLogicId::BMminus, prem_a, conc).valid)
      record(r, "f -> []f on literals does not force " + print(conc));
  }
  for (const Formula& conc : conc_b) {
    ++r.checks;
    if (!consequence_classical(ClassicalLogicId::BMminus, prem_b, conc).valid)
      record(r, "[]f -> f on literals does not force " + print(conc));
  }
  for (const Formula& conc : faiths) {
    ++r.checks;
    if (!consequence_classical(ClassicalLogicId::BMminus, prem_a, conc).valid)
      record(r, "f -> []f on literals does not force " + print(conc));
    ++r.checks;
    if (!consequence_classical(ClassicalLogicId::BMminus, prem_b, conc).valid)
      record(r, "[]f -> f on literals does not force " + print(conc));
  }
  finish(r, "literal reflection forces decidedness and faith");
  return r;
}

LemmaReport extfcon_lemma() {
  LemmaReport r{.name = "extfcon"};
  Formula p = Formula::atom(0);
  Formula q = Formula::atom(1);
  Formula fcf = Formula::fc(p, q);
  Formula mat = implication(p, q);

  MixedDecision flat = decide(ClassicalLogicId::Mf, biconditional(fcf, mat));
  ++r.checks;
  if (!flat.valid)
    record(r, "(p ->> q) <-> (p -> q) is not a theorem of Mf");

  MixedDecision boxed = decide(
      ClassicalLogicId::Mf,
      biconditional(Formula::box(fcf), Formula::box(mat)));
  ++r.checks;
  if (boxed.valid) {
    record(r, "[](p ->> q) <-> [](p -> q) is a theorem of Mf");
  } else {
    std::vector<TruthValue> z(2, TruthValue::n);
    for (const auto& [atom, v] : boxed.countermodel.z_val[0]) z.at(atom) = v;
    bool des_fc = designated(eval_single(fcf, z, Scheme::f3));
    bool des_mat = designated(eval_single(mat, z, Scheme::f3));
    ++r.checks;
    if (des_fc == des_mat)
      record(r, "countermodel root does not separate the two boxed sentences");
  }
  finish(r, "flat equivalence holds, boxed equivalence fails");
  return r;
}

std::vector<std::string> lemma_names() {
  return {"faith",  "connecting", "nabla", "modfxp",  "extnrp",
          "maintc", "liar",       "tito",  "extfcon"};
}

LemmaReport verify_lemma(const std::string& name, std::optional<int> bound) {
  if (name == "faith") return faith_lemma(bound.value_or(2));
  if (name == "connecting") return connecting_lemma(bound.value_or(2));
  if (name == "nabla") return nabla_lemma(bound.value_or(3));
  if (name == "modfxp") return modfxp_lemma(bound.value_or(2));
  if (name == "extnrp") return extnrp_lemma(bound.value_or(2));
  if (name == "maintc") return maintc_lemma(bound.value_or(2));
  if (name == "liar") return liar_lemma();
  if (name == "tito") return tito_lemma(bound.value_or(2));
  if (name == "extfcon") return extfcon_lemma();
  throw Error("unknown lemma: " + name +
              " (expected one of faith, connecting, nabla, modfxp, extnrp, "
              "maintc, liar, tito, extfcon)");
}

}  // namespace kfmodal
