#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kfmodal/calculus.hpp"
#include "kfmodal/formula.hpp"
#include "kfmodal/json_io.hpp"
#include "kfmodal/kftruth.hpp"
#include "kfmodal/lemmas.hpp"
#include "kfmodal/manyvalued.hpp"
#include "kfmodal/mixed.hpp"
#include "kfmodal/prover.hpp"

namespace {

using namespace kfmodal;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  long long seed = 0;
  int bound = -1;

  std::string logic;
  std::string scheme;
  std::string formula;
  std::vector<std::string> premises;
  std::vector<std::string> ant;
  std::vector<std::string> suc;

  std::string calculus;
  std::string modal = "none";
  int sample = 0;
  int frames = 2;
  std::string file;

  std::string realization;
  std::string z_values;
  std::string w_values;

  std::string jump = "sk";
  int tellers = 0;
  bool liar = false;
  std::vector<std::string> sentences;
  std::string seeds;
  bool list_all = false;

  std::string lemma;

  bool json() const { return format == "json"; }
};

void add_shared(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", o.seed, "seed for randomized modes");
  sub->add_option("--bound", o.bound, "size bound (meaning per subcommand)");
}

std::string value_line(const std::map<int, TruthValue>& val, bool classical) {
  std::string out;
  for (const auto& [atom, v] : val) {
    if (!out.empty()) out += ", ";
    out += "p" + std::to_string(atom) + "=";
    out += classical ? (v == TruthValue::one ? "1" : "0") : to_string(v);
  }
  return out.empty() ? "(no atoms)" : out;
}

std::string countermodel_text(const MixedModel& m, Scheme s) {
  std::string out = "countermodel (scheme " + to_string(s) + ", ";
  out += is_faithful(m) ? "faithful" : "not faithful";
  out += ", fails at w)\n";
  out += "  z: " + value_line(m.z_val.at(0), false) + "\n";
  out += "  w: " + value_line(m.w_val.at(0), true) + "\n";
  return out;
}

int report_decision(const MixedDecision& dec, const Options& o) {
  if (dec.valid) {
    std::cout << (o.json() ? "{\"valid\":true}" : "theorem") << "\n";
    return kPass;
  }
  if (o.json())
    std::cout << countermodel_json(dec.countermodel, dec.scheme, "w") << "\n";
  else
    std::cout << countermodel_text(dec.countermodel, dec.scheme);
  return kFail;
}

int run_decide(const Options& o) {
  ClassicalLogicId id = logic_from_string(o.logic);
  Formula f = parse(o.formula, Dialect::fc);
  return report_decision(decide(id, f), o);
}

int run_consequence(const Options& o) {
  ClassicalLogicId id = logic_from_string(o.logic);
  std::vector<Formula> premises;
  for (const std::string& p : o.premises)
    premises.push_back(parse(p, Dialect::fc));
  Formula f = parse(o.formula, Dialect::fc);
  return report_decision(consequence_classical(id, premises, f), o);
}

int run_internal(const Options& o) {
  Scheme s = scheme_from_string(o.scheme);
  std::vector<Formula> ant, suc;
  for (const std::string& t : o.ant) ant.push_back(parse(t, Dialect::fc));
  for (const std::string& t : o.suc) suc.push_back(parse(t, Dialect::fc));
  ConsequenceResult r = internal_consequence(ant, suc, s);
  if (o.json()) {
    std::cout << consequence_json(r) << "\n";
  } else if (r.holds) {
    std::cout << "holds\n";
  } else {
    std::string line;
    for (std::size_t i = 0; i < r.atoms.size(); ++i) {
      if (i) line += ", ";
      line += "p" + std::to_string(r.atoms[i]) + "=" + to_string(r.witness[i]);
    }
    std::cout << "fails at " << (line.empty() ? "(no atoms)" : line) << "\n";
  }
  return r.holds ? kPass : kFail;
}

void derivation_text(const Derivation& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "[" + d.rule + "] " + print(d.sequent) + "\n";
  for (const Derivation& child : d.children)
    derivation_text(child, depth + 1, out);
}

CalculusId calculus_of(const Options& o) {
  return CalculusId{base_from_string(o.calculus), modal_from_string(o.modal)};
}

int run_prove(const Options& o) {
  CalculusId c = calculus_of(o);
  if (o.sample > 0) {
    Derivation last;
    for (int i = 0; i < o.sample; ++i) {
      last = random_derivation(c, static_cast<std::uint64_t>(o.seed) + i);
      CheckResult res = check_derivation(c, last);
      if (!res.valid) {
        std::cerr << "error: generated derivation " << i
                  << " failed its own check: " << res.reason << "\n";
        return kUsage;
      }
    }
    if (o.json())
      std::cout << derivation_json(last) << "\n";
    else
      std::cout << o.sample << " random derivations checked\n";
    return kPass;
  }

  std::vector<Formula> ant, suc;
  Dialect d = base_allows_fc(c.base) ? Dialect::fc : Dialect::basic;
  for (const std::string& t : o.ant) ant.push_back(parse(t, d));
  for (const std::string& t : o.suc) suc.push_back(parse(t, d));
  Sequent goal(ant, suc);
  std::uint64_t budget = o.bound > 0 ? static_cast<std::uint64_t>(o.bound)
                                     : std::uint64_t{20000};
  ProveResult res = prove(c, goal, budget);
  if (res.status == ProveStatus::derived) {
    if (o.json()) {
      std::cout << derivation_json(res.derivation) << "\n";
    } else {
      std::string out;
      derivation_text(res.derivation, 0, out);
      std::cout << out;
    }
    return kPass;
  }
  if (res.status == ProveStatus::budget_exceeded) {
    std::cerr << "error: search budget exceeded after " << res.expanded
              << " expansions; raise --bound\n";
    return kUsage;
  }
  if (c.modal == ModalKind::blackbox) {
    RefuteResult rr = blackbox_refute(c, goal, o.frames);
    if (rr.refuted) {
      if (o.json())
        std::cout << plain_model_json(rr.model) << "\n";
      else
        std::cout << "not derivable; countermodel with "
                  << rr.model.num_worlds() << " worlds:\n"
                  << plain_model_json(rr.model) << "\n";
      return kFail;
    }
    std::cerr << "error: not derivable, and no countermodel within --frames "
              << o.frames << "\n";
    return kUsage;
  }
  ConsequenceResult ic = internal_consequence(ant, suc, base_scheme(c.base));
  if (ic.holds) {
    std::cerr << "error: search saturated but the sequent is semantically "
                 "valid\n";
    return kUsage;
  }
  if (o.json()) {
    std::cout << consequence_json(ic) << "\n";
  } else {
    std::string line;
    for (std::size_t i = 0; i < ic.atoms.size(); ++i) {
      if (i) line += ", ";
      line += "p" + std::to_string(ic.atoms[i]) + "=" + to_string(ic.witness[i]);
    }
    std::cout << "not derivable; fails at "
              << (line.empty() ? "(no atoms)" : line) << "\n";
  }
  return kFail;
}

int run_check(const Options& o) {
  std::string text;
  if (o.file == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(o.file);
    if (!in) throw Error("cannot open " + o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Derivation d = derivation_from_json(text);
  CheckResult res = check_derivation(calculus_of(o), d);
  if (res.valid) {
    std::cout << (o.json() ? "{\"valid\":true}" : "valid") << "\n";
    return kPass;
  }
  if (o.json()) {
    std::ostringstream out;
    out << "{\"valid\":false,\"node\":" << res.node << ",\"reason\":\""
        << res.reason << "\",\"at\":\"" << print(res.at) << "\"}";
    std::cout << out.str() << "\n";
  } else {
    std::cout << "invalid at node " << res.node << ": " << res.reason << " ("
              << print(res.at) << ")\n";
  }
  return kFail;
}

std::vector<TruthValue> parse_values(const std::string& csv) {
  std::vector<TruthValue> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(truth_value_from_string(item));
  return out;
}

MixedModel model_from_flags(const Options& o, int min_atoms) {
  if (o.z_values.empty() || o.w_values.empty())
    throw Error("this mode needs --z and --w valuations (comma separated)");
  std::vector<TruthValue> z = parse_values(o.z_values);
  std::vector<TruthValue> w = parse_values(o.w_values);
  if (z.size() != w.size())
    throw Error("--z and --w must list the same number of atoms");
  if (static_cast<int>(z.size()) < min_atoms)
    throw Error("the formula uses more atoms than the valuations provide");
  std::map<int, TruthValue> zm, wm;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (w[i] != TruthValue::zero && w[i] != TruthValue::one)
      throw Error("--w is a classical world and only takes values 0 and 1");
    zm[static_cast<int>(i)] = z[i];
    wm[static_cast<int>(i)] = w[i];
  }
  return single_rooted(zm, wm);
}

int run_translate(const Options& o) {
  SentenceUniverse u;
  u.neg(u.eq(0, 0));
  u.neg(u.eq(0, 1));
  Formula f = parse(o.formula, Dialect::fc);
  std::vector<int> atoms = prop_set(f);

  Realization star;
  if (!o.realization.empty() && o.realization.front() == '@') {
    std::ifstream in(o.realization.substr(1));
    if (!in) throw Error("cannot open " + o.realization.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    star = realization_from_json(u, buf.str());
  } else {
    BridgeMode mode = bridge_mode_from_string(o.realization);
    if (mode == BridgeMode::witness) {
      star = witness_realization(u, atoms);
    } else {
      int min_atoms = atoms.empty() ? 0 : atoms.back() + 1;
      star = circ_realization(u, model_from_flags(o, min_atoms), mode);
    }
  }
  SentenceId id = translate(u, star, f);
  if (o.json())
    std::cout << "{\"id\":" << id << ",\"form\":\"" << u.form_string(id)
              << "\"}\n";
  else
    std::cout << "sentence " << id << ": " << u.form_string(id) << "\n";
  return kPass;
}

std::string fixed_point_text(const SentenceUniverse& u, const FixedPoint& fp,
                             JumpTag tag) {
  std::ostringstream out;
  out << "jump " << to_string(tag) << ", " << u.size() << " sentences\n";
  out << "S = {";
  bool first = true;
  for (SentenceId id : fp.members()) {
    if (!first) out << ", ";
    out << id;
    first = false;
  }
  out << "}\n";
  out << "consistent: " << (fp.consistent ? "yes" : "no") << "\n";
  out << "complete over universe: " << (fp.complete_over_u ? "yes" : "no")
      << "\n";
  for (SentenceId id = 0; id < static_cast<SentenceId>(u.size()); ++id)
    out << "  " << id << ": " << u.form_string(id)
        << (fp.contains(id) ? "  [in]" : "") << "\n";
  return out.str();
}

int run_fixpoint(const Options& o) {
  SentenceUniverse u;
  u.neg(u.eq(0, 0));
  u.neg(u.eq(0, 1));
  std::vector<SentenceId> tellers;
  for (int i = 0; i < o.tellers; ++i) tellers.push_back(u.truth_teller(i));
  std::optional<SentenceId> lam;
  if (o.liar) lam = u.liar();
  for (const std::string& s : o.sentences) parse_sentence(u, s);
  JumpTag tag = jump_tag_from_string(o.jump);

  if (o.list_all) {
    struct Choice {
      SentenceId positive;
      SentenceId negative;  // -1 when seeding only positively
      std::string name;
    };
    std::vector<Choice> slots;
    for (int i = 0; i < o.tellers; ++i)
      slots.push_back({tellers[i], u.neg(tellers[i]),
                       "t" + std::to_string(i)});
    if (lam) slots.push_back({*lam, -1, "lam"});
    std::vector<SentenceId> seed;
    std::vector<std::string> label;
    bool first_line = true;
    auto emit = [&]() {
      FixedPoint fp = lfp(u, tag, seed);
      std::string name;
      for (const std::string& part : label)
        name += (name.empty() ? "" : ",") + part;
      if (name.empty()) name = "(empty)";
      if (o.json()) {
        std::cout << "{\"seed\":\"" << name
                  << "\",\"fixpoint\":" << universe_json(u, fp, tag) << "}\n";
      } else {
        if (!first_line) std::cout << "\n";
        std::cout << "seed " << name << ":\n" << fixed_point_text(u, fp, tag);
      }
      first_line = false;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == slots.size()) {
        emit();
        return;
      }
      self(self, i + 1);
      seed.push_back(slots[i].positive);
      label.push_back("+" + slots[i].name);
      self(self, i + 1);
      seed.pop_back();
      label.pop_back();
      if (slots[i].negative >= 0) {
        seed.push_back(slots[i].negative);
        label.push_back("-" + slots[i].name);
        self(self, i + 1);
        seed.pop_back();
        label.pop_back();
      }
    };
    rec(rec, 0);
    return kPass;
  }

  std::vector<SentenceId> seed;
  if (!o.seeds.empty()) seed = parse_seed(u, o.seeds);
  FixedPoint fp = lfp(u, tag, seed);
  if (o.json())
    std::cout << universe_json(u, fp, tag) << "\n";
  else
    std::cout << fixed_point_text(u, fp, tag);
  return kPass;
}

int run_verify_lemma(const Options& o) {
  std::optional<int> bound;
  if (o.bound >= 0) bound = o.bound;
  LemmaReport r = verify_lemma(o.lemma, bound);
  if (o.json()) {
    std::cout << lemma_report_json(r) << "\n";
  } else {
    std::cout << r.name << ": " << (r.ok ? "ok" : "FAILED") << " ("
              << r.summary << ")\n";
    for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
  }
  return r.ok ? kPass : kFail;
}

int run_table(const Options& o) {
  Scheme s = scheme_from_string(o.scheme);
  Formula f = parse(o.formula, Dialect::fc);
  TruthTable t = eval_truth_table(f, s);
  if (o.json()) {
    std::cout << truth_table_json(t) << "\n";
    return kPass;
  }
  for (int a : t.atoms) std::cout << "p" << a << " ";
  std::cout << "| " << print(f) << "\n";
  for (const auto& row : t.rows) {
    for (TruthValue v : row.v) std::cout << to_string(v) << "  ";
    std::cout << "| " << to_string(row.value) << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"many-valued modal logics, sequent calculi and truth-theoretic "
               "fixed points"};
  app.require_subcommand(1);
  Options o;

  CLI::App* decide_cmd =
      app.add_subcommand("decide", "theoremhood in a classical modal logic");
  decide_cmd->add_option("--logic", o.logic, "BM-, BM, M-, M, Mn, Mb, Mw-, Mw, Mf-, Mf")
      ->required();
  decide_cmd->add_option("--formula", o.formula)->required();
  add_shared(decide_cmd, o);

  CLI::App* consequence_cmd = app.add_subcommand(
      "consequence", "premises force the conclusion at the classical root");
  consequence_cmd->add_option("--logic", o.logic)->required();
  consequence_cmd->add_option("--premise", o.premises, "repeatable");
  consequence_cmd->add_option("--formula", o.formula)->required();
  add_shared(consequence_cmd, o);

  CLI::App* internal_cmd = app.add_subcommand(
      "internal", "many-valued consequence over one-world models");
  internal_cmd->add_option("--scheme", o.scheme, "fde, k3, lp, ks3, b3, f3")
      ->required();
  internal_cmd->add_option("--ant", o.ant, "repeatable");
  internal_cmd->add_option("--suc", o.suc, "repeatable");
  add_shared(internal_cmd, o);

  CLI::App* prove_cmd =
      app.add_subcommand("prove", "backward proof search in a sequent calculus");
  prove_cmd->add_option("--calculus", o.calculus, "FDE, K3, LP, KS3, B3, F3")
      ->required();
  prove_cmd->add_option("--modal", o.modal, "none, box, blackbox");
  prove_cmd->add_option("--ant", o.ant, "repeatable");
  prove_cmd->add_option("--suc", o.suc, "repeatable");
  prove_cmd->add_option("--sample", o.sample,
                        "generate and check this many random derivations");
  prove_cmd->add_option("--frames", o.frames,
                        "branching bound for blackbox countermodels");
  add_shared(prove_cmd, o);

  CLI::App* check_cmd =
      app.add_subcommand("check", "validate a derivation JSON file");
  check_cmd->add_option("--calculus", o.calculus)->required();
  check_cmd->add_option("--modal", o.modal);
  check_cmd->add_option("file", o.file, "path or - for stdin")->required();
  add_shared(check_cmd, o);

  CLI::App* translate_cmd = app.add_subcommand(
      "translate", "realize a modal formula as a truth-language sentence");
  translate_cmd->add_option("--formula", o.formula)->required();
  translate_cmd
      ->add_option("--realization", o.realization,
                   "witness, circ, dagger or @file.json")
      ->required();
  translate_cmd->add_option("--z", o.z_values, "root values, e.g. n,b,0,1");
  translate_cmd->add_option("--w", o.w_values, "classical values, e.g. 0,1");
  add_shared(translate_cmd, o);

  CLI::App* fixpoint_cmd = app.add_subcommand(
      "fixpoint", "least fixed point of a truth jump over a sentence universe");
  fixpoint_cmd->add_option("--jump", o.jump, "sk, wk, af");
  fixpoint_cmd->add_option("--tellers", o.tellers, "add truth-tellers t0..t(n-1)");
  fixpoint_cmd->add_flag("--liar", o.liar, "add the liar cluster");
  fixpoint_cmd->add_option("--sentence", o.sentences,
                           "add a sentence, e.g. \"t0 /\\\\ ~t1\" (repeatable)");
  fixpoint_cmd->add_option("--seeds", o.seeds, "e.g. +t0,-t1,+lam");
  fixpoint_cmd->add_flag("--list-all", o.list_all,
                         "every fixed point reachable from literal seeds");
  add_shared(fixpoint_cmd, o);

  CLI::App* lemma_cmd =
      app.add_subcommand("verify-lemma", "run a named verification suite");
  lemma_cmd
      ->add_option("--name", o.lemma,
                   "faith, connecting, nabla, modfxp, extnrp, maintc, liar, "
                   "tito, extfcon")
      ->required();
  add_shared(lemma_cmd, o);

  CLI::App* table_cmd =
      app.add_subcommand("table", "truth table of a box-free formula");
  table_cmd->add_option("--scheme", o.scheme)->required();
  table_cmd->add_option("--formula", o.formula)->required();
  add_shared(table_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (decide_cmd->parsed()) return run_decide(o);
    if (consequence_cmd->parsed()) return run_consequence(o);
    if (internal_cmd->parsed()) return run_internal(o);
    if (prove_cmd->parsed()) return run_prove(o);
    if (check_cmd->parsed()) return run_check(o);
    if (translate_cmd->parsed()) return run_translate(o);
    if (fixpoint_cmd->parsed()) return run_fixpoint(o);
    if (lemma_cmd->parsed()) return run_verify_lemma(o);
    if (table_cmd->parsed()) return run_table(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kUsage;
}
