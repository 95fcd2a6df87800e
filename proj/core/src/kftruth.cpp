#include "kfmodal/kftruth.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace kfmodal {

namespace {

std::uint64_t node_key(const TSentence& s) {
  return (static_cast<std::uint64_t>(s.form) << 60) |
         (static_cast<std::uint64_t>(s.a) << 30) |
         static_cast<std::uint64_t>(s.b);
}

}  // namespace

SentenceId SentenceUniverse::intern(TSentence s) {
  auto key = node_key(s);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  table_.push_back(s);
  SentenceId id = static_cast<SentenceId>(table_.size()) - 1;
  index_.emplace(key, id);
  return id;
}

SentenceId SentenceUniverse::eq(int m, int n) {
  if (m < 0 || n < 0) throw Error("numerals must be nonnegative");
  return intern({SForm::eq, m, n});
}

SentenceId SentenceUniverse::tr(SentenceId code) {
  if (code < 0 || code >= size()) throw Error("Tr code outside the universe");
  SentenceId id = intern({SForm::tr, code, 0});
  intern({SForm::neg, code, 0});
  return id;
}

SentenceId SentenceUniverse::neg(SentenceId s) {
  if (s < 0 || s >= size()) throw Error("negand outside the universe");
  return intern({SForm::neg, s, 0});
}

SentenceId SentenceUniverse::conj(SentenceId x, SentenceId y) {
  if (x < 0 || x >= size() || y < 0 || y >= size())
    throw Error("conjunct outside the universe");
  return intern({SForm::conj, x, y});
}

SentenceId SentenceUniverse::disj(SentenceId x, SentenceId y) {
  if (x < 0 || x >= size() || y < 0 || y >= size())
    throw Error("disjunct outside the universe");
  return intern({SForm::disj, x, y});
}

SentenceId SentenceUniverse::fc(SentenceId x, SentenceId y) {
  if (x < 0 || x >= size() || y < 0 || y >= size())
    throw Error("operand outside the universe");
  has_fc_ = true;
  return intern({SForm::fc, x, y});
}

SentenceId SentenceUniverse::truth_teller(int i) {
  if (i < 0) throw Error("truth-teller index must be nonnegative");
  if (auto it = tellers_.find(i); it != tellers_.end()) return it->second;
  SentenceId id = static_cast<SentenceId>(table_.size());
  table_.push_back({SForm::tr, id, 0});
  index_.emplace(node_key(table_.back()), id);
  tellers_.emplace(i, id);
  neg(id);
  return id;
}

SentenceId SentenceUniverse::liar() {
  if (liar_ >= 0) return liar_;
  SentenceId t = static_cast<SentenceId>(table_.size());
  table_.push_back({SForm::tr, t + 1, 0});
  index_.emplace(node_key(table_.back()), t);
  table_.push_back({SForm::neg, t, 0});
  index_.emplace(node_key(table_.back()), t + 1);
  liar_ = t + 1;
  neg(liar_);
  return liar_;
}

const TSentence& SentenceUniverse::at(SentenceId id) const {
  if (id < 0 || id >= size()) throw Error("sentence id outside the universe");
  return table_[static_cast<std::size_t>(id)];
}

std::optional<SentenceId> SentenceUniverse::find_neg(SentenceId id) const {
  auto it = index_.find(node_key({SForm::neg, id, 0}));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SentenceId> SentenceUniverse::find_truth_teller(int i) const {
  auto it = tellers_.find(i);
  if (it == tellers_.end()) return std::nullopt;
  return it->second;
}

std::optional<SentenceId> SentenceUniverse::find_liar() const {
  if (liar_ < 0) return std::nullopt;
  return liar_;
}

std::string SentenceUniverse::form_string(SentenceId id) const {
  const TSentence& s = at(id);
  switch (s.form) {
    case SForm::eq:
      return std::to_string(s.a) + "=" + std::to_string(s.b);
    case SForm::tr:
      return "T(" + std::to_string(s.a) + ")";
    case SForm::neg:
      return "not " + form_string(s.a);
    case SForm::conj:
      return "(" + form_string(s.a) + " and " + form_string(s.b) + ")";
    case SForm::disj:
      return "(" + form_string(s.a) + " or " + form_string(s.b) + ")";
    default:
      return "(" + form_string(s.a) + " fc " + form_string(s.b) + ")";
  }
}

std::string to_string(JumpTag t) {
  switch (t) {
    case JumpTag::sk:
      return "sk";
    case JumpTag::wk:
      return "wk";
    default:
      return "af";
  }
}

JumpTag jump_tag_from_string(const std::string& s) {
  if (s == "sk") return JumpTag::sk;
  if (s == "wk") return JumpTag::wk;
  if (s == "af") return JumpTag::af;
  throw Error("unknown jump tag: " + s);
}

JumpTag jump_for_scheme(Scheme s) {
  if (s == Scheme::b3) return JumpTag::wk;
  if (s == Scheme::f3) return JumpTag::af;
  return JumpTag::sk;
}

std::vector<bool> jump(const SentenceUniverse& u, JumpTag tag,
                       const std::vector<bool>& in_S) {
  if (static_cast<int>(in_S.size()) != u.size())
    throw Error("membership vector does not match the universe");
  auto member = [&](SentenceId id) { return in_S[static_cast<std::size_t>(id)]; };
  auto neg_member = [&](SentenceId id) {
    auto n = u.find_neg(id);
    return n && member(*n);
  };
  bool guarded = tag != JumpTag::sk;
  auto determined = [&](SentenceId id) { return member(id) || neg_member(id); };

  std::vector<bool> out(in_S.size(), false);
  for (SentenceId id = 0; id < u.size(); ++id) {
    const TSentence& s = u.at(id);
    bool value = false;
    switch (s.form) {
      case SForm::eq:
        value = s.a == s.b;
        break;
      case SForm::tr:
        value = member(s.a);
        break;
      case SForm::conj:
        value = member(s.a) && member(s.b);
        break;
      case SForm::disj:
        value = (member(s.a) || member(s.b)) &&
                (!guarded || (determined(s.a) && determined(s.b)));
        break;
      case SForm::fc:
        if (tag != JumpTag::af) throw Error("↠ sentences require the af jump");
        value = neg_member(s.a) || (member(s.a) && member(s.b));
        break;
      case SForm::neg: {
        const TSentence& c = u.at(s.a);
        switch (c.form) {
          case SForm::eq:
            value = c.a != c.b;
            break;
          case SForm::tr:
            value = neg_member(c.a);
            break;
          case SForm::neg:
            value = member(c.a);
            break;
          case SForm::conj:
            value = (neg_member(c.a) || neg_member(c.b)) &&
                    (!guarded || (determined(c.a) && determined(c.b)));
            break;
          case SForm::disj:
            value = neg_member(c.a) && neg_member(c.b);
            break;
          default:
            if (tag != JumpTag::af)
              throw Error("↠ sentences require the af jump");
            value = member(c.a) && neg_member(c.b);
            break;
        }
        break;
      }
    }
    out[static_cast<std::size_t>(id)] = value;
  }
  return out;
}

bool FixedPoint::contains(SentenceId id) const {
  return id >= 0 && id < static_cast<int>(in_S.size()) &&
         in_S[static_cast<std::size_t>(id)];
}

std::vector<SentenceId> FixedPoint::members() const {
  std::vector<SentenceId> out;
  for (std::size_t i = 0; i < in_S.size(); ++i)
    if (in_S[i]) out.push_back(static_cast<SentenceId>(i));
  return out;
}

FixedPoint lfp(const SentenceUniverse& u, JumpTag tag,
               const std::vector<SentenceId>& seed) {
  std::vector<bool> S(static_cast<std::size_t>(u.size()), false);
  for (SentenceId id : seed) {
    if (id < 0 || id >= u.size()) throw Error("seed sentence outside the universe");
    S[static_cast<std::size_t>(id)] = true;
  }
  while (true) {
    std::vector<bool> next = jump(u, tag, S);
    for (SentenceId id : seed) next[static_cast<std::size_t>(id)] = true;
    if (next == S) break;
    S = std::move(next);
  }
  std::vector<bool> verify = jump(u, tag, S);
  if (verify != S) {
    for (SentenceId id = 0; id < u.size(); ++id)
      if (verify[static_cast<std::size_t>(id)] != S[static_cast<std::size_t>(id)])
        throw NotAFixedPoint("the jump cannot sustain " + u.form_string(id));
  }
  FixedPoint fp;
  fp.universe = &u;
  fp.tag = tag;
  fp.in_S = std::move(S);
  fp.consistent = true;
  fp.complete_over_u = true;
  for (SentenceId id = 0; id < u.size(); ++id) {
    bool self = fp.in_S[static_cast<std::size_t>(id)];
    auto n = u.find_neg(id);
    bool negated = n && fp.in_S[static_cast<std::size_t>(*n)];
    if (self && negated) fp.consistent = false;
    if (!self && !negated) fp.complete_over_u = false;
  }
  return fp;
}

bool classical_sat(const FixedPoint& fp, SentenceId s) {
  if (!fp.universe) throw Error("fixed point has no universe");
  const SentenceUniverse& u = *fp.universe;
  std::function<bool(SentenceId)> rec = [&](SentenceId id) -> bool {
    if (id < 0 || id >= static_cast<int>(fp.in_S.size()))
      throw Error("sentence was added after the fixed point was computed");
    const TSentence& sen = u.at(id);
    switch (sen.form) {
      case SForm::eq:
        return sen.a == sen.b;
      case SForm::tr:
        return fp.contains(sen.a);
      case SForm::neg:
        return !rec(sen.a);
      case SForm::conj:
        return rec(sen.a) && rec(sen.b);
      case SForm::disj:
        return rec(sen.a) || rec(sen.b);
      default:
        return !rec(sen.a) || rec(sen.b);
    }
  };
  return rec(s);
}

SentenceId translate(SentenceUniverse& u, const Realization& star,
                     const Formula& f) {
  switch (f.conn()) {
    case Conn::atom: {
      auto it = star.map.find(f.atom_index());
      if (it == star.map.end())
        throw Error("realization does not define p" +
                    std::to_string(f.atom_index()));
      return it->second;
    }
    case Conn::top:
      return u.eq(0, 0);
    case Conn::bot:
      return u.eq(0, 1);
    case Conn::neg:
      return u.neg(translate(u, star, f.child()));
    case Conn::box:
      return u.tr(translate(u, star, f.child()));
    case Conn::conj:
      return u.conj(translate(u, star, f.left()), translate(u, star, f.right()));
    case Conn::disj:
      return u.disj(translate(u, star, f.left()), translate(u, star, f.right()));
    default:
      return u.fc(translate(u, star, f.left()), translate(u, star, f.right()));
  }
}

Realization witness_realization(SentenceUniverse& u,
                                const std::vector<int>& atoms) {
  Realization star;
  for (int j : atoms) {
    SentenceId even = u.truth_teller(2 * j);
    SentenceId odd = u.truth_teller(2 * j + 1);
    star.map[j] = u.conj(even, u.neg(odd));
  }
  return star;
}

namespace {

TruthValue value_at(const std::map<int, TruthValue>& val, int atom,
                    TruthValue fallback) {
  auto it = val.find(atom);
  return it == val.end() ? fallback : it->second;
}

void require_single_rooted(const MixedModel& m) {
  if (m.num_classical() != 1 || m.num_nonclassical() != 1 ||
      m.sees != std::vector<int>{0})
    throw Error("a single-rooted model is required");
}

}  // namespace

std::vector<SentenceId> seed_from_model(SentenceUniverse& u,
                                        const MixedModel& m,
                                        const std::vector<int>& atoms,
                                        Scheme scheme) {
  require_single_rooted(m);
  if (scheme == Scheme::b3 || scheme == Scheme::f3)
    throw Error("the seed construction covers fde, ks3, k3 and lp only");
  std::vector<SentenceId> seed;
  for (int j : atoms) {
    TruthValue vz = value_at(m.z_val[0], j, TruthValue::n);
    TruthValue vw = value_at(m.w_val[0], j, TruthValue::zero);
    bool z_p = designated(vz);
    bool z_np = designated(negate(vz));
    bool w_p = designated(vw);
    SentenceId even = u.truth_teller(2 * j);
    SentenceId odd = u.truth_teller(2 * j + 1);
    if (w_p || z_p) seed.push_back(even);
    if (z_np) seed.push_back(u.neg(even));
    if (!w_p && z_p) seed.push_back(odd);
    if (z_p) seed.push_back(u.neg(odd));
  }
  return seed;
}

std::string to_string(BridgeMode m) {
  switch (m) {
    case BridgeMode::witness:
      return "witness";
    case BridgeMode::circ:
      return "circ";
    default:
      return "dagger";
  }
}

BridgeMode bridge_mode_from_string(const std::string& s) {
  if (s == "witness") return BridgeMode::witness;
  if (s == "circ") return BridgeMode::circ;
  if (s == "dagger") return BridgeMode::dagger;
  throw Error("unknown realization: " + s);
}

Realization circ_realization(SentenceUniverse& u, const MixedModel& m,
                             BridgeMode kind) {
  require_single_rooted(m);
  if (kind == BridgeMode::witness)
    throw Error("circ_realization builds circ or dagger");
  SentenceId lam = u.liar();
  Realization star;
  for (int j : atoms_of(m)) {
    TruthValue vz = value_at(m.z_val[0], j, TruthValue::n);
    TruthValue vw = value_at(m.w_val[0], j, TruthValue::zero);
    bool w1 = designated(vw);
    if (kind == BridgeMode::circ) {
      if (vz == TruthValue::b)
        throw Error("circ requires the consistent class");
      if (vz == TruthValue::one)
        star.map[j] = u.eq(0, 0);
      else if (vz == TruthValue::n)
        star.map[j] = w1 ? lam : u.neg(lam);
      else
        star.map[j] = u.eq(0, 1);
    } else {
      if (vz == TruthValue::n)
        throw Error("dagger requires the complete class");
      if (vz == TruthValue::zero)
        star.map[j] = u.eq(0, 1);
      else if (vz == TruthValue::b)
        star.map[j] = w1 ? u.neg(lam) : lam;
      else
        star.map[j] = u.eq(0, 0);
    }
  }
  return star;
}

BridgeSetup prepare_bridge(const MixedModel& m, Scheme scheme,
                           BridgeMode mode) {
  require_single_rooted(m);
  BridgeSetup setup;
  setup.mode = mode;
  setup.u.eq(0, 0);
  setup.u.eq(0, 1);
  if (mode == BridgeMode::witness) {
    setup.star = witness_realization(setup.u, atoms_of(m));
    setup.seed = seed_from_model(setup.u, m, atoms_of(m), scheme);
    setup.tag = JumpTag::sk;
  } else {
    setup.star = circ_realization(setup.u, m, mode);
    setup.tag = jump_for_scheme(scheme);
    if (mode == BridgeMode::dagger) setup.seed = {setup.u.liar()};
    setup.free_tellers = {setup.u.truth_teller(1000),
                          setup.u.truth_teller(1001)};
  }
  return setup;
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  out = set_add(out, f);
  switch (f.conn()) {
    case Conn::neg:
    case Conn::box:
      collect_subformulas(f.child(), out);
      break;
    case Conn::conj:
    case Conn::disj:
    case Conn::fc:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
    default:
      break;
  }
}

}  // namespace

BridgeReport run_bridge(BridgeSetup& setup, const MixedModel& m, Scheme scheme,
                        const Formula& f,
                        const std::vector<SentenceId>& extra_seed) {
  require_single_rooted(m);
  FormulaSet subs;
  collect_subformulas(f, subs);
  FormulaSet checks = subs;
  for (const auto& g : subs) checks = set_add(checks, Formula::neg(g));

  std::vector<SentenceId> ids;
  ids.reserve(checks.size());
  for (const auto& g : checks) ids.push_back(translate(setup.u, setup.star, g));

  std::vector<SentenceId> seed = setup.seed;
  seed.insert(seed.end(), extra_seed.begin(), extra_seed.end());
  FixedPoint fp = lfp(setup.u, setup.tag, seed);

  int max_atom = -1;
  for (int a : atoms_of(m)) max_atom = std::max(max_atom, a);
  for (int a : prop_set(std::vector<Formula>{f})) max_atom = std::max(max_atom, a);
  std::vector<TruthValue> zd(static_cast<std::size_t>(max_atom + 1),
                             TruthValue::n);
  std::vector<TruthValue> wd(static_cast<std::size_t>(max_atom + 1),
                             TruthValue::zero);
  for (int a = 0; a <= max_atom; ++a) {
    zd[static_cast<std::size_t>(a)] = value_at(m.z_val[0], a, TruthValue::n);
    wd[static_cast<std::size_t>(a)] = value_at(m.w_val[0], a, TruthValue::zero);
  }

  BridgeReport report;
  report.mode = setup.mode;
  report.tag = setup.tag;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    TruthValue vz = eval_single(checks[i], zd, scheme);
    TruthValue vw = eval_mixed_at_w(checks[i], zd, wd, scheme);
    BridgeCheck check{checks[i], true, true};
    check.z_ok = designated(vz) == fp.contains(ids[i]);
    check.w_ok = !designated(vw) || classical_sat(fp, ids[i]);
    report.ok = report.ok && check.z_ok && check.w_ok;
    report.checks.push_back(std::move(check));
  }
  return report;
}

BridgeReport verify_bridge(const MixedModel& m, Scheme scheme, const Formula& f,
                           BridgeMode mode) {
  BridgeSetup setup = prepare_bridge(m, scheme, mode);
  return run_bridge(setup, m, scheme, f);
}

namespace {

struct SentenceParser {
  SentenceUniverse& u;
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(const std::string& tok) {
    skip();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, pos);
  }

  int number() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected a numeral");
    return std::stoi(text.substr(start, pos - start));
  }

  SentenceId atom() {
    skip();
    if (pos >= text.size()) fail("unexpected end of sentence");
    char c = text[pos];
    if (c == 'T') fail("explicit T(...) codes are not allowed; use t<i> or lam");
    if (c == 't') {
      ++pos;
      return u.truth_teller(number());
    }
    if (text.compare(pos, 3, "lam") == 0) {
      pos += 3;
      return u.liar();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int m = number();
      skip();
      if (pos >= text.size() || text[pos] != '=') fail("expected '='");
      ++pos;
      int n = number();
      return u.eq(m, n);
    }
    fail("expected t<i>, lam or an equation");
  }

  SentenceId unary() {
    skip();
    if (eat("~")) return u.neg(unary());
    if (eat("(")) {
      SentenceId inner = expr();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    return atom();
  }

  SentenceId conjunction() {
    SentenceId lhs = unary();
    while (eat("/\\")) lhs = u.conj(lhs, unary());
    return lhs;
  }

  SentenceId disjunction() {
    SentenceId lhs = conjunction();
    while (eat("\\/")) lhs = u.disj(lhs, conjunction());
    return lhs;
  }

  SentenceId expr() {
    SentenceId lhs = disjunction();
    if (eat("->>")) return u.fc(lhs, expr());
    return lhs;
  }
};

}  // namespace

SentenceId parse_sentence(SentenceUniverse& u, const std::string& text) {
  SentenceParser parser{u, text};
  SentenceId id = parser.expr();
  parser.skip();
  if (parser.pos != text.size())
    throw ParseError("trailing input after sentence", parser.pos);
  return id;
}

std::vector<SentenceId> parse_seed(SentenceUniverse& u,
                                   const std::string& text) {
  std::vector<SentenceId> seed;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t a = token.find_first_not_of(" \t");
    std::size_t b = token.find_last_not_of(" \t");
    if (a != std::string::npos) {
      token = token.substr(a, b - a + 1);
      if (token.size() < 2 || (token[0] != '+' && token[0] != '-'))
        throw Error("seed literals look like +t0, -t1 or +lam: " + token);
      bool positive = token[0] == '+';
      std::string body = token.substr(1);
      SentenceId id;
      if (body == "lam") {
        id = u.liar();
      } else if (body.size() > 1 && body[0] == 't') {
        id = u.truth_teller(std::stoi(body.substr(1)));
      } else {
        throw Error("seed literals name truth-tellers or the liar: " + token);
      }
      seed.push_back(positive ? id : u.neg(id));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return seed;
}

}  // namespace kfmodal
