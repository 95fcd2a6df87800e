#include "kfmodal/json_io.hpp"

#include <exception>

#include "json.hpp"

namespace kfmodal {

namespace {

using Json = nlohmann::ordered_json;

std::string atom_name(int slot) { return "p" + std::to_string(slot); }

Json value_map_json(const std::map<int, TruthValue>& val, bool classical) {
  Json out = Json::object();
  for (const auto& [atom, v] : val) {
    if (classical)
      out[atom_name(atom)] = v == TruthValue::one ? 1 : 0;
    else
      out[atom_name(atom)] = to_string(v);
  }
  return out;
}

Json derivation_tree(const Derivation& d) {
  Json node = Json::object();
  Json ant = Json::array(), suc = Json::array();
  for (const Formula& f : d.sequent.ant()) ant.push_back(print(f));
  for (const Formula& f : d.sequent.suc()) suc.push_back(print(f));
  node["sequent"] = Json{{"ant", ant}, {"suc", suc}};
  node["rule"] = d.rule;
  Json side = Json::object();
  if (!d.principal.empty()) {
    Json principal = Json::array();
    for (const Formula& f : d.principal) principal.push_back(print(f));
    side["principal"] = principal;
  }
  node["side"] = side;
  Json children = Json::array();
  for (const Derivation& child : d.children)
    children.push_back(derivation_tree(child));
  node["children"] = children;
  return node;
}

Derivation derivation_of(const Json& j) {
  Derivation d;
  std::vector<Formula> ant, suc;
  for (const auto& s : j.at("sequent").at("ant"))
    ant.push_back(parse(s.get<std::string>(), Dialect::fc));
  for (const auto& s : j.at("sequent").at("suc"))
    suc.push_back(parse(s.get<std::string>(), Dialect::fc));
  d.sequent = Sequent(std::move(ant), std::move(suc));
  d.rule = j.at("rule").get<std::string>();
  if (j.contains("side") && j.at("side").contains("principal"))
    for (const auto& s : j.at("side").at("principal"))
      d.principal.push_back(parse(s.get<std::string>(), Dialect::fc));
  if (j.contains("children"))
    for (const auto& child : j.at("children"))
      d.children.push_back(derivation_of(child));
  return d;
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string truth_table_json(const TruthTable& t) {
  Json out;
  Json atoms = Json::array();
  for (int a : t.atoms) atoms.push_back(atom_name(a));
  out["atoms"] = atoms;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json v = Json::object();
    for (std::size_t i = 0; i < t.atoms.size(); ++i)
      v[atom_name(t.atoms[i])] = to_string(row.v[i]);
    rows.push_back(Json{{"v", v}, {"value", to_string(row.value)}});
  }
  out["rows"] = rows;
  return out.dump();
}

std::string countermodel_json(const MixedModel& m, Scheme s,
                              const std::string& fails_at) {
  Json out;
  out["w"] = value_map_json(m.w_val.at(0), true);
  out["z"] = value_map_json(m.z_val.at(0), false);
  out["scheme"] = to_string(s);
  out["faithful"] = is_faithful(m);
  out["failsAt"] = fails_at;
  return out.dump();
}

std::string consequence_json(const ConsequenceResult& r) {
  Json out;
  out["holds"] = r.holds;
  if (!r.holds) {
    Json atoms = Json::array();
    for (int a : r.atoms) atoms.push_back(atom_name(a));
    out["atoms"] = atoms;
    Json witness = Json::object();
    for (std::size_t i = 0; i < r.atoms.size(); ++i)
      witness[atom_name(r.atoms[i])] = to_string(r.witness[i]);
    out["witness"] = witness;
  }
  return out.dump();
}

std::string derivation_json(const Derivation& d) {
  return derivation_tree(d).dump();
}

Derivation derivation_from_json(const std::string& text) {
  Json j = parse_json(text, "derivation");
  try {
    return derivation_of(j);
  } catch (const Json::exception& e) {
    throw Error(std::string("derivation: ") + e.what());
  }
}

std::string universe_json(const SentenceUniverse& u, const FixedPoint& fp,
                          JumpTag tag) {
  Json out;
  Json sentences = Json::array();
  for (SentenceId id = 0; id < static_cast<SentenceId>(u.size()); ++id)
    sentences.push_back(Json{{"id", id}, {"form", u.form_string(id)}});
  out["sentences"] = sentences;
  Json members = Json::array();
  for (SentenceId id : fp.members()) members.push_back(id);
  out["S"] = members;
  out["jump"] = to_string(tag);
  out["consistent"] = fp.consistent;
  return out.dump();
}

std::string plain_model_json(const PlainModel& m) {
  Json out;
  out["worlds"] = m.num_worlds();
  Json succ = Json::array();
  for (const auto& kids : m.successors) {
    Json row = Json::array();
    for (int k : kids) row.push_back(k);
    succ.push_back(row);
  }
  out["successors"] = succ;
  Json val = Json::array();
  for (const auto& v : m.val) val.push_back(value_map_json(v, false));
  out["val"] = val;
  if (!m.complete_polarity.empty()) {
    Json pol = Json::array();
    for (bool b : m.complete_polarity) pol.push_back(b);
    out["polarity"] = pol;
  }
  return out.dump();
}

std::string lemma_report_json(const LemmaReport& r) {
  Json out;
  out["name"] = r.name;
  out["ok"] = r.ok;
  out["checks"] = r.checks;
  Json failures = Json::array();
  for (const std::string& f : r.failures) failures.push_back(f);
  out["failures"] = failures;
  out["summary"] = r.summary;
  return out.dump();
}

Realization realization_from_json(SentenceUniverse& u,
                                  const std::string& text) {
  Json j = parse_json(text, "realization");
  if (!j.is_object())
    throw Error("realization: expected an object of atom bindings");
  Realization star;
  for (const auto& [key, value] : j.items()) {
    if (key.size() < 2 || key[0] != 'p' ||
        key.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error("realization: bad atom name '" + key +
                       "' (expected p0, p1, ...)");
    int slot = std::stoi(key.substr(1));
    star.map[slot] = parse_sentence(u, value.get<std::string>());
  }
  return star;
}

}  // namespace kfmodal
