#ifndef KFMODAL_JSON_IO_HPP
#define KFMODAL_JSON_IO_HPP

#include <string>

#include "kfmodal/calculus.hpp"
#include "kfmodal/kftruth.hpp"
#include "kfmodal/lemmas.hpp"
#include "kfmodal/manyvalued.hpp"
#include "kfmodal/mixed.hpp"

namespace kfmodal {

// {"atoms":["p0"],"rows":[{"v":{"p0":"n"},"value":"b"}]}
std::string truth_table_json(const TruthTable& t);

// {"w":{"p0":1},"z":{"p0":"b"},"scheme":"fde","faithful":true,"failsAt":"w"}
std::string countermodel_json(const MixedModel& m, Scheme s,
                              const std::string& fails_at);

// {"holds":false,"atoms":["p0"],"witness":{"p0":"n"}}
std::string consequence_json(const ConsequenceResult& r);

// {"sequent":{"ant":[...],"suc":[...]},"rule":"∧r","side":{...},
//  "children":[...]}
std::string derivation_json(const Derivation& d);
Derivation derivation_from_json(const std::string& text);

// {"sentences":[{"id":3,"form":"not T(5)"}],"S":[0,2,3],"jump":"sk",
//  "consistent":true}
std::string universe_json(const SentenceUniverse& u, const FixedPoint& fp,
                          JumpTag tag);

// {"worlds":2,"successors":[[1],[]],"val":[{"p0":"n"},{"p0":"1"}]}
std::string plain_model_json(const PlainModel& m);

// {"name":"liar","ok":true,"checks":39,"failures":[],"summary":"..."}
std::string lemma_report_json(const LemmaReport& r);

// Realization file: {"p0":"t0 /\\ ~t1", ...}; values use the sentence
// surface syntax and extend the universe.
Realization realization_from_json(SentenceUniverse& u, const std::string& text);

}  // namespace kfmodal

#endif
