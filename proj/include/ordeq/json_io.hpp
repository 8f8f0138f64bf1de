#pragma once

// JSON (de)serialization for certificates and input files.
//
// Countermodel schema:
//   {"kind": "end-chain" | "aut-q" | "integers",
//    "chain_size"?: int,
//    "assignment": {var: [ints] | {"breakpoints": [[num,den,num,den], ...]} | int},
//    "base_point": int | [num,den],
//    "lhs_value": int | [num,den],
//    "rhs_value": int | [num,den],
//    "inequality": text}
//
// Finite monoid: {"size": k, "unit": i, "table": [[...]]}
// Preorder file: {"universe": [word, ...], "le": [[0/1, ...], ...],
//                 "pairs"?: [[word, word], ...]}

#include <json.hpp>

#include <iosfwd>

#include "ordeq/models.hpp"
#include "ordeq/rightorder.hpp"

namespace ordeq {

nlohmann::json countermodel_to_json(const Countermodel& cm);

nlohmann::json finite_monoid_to_json(const FiniteMonoid& m);
FiniteMonoid finite_monoid_from_json(const nlohmann::json& j);

struct PreorderFile {
    PreorderRel rel;
    std::optional<PairSet> pairs;
};
PreorderFile preorder_from_json(const nlohmann::json& j);
nlohmann::json preorder_to_json(const PreorderRel& rel);

// One "word < word" constraint per line; '#' starts a comment.
OrderQuery constraints_from_text(std::istream& in);

}  // namespace ordeq
