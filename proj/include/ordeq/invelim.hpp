#pragma once

// Effective elimination of inverses from l-group statements, and the
// end-to-end LG decision pipeline (eliminate, then decide in DLM).

#include "ordeq/decide.hpp"

namespace ordeq {

// t0 <= t1 \/ ... \/ tn with t0 inverse-free, carrying the fresh-variable
// supply used while rewriting.
struct JoinForm {
    MonWord t0;
    std::vector<GrpWord> joins;
    FreshVarSupply fresh;
};

// One density rewrite: with joins[target] = u·r^-1·v where r^-1 is the
// leftmost inverted letter and y fresh,
//
//   t0 <= ... \/ u r^-1 v \/ ...
//
// becomes
//
//   r y t0 <= { r y tj : j != target } \/ r y u y t0 \/ v.
//
// The total inverse count drops by exactly one and LG-validity is
// preserved in both directions. Throws std::invalid_argument when the
// target contains no inverse.
JoinForm density_step(JoinForm jf, std::size_t target);

// A finite set of inverse-free statements, valid in DLM iff s is valid in
// LG. Inverse-free input is returned unchanged.
std::vector<Statement> eliminate_inverses(const Statement& s, const NormalizeLimits& limits = {});

struct LgVerdict {
    std::vector<Statement> eliminated;
    std::optional<std::size_t> failing;  // index of the first invalid member
    Verdict verdict;
};

LgVerdict decide_lg(const Statement& s, const SearchBudget& budget = {},
                    const NormalizeLimits& limits = {});

}  // namespace ordeq
