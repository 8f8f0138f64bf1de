#pragma once

// Rewriting statements into the basic shapes the decision procedures
// consume: conjunctions of basic inequalities  /\ t_i <= \/ s_j  over
// words, and meets of joins of group words.

#include <stdexcept>
#include <vector>

#include "ordeq/terms.hpp"

namespace ordeq {

// /\ meets <= \/ joins over monoid words. Both sides are nonempty,
// shortlex-sorted and deduplicated.
struct BasicIneq {
    std::vector<MonWord> meets;
    std::vector<MonWord> joins;
    bool operator==(const BasicIneq&) const = default;
};

// Group-mode variant; all words freely reduced.
struct GrpBasicIneq {
    std::vector<GrpWord> meets;
    std::vector<GrpWord> joins;
    bool operator==(const GrpBasicIneq&) const = default;
};

// Distribution can blow up exponentially; past the cap we fail loudly
// rather than truncate.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NormalizeLimits {
    std::size_t max_words = 1'000'000;
};

// The statement holds in DLM iff every returned inequality does.
// pre: s.inverse_free()
std::vector<BasicIneq> to_basic_inequalities(const Statement& s, const NormalizeLimits& limits = {});

// Group mode: inverses are pushed to the leaves via (ab)^-1 = b^-1 a^-1,
// (a \/ b)^-1 = a^-1 /\ b^-1 and (a /\ b)^-1 = a^-1 \/ b^-1.
std::vector<GrpBasicIneq> to_basic_inequalities_group(const Statement& s,
                                                      const NormalizeLimits& limits = {});

// Join sets u_1..u_k with t equivalent in LG to /\_i \/ u_i.
std::vector<std::vector<GrpWord>> group_normal_meet_of_joins(const LTerm& t,
                                                             const NormalizeLimits& limits = {});

// Rewrite to the group signature with Inverse applied to variables only.
LTerm push_inverses_to_leaves(const LTerm& t);

Statement basic_to_statement(const BasicIneq& b);

}  // namespace ordeq
