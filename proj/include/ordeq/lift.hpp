#pragma once

// Lifting a total right-X-invariant preorder to a total strictly
// right-X-invariant one, and mechanical verification of relation
// properties.

#include <string>

#include "ordeq/preorder.hpp"

namespace ordeq {

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The lifted relation: with u = x_k···x_1 and v = y_l···y_1 (prefixes drop
// letters from the right end, becoming e past the word),
//
//   u ~ v      iff u <= v and v <= u in the input
//   u below v  iff for some j <= l+1, all shorter prefixes agree up to ~
//               and either the j-th prefixes are strictly ordered or
//               j = k+2 (u ran out first)
//   u == v     iff equal length and all prefixes are ~
//
// and the result orders u before v iff u is below v or u == v. The input
// strict order is contained in the output strict order.
//
// pre: p fully determined, total, reflexive, transitive and
// right-X-invariant; throws PreconditionError otherwise.
PreorderRel lift_preorder(const PreorderRel& p);

struct Violation {
    std::string property;  // "reflexivity", "totality", "transitivity",
                           // "invariance", "strict-invariance", "pair-constraint",
                           // "determined"
    std::string detail;
};

// Checks every property of a (strictly) right-X-invariant total preorder
// satisfying the pair constraints; empty report means all pass. Pass an
// empty PairSet when there are no pair constraints.
std::vector<Violation> verify_preorder(const PreorderRel& p, bool strict, const PairSet& s);

}  // namespace ordeq
