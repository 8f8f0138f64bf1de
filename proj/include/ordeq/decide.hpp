#pragma once

// The decision procedure for inverse-free equations: valid in DLM iff no
// total right-X-invariant preorder on the initial subterms puts every
// join word strictly below every meet word; valid in LG iff no such
// strictly right-X-invariant preorder exists. A found preorder is turned
// into a countermodel certificate and re-verified before it is returned.

#include "ordeq/models.hpp"
#include "ordeq/search.hpp"

namespace ordeq {

// Search budget exhausted: neither a relation nor exhaustion was
// established. Distinct from any verdict.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(SearchStats stats)
        : std::runtime_error("search budget exceeded"), stats_(stats) {}
    const SearchStats& stats() const { return stats_; }

private:
    SearchStats stats_;
};

struct PreorderSearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<PreorderRel> relation;
    SearchStats stats;
};

// Complete search for a total (strictly) right-X-invariant preorder on
// Sub(S) with s strictly below t for every <s, t> in S.
PreorderSearchResult search_preorder(const PairSet& s, bool strict,
                                     const SearchBudget& budget = {});

struct InvalidCertificate {
    BasicIneq failed;
    Countermodel model;
};

class Verdict {
public:
    static Verdict valid(SearchStats stats) { return Verdict(std::nullopt, stats); }
    static Verdict invalid(InvalidCertificate cert, SearchStats stats) {
        return Verdict(std::move(cert), stats);
    }

    bool is_valid() const { return !certificate_.has_value(); }
    const InvalidCertificate& certificate() const { return certificate_.value(); }
    const SearchStats& stats() const { return stats_; }

private:
    Verdict(std::optional<InvalidCertificate> cert, SearchStats stats)
        : certificate_(std::move(cert)), stats_(stats) {}
    std::optional<InvalidCertificate> certificate_;
    SearchStats stats_;
};

// pre: s.inverse_free(). Invalid verdicts carry an end-chain certificate.
Verdict decide_dlm(const Statement& s, const SearchBudget& budget = {},
                   const NormalizeLimits& limits = {});

// pre: s.inverse_free(). Invalid verdicts carry a PL-automorphism
// certificate over Q.
Verdict decide_lg_inverse_free(const Statement& s, const SearchBudget& budget = {},
                               const NormalizeLimits& limits = {});

}  // namespace ordeq
