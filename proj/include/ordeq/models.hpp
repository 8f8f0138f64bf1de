#pragma once

// Countermodel certificates and their evaluators: order-endomorphisms of
// finite chains, piecewise-linear order-automorphisms of Q with exact
// rational arithmetic, and the integers under (min, max, +, 0).
//
// Words evaluate by left-to-right application: (p) applied to x*y is
// ((p)f_x)f_y. Meet and join are pointwise min and max.

#include <gmpxx.h>

#include <map>
#include <variant>

#include "ordeq/preorder.hpp"

namespace ordeq {

using Rat = mpq_class;

// An order-preserving self-map of the chain {0, ..., size-1}.
class ChainEndo {
public:
    ChainEndo(int chain_size, std::vector<int> map);
    static ChainEndo identity(int chain_size);

    int chain_size() const { return static_cast<int>(map_.size()); }
    int apply(int p) const;
    ChainEndo then(const ChainEndo& g) const;  // this first, then g
    const std::vector<int>& map() const { return map_; }
    bool operator==(const ChainEndo&) const = default;
    auto operator<=>(const ChainEndo&) const = default;

private:
    std::vector<int> map_;
};

// A strictly increasing piecewise-linear bijection of Q: linear between
// breakpoints, slope 1 outside them. Closed under composition, inverse,
// and pointwise min/max. The breakpoint list is canonical (no point that
// lies on the line through its neighbours), so equality of the lists is
// equality of the functions.
class PLBijection {
public:
    PLBijection() = default;  // identity
    static PLBijection identity() { return PLBijection(); }
    static PLBijection shift(const Rat& offset);
    // Interpolate through strictly increasing (x, y) pairs, slope-1 tails.
    static PLBijection through_points(std::vector<std::pair<Rat, Rat>> points);

    Rat apply(const Rat& q) const;
    PLBijection then(const PLBijection& g) const;  // this first, then g
    PLBijection inverse() const;
    friend PLBijection pointwise_min(const PLBijection& f, const PLBijection& g);
    friend PLBijection pointwise_max(const PLBijection& f, const PLBijection& g);

    const std::vector<std::pair<Rat, Rat>>& breakpoints() const { return points_; }
    bool is_identity() const { return points_.empty(); }
    bool operator==(const PLBijection& o) const { return points_ == o.points_; }

private:
    void canonicalize();
    std::vector<std::pair<Rat, Rat>> points_;
};

struct EndChainModel {
    int chain_size = 1;
    std::map<Var, ChainEndo> assignment;
    int base_point = 0;
};

struct AutQModel {
    std::map<Var, PLBijection> assignment;
    Rat base_point;
};

struct IntegersModel {
    std::map<Var, long long> assignment;
};

// A certificate that `inequality` fails: at the base point the meet side
// evaluates to lhs_value, the join side to rhs_value, and lhs > rhs.
struct Countermodel {
    std::variant<EndChainModel, AutQModel, IntegersModel> model;
    BasicIneq inequality;
    Rat lhs_value;
    Rat rhs_value;
};

// Term evaluators. End evaluation requires an inverse-free term.
int eval_in_end(const std::map<Var, ChainEndo>& assignment, const LTerm& t, int p);
Rat eval_in_aut_q(const std::map<Var, PLBijection>& assignment, const LTerm& t, const Rat& q);
long long eval_in_integers(const std::map<Var, long long>& assignment, const LTerm& t);

int eval_word_in_end(const std::map<Var, ChainEndo>& assignment, const MonWord& w, int p);
Rat eval_word_in_aut_q(const std::map<Var, PLBijection>& assignment, const MonWord& w, Rat q);

// Chain model from a verified non-strict preorder solution: one chain
// point per equivalence class, partial maps [u] -> [ux] totalized by
// "image of the greatest defined point below, else of the least defined
// point, else identity".
Countermodel build_end_countermodel(const PreorderRel& p, const PairSet& s, const BasicIneq& origin);

// PL model from a verified strict solution: classes sit at integer points
// and each partial injection [u] -> [ux] extends through its defined
// points with slope-1 tails.
Countermodel build_pl_countermodel(const PreorderRel& p, const PairSet& s, const BasicIneq& origin);

Countermodel build_integers_countermodel(const std::map<Var, long long>& assignment,
                                         const BasicIneq& origin);

// Independent re-evaluation of the certificate: recomputes both sides with
// the evaluators above and checks them against the claimed values and
// lhs > rhs.
bool reevaluate(const Countermodel& cm);

}  // namespace ordeq
