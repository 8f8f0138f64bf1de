#include "ordeq/oracle.hpp"

#include <algorithm>

namespace ordeq {

std::vector<ChainEndo> enumerate_endomorphisms(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_endomorphisms: n must be >= 1");
    std::vector<ChainEndo> out;
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    for (;;) {
        out.emplace_back(n, map);
        // next order-preserving tuple in lexicographic order
        int i = n - 1;
        while (i >= 0 && map[static_cast<std::size_t>(i)] == n - 1) --i;
        if (i < 0) break;
        int v = ++map[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) map[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

FiniteMonoid monoid_of_chain_endos(int n) {
    std::vector<ChainEndo> endos = enumerate_endomorphisms(n);
    const int k = static_cast<int>(endos.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(k),
                                        std::vector<int>(static_cast<std::size_t>(k)));
    int unit = -1;
    for (int i = 0; i < k; ++i) {
        if (endos[static_cast<std::size_t>(i)] == ChainEndo::identity(n)) unit = i;
        for (int j = 0; j < k; ++j) {
            ChainEndo composed =
                endos[static_cast<std::size_t>(i)].then(endos[static_cast<std::size_t>(j)]);
            auto it = std::lower_bound(endos.begin(), endos.end(), composed);
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<int>(it - endos.begin());
        }
    }
    return FiniteMonoid(k, unit, std::move(table));
}

OracleOutcome oracle_dlm_validity(const Statement& s, int n, std::uint64_t max_checks) {
    if (!s.inverse_free()) {
        throw std::invalid_argument("oracle_dlm_validity: statement contains inverses");
    }
    std::set<Var> var_set = variables_of(s);
    std::vector<Var> vars(var_set.begin(), var_set.end());
    std::vector<ChainEndo> endos = enumerate_endomorphisms(n);

    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (combos > max_checks / endos.size()) {
            throw BudgetError(SearchStats{});
        }
        combos *= endos.size();
    }

    std::vector<std::size_t> choice(vars.size(), 0);
    for (;;) {
        std::map<Var, ChainEndo> assignment;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            assignment.emplace(vars[i], endos[choice[i]]);
        }
        for (int p = 0; p < n; ++p) {
            int lhs = eval_in_end(assignment, s.lhs, p);
            int rhs = eval_in_end(assignment, s.rhs, p);
            bool holds = s.kind == Statement::Kind::Leq ? lhs <= rhs : lhs == rhs;
            if (!holds) {
                return OracleOutcome{false, EndWitness{std::move(assignment), p, lhs, rhs}};
            }
        }
        // advance the odometer
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == endos.size()) {
            choice[i] = 0;
            ++i;
        }
        if (i == choice.size()) break;
    }
    return OracleOutcome{true, std::nullopt};
}

namespace {

class OrderedMonoidEnumerator {
public:
    explicit OrderedMonoidEnumerator(int n) : n_(n) {}

    std::vector<OrderedMonoid> run() {
        // branch the identity position first
        for (int unit = 0; unit < n_; ++unit) {
            table_.assign(static_cast<std::size_t>(n_),
                          std::vector<int>(static_cast<std::size_t>(n_), -1));
            unit_ = unit;
            for (int a = 0; a < n_; ++a) {
                table_[static_cast<std::size_t>(unit)][static_cast<std::size_t>(a)] = a;
                table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(unit)] = a;
            }
            cells_.clear();
            for (int a = 0; a < n_; ++a) {
                for (int b = 0; b < n_; ++b) {
                    if (a != unit && b != unit) cells_.emplace_back(a, b);
                }
            }
            fill(0);
        }
        return std::move(out_);
    }

private:
    int at(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    bool monotone_ok(int a, int b, int v) const {
        for (int k = 0; k < n_; ++k) {
            int row = at(k, b);
            if (row >= 0 && ((k < a && row > v) || (k > a && row < v))) return false;
            int col = at(a, k);
            if (col >= 0 && ((k < b && col > v) || (k > b && col < v))) return false;
        }
        return true;
    }

    bool assoc_ok() const {
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                int ab = at(a, b);
                if (ab < 0) continue;
                for (int c = 0; c < n_; ++c) {
                    int bc = at(b, c);
                    if (bc < 0) continue;
                    int l = at(ab, c), r = at(a, bc);
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
            }
        }
        return true;
    }

    void fill(std::size_t k) {
        if (k == cells_.size()) {
            out_.push_back(OrderedMonoid{n_, unit_, table_});
            return;
        }
        auto [a, b] = cells_[k];
        for (int v = 0; v < n_; ++v) {
            if (!monotone_ok(a, b, v)) continue;
            table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
            if (assoc_ok()) fill(k + 1);
            table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
        }
    }

    int n_;
    int unit_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<OrderedMonoid> out_;
};

int eval_in_ordered_monoid(const OrderedMonoid& m, const std::map<Var, int>& assignment,
                           const LTerm& t) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return m.unit;
        case LTerm::Kind::Variable:
            return assignment.at(t.var());
        case LTerm::Kind::Inverse:
            throw std::invalid_argument("ordered monoid evaluation: term contains an inverse");
        case LTerm::Kind::Product:
            return m.mul(eval_in_ordered_monoid(m, assignment, t.child(0)),
                         eval_in_ordered_monoid(m, assignment, t.child(1)));
        case LTerm::Kind::Meet:
            return std::min(eval_in_ordered_monoid(m, assignment, t.child(0)),
                            eval_in_ordered_monoid(m, assignment, t.child(1)));
        case LTerm::Kind::Join:
            return std::max(eval_in_ordered_monoid(m, assignment, t.child(0)),
                            eval_in_ordered_monoid(m, assignment, t.child(1)));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<OrderedMonoid> enumerate_ordered_monoids(int n) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("enumerate_ordered_monoids: supported sizes are 1..4");
    }
    return OrderedMonoidEnumerator(n).run();
}

bool ordered_monoid_satisfies(const OrderedMonoid& m, const Statement& s) {
    std::set<Var> var_set = variables_of(s);
    std::vector<Var> vars(var_set.begin(), var_set.end());
    std::vector<int> choice(vars.size(), 0);
    for (;;) {
        std::map<Var, int> assignment;
        for (std::size_t i = 0; i < vars.size(); ++i) assignment.emplace(vars[i], choice[i]);
        int lhs = eval_in_ordered_monoid(m, assignment, s.lhs);
        int rhs = eval_in_ordered_monoid(m, assignment, s.rhs);
        bool holds = s.kind == Statement::Kind::Leq ? lhs <= rhs : lhs == rhs;
        if (!holds) return false;
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == m.size) {
            choice[i] = 0;
            ++i;
        }
        if (i == choice.size()) break;
    }
    return true;
}

}  // namespace ordeq
