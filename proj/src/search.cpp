#include "ordeq/search.hpp"

#include <chrono>

namespace ordeq {

namespace {

// Propagation rules, applied to a fixpoint after every assignment:
//
//   reflexivity    le[i][i] = T
//   totality       le[i][j] = F  =>  le[j][i] = T
//   antisymmetry   le[i][j] = T, i != j  =>  le[j][i] = F      (if enabled)
//   transitivity   le[i][j] = T, le[j][k] = T  =>  le[i][k] = T
//                  le[i][j] = T, le[i][k] = F  =>  le[j][k] = F
//                  le[j][k] = T, le[i][k] = F  =>  le[i][j] = F
//   invariance     le[u][v] = T  =>  le[m(u)][m(v)] = T
//                  le[m(u)][m(v)] = F  =>  le[u][v] = F
//   strictness     le[u][v] = T, le[v][u] = F  =>  le[m(v)][m(u)] = F
//
// A conflict (setting a determined cell to the opposite value) aborts the
// branch. A fully determined conflict-free matrix therefore satisfies
// every rule as an invariant.
class Solver {
public:
    Solver(const OrderSearchProblem& p, const SearchBudget& budget)
        : p_(p),
          n_(p.n),
          budget_(budget),
          cells_(p.n * p.n, Tri::Unknown),
          det_count_(p.n, 0),
          start_(std::chrono::steady_clock::now()) {
        preimages_.resize(p_.successors.size());
        for (std::size_t m = 0; m < p_.successors.size(); ++m) {
            preimages_[m].resize(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                std::int32_t img = p_.successors[m][i];
                if (img >= 0) preimages_[m][static_cast<std::size_t>(img)].push_back(i);
            }
        }
    }

    OrderSearchResult run() {
        OrderSearchResult out;
        if (!seed()) {
            out.status = SearchStatus::Exhausted;
            finish(out);
            return out;
        }
        out.status = solve();
        if (out.status == SearchStatus::Found) {
            TriMatrix rel(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) rel.set(i, j, at(i, j));
            }
            out.relation = std::move(rel);
        }
        finish(out);
        return out;
    }

private:
    Tri at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    bool set(std::size_t i, std::size_t j, Tri v) {
        Tri cur = at(i, j);
        if (cur == v) return true;
        if (cur != Tri::Unknown) return false;  // conflict
        cells_[i * n_ + j] = v;
        trail_.push_back(static_cast<std::uint32_t>(i * n_ + j));
        ++det_count_[i];
        ++det_count_[j];
        ++stats_.propagations;
        queue_.push_back(static_cast<std::uint32_t>(i * n_ + j));
        return true;
    }

    bool propagate() {
        while (!queue_.empty()) {
            std::uint32_t cell = queue_.back();
            queue_.pop_back();
            std::size_t a = cell / n_, b = cell % n_;
            if (at(a, b) == Tri::True ? !on_true(a, b) : !on_false(a, b)) {
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    bool on_true(std::size_t a, std::size_t b) {
        if (p_.antisymmetric && a != b && !set(b, a, Tri::False)) return false;
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(b, k) == Tri::True && !set(a, k, Tri::True)) return false;
            if (at(k, a) == Tri::True && !set(k, b, Tri::True)) return false;
            if (at(a, k) == Tri::False && !set(b, k, Tri::False)) return false;
            if (at(k, b) == Tri::False && !set(k, a, Tri::False)) return false;
        }
        for (const auto& succ : p_.successors) {
            std::int32_t ma = succ[a], mb = succ[b];
            if (ma >= 0 && mb >= 0 &&
                !set(static_cast<std::size_t>(ma), static_cast<std::size_t>(mb), Tri::True)) {
                return false;
            }
        }
        if (p_.strict_invariance && at(b, a) == Tri::False) {
            for (const auto& succ : p_.successors) {
                std::int32_t ma = succ[a], mb = succ[b];
                if (ma >= 0 && mb >= 0 &&
                    !set(static_cast<std::size_t>(mb), static_cast<std::size_t>(ma), Tri::False)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool on_false(std::size_t a, std::size_t b) {
        if (!set(b, a, Tri::True)) return false;
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(a, k) == Tri::True && !set(k, b, Tri::False)) return false;
            if (at(k, b) == Tri::True && !set(a, k, Tri::False)) return false;
        }
        for (std::size_t m = 0; m < p_.successors.size(); ++m) {
            for (std::size_t pa : preimages_[m][a]) {
                for (std::size_t pb : preimages_[m][b]) {
                    if (!set(pa, pb, Tri::False)) return false;
                }
            }
        }
        if (p_.strict_invariance && at(b, a) == Tri::True) {
            // b < a strictly, so m(a) is not below m(b)
            for (const auto& succ : p_.successors) {
                std::int32_t ma = succ[a], mb = succ[b];
                if (ma >= 0 && mb >= 0 &&
                    !set(static_cast<std::size_t>(ma), static_cast<std::size_t>(mb), Tri::False)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool seed() {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!set(i, i, Tri::True)) return false;
        }
        for (const auto& [a, b] : p_.strict_pairs) {
            if (!set(a, b, Tri::True)) return false;
            if (!set(b, a, Tri::False)) return false;
        }
        return propagate();
    }

    // Most-constrained unknown cell: maximize determined entries touching
    // the two indices; ties broken by cell index.
    std::optional<std::uint32_t> pick() const {
        std::optional<std::uint32_t> best;
        std::size_t best_score = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (at(i, j) != Tri::Unknown) continue;
                std::size_t score = det_count_[i] + det_count_[j] + 1;
                if (score > best_score) {
                    best_score = score;
                    best = static_cast<std::uint32_t>(i * n_ + j);
                }
            }
        }
        return best;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            std::uint32_t cell = trail_.back();
            trail_.pop_back();
            cells_[cell] = Tri::Unknown;
            --det_count_[cell / n_];
            --det_count_[cell % n_];
        }
    }

    bool out_of_time() {
        if ((stats_.nodes & 0xff) != 0) return false;
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        return elapsed.count() > budget_.max_seconds;
    }

    SearchStatus solve() {
        struct Frame {
            std::uint32_t cell;
            std::size_t mark;
            bool tried_false;
        };
        std::vector<Frame> stack;
        for (;;) {
            std::optional<std::uint32_t> cell = pick();
            if (!cell) return SearchStatus::Found;
            ++stats_.nodes;
            if (stats_.nodes > budget_.max_nodes || out_of_time()) {
                return SearchStatus::BudgetExceeded;
            }
            stack.push_back(Frame{*cell, trail_.size(), false});
            Tri value = Tri::True;
            for (;;) {
                Frame& f = stack.back();
                if (set(f.cell / n_, f.cell % n_, value) && propagate()) {
                    break;  // descend
                }
                // conflict: try the other value here, else backtrack
                undo_to(f.mark);
                while (stack.back().tried_false) {
                    stack.pop_back();
                    if (stack.empty()) return SearchStatus::Exhausted;
                    undo_to(stack.back().mark);
                }
                stack.back().tried_false = true;
                value = Tri::False;
            }
        }
    }

    void finish(OrderSearchResult& out) {
        stats_.universe = n_;
        out.stats = stats_;
    }

    const OrderSearchProblem& p_;
    std::size_t n_;
    SearchBudget budget_;
    std::vector<Tri> cells_;
    std::vector<std::size_t> det_count_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::vector<std::vector<std::size_t>>> preimages_;  // [map][img] -> sources
    SearchStats stats_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

OrderSearchResult search_total_order(const OrderSearchProblem& problem,
                                     const SearchBudget& budget) {
    Solver solver(problem, budget);
    return solver.run();
}

}  // namespace ordeq
