#include "ordeq/lift.hpp"

#include <algorithm>

namespace ordeq {

namespace {

// Prefix of w with its last (i-1) letters removed; e once i exceeds the
// length. Indexing follows the convention u = x_k···x_1 with x_k the
// first letter, so the i-th prefix is x_k···x_i.
MonWord prefix_drop(const MonWord& w, std::size_t i) {
    if (i > w.size()) return MonWord{};
    return MonWord(w.begin(), w.end() - static_cast<std::ptrdiff_t>(i - 1));
}

}  // namespace

PreorderRel lift_preorder(const PreorderRel& p) {
    {
        std::vector<Violation> report = verify_preorder(p, /*strict=*/false, PairSet{});
        if (!report.empty()) {
            throw PreconditionError("lift_preorder: input is not a total right-X-invariant preorder (" +
                                    report.front().property + ": " + report.front().detail + ")");
        }
    }

    const SubtermSet& uni = p.universe;
    const std::size_t n = uni.size();

    auto sim = [&](const MonWord& a, const MonWord& b) {
        std::size_t i = *uni.index_of(a), j = *uni.index_of(b);
        return p.leq(i, j) && p.leq(j, i);
    };
    auto strictly = [&](const MonWord& a, const MonWord& b) {
        std::size_t i = *uni.index_of(a), j = *uni.index_of(b);
        return p.leq(i, j) && !p.leq(j, i);
    };

    // u below v: scan j = 1 .. l+1, maintaining "all prefixes before j
    // agree up to ~".
    auto below = [&](const MonWord& u, const MonWord& v) {
        const std::size_t k = u.size(), l = v.size();
        for (std::size_t j = 1; j <= l + 1; ++j) {
            bool agree = true;
            for (std::size_t i = 1; i < j; ++i) {
                if (!sim(prefix_drop(u, i), prefix_drop(v, i))) {
                    agree = false;
                    break;
                }
            }
            if (!agree) break;  // longer j cannot recover agreement
            if (strictly(prefix_drop(u, j), prefix_drop(v, j)) || j == k + 2) return true;
        }
        return false;
    };

    auto congruent = [&](const MonWord& u, const MonWord& v) {
        if (u.size() != v.size()) return false;
        for (std::size_t i = 1; i <= u.size(); ++i) {
            if (!sim(prefix_drop(u, i), prefix_drop(v, i))) return false;
        }
        return true;
    };

    TriMatrix lifted(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool le = below(uni.word(a), uni.word(b)) || congruent(uni.word(a), uni.word(b));
            lifted.set(a, b, le ? Tri::True : Tri::False);
        }
    }
    return PreorderRel{uni, std::move(lifted)};
}

std::vector<Violation> verify_preorder(const PreorderRel& p, bool strict, const PairSet& s) {
    std::vector<Violation> out;
    const SubtermSet& uni = p.universe;
    const std::size_t n = uni.size();
    auto name = [&](std::size_t i) { return word_to_string(uni.word(i)); };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.le.at(i, j) == Tri::Unknown) {
                out.push_back({"determined", name(i) + " vs " + name(j) + " is undetermined"});
            }
        }
    }
    if (!out.empty()) return out;  // remaining checks need a determined matrix

    for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq(i, i)) out.push_back({"reflexivity", name(i) + " not below itself"});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!p.leq(i, j) && !p.leq(j, i)) {
                out.push_back({"totality", name(i) + " and " + name(j) + " are incomparable"});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.leq(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (p.leq(j, k) && !p.leq(i, k)) {
                    out.push_back({"transitivity", name(i) + " <= " + name(j) + " <= " + name(k) +
                                                       " but not " + name(i) + " <= " + name(k)});
                }
            }
        }
    }

    // invariance over the letters of the universe and of the pair set
    std::vector<Var> letters = uni.alphabet();
    for (const Var& x : s.alphabet) {
        if (std::find(letters.begin(), letters.end(), x) == letters.end()) letters.push_back(x);
    }
    for (const Var& x : letters) {
        for (std::size_t u = 0; u < n; ++u) {
            auto ux = uni.append(u, x);
            if (!ux) continue;
            for (std::size_t v = 0; v < n; ++v) {
                auto vx = uni.append(v, x);
                if (!vx) continue;
                if (p.leq(u, v) && !p.leq(*ux, *vx)) {
                    out.push_back({"invariance", name(u) + " <= " + name(v) + " but not " +
                                                     name(*ux) + " <= " + name(*vx)});
                }
                if (strict && p.strictly_less(u, v) && !p.strictly_less(*ux, *vx)) {
                    out.push_back({"strict-invariance", name(u) + " < " + name(v) + " but " +
                                                            name(*ux) + " ~ " + name(*vx)});
                }
            }
        }
    }

    for (const auto& [sw, tw] : s.pairs) {
        auto si = uni.index_of(sw), ti = uni.index_of(tw);
        if (!si || !ti) {
            out.push_back({"pair-constraint", "pair <" + word_to_string(sw) + ", " +
                                                  word_to_string(tw) + "> not in the universe"});
            continue;
        }
        if (!p.strictly_less(*si, *ti)) {
            out.push_back({"pair-constraint",
                           word_to_string(sw) + " is not strictly below " + word_to_string(tw)});
        }
    }
    return out;
}

}  // namespace ordeq
