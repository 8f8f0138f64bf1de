#include "ordeq/preorder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ordeq {

PairSet PairSet::from_basic(const BasicIneq& b) {
    std::vector<std::pair<MonWord, MonWord>> pairs;
    pairs.reserve(b.meets.size() * b.joins.size());
    for (const MonWord& s : b.joins) {
        for (const MonWord& t : b.meets) pairs.emplace_back(s, t);
    }
    return from_pairs(std::move(pairs));
}

PairSet PairSet::from_pairs(std::vector<std::pair<MonWord, MonWord>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::set<Var> vars;
    for (const auto& [s, t] : pairs) {
        vars.insert(s.begin(), s.end());
        vars.insert(t.begin(), t.end());
    }
    PairSet out;
    out.pairs = std::move(pairs);
    out.alphabet.assign(vars.begin(), vars.end());
    return out;
}

SubtermSet SubtermSet::initial_subterms(const PairSet& s) {
    std::set<MonWord> prefixes;
    for (const auto& [a, b] : s.pairs) {
        for (const MonWord* w : {&a, &b}) {
            for (std::size_t i = 0; i <= w->size(); ++i) {
                prefixes.emplace(w->begin(), w->begin() + i);
            }
        }
    }
    prefixes.insert(MonWord{});
    SubtermSet out;
    out.words_.assign(prefixes.begin(), prefixes.end());
    std::sort(out.words_.begin(), out.words_.end(),
              [](const MonWord& a, const MonWord& b) { return shortlex_less(a, b); });
    out.build_index();
    return out;
}

SubtermSet SubtermSet::from_words(std::vector<MonWord> words) {
    std::sort(words.begin(), words.end(),
              [](const MonWord& a, const MonWord& b) { return shortlex_less(a, b); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    SubtermSet out;
    out.words_ = std::move(words);
    out.build_index();
    if (out.index_.find(MonWord{}) == out.index_.end()) {
        throw std::invalid_argument("universe must contain the empty word e");
    }
    for (const MonWord& w : out.words_) {
        if (w.empty()) continue;
        MonWord prefix(w.begin(), w.end() - 1);
        if (out.index_.find(prefix) == out.index_.end()) {
            throw std::invalid_argument("universe is not prefix-closed: missing '" +
                                        word_to_string(prefix) + "'");
        }
    }
    return out;
}

void SubtermSet::build_index() {
    index_.clear();
    std::set<Var> vars;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        index_.emplace(words_[i], i);
        vars.insert(words_[i].begin(), words_[i].end());
    }
    alphabet_.assign(vars.begin(), vars.end());
}

std::optional<std::size_t> SubtermSet::index_of(const MonWord& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> SubtermSet::append(std::size_t i, const Var& x) const {
    MonWord w = words_[i];
    w.push_back(x);
    return index_of(w);
}

bool TriMatrix::fully_determined() const {
    return std::none_of(cells_.begin(), cells_.end(),
                        [](Tri t) { return t == Tri::Unknown; });
}

std::vector<std::vector<std::size_t>> PreorderRel::classes_ascending() const {
    const std::size_t n = universe.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < n; ++j) {
            if (equivalent(i, j)) {
                cls.push_back(j);
                seen[j] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [this](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  return strictly_less(a.front(), b.front());
              });
    return classes;
}

}  // namespace ordeq
