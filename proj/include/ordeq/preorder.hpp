#pragma once

// Word pair sets, prefix-closed subterm universes, and three-valued
// relation matrices for the preorder search.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "ordeq/normalform.hpp"

namespace ordeq {

// Ordered pairs <s, t> each demanding s strictly below t, with the
// variables they mention. Built from /\ meets <= \/ joins as
// { <s, t> : s in joins, t in meets }.
struct PairSet {
    std::vector<std::pair<MonWord, MonWord>> pairs;
    std::vector<Var> alphabet;

    static PairSet from_basic(const BasicIneq& b);
    static PairSet from_pairs(std::vector<std::pair<MonWord, MonWord>> pairs);
};

// All prefixes of the words of a pair set, including the empty word,
// indexed in shortlex order.
class SubtermSet {
public:
    static SubtermSet initial_subterms(const PairSet& s);

    // Explicit universe (input files, tests). Must contain e and be
    // closed under prefixes.
    static SubtermSet from_words(std::vector<MonWord> words);

    std::size_t size() const { return words_.size(); }
    const MonWord& word(std::size_t i) const { return words_[i]; }
    const std::vector<MonWord>& words() const { return words_; }
    const std::vector<Var>& alphabet() const { return alphabet_; }

    std::optional<std::size_t> index_of(const MonWord& w) const;
    // Index of word(i)·x when that word is in the universe.
    std::optional<std::size_t> append(std::size_t i, const Var& x) const;

private:
    std::vector<MonWord> words_;
    std::vector<Var> alphabet_;
    std::map<MonWord, std::size_t> index_;
    void build_index();
};

enum class Tri : std::uint8_t { Unknown, True, False };

class TriMatrix {
public:
    TriMatrix() = default;
    explicit TriMatrix(std::size_t n) : n_(n), cells_(n * n, Tri::Unknown) {}

    std::size_t dim() const { return n_; }
    Tri at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Tri v) { cells_[i * n_ + j] = v; }
    bool fully_determined() const;
    bool operator==(const TriMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Tri> cells_;
};

// A relation over a subterm universe; le.at(i,j) == True means
// word(i) is below word(j).
struct PreorderRel {
    SubtermSet universe;
    TriMatrix le;

    bool leq(std::size_t i, std::size_t j) const { return le.at(i, j) == Tri::True; }
    bool strictly_less(std::size_t i, std::size_t j) const {
        return leq(i, j) && !leq(j, i);
    }
    bool equivalent(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }

    // Equivalence classes listed bottom to top; indices within a class ascend.
    // pre: le fully determined and a total preorder.
    std::vector<std::vector<std::size_t>> classes_ascending() const;
};

}  // namespace ordeq
