#include "ordeq/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordeq {

ChainEndo::ChainEndo(int chain_size, std::vector<int> map) : map_(std::move(map)) {
    if (chain_size < 1 || static_cast<int>(map_.size()) != chain_size) {
        throw std::invalid_argument("ChainEndo: map length must equal the chain size");
    }
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] < 0 || map_[i] >= chain_size) {
            throw std::invalid_argument("ChainEndo: image out of range");
        }
        if (i > 0 && map_[i] < map_[i - 1]) {
            throw std::invalid_argument("ChainEndo: map is not order-preserving");
        }
    }
}

ChainEndo ChainEndo::identity(int chain_size) {
    std::vector<int> map(static_cast<std::size_t>(chain_size));
    for (int i = 0; i < chain_size; ++i) map[static_cast<std::size_t>(i)] = i;
    return ChainEndo(chain_size, std::move(map));
}

int ChainEndo::apply(int p) const {
    if (p < 0 || p >= chain_size()) throw std::out_of_range("ChainEndo: point out of range");
    return map_[static_cast<std::size_t>(p)];
}

ChainEndo ChainEndo::then(const ChainEndo& g) const {
    if (chain_size() != g.chain_size()) {
        throw std::invalid_argument("ChainEndo: mismatched chain sizes");
    }
    std::vector<int> out(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) out[i] = g.apply(map_[i]);
    return ChainEndo(chain_size(), std::move(out));
}

PLBijection PLBijection::shift(const Rat& offset) {
    PLBijection f;
    if (offset != 0) f.points_ = {{Rat(0), offset}};
    return f;
}

PLBijection PLBijection::through_points(std::vector<std::pair<Rat, Rat>> points) {
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first <= points[i - 1].first || points[i].second <= points[i - 1].second) {
            throw std::invalid_argument("PLBijection: points must be strictly increasing");
        }
    }
    PLBijection f;
    f.points_ = std::move(points);
    f.canonicalize();
    return f;
}

void PLBijection::canonicalize() {
    // A breakpoint is redundant if removing it leaves the function
    // unchanged: interior points on the segment of their neighbours, and
    // end points on the slope-1 tail of their neighbour.
    bool changed = true;
    while (changed && !points_.empty()) {
        changed = false;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const auto& [x, y] = points_[i];
            bool redundant = false;
            if (points_.size() == 1) {
                redundant = (y == x);  // lies on the identity
            } else if (i == 0) {
                const auto& [x1, y1] = points_[1];
                redundant = (y1 - y == x1 - x);  // slope-1 up to the next point
            } else if (i + 1 == points_.size()) {
                const auto& [x0, y0] = points_[i - 1];
                redundant = (y - y0 == x - x0);
            } else {
                const auto& [x0, y0] = points_[i - 1];
                const auto& [x1, y1] = points_[i + 1];
                redundant = ((y - y0) * (x1 - x0) == (y1 - y0) * (x - x0));
            }
            if (redundant) {
                points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
}

Rat PLBijection::apply(const Rat& q) const {
    if (points_.empty()) return q;
    if (q <= points_.front().first) return points_.front().second + (q - points_.front().first);
    if (q >= points_.back().first) return points_.back().second + (q - points_.back().first);
    auto it = std::upper_bound(points_.begin(), points_.end(), q,
                               [](const Rat& v, const auto& pt) { return v < pt.first; });
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    return y0 + (q - x0) * (y1 - y0) / (x1 - x0);
}

PLBijection PLBijection::then(const PLBijection& g) const {
    // Candidate breakpoints: ours, plus preimages of g's under this map.
    std::vector<Rat> xs;
    xs.reserve(points_.size() + g.points_.size());
    for (const auto& [x, y] : points_) xs.push_back(x);
    PLBijection inv = inverse();
    for (const auto& [x, y] : g.points_) xs.push_back(inv.apply(x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    PLBijection out;
    out.points_.reserve(xs.size());
    for (const Rat& x : xs) out.points_.emplace_back(x, g.apply(apply(x)));
    out.canonicalize();
    return out;
}

PLBijection PLBijection::inverse() const {
    PLBijection out;
    out.points_.reserve(points_.size());
    for (const auto& [x, y] : points_) out.points_.emplace_back(y, x);
    // swapping keeps both coordinates strictly increasing; canonical form
    // is preserved because redundancy conditions are symmetric in x and y
    return out;
}

namespace {

PLBijection pointwise_combine(const PLBijection& f, const PLBijection& g, bool take_min) {
    std::vector<Rat> xs;
    for (const auto& [x, y] : f.breakpoints()) xs.push_back(x);
    for (const auto& [x, y] : g.breakpoints()) xs.push_back(x);
    if (xs.empty()) return f;  // both identity
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Between consecutive grid points both functions are linear, so the
    // only extra breakpoints are crossings inside a segment.
    std::vector<std::pair<Rat, Rat>> pts;
    auto value = [&](const Rat& x) {
        Rat fv = f.apply(x), gv = g.apply(x);
        return take_min ? std::min(fv, gv) : std::max(fv, gv);
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            const Rat& a = xs[i - 1];
            const Rat& b = xs[i];
            Rat fa = f.apply(a), fb = f.apply(b), ga = g.apply(a), gb = g.apply(b);
            Rat da = fa - ga, db = fb - gb;
            if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
                Rat cross = a + (b - a) * (-da) / (db - da);
                pts.emplace_back(cross, value(cross));
            }
        }
        pts.emplace_back(xs[i], value(xs[i]));
    }
    return PLBijection::through_points(std::move(pts));
}

}  // namespace

PLBijection pointwise_min(const PLBijection& f, const PLBijection& g) {
    return pointwise_combine(f, g, true);
}

PLBijection pointwise_max(const PLBijection& f, const PLBijection& g) {
    return pointwise_combine(f, g, false);
}

namespace {

template <typename V, typename Assignment>
const V& lookup(const Assignment& assignment, const Var& v) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
        throw std::invalid_argument("no assignment for variable '" + v.name() + "'");
    }
    return it->second;
}

}  // namespace

int eval_in_end(const std::map<Var, ChainEndo>& assignment, const LTerm& t, int p) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return p;
        case LTerm::Kind::Variable:
            return lookup<ChainEndo>(assignment, t.var()).apply(p);
        case LTerm::Kind::Inverse:
            throw std::invalid_argument("eval_in_end: term contains an inverse");
        case LTerm::Kind::Product:
            return eval_in_end(assignment, t.child(1), eval_in_end(assignment, t.child(0), p));
        case LTerm::Kind::Meet:
            return std::min(eval_in_end(assignment, t.child(0), p),
                            eval_in_end(assignment, t.child(1), p));
        case LTerm::Kind::Join:
            return std::max(eval_in_end(assignment, t.child(0), p),
                            eval_in_end(assignment, t.child(1), p));
    }
    throw std::logic_error("unreachable");
}

namespace {

// Evaluating an l-group term at a point needs the function value of
// subterms only at single points, except under Inverse, where the whole
// function is required. Building the PLBijection of the subterm and
// inverting it keeps everything exact.
PLBijection pl_function_of(const std::map<Var, PLBijection>& assignment, const LTerm& t) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return PLBijection::identity();
        case LTerm::Kind::Variable:
            return lookup<PLBijection>(assignment, t.var());
        case LTerm::Kind::Inverse:
            return pl_function_of(assignment, t.child(0)).inverse();
        case LTerm::Kind::Product:
            return pl_function_of(assignment, t.child(0))
                .then(pl_function_of(assignment, t.child(1)));
        case LTerm::Kind::Meet:
            return pointwise_min(pl_function_of(assignment, t.child(0)),
                                 pl_function_of(assignment, t.child(1)));
        case LTerm::Kind::Join:
            return pointwise_max(pl_function_of(assignment, t.child(0)),
                                 pl_function_of(assignment, t.child(1)));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Rat eval_in_aut_q(const std::map<Var, PLBijection>& assignment, const LTerm& t, const Rat& q) {
    return pl_function_of(assignment, t).apply(q);
}

long long eval_in_integers(const std::map<Var, long long>& assignment, const LTerm& t) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return 0;
        case LTerm::Kind::Variable:
            return lookup<long long>(assignment, t.var());
        case LTerm::Kind::Inverse:
            return -eval_in_integers(assignment, t.child(0));
        case LTerm::Kind::Product:
            return eval_in_integers(assignment, t.child(0)) +
                   eval_in_integers(assignment, t.child(1));
        case LTerm::Kind::Meet:
            return std::min(eval_in_integers(assignment, t.child(0)),
                            eval_in_integers(assignment, t.child(1)));
        case LTerm::Kind::Join:
            return std::max(eval_in_integers(assignment, t.child(0)),
                            eval_in_integers(assignment, t.child(1)));
    }
    throw std::logic_error("unreachable");
}

int eval_word_in_end(const std::map<Var, ChainEndo>& assignment, const MonWord& w, int p) {
    for (const Var& x : w) p = lookup<ChainEndo>(assignment, x).apply(p);
    return p;
}

Rat eval_word_in_aut_q(const std::map<Var, PLBijection>& assignment, const MonWord& w, Rat q) {
    for (const Var& x : w) q = lookup<PLBijection>(assignment, x).apply(q);
    return q;
}

namespace {

// class_of[i] = position of word i's equivalence class, bottom = 0.
std::vector<std::size_t> class_positions(const PreorderRel& p,
                                         const std::vector<std::vector<std::size_t>>& classes) {
    std::vector<std::size_t> pos(p.universe.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t i : classes[c]) pos[i] = c;
    }
    return pos;
}

// Partial map on classes induced by appending x; nullopt where undefined.
std::vector<std::optional<std::size_t>> partial_class_map(
    const PreorderRel& p, const std::vector<std::vector<std::size_t>>& classes,
    const std::vector<std::size_t>& pos, const Var& x) {
    std::vector<std::optional<std::size_t>> map(classes.size());
    for (std::size_t i = 0; i < p.universe.size(); ++i) {
        std::optional<std::size_t> j = p.universe.append(i, x);
        if (j) map[pos[i]] = pos[*j];
    }
    return map;
}

Rat word_value_claim(const std::vector<MonWord>& words, const Countermodel& cm, bool take_min);

}  // namespace

Countermodel build_end_countermodel(const PreorderRel& p, const PairSet& s,
                                    const BasicIneq& origin) {
    auto classes = p.classes_ascending();
    auto pos = class_positions(p, classes);
    const int k = static_cast<int>(classes.size());

    std::map<Var, ChainEndo> assignment;
    for (const Var& x : s.alphabet) {
        auto partial = partial_class_map(p, classes, pos, x);
        std::vector<int> total(static_cast<std::size_t>(k));
        for (int q = 0; q < k; ++q) {
            // greatest defined point <= q, else least defined point, else q
            std::optional<std::size_t> img;
            for (int d = q; d >= 0; --d) {
                if (partial[static_cast<std::size_t>(d)]) {
                    img = partial[static_cast<std::size_t>(d)];
                    break;
                }
            }
            if (!img) {
                for (int d = q + 1; d < k; ++d) {
                    if (partial[static_cast<std::size_t>(d)]) {
                        img = partial[static_cast<std::size_t>(d)];
                        break;
                    }
                }
            }
            total[static_cast<std::size_t>(q)] = img ? static_cast<int>(*img) : q;
        }
        assignment.emplace(x, ChainEndo(k, std::move(total)));
    }

    std::size_t e_index = *p.universe.index_of(MonWord{});
    EndChainModel model{k, std::move(assignment), static_cast<int>(pos[e_index])};

    Countermodel cm{std::move(model), origin, 0, 0};
    cm.lhs_value = word_value_claim(origin.meets, cm, true);
    cm.rhs_value = word_value_claim(origin.joins, cm, false);
    return cm;
}

Countermodel build_pl_countermodel(const PreorderRel& p, const PairSet& s,
                                   const BasicIneq& origin) {
    auto classes = p.classes_ascending();
    auto pos = class_positions(p, classes);

    std::map<Var, PLBijection> assignment;
    for (const Var& x : s.alphabet) {
        auto partial = partial_class_map(p, classes, pos, x);
        std::vector<std::pair<Rat, Rat>> pts;
        for (std::size_t q = 0; q < partial.size(); ++q) {
            if (partial[q]) {
                pts.emplace_back(Rat(static_cast<long>(q)), Rat(static_cast<long>(*partial[q])));
            }
        }
        assignment.emplace(x, PLBijection::through_points(std::move(pts)));
    }

    std::size_t e_index = *p.universe.index_of(MonWord{});
    AutQModel model{std::move(assignment), Rat(static_cast<long>(pos[e_index]))};

    Countermodel cm{std::move(model), origin, 0, 0};
    cm.lhs_value = word_value_claim(origin.meets, cm, true);
    cm.rhs_value = word_value_claim(origin.joins, cm, false);
    return cm;
}

Countermodel build_integers_countermodel(const std::map<Var, long long>& assignment,
                                         const BasicIneq& origin) {
    Countermodel cm{IntegersModel{assignment}, origin, 0, 0};
    cm.lhs_value = word_value_claim(origin.meets, cm, true);
    cm.rhs_value = word_value_claim(origin.joins, cm, false);
    return cm;
}

namespace {

Rat eval_word_claim(const MonWord& w, const Countermodel& cm) {
    if (const auto* end = std::get_if<EndChainModel>(&cm.model)) {
        return Rat(eval_word_in_end(end->assignment, w, end->base_point));
    }
    if (const auto* pl = std::get_if<AutQModel>(&cm.model)) {
        return eval_word_in_aut_q(pl->assignment, w, pl->base_point);
    }
    const auto& ints = std::get<IntegersModel>(cm.model);
    long long v = 0;
    for (const Var& x : w) v += lookup<long long>(ints.assignment, x);
    return Rat(static_cast<long>(v));
}

Rat word_value_claim(const std::vector<MonWord>& words, const Countermodel& cm, bool take_min) {
    Rat acc = eval_word_claim(words.front(), cm);
    for (std::size_t i = 1; i < words.size(); ++i) {
        Rat v = eval_word_claim(words[i], cm);
        if (take_min ? v < acc : v > acc) acc = v;
    }
    return acc;
}

}  // namespace

bool reevaluate(const Countermodel& cm) {
    Rat lhs = word_value_claim(cm.inequality.meets, cm, true);
    Rat rhs = word_value_claim(cm.inequality.joins, cm, false);
    return lhs == cm.lhs_value && rhs == cm.rhs_value && lhs > rhs;
}

}  // namespace ordeq
