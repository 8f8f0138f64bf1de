#include "ordeq/json_io.hpp"

#include <istream>

namespace ordeq {

using nlohmann::json;

namespace {

json int_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());  // exceeds 64 bits; emitted as a decimal string
}

json rat_to_json(const Rat& r) {
    if (r.get_den() == 1) return int_to_json(r.get_num());
    return json::array({int_to_json(r.get_num()), int_to_json(r.get_den())});
}

}  // namespace

json countermodel_to_json(const Countermodel& cm) {
    json out;
    json assignment = json::object();
    if (const auto* end = std::get_if<EndChainModel>(&cm.model)) {
        out["kind"] = "end-chain";
        out["chain_size"] = end->chain_size;
        for (const auto& [v, f] : end->assignment) assignment[v.name()] = f.map();
        out["base_point"] = end->base_point;
    } else if (const auto* pl = std::get_if<AutQModel>(&cm.model)) {
        out["kind"] = "aut-q";
        for (const auto& [v, f] : pl->assignment) {
            json bps = json::array();
            for (const auto& [x, y] : f.breakpoints()) {
                bps.push_back(json::array({int_to_json(x.get_num()), int_to_json(x.get_den()),
                                           int_to_json(y.get_num()), int_to_json(y.get_den())}));
            }
            assignment[v.name()] = json{{"breakpoints", bps}};
        }
        out["base_point"] = rat_to_json(pl->base_point);
    } else {
        const auto& ints = std::get<IntegersModel>(cm.model);
        out["kind"] = "integers";
        for (const auto& [v, value] : ints.assignment) assignment[v.name()] = value;
        out["base_point"] = 0;
    }
    out["assignment"] = std::move(assignment);
    out["lhs_value"] = rat_to_json(cm.lhs_value);
    out["rhs_value"] = rat_to_json(cm.rhs_value);
    out["inequality"] = render_statement(basic_to_statement(cm.inequality));
    return out;
}

json finite_monoid_to_json(const FiniteMonoid& m) {
    return json{{"size", m.size()}, {"unit", m.unit()}, {"table", m.table()}};
}

FiniteMonoid finite_monoid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("unit") || !j.contains("table")) {
        throw std::invalid_argument("monoid JSON must have keys size, unit, table");
    }
    return FiniteMonoid(j.at("size").get<int>(), j.at("unit").get<int>(),
                        j.at("table").get<std::vector<std::vector<int>>>());
}

PreorderFile preorder_from_json(const json& j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("le")) {
        throw std::invalid_argument("preorder JSON must have keys universe, le");
    }
    ParseOptions opts;
    opts.allow_fresh_prefix = true;
    std::vector<MonWord> listed;
    for (const auto& entry : j.at("universe")) {
        listed.push_back(parse_word(entry.get<std::string>(), opts));
    }
    const std::size_t n = listed.size();
    const auto& le = j.at("le");
    if (!le.is_array() || le.size() != n) {
        throw std::invalid_argument("le must be an n x n matrix over the listed universe");
    }

    SubtermSet universe = SubtermSet::from_words(listed);
    if (universe.size() != n) {
        throw std::invalid_argument("universe entries must be distinct");
    }
    TriMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!le[i].is_array() || le[i].size() != n) {
            throw std::invalid_argument("le must be an n x n matrix over the listed universe");
        }
        std::size_t ci = *universe.index_of(listed[i]);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t ck = *universe.index_of(listed[k]);
            const auto& cell = le[i][k];
            bool v = cell.is_boolean() ? cell.get<bool>() : cell.get<int>() != 0;
            m.set(ci, ck, v ? Tri::True : Tri::False);
        }
    }

    PreorderFile out{PreorderRel{std::move(universe), std::move(m)}, std::nullopt};
    if (j.contains("pairs")) {
        std::vector<std::pair<MonWord, MonWord>> pairs;
        for (const auto& entry : j.at("pairs")) {
            pairs.emplace_back(parse_word(entry.at(0).get<std::string>(), opts),
                               parse_word(entry.at(1).get<std::string>(), opts));
        }
        out.pairs = PairSet::from_pairs(std::move(pairs));
    }
    return out;
}

json preorder_to_json(const PreorderRel& rel) {
    json universe = json::array();
    for (const MonWord& w : rel.universe.words()) universe.push_back(word_to_string(w));
    json le = json::array();
    for (std::size_t i = 0; i < rel.universe.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < rel.universe.size(); ++k) {
            row.push_back(rel.le.at(i, k) == Tri::True ? 1 : 0);
        }
        le.push_back(std::move(row));
    }
    json classes = json::array();
    if (rel.le.fully_determined()) {
        for (const auto& cls : rel.classes_ascending()) {
            json c = json::array();
            for (std::size_t i : cls) c.push_back(word_to_string(rel.universe.word(i)));
            classes.push_back(std::move(c));
        }
    }
    return json{{"universe", std::move(universe)}, {"le", std::move(le)},
                {"classes", std::move(classes)}};
}

OrderQuery constraints_from_text(std::istream& in) {
    OrderQuery q;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        }
        if (blank) continue;
        auto lt = line.find('<');
        if (lt == std::string::npos || (lt + 1 < line.size() && line[lt + 1] == '=')) {
            throw ParseError("expected 'word < word'", lineno, 1);
        }
        q.constraints.emplace_back(parse_word(line.substr(0, lt)),
                                   parse_word(line.substr(lt + 1)));
    }
    return q;
}

}  // namespace ordeq
