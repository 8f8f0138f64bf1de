// ordeq — decision engine for equational theories of distributive
// l-monoids (DLM) and l-groups (LG), with countermodel certificates.
//
// Exit codes: 0 = valid / exists, 1 = invalid / not exists, 2 = usage
// error, bad input, or budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "ordeq/invelim.hpp"
#include "ordeq/json_io.hpp"
#include "ordeq/lift.hpp"
#include "ordeq/oracle.hpp"

using nlohmann::json;
using namespace ordeq;

namespace {

struct Options {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 60.0;
    int threads = 1;
    std::string format = "text";
};

SearchBudget budget_of(const Options& o) { return SearchBudget{o.max_nodes, o.max_seconds}; }

void emit(const Options& o, const json& payload, const std::string& text) {
    if (o.format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string describe_countermodel(const Countermodel& cm) {
    json j = countermodel_to_json(cm);
    std::string out = "countermodel (" + j["kind"].get<std::string>() + "): ";
    out += j.dump();
    out += "\n";
    return out;
}

json stats_json(const SearchStats& s) {
    return json{{"nodes", s.nodes}, {"propagations", s.propagations}, {"universe", s.universe}};
}

int report_verdict(const Options& o, const std::string& command, const Statement& s,
                   const Verdict& v, const std::vector<Statement>* eliminated,
                   std::optional<std::size_t> failing) {
    json out{{"command", command},
             {"statement", render_statement(s)},
             {"verdict", v.is_valid() ? "valid" : "invalid"},
             {"stats", stats_json(v.stats())}};
    std::string text = std::string("verdict: ") + (v.is_valid() ? "valid" : "invalid") + "\n";
    if (eliminated) {
        json elim = json::array();
        for (const Statement& m : *eliminated) elim.push_back(render_statement(m));
        out["eliminated"] = std::move(elim);
        text += "eliminated set (" + std::to_string(eliminated->size()) + "):\n";
        for (const Statement& m : *eliminated) text += "  " + render_statement(m) + "\n";
        if (failing) {
            out["failing"] = *failing;
            text += "failing member: " + render_statement((*eliminated)[*failing]) + "\n";
        }
    }
    if (!v.is_valid()) {
        out["countermodel"] = countermodel_to_json(v.certificate().model);
        out["failed_inequality"] =
            render_statement(basic_to_statement(v.certificate().failed));
        text += "failed inequality: " +
                render_statement(basic_to_statement(v.certificate().failed)) + "\n";
        text += describe_countermodel(v.certificate().model);
    }
    emit(o, out, text);
    return v.is_valid() ? 0 : 1;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for distributive l-monoids and l-groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--max-nodes", opt.max_nodes, "search node budget per statement")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-seconds", opt.max_seconds, "time budget per statement, seconds")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", opt.threads,
                   "reserved; the solver currently explores sequentially")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string stmt_text, file_path;
    int chain_n = 2;
    std::string enum_what;
    int enum_n = 2;

    CLI::App* dlm = app.add_subcommand("decide-dlm", "validity in distributive l-monoids");
    dlm->add_option("statement", stmt_text, "inverse-free statement")->required();

    CLI::App* lg = app.add_subcommand("decide-lg", "validity in l-groups (via elimination)");
    lg->add_option("statement", stmt_text, "statement, inverses allowed")->required();

    CLI::App* lgif = app.add_subcommand("decide-lg-invfree",
                                        "validity in l-groups of an inverse-free statement");
    lgif->add_option("statement", stmt_text, "inverse-free statement")->required();

    CLI::App* elim = app.add_subcommand("eliminate", "inverse elimination only");
    elim->add_option("statement", stmt_text, "statement, inverses allowed")->required();

    CLI::App* rof = app.add_subcommand("right-order-free",
                                       "right order on the free monoid extending constraints");
    rof->add_option("--constraints", file_path, "file with one 'word < word' per line")
        ->required();

    CLI::App* rom = app.add_subcommand("right-order-monoid", "right order on a finite monoid");
    rom->add_option("--monoid", file_path, "monoid JSON file {size, unit, table}")->required();

    CLI::App* orc = app.add_subcommand("oracle", "brute-force check over End(chain)");
    orc->add_option("--chain", chain_n, "chain size")->required()->check(CLI::PositiveNumber);
    orc->add_option("statement", stmt_text, "inverse-free statement")->required();

    CLI::App* enu = app.add_subcommand("enumerate", "enumerate endos or ordered-monoids");
    enu->add_option("what", enum_what, "endos | ordered-monoids")
        ->required()
        ->check(CLI::IsMember({"endos", "ordered-monoids"}));
    enu->add_option("n", enum_n, "size")->required()->check(CLI::PositiveNumber);

    CLI::App* lift_cmd = app.add_subcommand("lift", "lift a preorder to a strict one");
    lift_cmd->add_option("--preorder", file_path, "preorder JSON file {universe, le, pairs?}")
        ->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();  // accept the global options after the subcommand
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dlm) {
            Statement s = parse_statement(stmt_text);
            return report_verdict(opt, "decide-dlm", s, decide_dlm(s, budget_of(opt)), nullptr,
                                  std::nullopt);
        }
        if (*lgif) {
            Statement s = parse_statement(stmt_text);
            return report_verdict(opt, "decide-lg-invfree", s,
                                  decide_lg_inverse_free(s, budget_of(opt)), nullptr,
                                  std::nullopt);
        }
        if (*lg) {
            Statement s = parse_statement(stmt_text);
            LgVerdict v = decide_lg(s, budget_of(opt));
            return report_verdict(opt, "decide-lg", s, v.verdict, &v.eliminated, v.failing);
        }
        if (*elim) {
            Statement s = parse_statement(stmt_text);
            std::vector<Statement> members = eliminate_inverses(s);
            json out{{"command", "eliminate"}, {"statement", render_statement(s)}};
            json elim_json = json::array();
            std::string text;
            for (const Statement& m : members) {
                elim_json.push_back(render_statement(m));
                text += render_statement(m) + "\n";
            }
            out["eliminated"] = std::move(elim_json);
            emit(opt, out, text);
            return 0;
        }
        if (*rof) {
            std::ifstream in(file_path);
            if (!in) throw std::runtime_error("cannot open '" + file_path + "'");
            OrderQuery q = constraints_from_text(in);
            FreeOrderResult r = right_order_exists_free(q, budget_of(opt));
            json out{{"command", "right-order-free"}, {"exists", r.exists}};
            std::string text = r.exists ? "a right order exists\n" : "no right order exists\n";
            if (r.encoded) {
                out["encoded"] = render_statement(*r.encoded);
                text += "encoded statement: " + render_statement(*r.encoded) + "\n";
            }
            if (r.dlm_verdict && !r.dlm_verdict->is_valid()) {
                out["countermodel"] = countermodel_to_json(r.dlm_verdict->certificate().model);
                text += describe_countermodel(r.dlm_verdict->certificate().model);
            }
            emit(opt, out, text);
            return r.exists ? 0 : 1;
        }
        if (*rom) {
            FiniteMonoid m = finite_monoid_from_json(load_json_file(file_path));
            FiniteOrderResult r = right_order_exists_finite_monoid(m, budget_of(opt));
            if (r.status == SearchStatus::BudgetExceeded) throw BudgetError(r.stats);
            bool found = r.status == SearchStatus::Found;
            json out{{"command", "right-order-monoid"},
                     {"exists", found},
                     {"stats", stats_json(r.stats)}};
            std::string text = found ? "right-orderable\n" : "not right-orderable (exhaustive)\n";
            if (found) {
                out["order"] = r.ascending;
                text += "ascending: ";
                for (std::size_t i = 0; i < r.ascending.size(); ++i) {
                    text += (i ? " < " : "") + std::to_string(r.ascending[i]);
                }
                text += "\n";
            }
            emit(opt, out, text);
            return found ? 0 : 1;
        }
        if (*orc) {
            Statement s = parse_statement(stmt_text);
            OracleOutcome r = oracle_dlm_validity(s, chain_n, opt.max_nodes);
            json out{{"command", "oracle"},
                     {"chain", chain_n},
                     {"verdict", r.valid ? "valid" : "invalid"}};
            std::string text =
                std::string(r.valid ? "valid" : "invalid") + " in End(" +
                std::to_string(chain_n) + ")\n";
            if (r.witness) {
                json asg = json::object();
                for (const auto& [v, f] : r.witness->assignment) asg[v.name()] = f.map();
                out["witness"] = json{{"assignment", std::move(asg)},
                                      {"point", r.witness->point},
                                      {"lhs", r.witness->lhs},
                                      {"rhs", r.witness->rhs}};
                text += "witness: " + out["witness"].dump() + "\n";
            }
            emit(opt, out, text);
            return r.valid ? 0 : 1;
        }
        if (*enu) {
            json out{{"command", "enumerate"}, {"what", enum_what}, {"n", enum_n}};
            std::string text;
            if (enum_what == "endos") {
                std::vector<ChainEndo> endos = enumerate_endomorphisms(enum_n);
                if (endos.size() > 100'000) {
                    throw std::runtime_error("enumeration too large; chain size capped");
                }
                out["count"] = endos.size();
                json maps = json::array();
                for (const ChainEndo& f : endos) {
                    maps.push_back(f.map());
                    text += json(f.map()).dump() + "\n";
                }
                out["maps"] = std::move(maps);
                text += "count: " + std::to_string(endos.size()) + "\n";
            } else {
                std::vector<OrderedMonoid> monoids = enumerate_ordered_monoids(enum_n);
                out["count"] = monoids.size();
                json list = json::array();
                for (const OrderedMonoid& m : monoids) {
                    list.push_back(json{{"unit", m.unit}, {"table", m.table}});
                    text += "unit " + std::to_string(m.unit) + " table " + json(m.table).dump() + "\n";
                }
                out["monoids"] = std::move(list);
                text += "count: " + std::to_string(monoids.size()) + "\n";
            }
            emit(opt, out, text);
            return 0;
        }
        if (*lift_cmd) {
            PreorderFile file = preorder_from_json(load_json_file(file_path));
            PreorderRel lifted = lift_preorder(file.rel);
            PairSet pairs = file.pairs.value_or(PairSet{});
            std::vector<Violation> report = verify_preorder(lifted, /*strict=*/true, pairs);
            json out{{"command", "lift"}, {"lifted", preorder_to_json(lifted)}};
            json violations = json::array();
            std::string text = "lifted preorder:\n" + preorder_to_json(lifted)["classes"].dump() + "\n";
            for (const Violation& v : report) {
                violations.push_back(json{{"property", v.property}, {"detail", v.detail}});
                text += "violation (" + v.property + "): " + v.detail + "\n";
            }
            out["violations"] = std::move(violations);
            emit(opt, out, text);
            return report.empty() ? 0 : 1;
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
