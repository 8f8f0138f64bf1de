#include <doctest.h>

#include <random>

#include "ordeq/terms.hpp"

using namespace ordeq;

namespace {

Var v(const char* name) { return Var(name); }

LTerm var(const char* name) { return LTerm::variable(Var(name)); }

}  // namespace

TEST_CASE("parse: products are left-associated") {
    Statement s = parse_statement("y*x*y <= x*y*x");
    CHECK(s.kind == Statement::Kind::Leq);
    LTerm expected_lhs = LTerm::product(LTerm::product(var("y"), var("x")), var("y"));
    LTerm expected_rhs = LTerm::product(LTerm::product(var("x"), var("y")), var("x"));
    CHECK(s.lhs == expected_lhs);
    CHECK(s.rhs == expected_rhs);
}

TEST_CASE("parse: identity statement") {
    Statement s = parse_statement("e <= e");
    CHECK(s.lhs == LTerm::identity());
    CHECK(s.rhs == LTerm::identity());
}

TEST_CASE("parse: join under product on the left of an equation") {
    Statement s = parse_statement("x*(y\\/z) == x*y \\/ x*z");
    CHECK(s.kind == Statement::Kind::Eq);
    REQUIRE(s.lhs.kind() == LTerm::Kind::Product);
    CHECK(s.lhs.child(1).kind() == LTerm::Kind::Join);
    CHECK(s.rhs.kind() == LTerm::Kind::Join);
}

TEST_CASE("parse: precedence inverse > product > meet > join") {
    LTerm t = parse_term("x /\\ y \\/ z");
    REQUIRE(t.kind() == LTerm::Kind::Join);
    CHECK(t.child(0).kind() == LTerm::Kind::Meet);

    LTerm u = parse_term("x*y^-1 /\\ z");
    REQUIRE(u.kind() == LTerm::Kind::Meet);
    REQUIRE(u.child(0).kind() == LTerm::Kind::Product);
    CHECK(u.child(0).child(1).kind() == LTerm::Kind::Inverse);
}

TEST_CASE("parse: exponent sugar") {
    CHECK(parse_term("x^2") == parse_term("x*x"));
    CHECK(parse_term("x^-2") == parse_term("x^-1*x^-1"));
    CHECK(parse_term("x^3") == LTerm::product(LTerm::product(var("x"), var("x")), var("x")));
    CHECK(parse_term("(x*y)^-1") == LTerm::inverse(LTerm::product(var("x"), var("y"))));
    CHECK(parse_term("x^-1^-1") == LTerm::inverse(LTerm::inverse(var("x"))));
    CHECK_THROWS_AS(parse_term("x^0"), ParseError);
    CHECK_THROWS_AS(parse_term("x^"), ParseError);
}

TEST_CASE("parse: errors carry positions") {
    try {
        parse_statement("x <= (y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(parse_statement("x"), ParseError);
    CHECK_THROWS_AS(parse_statement("x <= y extra"), ParseError);
    CHECK_THROWS_AS(parse_statement(""), ParseError);
}

TEST_CASE("parse: reserved names") {
    // 'e' is the identity, never a variable
    CHECK(parse_term("e") == LTerm::identity());
    CHECK(parse_term("ee").kind() == LTerm::Kind::Variable);
    CHECK(parse_term("e1").kind() == LTerm::Kind::Variable);

    CHECK_THROWS_AS(parse_term("_y0"), ParseError);
    ParseOptions internal;
    internal.allow_fresh_prefix = true;
    CHECK(parse_term("_y0", internal).kind() == LTerm::Kind::Variable);

    CHECK_THROWS_AS(Var("e"), std::invalid_argument);
    CHECK_THROWS_AS(Var(""), std::invalid_argument);
    CHECK_THROWS_AS(Var("1x"), std::invalid_argument);
}

TEST_CASE("render: basic shapes") {
    Statement s = parse_statement("y*x*y <= x*y*x");
    CHECK(render_statement(s) == "y*x*y <= x*y*x");
    CHECK(render_term(LTerm::identity()) == "e");
    CHECK(render_term(LTerm::inverse(var("x"))) == "x^-1");
    CHECK(render_term(LTerm::inverse(LTerm::product(var("x"), var("y")))) == "(x*y)^-1");
    // a right-nested product needs parentheses to reparse to the same tree
    LTerm right_nested = LTerm::product(var("y"), LTerm::product(var("x"), var("y")));
    CHECK(render_term(right_nested) == "y*(x*y)");
    CHECK(parse_term(render_term(right_nested)) == right_nested);
}

namespace {

LTerm random_term(std::mt19937_64& rng, int depth, bool group_mode) {
    std::uniform_int_distribution<int> kind_dist(0, depth <= 0 ? 1 : (group_mode ? 5 : 4));
    const char* names[] = {"x", "y", "z"};
    switch (kind_dist(rng)) {
        case 0:
            return LTerm::identity();
        case 1:
            return LTerm::variable(Var(names[rng() % 3]));
        case 2:
            return LTerm::product(random_term(rng, depth - 1, group_mode),
                                  random_term(rng, depth - 1, group_mode));
        case 3:
            return LTerm::meet(random_term(rng, depth - 1, group_mode),
                               random_term(rng, depth - 1, group_mode));
        case 4:
            return LTerm::join(random_term(rng, depth - 1, group_mode),
                               random_term(rng, depth - 1, group_mode));
        default:
            return LTerm::inverse(random_term(rng, depth - 1, group_mode));
    }
}

}  // namespace

TEST_CASE("render/parse round trip on random terms") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        LTerm t = random_term(rng, 4, i % 2 == 0);
        CAPTURE(render_term(t));
        LTerm u = parse_term(render_term(t));
        CHECK(t == u);
    }
    std::mt19937_64 rng2(7);
    for (int i = 0; i < 100; ++i) {
        Statement s{i % 2 ? Statement::Kind::Leq : Statement::Kind::Eq,
                    random_term(rng2, 3, true), random_term(rng2, 3, true)};
        Statement back = parse_statement(render_statement(s));
        CHECK(s == back);
    }
}

TEST_CASE("reduce_group_word: examples") {
    Var x = v("x"), y = v("y");
    CHECK(GrpWord::reduced({{x, +1}, {x, -1}}).empty());
    CHECK(GrpWord::reduced({{x, +1}, {y, +1}}).formal_inverse() ==
          GrpWord::reduced({{y, -1}, {x, -1}}));
    CHECK(GrpWord::reduced({{x, +1}, {y, +1}, {y, -1}, {x, +1}}) ==
          GrpWord::reduced({{x, +1}, {x, +1}}));
}

TEST_CASE("reduce_group_word: properties") {
    std::mt19937_64 rng(99);
    const char* names[] = {"x", "y"};
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<SignedVar> raw;
        std::size_t len = rng() % 10;
        for (std::size_t i = 0; i < len; ++i) {
            raw.push_back(
                SignedVar{Var(names[rng() % 2]), rng() % 2 ? std::int8_t{1} : std::int8_t{-1}});
        }
        GrpWord w = GrpWord::reduced(raw);
        CHECK(w.size() <= raw.size());
        // idempotent
        CHECK(GrpWord::reduced(w.letters()) == w);
        // no cancellable adjacent pair
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            bool cancellable = w.letters()[i].var == w.letters()[i + 1].var &&
                               w.letters()[i].sign == -w.letters()[i + 1].sign;
            CHECK_FALSE(cancellable);
        }
        // reduce(w) * reduce(w)^-1 reduces to e
        CHECK((w * w.formal_inverse()).empty());
    }
}

TEST_CASE("fresh variables") {
    FreshVarSupply supply({"x", "y"});
    std::vector<Var> two = supply.take(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].name() == "_y0");
    CHECK(two[1].name() == "_y1");

    FreshVarSupply collide({"_y0"});
    CHECK(collide.next().name() == "_y1");

    FreshVarSupply empty_take;
    CHECK(empty_take.take(0).empty());
}

TEST_CASE("words") {
    MonWord xy{v("x"), v("y")};
    CHECK(word_to_string(xy) == "x*y");
    CHECK(word_to_string(MonWord{}) == "e");
    CHECK(shortlex_less(MonWord{}, xy));
    CHECK(shortlex_less(MonWord{v("z")}, xy));  // shorter first
    CHECK(parse_word("x*y") == xy);
    CHECK(parse_word("e").empty());
    CHECK(parse_word("x^2") == MonWord{v("x"), v("x")});
    CHECK_THROWS_AS(parse_word("x \\/ y"), ParseError);
    CHECK_THROWS_AS(parse_word("x^-1"), ParseError);

    GrpWord g = GrpWord::reduced({{v("x"), +1}, {v("y"), -1}});
    CHECK(word_to_string(g) == "x*y^-1");
    CHECK_FALSE(g.inverse_free());
    CHECK(GrpWord::from_mon(xy).inverse_free());
    CHECK(GrpWord::from_mon(xy).to_mon_word() == xy);
}
