#include <doctest.h>

#include "trapsem/program.hpp"

using namespace trapsem;

TEST_CASE("parse assigns sorted deterministic atom ids") {
    Program p = parse_program("b :- a.\na :- b.");
    REQUIRE(p.atoms.size() == 2);
    CHECK(p.atoms.name(0) == "a");
    CHECK(p.atoms.name(1) == "b");
    CHECK(p.rules.size() == 2);
}

TEST_CASE("parse example programs") {
    Program p1 = parse_program("a :- b.\nb :- a.");
    CHECK(p1.atoms.size() == 2);
    CHECK(p1.rules.size() == 2);

    Program empty = parse_program("");
    CHECK(empty.atoms.size() == 0);
    CHECK(empty.rules.size() == 0);

    Program p2 = parse_program("a :- not b.\nb :- not a.\nc :- not c.");
    CHECK(p2.atoms.size() == 3);
    CHECK(p2.rules.size() == 3);
    for (const auto& r : p2.rules) {
        CHECK(r.pos.empty());
        CHECK(r.neg.size() == 1);
    }
    CHECK(is_negative(p2));
}

TEST_CASE("parse accepts ~ and comments, collapses duplicates") {
    Program p = parse_program("% a comment\na :- ~b. % trailing\na :- not b.\n");
    CHECK(p.rules.size() == 1);
    CHECK(p.rules[0].neg == std::vector<int>{1});
}

TEST_CASE("facts and nested ground arguments") {
    Program p = parse_program("p(s(0)).\nq :- p(s(0)).");
    CHECK(p.atoms.find("p(s(0))") >= 0);
    CHECK(p.rules[0].pos.empty());
    CHECK(p.rules[0].neg.empty());
}

TEST_CASE("atoms starting with not are not negation") {
    Program p = parse_program("nothing :- notx.");
    CHECK(p.atoms.find("nothing") >= 0);
    CHECK(p.atoms.find("notx") >= 0);
    CHECK(p.rules[0].neg.empty());
}

TEST_CASE("variables are rejected") {
    CHECK_THROWS_WITH_AS(parse_program("p(X) :- q."), doctest::Contains("ground programs only"),
                         ParseError);
    CHECK_THROWS_AS(parse_program("X :- a."), ParseError);
}

TEST_CASE("syntax errors carry position") {
    try {
        parse_program("a :- b\nc.");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2); // the missing '.' surfaces at the next token
    }
    CHECK_THROWS_AS(parse_program("a :- ."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- b,."), ParseError);
}

TEST_CASE("parse / pretty round trip") {
    const char* sources[] = {
        "a :- b.\nb :- a.",
        "a :- not b.\nb :- not a.\nc :- not c.",
        "p(s(0)).\nq :- p(s(0)), not r.",
        "",
    };
    for (const char* src : sources) {
        Program p = parse_program(src);
        CHECK(parse_program(pretty(p)) == p);
    }
}

TEST_CASE("completion lists one disjunct per rule of the head") {
    Program p1 = parse_program("a :- b.\nb :- a.");
    Completion c = completion(p1);
    REQUIRE(c.rhs[0].size() == 1);
    CHECK(c.rhs[0][0].pos == std::vector<int>{1});
    CHECK(c.rhs[0][0].neg.empty());
    REQUIRE(c.rhs[1].size() == 1);
    CHECK(c.rhs[1][0].pos == std::vector<int>{0});

    Program fact = parse_program("a.");
    Completion cf = completion(fact);
    REQUIRE(cf.rhs[0].size() == 1);
    CHECK(cf.rhs[0][0].pos.empty());
    CHECK(cf.rhs[0][0].neg.empty());

    Program p2 = parse_program("a :- not b.\nb :- not a.\nc :- not c.");
    Completion c2 = completion(p2);
    REQUIRE(c2.rhs[2].size() == 1);
    CHECK(c2.rhs[2][0].pos.empty());
    CHECK(c2.rhs[2][0].neg == std::vector<int>{2});

    // Counting check: disjunct totals equal rule count.
    std::size_t total = 0;
    for (const auto& d : c2.rhs) total += d.size();
    CHECK(total == p2.rules.size());
}

TEST_CASE("lfp transformation") {
    SUBCASE("substitution introduces the negative body") {
        Program p = parse_program("a :- not b.\nb :- a.");
        Program l = lfp_transform(p);
        CHECK(l == parse_program("a :- not b.\nb :- not b."));
    }
    SUBCASE("positive loop collapses to the empty rule set") {
        Program p = parse_program("a :- b.\nb :- a.");
        Program l = lfp_transform(p);
        CHECK(l.rules.empty());
        CHECK(l.atoms.size() == 2);
    }
    SUBCASE("negative programs are fixpoints") {
        Program p = parse_program("a :- not b.\nb :- not a.\nc :- not c.");
        CHECK(lfp_transform(p) == p);
    }
    SUBCASE("output is negative and idempotent") {
        Program p = parse_program("a :- b, not c.\nb :- not a.\nc :- b.\nd.");
        Program l = lfp_transform(p);
        CHECK(is_negative(l));
        CHECK(lfp_transform(l) == l);
    }
    SUBCASE("rule cap") {
        Program p = parse_program("a :- b, not c.\nb :- not a.\nc :- b.");
        CHECK_THROWS_AS(lfp_transform(p, 1), CapError);
    }
}

TEST_CASE("is_uni_rule") {
    CHECK(is_uni_rule(parse_program("a :- not b.\nb :- not a.\nc :- not c.")));
    CHECK(is_uni_rule(parse_program("")));
    CHECK_FALSE(is_uni_rule(parse_program("a :- not b.\na :- not c.")));
}
