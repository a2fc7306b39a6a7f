#include <doctest.h>

#include "trapsem/operators.hpp"

using namespace trapsem;

namespace {
Interp3 i3(const char* s) { return interp3_from_compact(s); }
Interp2 i2(const char* s) { return interp2_from_compact(s); }
} // namespace

TEST_CASE("two-valued reduct") {
    Program p1 = parse_program("a :- b.\nb :- a.");
    for (const char* s : {"00", "01", "10", "11"}) {
        CHECK(reduct2(p1, i2(s)) == p1); // positive programs are fixed
    }

    Program p3 = parse_program("c :- not c.");
    CHECK(reduct2(p3, i2("1")).rules.empty());
    Program r = reduct2(p3, i2("0"));
    REQUIRE(r.rules.size() == 1);
    CHECK(r.rules[0].pos.empty());
    CHECK(r.rules[0].neg.empty());
}

TEST_CASE("three-valued reduct flags undefined negative literals") {
    Program p = parse_program("a :- b, not c.\nd :- not a.");
    PositiveProgram3 pp = reduct3(p, i3("0*1*")); // a=0 b=* c=1 d=*
    // a's rule dropped (c true); d's rule kept, not a -> true, no flag.
    REQUIRE(pp.rules.size() == 1);
    CHECK(pp.rules[0].head == 3);
    CHECK_FALSE(pp.rules[0].undef_body);

    pp = reduct3(p, i3("**0*"));
    REQUIRE(pp.rules.size() == 2);
    for (const auto& r : pp.rules) {
        if (r.head == 0) {
            CHECK(r.pos == std::vector<int>{1});
            CHECK_FALSE(r.undef_body); // not c with c=F drops out
        } else {
            CHECK(r.head == 3);
            CHECK(r.undef_body); // not a with a=U stays as u
        }
    }
}

TEST_CASE("least two-valued model") {
    CHECK(least2(parse_program("a :- b.\nb :- a.")) == i2("00"));
    CHECK(least2(parse_program("a.\nb :- a.\nc :- b.")) == i2("111"));
    CHECK(least2(parse_program("")) == i2(""));
}

TEST_CASE("least three-valued model") {
    Program p = parse_program("c :- not c.");
    CHECK(least3(reduct3(p, i3("*"))) == i3("*"));
    CHECK(least3(reduct3(parse_program("a."), i3("*"))) == i3("1"));

    PositiveProgram3 none;
    none.n = 1;
    CHECK(least3(none) == i3("0"));
}

TEST_CASE("least3 propagates U through positive chains") {
    Program q = parse_program("a.\nb :- a, not d.\nc :- b.");
    PositiveProgram3 pp = reduct3(q, Interp3::all_undefined(4));
    Interp3 m = least3(pp);
    CHECK(m.at(0) == V3::T); // a
    CHECK(m.at(1) == V3::U); // b
    CHECK(m.at(2) == V3::U); // c
    CHECK(m.at(3) == V3::F); // d heads no rule
}

TEST_CASE("step_F") {
    Program p1 = parse_program("a :- b.\nb :- a.");
    for (const char* s : {"00", "01", "10", "11"}) {
        CHECK(step_F(p1, i2(s)) == i2("00"));
    }
    Program p = parse_program("a :- not b.\nb :- a.");
    CHECK(step_F(p, i2("00")) == i2("11"));
}

TEST_CASE("step_T") {
    Program p1 = parse_program("a :- b.\nb :- a.");
    CHECK(step_T(p1, i2("10")) == i2("01"));
    CHECK(step_T(p1, i2("01")) == i2("10"));
    CHECK(step_T(p1, i2("11")) == i2("11"));
    CHECK(step_T(p1, i2("00")) == i2("00"));

    Program p2 = parse_program("a :- not b.\nb :- not a.\nc :- not c.");
    CHECK(step_T(p2, i2("110")) == i2("001"));
    CHECK(step_T(completion(p2), i2("110")) == i2("001"));
}

TEST_CASE("step_f3") {
    Program p2 = parse_program("a :- not b.\nb :- not a.\nc :- not c.");
    Completion c2 = completion(p2);
    CHECK(step_f3(c2, i3("01*")) == i3("01*")); // fixpoint
    CHECK(step_f3(c2, i3("***")) == i3("***"));
    CHECK(step_f3(c2, i3("11*")) == i3("00*"));

    Program p1 = parse_program("a :- b.\nb :- a.");
    CHECK(step_f3(completion(p1), i3("1*")) == i3("*1"));
}
