#include <doctest.h>

#include "trapsem/oracle.hpp"
#include "trapsem/trapspaces.hpp"

using namespace trapsem;

namespace {
const char* kP1 = "a :- b.\nb :- a.";
const char* kP2 = "a :- not b.\nb :- not a.\nc :- not c.";

Interp3 i3(const char* s) { return interp3_from_compact(s); }
Interp2 i2(const char* s) { return interp2_from_compact(s); }

std::vector<std::string> strings(const std::vector<Interp3>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}
} // namespace

TEST_CASE("supported trap space local check") {
    Program p1 = parse_program(kP1);
    CHECK(is_supported_trap_space(p1, i3("**")));
    CHECK_FALSE(is_supported_trap_space(p1, i3("0*")));
    CHECK(is_supported_trap_space(p1, i3("00")));
    CHECK(is_supported_trap_space(p1, i3("11")));

    Program p2 = parse_program(kP2);
    CHECK(is_supported_trap_space(p2, i3("01*")));
    CHECK(is_supported_trap_space(p2, i3("***")));
    CHECK_FALSE(is_supported_trap_space(p2, i3("00*")));
}

TEST_CASE("stable trap space goes through the transformation") {
    Program p1 = parse_program(kP1);
    CHECK(is_stable_trap_space(p1, i3("0*")));
    CHECK(is_stable_trap_space(p1, i3("00")));
    CHECK_FALSE(is_stable_trap_space(p1, i3("11")));

    Program p2 = parse_program(kP2);
    CHECK(is_stable_trap_space(p2, i3("01*")));
    CHECK_FALSE(is_stable_trap_space(p2, i3("11*")));
}

TEST_CASE("enumeration") {
    Program p1 = parse_program(kP1);
    CHECK(strings(enumerate_trap_spaces(p1, Kind::Supported)) ==
          std::vector<std::string>{"**", "00", "11"});
    CHECK(strings(enumerate_trap_spaces(p1, Kind::Stable)) ==
          std::vector<std::string>{"**", "*0", "0*", "00"});

    Program one;
    one.atoms = AtomTable({"a"});
    for (Kind k : {Kind::Stable, Kind::Supported}) {
        CHECK(strings(enumerate_trap_spaces(one, k)) == std::vector<std::string>{"*", "0"});
    }

    CHECK_THROWS_AS(enumerate_trap_spaces(p1, Kind::Stable, 1), CapError);
}

TEST_CASE("cover by percolation") {
    Program p2 = parse_program(kP2);
    std::vector<Interp2> pair = {i2("010"), i2("011")};
    CHECK(cover(p2, Kind::Stable, pair) == i3("01*"));

    std::vector<Interp2> one = {i2("010")};
    CHECK(cover(p2, Kind::Stable, one) == i3("01*"));

    Program p1 = parse_program(kP1);
    std::vector<Interp2> fix = {i2("11")};
    CHECK(cover(p1, Kind::Supported, fix) == i3("11"));
    CHECK(cover(p1, Kind::Stable, fix) == i3("**"));

    CHECK_THROWS_AS(cover(p1, Kind::Stable, std::vector<Interp2>{}), InvalidArgError);
}

TEST_CASE("cover matches the intersection oracle on random programs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Program p = gen_program({seed, 4, 6, 2, 0.6});
        int n = p.atoms.size();
        if (n == 0) continue;
        for (Kind k : {Kind::Stable, Kind::Supported}) {
            for (std::uint32_t s = 0; s < (1u << n); ++s) {
                std::vector<Interp2> states = {Interp2{s, n}};
                CHECK(cover(p, k, states) == oracle_cover(p, k, states));
            }
        }
    }
}

TEST_CASE("minimal trap spaces") {
    CHECK(strings(minimal_trap_spaces(parse_program(kP1), Kind::Stable)) ==
          std::vector<std::string>{"00"});
    CHECK(strings(minimal_trap_spaces(parse_program(kP1), Kind::Supported)) ==
          std::vector<std::string>{"00", "11"});
    CHECK(strings(minimal_trap_spaces(parse_program(kP2), Kind::Stable)) ==
          std::vector<std::string>{"01*", "10*"});
}

TEST_CASE("u-minimal stable trap spaces") {
    CHECK(strings(u_minimal_stable_trap_spaces(parse_program(kP2))) ==
          std::vector<std::string>{"01*", "10*"});
    CHECK(strings(u_minimal_stable_trap_spaces(parse_program("c :- not c."))) ==
          std::vector<std::string>{"*"});
    // A program with a stable model reports only two-valued items.
    for (const auto& m : u_minimal_stable_trap_spaces(parse_program("a :- not b."))) {
        CHECK(m.undefined_count() == 0);
    }
}

TEST_CASE("percolation to a supported partial model") {
    Program p1 = parse_program(kP1);
    CHECK(percolate_to_supported_partial(p1, i3("**")) == i3("**"));
    CHECK_THROWS_AS(percolate_to_supported_partial(p1, i3("0*")), PreconditionError);

    // Cover of a strict class is already a fixpoint.
    Program p2 = parse_program(kP2);
    Completion c2 = completion(p2);
    for (const auto& cls :
         strict_classes(build_graph(p2, Kind::Supported))) {
        std::vector<Interp2> states;
        for (auto s : cls) states.push_back(Interp2{s, p2.atoms.size()});
        Interp3 cov = cover(p2, Kind::Supported, states);
        CHECK(percolate_to_supported_partial(p2, cov) == cov);
        CHECK(step_f3(c2, cov) == cov);
    }
}

TEST_CASE("minimal element filters") {
    std::vector<Interp3> items = {i3("***"), i3("01*"), i3("10*")};
    CHECK(strings(s_minimal_elements(items)) == std::vector<std::string>{"01*", "10*"});
    CHECK(strings(u_minimal_elements(items)) == std::vector<std::string>{"01*", "10*"});

    std::vector<Interp3> dup = {i3("01*"), i3("01*"), i3("***")};
    CHECK(strings(canonical_sorted(dup)) == std::vector<std::string>{"***", "01*"});
}
