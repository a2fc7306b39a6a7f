#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "trapsem.h"

namespace {

struct Handle {
    trapsem_program* p = nullptr;
    ~Handle() { trapsem_program_free(p); }
};

struct Out {
    char* s = nullptr;
    ~Out() { trapsem_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

const char* kP1 = "a :- b.\nb :- a.";
const char* kP2 = "a :- not b.\nb :- not a.\nc :- not c.";

} // namespace

TEST_CASE("parse and inspect") {
    Handle h;
    REQUIRE(trapsem_parse(kP2, &h.p) == TRAPSEM_OK);
    CHECK(trapsem_atom_count(h.p) == 3);
    CHECK(trapsem_rule_count(h.p) == 3);
    CHECK(trapsem_is_uni_rule(h.p) == 1);

    Out text;
    REQUIRE(trapsem_pretty(h.p, &text.s) == TRAPSEM_OK);
    CHECK(text.str() == "a :- not b.\nb :- not a.\nc :- not c.\n");
}

TEST_CASE("error reporting") {
    trapsem_program* p = nullptr;
    CHECK(trapsem_parse("a :- .", &p) == TRAPSEM_ERR_PARSE);
    CHECK(p == nullptr);
    std::string msg = trapsem_last_error();
    CHECK(msg.find("parse error") != std::string::npos);

    Handle h;
    REQUIRE(trapsem_parse(kP2, &h.p) == TRAPSEM_OK);
    trapsem_options opts;
    trapsem_options_init(&opts);
    CHECK(opts.max_atoms_graph == 16);
    CHECK(opts.max_atoms_enum3 == 12);
    CHECK(opts.max_lfp_rules == 100000);

    opts.max_atoms_graph = 1;
    Out g;
    CHECK(trapsem_graph(h.p, "stable", "json", &opts, &g.s) == TRAPSEM_ERR_CAP);

    Out c;
    CHECK(trapsem_classes(h.p, "sideways", 1, nullptr, &c.s) == TRAPSEM_ERR_USAGE);
}

TEST_CASE("program and completion json") {
    Handle h;
    REQUIRE(trapsem_parse(kP1, &h.p) == TRAPSEM_OK);

    Out pj;
    REQUIRE(trapsem_program_json(h.p, &pj.s) == TRAPSEM_OK);
    auto j = nlohmann::json::parse(pj.str());
    CHECK(j["atoms"] == nlohmann::json({"a", "b"}));

    Out cj;
    REQUIRE(trapsem_completion_json(h.p, &cj.s) == TRAPSEM_OK);
    auto c = nlohmann::json::parse(cj.str());
    CHECK(c["rhs"].size() == 2);
}

TEST_CASE("lfp") {
    Handle h;
    REQUIRE(trapsem_parse("a :- b.\nb :- not a.", &h.p) == TRAPSEM_OK);
    Out out;
    REQUIRE(trapsem_lfp(h.p, nullptr, &out.s) == TRAPSEM_OK);
    CHECK(out.str() == "a :- not a.\nb :- not a.\n");
}

TEST_CASE("graph and classes") {
    Handle h;
    REQUIRE(trapsem_parse(kP1, &h.p) == TRAPSEM_OK);

    Out dot;
    REQUIRE(trapsem_graph(h.p, "supported", "dot", nullptr, &dot.s) == TRAPSEM_OK);
    CHECK(dot.str().find("digraph") != std::string::npos);

    Out cls;
    REQUIRE(trapsem_classes(h.p, "supported", 1, nullptr, &cls.s) == TRAPSEM_OK);
    auto j = nlohmann::json::parse(cls.str());
    CHECK(j["classes"].size() == 3);
}

TEST_CASE("trap spaces, cover, models") {
    Handle h;
    REQUIRE(trapsem_parse(kP2, &h.p) == TRAPSEM_OK);

    Out all;
    REQUIRE(trapsem_trap_spaces(h.p, "stable", "minimal", nullptr, &all.s) == TRAPSEM_OK);
    auto j = nlohmann::json::parse(all.str());
    CHECK(j["items"] == nlohmann::json({"01*", "10*"}));

    Out bad;
    CHECK(trapsem_trap_spaces(h.p, "supported", "u-minimal", nullptr, &bad.s) ==
          TRAPSEM_ERR_USAGE);

    Out cov;
    REQUIRE(trapsem_cover(h.p, "stable", "010,011", nullptr, &cov.s) == TRAPSEM_OK);
    auto cj = nlohmann::json::parse(cov.str());
    CHECK(cj["items"] == nlohmann::json({"01*"}));

    Out exp;
    REQUIRE(trapsem_cover(h.p, "stable", "a=0,b=1,c=0;a=0,b=1,c=1", nullptr, &exp.s) ==
            TRAPSEM_OK);
    CHECK(nlohmann::json::parse(exp.str())["items"] == nlohmann::json({"01*"}));

    Out mods;
    REQUIRE(trapsem_models(h.p, "stable-partial", "direct", nullptr, &mods.s) == TRAPSEM_OK);
    auto mj = nlohmann::json::parse(mods.str());
    CHECK(mj["items"] == nlohmann::json({"***", "01*", "10*"}));
}

TEST_CASE("checks") {
    Handle h;
    REQUIRE(trapsem_parse(kP2, &h.p) == TRAPSEM_OK);

    int result = -1;
    CHECK(trapsem_check(h.p, "stable-trap-space", "01*", nullptr, nullptr, &result) ==
          TRAPSEM_OK);
    CHECK(result == 1);

    CHECK(trapsem_check(h.p, "stable-model", "110", nullptr, nullptr, &result) ==
          TRAPSEM_ERR_CHECK);
    CHECK(result == 0);

    CHECK(trapsem_check(h.p, "strict-class", "000,111", "stable", nullptr, &result) ==
          TRAPSEM_OK);
    CHECK(result == 1);

    CHECK(trapsem_check(h.p, "no-such-property", "0", nullptr, nullptr, &result) ==
          TRAPSEM_ERR_USAGE);
}

TEST_CASE("verify") {
    Out report;
    int failures = -1;
    REQUIRE(trapsem_verify(R"([{"seed":5,"n_atoms":4,"n_rules":6,"max_body":2,"neg_prob":0.5}])",
                           &report.s, &failures) == TRAPSEM_OK);
    CHECK(failures == 0);
    CHECK(report.str().find("PASS") != std::string::npos);

    Out bad;
    CHECK(trapsem_verify("nonsense", &bad.s, &failures) == TRAPSEM_ERR_USAGE);
}
