// Command-line workbench over the trapsem C API. Only trapsem.h is used here;
// everything semantic lives behind the shared library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "trapsem.h"

namespace {

// Exit codes: 0 success, 1 usage, 2 parse error, 3 resource cap, 4 check false.
int exit_code(trapsem_status st) {
    switch (st) {
        case TRAPSEM_OK: return 0;
        case TRAPSEM_ERR_PARSE: return 2;
        case TRAPSEM_ERR_CAP: return 3;
        case TRAPSEM_ERR_CHECK: return 4;
        default: return 1;
    }
}

int fail(trapsem_status st) {
    std::cerr << "error: " << trapsem_last_error() << "\n";
    return exit_code(st);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ProgramHandle {
    trapsem_program* p = nullptr;
    ~ProgramHandle() { trapsem_program_free(p); }
};

struct StringOut {
    char* s = nullptr;
    ~StringOut() { trapsem_string_free(s); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trap space semantics workbench for ground normal logic programs"};
    app.require_subcommand(1);

    trapsem_options opts;
    trapsem_options_init(&opts);
    app.add_option("--max-atoms-graph", opts.max_atoms_graph, "transition-graph atom cap");
    app.add_option("--max-atoms-enum3", opts.max_atoms_enum3, "3^n enumeration atom cap");
    app.add_option("--max-lfp-rules", opts.max_lfp_rules, "lfp transformation rule cap");

    std::string file, kind = "stable", format = "json", parse_format = "text";
    std::string states, semantics, method = "direct";
    std::string interp, property, mode, corpus;
    bool strict = false, minimal = false, u_minimal = false, all = false;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "program file")->required();
    };

    auto* cmd_parse = app.add_subcommand("parse", "parse and print the canonical program");
    add_file(cmd_parse);
    cmd_parse->add_option("--format", parse_format, "text|json");

    auto* cmd_completion = app.add_subcommand("completion", "per-atom completion disjuncts");
    add_file(cmd_completion);

    auto* cmd_lfp = app.add_subcommand("lfp", "least-fixpoint transformation");
    add_file(cmd_lfp);

    auto* cmd_graph = app.add_subcommand("graph", "materialize the transition graph");
    add_file(cmd_graph);
    cmd_graph->add_option("--kind", kind, "stable|supported")->required();
    cmd_graph->add_option("--format", format, "dot|json")->default_val("json");

    auto* cmd_classes = app.add_subcommand("classes", "strict classes (terminal cycles)");
    add_file(cmd_classes);
    cmd_classes->add_option("--kind", kind, "stable|supported")->required();
    cmd_classes->add_flag("--strict", strict, "strict classes only");

    auto* cmd_ts = app.add_subcommand("trapspaces", "enumerate or minimize trap spaces");
    add_file(cmd_ts);
    cmd_ts->add_option("--kind", kind, "stable|supported")->required();
    cmd_ts->add_flag("--all", all, "all trap spaces (3^n scan)");
    cmd_ts->add_flag("--minimal", minimal, "<=s-minimal trap spaces");
    cmd_ts->add_flag("--u-minimal", u_minimal, "<=u-minimal stable trap spaces");

    auto* cmd_cover = app.add_subcommand("cover", "smallest trap space covering the states");
    add_file(cmd_cover);
    cmd_cover->add_option("--kind", kind, "stable|supported")->required();
    cmd_cover->add_option("--states", states, "comma-separated state list")->required();

    auto* cmd_models = app.add_subcommand("models", "enumerate models of one semantics");
    add_file(cmd_models);
    cmd_models->add_option("--semantics", semantics,
                           "stable|supported|stable-partial|supported-partial|regular|l-stable")
        ->required();
    cmd_models->add_option("--method", method, "direct|trap|oracle")->default_val("direct");

    auto* cmd_check = app.add_subcommand("check", "evaluate one predicate");
    add_file(cmd_check);
    cmd_check->add_option("--property", property, "predicate name")->required();
    cmd_check->add_option("--interp", interp, "interpretation or state list")->required();
    cmd_check->add_option("--kind", kind, "stable|supported (set-valued properties)");

    auto* cmd_verify = app.add_subcommand("verify", "run the property suite over a corpus");
    cmd_verify->add_option("--corpus", corpus, "JSON corpus config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_verify->parsed()) {
            StringOut report;
            int failures = 0;
            trapsem_status st = trapsem_verify(read_file(corpus).c_str(), &report.s, &failures);
            if (st != TRAPSEM_OK) return fail(st);
            std::cout << report.s;
            if (failures > 0) {
                std::cerr << "error: " << failures << " property check(s) failed\n";
                return 4;
            }
            return 0;
        }

        ProgramHandle prog;
        {
            trapsem_status st = trapsem_parse(read_file(file).c_str(), &prog.p);
            if (st != TRAPSEM_OK) return fail(st);
        }

        StringOut out;
        trapsem_status st = TRAPSEM_OK;
        if (cmd_parse->parsed()) {
            st = parse_format == "json" ? trapsem_program_json(prog.p, &out.s)
                                        : trapsem_pretty(prog.p, &out.s);
        } else if (cmd_completion->parsed()) {
            st = trapsem_completion_json(prog.p, &out.s);
        } else if (cmd_lfp->parsed()) {
            st = trapsem_lfp(prog.p, &opts, &out.s);
        } else if (cmd_graph->parsed()) {
            st = trapsem_graph(prog.p, kind.c_str(), format.c_str(), &opts, &out.s);
        } else if (cmd_classes->parsed()) {
            st = trapsem_classes(prog.p, kind.c_str(), strict ? 1 : 0, &opts, &out.s);
        } else if (cmd_ts->parsed()) {
            int picked = (all ? 1 : 0) + (minimal ? 1 : 0) + (u_minimal ? 1 : 0);
            if (picked != 1) {
                std::cerr << "error: pick exactly one of --all, --minimal, --u-minimal\n";
                return 1;
            }
            const char* m = all ? "all" : minimal ? "minimal" : "u-minimal";
            st = trapsem_trap_spaces(prog.p, kind.c_str(), m, &opts, &out.s);
        } else if (cmd_cover->parsed()) {
            st = trapsem_cover(prog.p, kind.c_str(), states.c_str(), &opts, &out.s);
        } else if (cmd_models->parsed()) {
            st = trapsem_models(prog.p, semantics.c_str(), method.c_str(), &opts, &out.s);
        } else if (cmd_check->parsed()) {
            int result = 0;
            st = trapsem_check(prog.p, property.c_str(), interp.c_str(),
                               kind.empty() ? nullptr : kind.c_str(), &opts, &result);
            if (st == TRAPSEM_OK || st == TRAPSEM_ERR_CHECK) {
                std::cout << (result ? "true" : "false") << "\n";
                return result ? 0 : 4;
            }
            return fail(st);
        }

        if (st != TRAPSEM_OK) return fail(st);
        if (out.s) {
            std::cout << out.s;
            // JSON dumps come back without a trailing newline.
            std::string_view sv(out.s);
            if (!sv.empty() && sv.back() != '\n') std::cout << "\n";
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
