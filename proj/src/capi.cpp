#include "trapsem.h"

#include <algorithm>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "trapsem/semantics.hpp"
#include "trapsem/verify.hpp"

using namespace trapsem;

struct trapsem_program {
    Program p;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

trapsem_options effective(const trapsem_options* opts) {
    trapsem_options o;
    trapsem_options_init(&o);
    if (opts) o = *opts;
    return o;
}

template <typename Fn>
trapsem_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return TRAPSEM_ERR_PARSE;
    } catch (const CapError& e) {
        g_last_error = e.what();
        return TRAPSEM_ERR_CAP;
    } catch (const Error& e) {
        g_last_error = e.what();
        return TRAPSEM_ERR_USAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TRAPSEM_ERR_INTERNAL;
    }
}

nlohmann::json items_json(const std::vector<Interp3>& items) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : items) arr.push_back(to_string(i));
    return arr;
}

std::vector<Interp2> parse_state_list(const Program& p, const char* states) {
    if (!states || !*states) throw InvalidArgError("expected a comma-separated state list");
    std::vector<Interp2> out;
    std::string_view sv(states);
    // Explicit-form states contain '=' and ',' internally, so the list
    // separator for those is ';'.
    const char sep = sv.find('=') == std::string_view::npos ? ',' : ';';
    std::size_t pos = 0;
    while (pos <= sv.size()) {
        std::size_t end = sv.find(sep, pos);
        if (end == std::string_view::npos) end = sv.size();
        std::string_view item = sv.substr(pos, end - pos);
        if (!item.empty()) out.push_back(parse_interp2(p.atoms, item));
        if (end == sv.size()) break;
        pos = end + 1;
    }
    if (out.empty()) throw InvalidArgError("expected a comma-separated state list");
    return out;
}

} // namespace

extern "C" {

void trapsem_options_init(trapsem_options* opts) {
    if (!opts) return;
    opts->max_atoms_graph = kDefaultGraphAtomCap;
    opts->max_atoms_enum3 = kDefaultEnum3AtomCap;
    opts->max_lfp_rules = kDefaultLfpRuleCap;
}

const char* trapsem_last_error(void) {
    return g_last_error.c_str();
}

void trapsem_string_free(char* s) {
    delete[] s;
}

trapsem_status trapsem_parse(const char* text, trapsem_program** out) {
    return guarded([&]() {
        if (!text || !out) throw InvalidArgError("null argument");
        auto* handle = new trapsem_program{parse_program(text)};
        *out = handle;
        return TRAPSEM_OK;
    });
}

void trapsem_program_free(trapsem_program* p) {
    delete p;
}

int trapsem_atom_count(const trapsem_program* p) {
    return p ? p->p.atoms.size() : 0;
}

int trapsem_rule_count(const trapsem_program* p) {
    return p ? static_cast<int>(p->p.rules.size()) : 0;
}

int trapsem_is_uni_rule(const trapsem_program* p) {
    return p && is_uni_rule(p->p) ? 1 : 0;
}

trapsem_status trapsem_pretty(const trapsem_program* p, char** out) {
    return guarded([&]() {
        if (!p || !out) throw InvalidArgError("null argument");
        *out = dup_string(pretty(p->p));
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_program_json(const trapsem_program* p, char** out) {
    return guarded([&]() {
        if (!p || !out) throw InvalidArgError("null argument");
        nlohmann::json j;
        j["atoms"] = p->p.atoms.names();
        nlohmann::json rules = nlohmann::json::array();
        auto sorted = p->p.rules;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& r : sorted) {
            nlohmann::json jr;
            jr["head"] = p->p.atoms.name(r.head);
            jr["pos"] = nlohmann::json::array();
            jr["neg"] = nlohmann::json::array();
            for (int a : r.pos) jr["pos"].push_back(p->p.atoms.name(a));
            for (int a : r.neg) jr["neg"].push_back(p->p.atoms.name(a));
            rules.push_back(jr);
        }
        j["rules"] = rules;
        *out = dup_string(j.dump());
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_completion_json(const trapsem_program* p, char** out) {
    return guarded([&]() {
        if (!p || !out) throw InvalidArgError("null argument");
        const Completion c = completion(p->p);
        nlohmann::json j;
        j["atoms"] = p->p.atoms.names();
        nlohmann::json rhs = nlohmann::json::object();
        for (int a = 0; a < c.n; ++a) {
            nlohmann::json disjuncts = nlohmann::json::array();
            for (const auto& d : c.rhs[static_cast<std::size_t>(a)]) {
                nlohmann::json jd;
                jd["pos"] = nlohmann::json::array();
                jd["neg"] = nlohmann::json::array();
                for (int q : d.pos) jd["pos"].push_back(p->p.atoms.name(q));
                for (int q : d.neg) jd["neg"].push_back(p->p.atoms.name(q));
                disjuncts.push_back(jd);
            }
            rhs[p->p.atoms.name(a)] = disjuncts;
        }
        j["rhs"] = rhs;
        *out = dup_string(j.dump());
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_lfp(const trapsem_program* p, const trapsem_options* opts, char** out) {
    return guarded([&]() {
        if (!p || !out) throw InvalidArgError("null argument");
        const auto o = effective(opts);
        *out = dup_string(pretty(lfp_transform(p->p, o.max_lfp_rules)));
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_graph(const trapsem_program* p, const char* kind, const char* format,
                             const trapsem_options* opts, char** out) {
    return guarded([&]() {
        if (!p || !kind || !format || !out) throw InvalidArgError("null argument");
        const auto o = effective(opts);
        TransitionGraph g = build_graph(p->p, kind_from_name(kind), o.max_atoms_graph);
        std::string_view fmt(format);
        if (fmt == "dot")
            *out = dup_string(to_dot(g));
        else if (fmt == "json")
            *out = dup_string(graph_json(g, p->p.atoms));
        else
            throw InvalidArgError("unknown format '" + std::string(fmt) + "' (expected dot|json)");
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_classes(const trapsem_program* p, const char* kind, int strict_only,
                               const trapsem_options* opts, char** out) {
    return guarded([&]() {
        if (!p || !kind || !out) throw InvalidArgError("null argument");
        if (!strict_only)
            throw InvalidArgError("only strict-class enumeration is supported (pass --strict)");
        const auto o = effective(opts);
        TransitionGraph g = build_graph(p->p, kind_from_name(kind), o.max_atoms_graph);
        nlohmann::json j;
        j["kind"] = kind_name(g.kind);
        j["atoms"] = p->p.atoms.names();
        nlohmann::json classes = nlohmann::json::array();
        for (const auto& cls : strict_classes(g)) {
            nlohmann::json states = nlohmann::json::array();
            for (std::uint32_t v : cls) states.push_back(to_string(Interp2{v, g.n}));
            classes.push_back(states);
        }
        j["classes"] = classes;
        *out = dup_string(j.dump());
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_trap_spaces(const trapsem_program* p, const char* kind, const char* mode,
                                   const trapsem_options* opts, char** out) {
    return guarded([&]() {
        if (!p || !kind || !mode || !out) throw InvalidArgError("null argument");
        const auto o = effective(opts);
        const Kind k = kind_from_name(kind);
        std::string_view m(mode);
        std::vector<Interp3> items;
        std::string method;
        if (m == "all") {
            items = enumerate_trap_spaces(p->p, k, o.max_atoms_enum3);
            method = "local";
        } else if (m == "minimal") {
            items = minimal_trap_spaces(p->p, k, o.max_atoms_graph);
            method = "percolation";
        } else if (m == "u-minimal") {
            if (k != Kind::Stable)
                throw InvalidArgError("u-minimal trap spaces are defined for kind=stable");
            items = u_minimal_stable_trap_spaces(p->p, o.max_atoms_graph);
            method = "percolation";
        } else {
            throw InvalidArgError("unknown mode '" + std::string(m) +
                                  "' (expected all|minimal|u-minimal)");
        }
        nlohmann::json j;
        j["kind"] = kind_name(k);
        j["method"] = method;
        j["items"] = items_json(items);
        j["atoms"] = p->p.atoms.names();
        *out = dup_string(j.dump());
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_cover(const trapsem_program* p, const char* kind, const char* states,
                             const trapsem_options* opts, char** out) {
    return guarded([&]() {
        if (!p || !kind || !states || !out) throw InvalidArgError("null argument");
        (void)opts; // cover itself has no tunable cap
        const Kind k = kind_from_name(kind);
        auto list = parse_state_list(p->p, states);
        Interp3 result = cover(p->p, k, list);
        nlohmann::json j;
        j["kind"] = kind_name(k);
        j["method"] = "percolation";
        j["items"] = nlohmann::json::array({to_string(result)});
        j["atoms"] = p->p.atoms.names();
        *out = dup_string(j.dump());
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_models(const trapsem_program* p, const char* semantics,
                              const char* method, const trapsem_options* opts, char** out) {
    return guarded([&]() {
        if (!p || !semantics || !method || !out) throw InvalidArgError("null argument");
        const auto o = effective(opts);
        const Semantics sem = semantics_from_name(semantics);
        const Method m = method_from_name(method);
        auto items = enumerate_models(p->p, sem, m, kDefaultScan2AtomCap, o.max_atoms_enum3,
                                      o.max_atoms_graph);
        nlohmann::json j;
        j["semantics"] = semantics_name(sem);
        j["method"] = method_name(m);
        j["items"] = items_json(items);
        j["count"] = items.size();
        if (sem == Semantics::Stable || sem == Semantics::Supported) {
            // Two-valued semantics additionally report true-atom sets.
            nlohmann::json sets = nlohmann::json::array();
            for (const auto& i : items) {
                nlohmann::json s = nlohmann::json::array();
                for (int a = 0; a < i.n; ++a)
                    if (i.at(a) == V3::T) s.push_back(p->p.atoms.name(a));
                sets.push_back(s);
            }
            j["true_atoms"] = sets;
        }
        j["atoms"] = p->p.atoms.names();
        *out = dup_string(j.dump());
        return TRAPSEM_OK;
    });
}

trapsem_status trapsem_check(const trapsem_program* p, const char* property, const char* arg,
                             const char* kind, const trapsem_options* opts, int* result) {
    return guarded([&]() {
        if (!p || !property || !arg || !result) throw InvalidArgError("null argument");
        const auto o = effective(opts);
        const Program& prog = p->p;
        std::string_view prop(property);
        bool value = false;

        auto need_graph = [&]() {
            if (!kind || !*kind)
                throw InvalidArgError("property '" + std::string(prop) + "' requires --kind");
            return build_graph(prog, kind_from_name(kind), o.max_atoms_graph);
        };

        if (prop == "supported-trap-space") {
            value = is_supported_trap_space(prog, parse_interp3(prog.atoms, arg));
        } else if (prop == "stable-trap-space") {
            value = is_stable_trap_space(prog, parse_interp3(prog.atoms, arg));
        } else if (prop == "stable-model") {
            value = is_stable_model(prog, parse_interp2(prog.atoms, arg));
        } else if (prop == "supported-model") {
            value = is_supported_model(prog, parse_interp2(prog.atoms, arg));
        } else if (prop == "stable-partial") {
            value = is_stable_partial(prog, parse_interp3(prog.atoms, arg));
        } else if (prop == "supported-partial") {
            value = is_supported_partial(prog, parse_interp3(prog.atoms, arg));
        } else if (prop == "trap-set" || prop == "class" || prop == "strict-class") {
            TransitionGraph g = need_graph();
            StateSet s;
            for (const auto& i2 : parse_state_list(prog, arg)) s.push_back(i2.bits);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (prop == "trap-set")
                value = is_trap_set(g, s);
            else if (prop == "class")
                value = is_class(g, s);
            else
                value = is_strict_class(g, s);
        } else {
            throw InvalidArgError("unknown property '" + std::string(prop) + "'");
        }

        *result = value ? 1 : 0;
        return value ? TRAPSEM_OK : TRAPSEM_ERR_CHECK;
    });
}

trapsem_status trapsem_verify(const char* corpus_json, char** report, int* failures) {
    return guarded([&]() {
        if (!corpus_json || !report || !failures) throw InvalidArgError("null argument");
        CorpusReport rep = verify_corpus(corpus_json);
        std::string text;
        for (const auto& line : rep.lines) {
            text += line;
            text += '\n';
        }
        *report = dup_string(text);
        *failures = rep.failures;
        return TRAPSEM_OK;
    });
}

} // extern "C"
