#include "trapsem/verify.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trapsem/semantics.hpp"

namespace trapsem {

namespace {

constexpr int kScan3Cap = 7;  // full 3^n sweeps
constexpr int kCoverCap = 5;  // all state subsets of size <= 3
constexpr int kGraphCap = 12; // 2^n graphs inside the suite

struct Checker {
    const Program& p;
    std::vector<PropertyResult>& out;

    void report(const std::string& name, bool pass, std::string detail = {}) {
        out.push_back(PropertyResult{name, pass, pass ? std::string() : std::move(detail)});
    }
};

std::vector<Interp3> all_interp3(int n) {
    std::vector<Interp3> out;
    Interp3 i = Interp3::all_undefined(n);
    for (int a = 0; a < n; ++a) i.set(a, V3::F);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(i);
        int a = 0;
        for (; a < n; ++a) {
            auto& d = digits[static_cast<std::size_t>(a)];
            if (++d < 3) {
                i.set(a, static_cast<V3>(d));
                break;
            }
            d = 0;
            i.set(a, V3::F);
        }
        if (a == n) break;
    }
    return out;
}

bool subset(const std::vector<Interp3>& small, const std::vector<Interp3>& big) {
    for (const auto& x : small)
        if (std::find(big.begin(), big.end(), x) == big.end()) return false;
    return true;
}

} // namespace

std::vector<PropertyResult> verify_program(const Program& p) {
    std::vector<PropertyResult> out;
    Checker ck{p, out};
    const int n = p.atoms.size();
    if (n > kGraphCap) {
        ck.report("graph-cap", false, "program too large for the verification suite");
        return out;
    }

    const Completion comp = completion(p);
    const Program lfp = lfp_transform(p);
    const Completion comp_lfp = completion(lfp);
    const TransitionGraph g_st = build_graph(p, Kind::Stable, kGraphCap);
    const TransitionGraph g_sp = build_graph(p, Kind::Supported, kGraphCap);
    const TransitionGraph g_st_lfp = build_graph(lfp, Kind::Stable, kGraphCap);
    const TransitionGraph g_sp_lfp = build_graph(lfp, Kind::Supported, kGraphCap);

    // lfp invariance of the stable transition graph.
    ck.report("lfp-stable-graph-invariant", g_st.succ == g_st_lfp.succ);
    // Negative programs: the two operators coincide pointwise.
    if (is_negative(p))
        ck.report("negative-graphs-coincide", g_st.succ == g_sp.succ);
    ck.report("negative-lfp-graphs-coincide", g_st_lfp.succ == g_sp_lfp.succ);

    // Two independent cycle finders agree.
    for (const auto* g : {&g_st, &g_sp}) {
        auto a = strict_classes(*g);
        auto b = strict_classes_pointer_chase(*g);
        ck.report(std::string("cycle-finders-agree-") + kind_name(g->kind), a == b);
    }

    for (Kind kind : {Kind::Stable, Kind::Supported}) {
        const TransitionGraph& g = kind == Kind::Stable ? g_st : g_sp;
        auto classes = strict_classes(g);
        ck.report(std::string("strict-class-exists-") + kind_name(kind), !classes.empty());

        bool all_strict = true, disjoint = true;
        std::vector<std::uint32_t> seen;
        for (const auto& cls : classes) {
            if (!is_strict_class(g, cls)) all_strict = false;
            for (std::uint32_t v : cls) {
                if (std::find(seen.begin(), seen.end(), v) != seen.end()) disjoint = false;
                seen.push_back(v);
            }
        }
        ck.report(std::string("strict-classes-pass-check-") + kind_name(kind), all_strict);
        ck.report(std::string("strict-classes-disjoint-") + kind_name(kind), disjoint);

        // Orbit closures are trap sets.
        bool closures_trap = true;
        for (std::uint32_t s = 0; s < g.num_states(); ++s)
            if (!is_trap_set(g, orbit_closure(g, s))) closures_trap = false;
        ck.report(std::string("orbit-closure-trap-set-") + kind_name(kind), closures_trap);

        // Cover of each strict class is a trap space of the matching kind,
        // and a partial model of the kind whenever it also meets the Kleene
        // condition (always the case for the stable kind: lfp programs are
        // negative, where the two evaluations coincide).
        bool covers_ok = true;
        const Completion& kc = kind == Kind::Stable ? comp_lfp : comp;
        for (const auto& cls : classes) {
            std::vector<Interp2> states;
            for (std::uint32_t v : cls) states.push_back(Interp2{v, n});
            Interp3 cov = cover(p, kind, states);
            if (!is_supported_trap_space(kc, cov)) covers_ok = false;
            if (is_kleene_supported_trap_space(kc, cov)) {
                bool pm = kind == Kind::Stable ? is_stable_partial(p, cov)
                                               : is_supported_partial(p, cov);
                if (!pm) covers_ok = false;
            } else if (kind == Kind::Stable) {
                covers_ok = false;
            }
        }
        ck.report(std::string("strict-class-cover-trap-space-") + kind_name(kind),
                  covers_ok);

        // Distinct minimal trap spaces are pairwise inconsistent.
        auto mins = minimal_trap_spaces(p, kind, kGraphCap);
        bool pairwise_inconsistent = true;
        for (std::size_t a = 0; a < mins.size(); ++a)
            for (std::size_t b = a + 1; b < mins.size(); ++b)
                if (consistent(mins[a], mins[b])) pairwise_inconsistent = false;
        ck.report(std::string("minimal-trap-spaces-inconsistent-") + kind_name(kind),
                  pairwise_inconsistent);
    }

    // Model-set inclusions.
    {
        auto stm = enumerate_models(p, Semantics::Stable, Method::Direct);
        auto sum = enumerate_models(p, Semantics::Supported, Method::Direct);
        ck.report("StM-subset-SuM", subset(stm, sum));
    }
    auto regular_direct = enumerate_models(p, Semantics::Regular, Method::Direct);
    auto regular_trap = enumerate_models(p, Semantics::Regular, Method::Trap);
    ck.report("regular-exists", !regular_trap.empty());
    ck.report("regular-trap-equals-direct", regular_trap == regular_direct);

    auto lstable_direct = enumerate_models(p, Semantics::LStable, Method::Direct);
    auto lstable_trap = enumerate_models(p, Semantics::LStable, Method::Trap);
    ck.report("l-stable-exists", !lstable_trap.empty());
    ck.report("l-stable-trap-equals-direct", lstable_trap == lstable_direct);

    if (n <= kScan3Cap) {
        auto stpm = enumerate_models(p, Semantics::StablePartial, Method::Direct);
        auto supm = enumerate_models(p, Semantics::SupportedPartial, Method::Direct);
        ck.report("StPM-subset-SuPM", subset(stpm, supm));

        // Partial models are trap spaces of the matching kind.
        bool stpm_are_ts = true, supm_are_ts = true;
        for (const auto& m : stpm)
            if (!is_supported_trap_space(comp_lfp, m)) stpm_are_ts = false;
        for (const auto& m : supm)
            if (!is_supported_trap_space(comp, m)) supm_are_ts = false;
        ck.report("StPM-are-stable-trap-spaces", stpm_are_ts);
        ck.report("SuPM-are-supported-trap-spaces", supm_are_ts);

        // Minimal stable trap spaces = <=s-minimal stable partial models. The
        // supported-kind analogue fails: a minimal supported trap space that
        // misses the Kleene condition need not be a partial model.
        ck.report("min-stable-trap-spaces-equal-min-StPM",
                  minimal_trap_spaces(p, Kind::Stable, kGraphCap) ==
                      s_minimal_elements(stpm));

        // Local characterization vs closure oracle, both kinds, all 3^n inputs;
        // plus: every trap space's cube contains a strict class, and f_P
        // converges on every supported trap space.
        auto st_classes = strict_classes(g_st);
        auto sp_classes = strict_classes(g_sp);
        bool local_matches = true, contains_class = true, f_converges = true,
             kleene_implies_ts = true;
        for (const Interp3& i : all_interp3(n)) {
            bool sp_local = is_supported_trap_space(comp, i);
            bool st_local = is_supported_trap_space(comp_lfp, i);
            if (sp_local != oracle_trap_space(p, Kind::Supported, i)) local_matches = false;
            if (st_local != oracle_trap_space(p, Kind::Stable, i)) local_matches = false;

            auto contains_one = [&](const std::vector<StateSet>& classes) {
                for (const auto& cls : classes) {
                    bool all_in = true;
                    for (std::uint32_t v : cls)
                        if (!cset_contains(i, Interp2{v, n})) {
                            all_in = false;
                            break;
                        }
                    if (all_in) return true;
                }
                return false;
            };
            if (sp_local && !contains_one(sp_classes)) contains_class = false;
            if (st_local && !contains_one(st_classes)) contains_class = false;

            if (is_kleene_supported_trap_space(comp, i)) {
                if (!sp_local) kleene_implies_ts = false;
                Interp3 fix = percolate_to_supported_partial(comp, i);
                if (!is_supported_partial(p, fix) || !leq_s(fix, i)) f_converges = false;
            }
        }
        ck.report("local-check-equals-closure-oracle", local_matches);
        ck.report("trap-space-contains-strict-class", contains_class);
        ck.report("kleene-condition-implies-trap-space", kleene_implies_ts);
        ck.report("f_P-convergence-on-kleene-trap-spaces", f_converges);
    }

    if (n <= kCoverCap) {
        // Percolation cover vs intersection oracle on all subsets of size <= 3.
        bool covers_match = true;
        const std::uint32_t states = 1u << n;
        for (std::uint32_t a = 0; a < states && covers_match; ++a)
            for (std::uint32_t b = a; b < states && covers_match; ++b)
                for (std::uint32_t c = b; c < states && covers_match; ++c) {
                    std::vector<Interp2> s{{a, n}, {b, n}, {c, n}};
                    for (Kind kind : {Kind::Stable, Kind::Supported})
                        if (cover(p, kind, s) != oracle_cover(p, kind, s, kCoverCap))
                            covers_match = false;
                }
        ck.report("percolation-cover-equals-oracle-cover", covers_match);
    }

    return out;
}

CorpusReport verify_corpus(const std::string& corpus_json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(corpus_json);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgError(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw InvalidArgError("corpus must be a JSON array of generator configs");

    CorpusReport rep;
    int idx = 0;
    for (const auto& item : j) {
        GenConfig cfg;
        cfg.seed = item.value("seed", cfg.seed);
        cfg.n_atoms = item.value("n_atoms", cfg.n_atoms);
        cfg.n_rules = item.value("n_rules", cfg.n_rules);
        cfg.max_body = item.value("max_body", cfg.max_body);
        cfg.neg_prob = item.value("neg_prob", cfg.neg_prob);

        Program p = gen_program(cfg);
        for (const PropertyResult& r : verify_program(p)) {
            std::ostringstream line;
            line << "program " << idx << " (seed=" << cfg.seed << "): " << r.property << ": "
                 << (r.pass ? "PASS" : "FAIL");
            if (!r.pass && !r.detail.empty()) line << " (" << r.detail << ")";
            rep.lines.push_back(line.str());
            if (!r.pass) ++rep.failures;
        }
        ++idx;
    }
    return rep;
}

} // namespace trapsem
