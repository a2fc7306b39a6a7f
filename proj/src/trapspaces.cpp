#include "trapsem/trapspaces.hpp"

#include <algorithm>

namespace trapsem {

bool is_supported_trap_space(const Completion& c, const Interp3& i) {
    // Per-atom reading of closure of C(I) under the step operator: every
    // defined atom keeps its value on the whole cube. The cube evaluation,
    // not the Kleene one, is decisive; see eval_rhs3_cube.
    for (int a = 0; a < c.n; ++a) {
        V3 have = i.at(a);
        if (have == V3::U) continue;
        if (eval_rhs3_cube(c, a, i) != have) return false;
    }
    return true;
}

bool is_supported_trap_space(const Program& p, const Interp3& i) {
    return is_supported_trap_space(completion(p), i);
}

bool is_kleene_supported_trap_space(const Completion& c, const Interp3& i) {
    for (int a = 0; a < c.n; ++a) {
        V3 have = i.at(a);
        if (have == V3::U) continue;
        if (eval_rhs3(c, a, i) != have) return false;
    }
    return true;
}

bool is_kleene_supported_trap_space(const Program& p, const Interp3& i) {
    return is_kleene_supported_trap_space(completion(p), i);
}

bool is_stable_trap_space(const Program& p, const Interp3& i) {
    return is_supported_trap_space(lfp_transform(p), i);
}

namespace {

// Join of the input states (agreeing atoms keep their value, the rest go to
// U), then percolation: any defined atom whose rhs value disagrees goes to U.
Interp3 percolate_cover(const Completion& c, std::span<const Interp2> states) {
    if (states.empty()) throw InvalidArgError("cover requires a non-empty state list");
    const int n = states[0].n;
    for (const auto& s : states)
        if (s.n != n) throw InvalidArgError("states over different atom tables");

    std::uint32_t common_true = ~0u, common_false = ~0u;
    for (const auto& s : states) {
        common_true &= s.bits;
        common_false &= ~s.bits;
    }
    Interp3 i{0, 0, n};
    for (int a = 0; a < n; ++a) {
        if ((common_true >> a) & 1u)
            i.set(a, V3::T);
        else if ((common_false >> a) & 1u)
            i.set(a, V3::F);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            V3 have = i.at(a);
            if (have == V3::U) continue;
            if (eval_rhs3_cube(c, a, i) != have) {
                i.set(a, V3::U);
                changed = true;
            }
        }
    }
    return i;
}

} // namespace

Interp3 cover(const Program& p, Kind kind, std::span<const Interp2> states) {
    const Completion c =
        kind == Kind::Supported ? completion(p) : completion(lfp_transform(p));
    return percolate_cover(c, states);
}

std::vector<Interp3> canonical_sorted(std::vector<Interp3> items) {
    std::sort(items.begin(), items.end(), [](const Interp3& a, const Interp3& b) {
        return to_string(a) < to_string(b);
    });
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

std::vector<Interp3> s_minimal_elements(std::vector<Interp3> items) {
    std::vector<Interp3> out;
    for (const auto& x : items) {
        bool minimal = true;
        for (const auto& y : items)
            if (!(y == x) && leq_s(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return canonical_sorted(std::move(out));
}

std::vector<Interp3> u_minimal_elements(std::vector<Interp3> items) {
    std::vector<Interp3> out;
    for (const auto& x : items) {
        bool minimal = true;
        for (const auto& y : items)
            if (y.undefined_mask() != x.undefined_mask() && leq_u(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return canonical_sorted(std::move(out));
}

std::vector<Interp3> minimal_trap_spaces(const Program& p, Kind kind, int max_atoms) {
    // Every <=s-minimal trap space covers a strict class, so the covers of the
    // strict classes form a complete candidate set.
    TransitionGraph g = build_graph(p, kind, max_atoms);
    const Completion c =
        kind == Kind::Supported ? completion(p) : completion(lfp_transform(p));
    std::vector<Interp3> candidates;
    for (const StateSet& cls : strict_classes(g)) {
        std::vector<Interp2> states;
        states.reserve(cls.size());
        for (std::uint32_t v : cls) states.push_back(Interp2{v, g.n});
        candidates.push_back(percolate_cover(c, states));
    }
    return s_minimal_elements(std::move(candidates));
}

std::vector<Interp3> u_minimal_stable_trap_spaces(const Program& p, int max_atoms) {
    return u_minimal_elements(minimal_trap_spaces(p, Kind::Stable, max_atoms));
}

std::vector<Interp3> enumerate_trap_spaces(const Program& p, Kind kind, int max_atoms) {
    const int n = p.atoms.size();
    if (n > max_atoms)
        throw CapError("program has " + std::to_string(n) +
                       " atoms, above the 3^n enumeration cap of " + std::to_string(max_atoms));
    const Completion c =
        kind == Kind::Supported ? completion(p) : completion(lfp_transform(p));

    std::vector<Interp3> out;
    Interp3 i = Interp3::all_undefined(n);
    for (int a = 0; a < n; ++a) i.set(a, V3::F);
    std::vector<int> digits(static_cast<std::size_t>(n), 0); // 0=F,1=T,2=U
    while (true) {
        if (is_supported_trap_space(c, i)) out.push_back(i);
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
    return canonical_sorted(std::move(out));
}

Interp3 percolate_to_supported_partial(const Completion& c, const Interp3& i) {
    if (!is_kleene_supported_trap_space(c, i))
        throw PreconditionError("interpretation is not a Kleene supported trap space");
    Interp3 cur = i;
    for (int step = 0; step <= c.n + 1; ++step) {
        Interp3 next = step_f3(c, cur);
        if (next == cur) return cur;
        cur = next;
    }
    return cur; // unreachable for trap spaces: f_P gains information each step
}

Interp3 percolate_to_supported_partial(const Program& p, const Interp3& i) {
    return percolate_to_supported_partial(completion(p), i);
}

} // namespace trapsem
