#include "trapsem/semantics.hpp"

#include <algorithm>

namespace trapsem {

const char* semantics_name(Semantics s) {
    switch (s) {
        case Semantics::Stable: return "stable";
        case Semantics::Supported: return "supported";
        case Semantics::StablePartial: return "stable-partial";
        case Semantics::SupportedPartial: return "supported-partial";
        case Semantics::Regular: return "regular";
        default: return "l-stable";
    }
}

Semantics semantics_from_name(std::string_view s) {
    if (s == "stable") return Semantics::Stable;
    if (s == "supported") return Semantics::Supported;
    if (s == "stable-partial") return Semantics::StablePartial;
    if (s == "supported-partial") return Semantics::SupportedPartial;
    if (s == "regular") return Semantics::Regular;
    if (s == "l-stable") return Semantics::LStable;
    throw InvalidArgError("unknown semantics '" + std::string(s) + "'");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Direct: return "direct";
        case Method::Trap: return "trap";
        default: return "oracle";
    }
}

Method method_from_name(std::string_view s) {
    if (s == "direct") return Method::Direct;
    if (s == "trap") return Method::Trap;
    if (s == "oracle") return Method::Oracle;
    throw InvalidArgError("unknown method '" + std::string(s) + "' (expected direct|trap|oracle)");
}

bool is_stable_model(const Program& p, const Interp2& i) {
    return least2(reduct2(p, i)) == i;
}

bool is_supported_model(const Program& p, const Interp2& i) {
    return step_T(completion(p), i) == i;
}

bool is_supported_partial(const Program& p, const Interp3& i) {
    const Completion c = completion(p);
    return step_f3(c, i) == i;
}

bool is_stable_partial(const Program& p, const Interp3& i) {
    return least3(reduct3(p, i)) == i;
}

namespace {

std::vector<Interp3> scan2(const Program& p, int max_atoms,
                           bool (*check)(const Program&, const Interp2&)) {
    const int n = p.atoms.size();
    if (n > max_atoms)
        throw CapError("program has " + std::to_string(n) +
                       " atoms, above the 2^n scan cap of " + std::to_string(max_atoms));
    std::vector<Interp3> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        Interp2 i{s, n};
        if (check(p, i)) out.push_back(Interp3::from_interp2(i));
    }
    return out;
}

std::vector<Interp3> scan3(const Program& p, int max_atoms,
                           bool (*check)(const Program&, const Interp3&)) {
    const int n = p.atoms.size();
    if (n > max_atoms)
        throw CapError("program has " + std::to_string(n) +
                       " atoms, above the 3^n scan cap of " + std::to_string(max_atoms));
    std::vector<Interp3> out;
    Interp3 i = Interp3::all_undefined(n);
    for (int a = 0; a < n; ++a) i.set(a, V3::F);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        if (check(p, i)) out.push_back(i);
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

// Reducts are cheaper for lfp-transformed programs exactly once; keep the
// StablePartial scan on the program as given so the route stays primary.
std::vector<Interp3> stable_partial_scan(const Program& p, int max_atoms_3) {
    return scan3(p, max_atoms_3, &is_stable_partial);
}

} // namespace

std::vector<Interp3> enumerate_models(const Program& p, Semantics sem, Method method,
                                      int max_atoms_2, int max_atoms_3, int max_atoms_graph) {
    const bool derived = sem == Semantics::Regular || sem == Semantics::LStable;
    if (!derived && method != Method::Direct)
        throw InvalidArgError(std::string("method '") + method_name(method) +
                              "' is only available for regular and l-stable semantics");

    switch (sem) {
        case Semantics::Stable:
            return canonical_sorted(scan2(p, max_atoms_2, &is_stable_model));
        case Semantics::Supported:
            return canonical_sorted(scan2(p, max_atoms_2, &is_supported_model));
        case Semantics::StablePartial:
            return canonical_sorted(scan3(p, max_atoms_3, &is_stable_partial));
        case Semantics::SupportedPartial:
            return canonical_sorted(scan3(p, max_atoms_3, &is_supported_partial));
        case Semantics::Regular:
            switch (method) {
                case Method::Direct:
                    return s_minimal_elements(stable_partial_scan(p, max_atoms_3));
                case Method::Trap:
                    return minimal_trap_spaces(p, Kind::Stable, max_atoms_graph);
                default: // full trap-space lattice, minimized
                    return s_minimal_elements(enumerate_trap_spaces(p, Kind::Stable, max_atoms_3));
            }
        default: // LStable
            switch (method) {
                case Method::Direct:
                    return u_minimal_elements(stable_partial_scan(p, max_atoms_3));
                case Method::Trap:
                    return u_minimal_stable_trap_spaces(p, max_atoms_graph);
                default:
                    return u_minimal_elements(enumerate_trap_spaces(p, Kind::Stable, max_atoms_3));
            }
    }
}

} // namespace trapsem
