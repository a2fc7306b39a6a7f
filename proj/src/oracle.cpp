#include "trapsem/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace trapsem {

bool oracle_trap_space(const Program& p, Kind kind, const Interp3& i, int max_undefined) {
    const Completion c = kind == Kind::Supported ? completion(p) : Completion{};
    for (const Interp2& member : cset_members(i, max_undefined)) {
        Interp2 next = kind == Kind::Stable ? step_F(p, member) : step_T(c, member);
        if (!cset_contains(i, next)) return false;
    }
    return true;
}

Interp3 oracle_cover(const Program& p, Kind kind, std::span<const Interp2> states,
                     int max_atoms) {
    if (states.empty()) throw InvalidArgError("cover requires a non-empty state list");
    const int n = p.atoms.size();
    if (n > max_atoms)
        throw CapError("program has " + std::to_string(n) +
                       " atoms, above the oracle cover cap of " + std::to_string(max_atoms));

    // Scan all 3^n interpretations with the closure oracle; intersect those
    // whose cube contains every requested state.
    std::vector<Interp3> covering;
    Interp3 i = Interp3::all_undefined(n);
    for (int a = 0; a < n; ++a) i.set(a, V3::F);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        bool covers = true;
        for (const Interp2& s : states)
            if (!cset_contains(i, s)) {
                covers = false;
                break;
            }
        if (covers && oracle_trap_space(p, kind, i, max_atoms)) covering.push_back(i);
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
    if (covering.empty())
        throw InvalidArgError("no trap space covers the given states"); // cannot happen: all-U covers
    return intersect(covering, &p.atoms);
}

Program gen_program(const GenConfig& cfg) {
    if (cfg.n_atoms < 0 || cfg.n_atoms > 26 || cfg.n_rules < 0 || cfg.max_body < 0)
        throw InvalidArgError("generator config out of range");
    std::mt19937_64 rng(cfg.seed);

    std::vector<std::string> names;
    for (int a = 0; a < cfg.n_atoms; ++a)
        names.push_back(std::string(1, static_cast<char>('a' + a)));

    std::ostringstream text;
    bool any_negative = false;
    for (int k = 0; k < cfg.n_rules && cfg.n_atoms > 0; ++k) {
        int head = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n_atoms));
        int body_len = cfg.max_body > 0
                           ? static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_body + 1))
                           : 0;
        body_len = std::min(body_len, cfg.n_atoms);

        // Sample body atoms without replacement.
        std::vector<int> pool(static_cast<std::size_t>(cfg.n_atoms));
        for (int a = 0; a < cfg.n_atoms; ++a) pool[static_cast<std::size_t>(a)] = a;
        std::shuffle(pool.begin(), pool.end(), rng);

        text << names[static_cast<std::size_t>(head)];
        if (body_len > 0) {
            text << " :- ";
            for (int j = 0; j < body_len; ++j) {
                if (j > 0) text << ", ";
                bool negated =
                    std::uniform_real_distribution<double>(0.0, 1.0)(rng) < cfg.neg_prob;
                if (negated) {
                    text << "not ";
                    any_negative = true;
                }
                text << names[static_cast<std::size_t>(pool[static_cast<std::size_t>(j)])];
            }
        }
        text << ".\n";
    }
    // Bias: never emit a purely positive corpus when negation was requested.
    if (cfg.neg_prob > 0.0 && !any_negative && cfg.n_atoms > 0 && cfg.n_rules > 0) {
        int head = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n_atoms));
        int body = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n_atoms));
        text << names[static_cast<std::size_t>(head)] << " :- not "
             << names[static_cast<std::size_t>(body)] << ".\n";
    }

    return parse_program(text.str());
}

} // namespace trapsem
