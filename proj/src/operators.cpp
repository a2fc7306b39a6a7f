#include "trapsem/operators.hpp"

namespace trapsem {

Program reduct2(const Program& p, const Interp2& i) {
    Program out;
    out.atoms = p.atoms;
    for (const auto& r : p.rules) {
        bool blocked = false;
        for (int b : r.neg)
            if (i.get(b)) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        out.rules.push_back(Rule{r.head, r.pos, {}});
    }
    return out;
}

PositiveProgram3 reduct3(const Program& p, const Interp3& i) {
    PositiveProgram3 out;
    out.n = p.atoms.size();
    for (const auto& r : p.rules) {
        bool blocked = false;
        bool undef = false;
        for (int b : r.neg) {
            V3 v = i.at(b);
            if (v == V3::T) {
                blocked = true;
                break;
            }
            if (v == V3::U) undef = true; // survives as the special atom u
        }
        if (blocked) continue;
        out.rules.push_back(PosRule3{r.head, r.pos, undef});
    }
    return out;
}

Interp2 least2(const Program& positive) {
    const int n = positive.atoms.size();
    Interp2 i{0, n};
    for (int round = 0; round <= n; ++round) {
        std::uint32_t next = i.bits;
        for (const auto& r : positive.rules) {
            bool fire = true;
            for (int q : r.pos)
                if (!((i.bits >> q) & 1u)) {
                    fire = false;
                    break;
                }
            if (fire) next |= 1u << r.head;
        }
        if (next == i.bits) break;
        i.bits = next;
    }
    return i;
}

Interp3 least3(const PositiveProgram3& pp) {
    // Jacobi-style ascending iteration under the truth order from all-false;
    // the operator is monotone, so this reaches the least model.
    const int n = pp.n;
    std::vector<V3> cur(static_cast<std::size_t>(n), V3::F);
    for (int round = 0; round <= 2 * n + 1; ++round) {
        std::vector<V3> next(static_cast<std::size_t>(n), V3::F);
        for (const auto& r : pp.rules) {
            V3 body = r.undef_body ? V3::U : V3::T;
            for (int q : r.pos) body = and3(body, cur[static_cast<std::size_t>(q)]);
            auto& h = next[static_cast<std::size_t>(r.head)];
            h = or3(h, body);
        }
        if (next == cur) break;
        cur = std::move(next);
    }
    Interp3 out{0, 0, n};
    for (int a = 0; a < n; ++a) out.set(a, cur[static_cast<std::size_t>(a)]);
    return out;
}

Interp2 step_F(const Program& p, const Interp2& i) {
    return least2(reduct2(p, i));
}

Interp2 step_T(const Completion& c, const Interp2& i) {
    Interp2 out{0, c.n};
    for (int a = 0; a < c.n; ++a)
        if (eval_rhs2(c, a, i)) out.bits |= 1u << a;
    return out;
}

Interp2 step_T(const Program& p, const Interp2& i) {
    return step_T(completion(p), i);
}

Interp3 step_f3(const Completion& c, const Interp3& i) {
    Interp3 out{0, 0, c.n};
    for (int a = 0; a < c.n; ++a) out.set(a, eval_rhs3(c, a, i));
    return out;
}

} // namespace trapsem
