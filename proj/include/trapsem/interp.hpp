#ifndef TRAPSEM_INTERP_HPP
#define TRAPSEM_INTERP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trapsem/program.hpp"

namespace trapsem {

enum class V3 : std::uint8_t { F = 0, T = 1, U = 2 };

// Kleene negation: F <-> T, U -> U.
constexpr V3 neg3(V3 v) {
    return v == V3::U ? V3::U : (v == V3::F ? V3::T : V3::F);
}
// min / max under the truth order F < U < T.
constexpr V3 and3(V3 a, V3 b) {
    if (a == V3::F || b == V3::F) return V3::F;
    if (a == V3::U || b == V3::U) return V3::U;
    return V3::T;
}
constexpr V3 or3(V3 a, V3 b) {
    if (a == V3::T || b == V3::T) return V3::T;
    if (a == V3::U || b == V3::U) return V3::U;
    return V3::F;
}
char v3_char(V3 v);

// Total two-valued assignment over n atoms; bit a set means atom a is true.
// The bit pattern doubles as the state index in transition graphs.
struct Interp2 {
    std::uint32_t bits = 0;
    int n = 0;

    bool get(int a) const { return (bits >> a) & 1u; }
    bool operator==(const Interp2&) const = default;
};

// Total three-valued assignment in canonical form: the truth bit is zero
// wherever the defined bit is, so equality is plain bit equality.
struct Interp3 {
    std::uint32_t defined = 0;
    std::uint32_t truth = 0;
    int n = 0;

    V3 at(int a) const {
        if (!((defined >> a) & 1u)) return V3::U;
        return ((truth >> a) & 1u) ? V3::T : V3::F;
    }
    void set(int a, V3 v);
    int undefined_count() const;
    std::uint32_t undefined_mask() const;

    bool operator==(const Interp3&) const = default;

    static Interp3 all_undefined(int n) { return Interp3{0, 0, n}; }
    static Interp3 from_interp2(const Interp2& i);
};

// Compact codec over {0,1,*} in atom-table order.
std::string to_string(const Interp3& i);
std::string to_string(const Interp2& i);
Interp3 interp3_from_compact(std::string_view s);
Interp2 interp2_from_compact(std::string_view s);

// Accepts both the compact form and the explicit "a=1,b=0,c=*" form.
Interp3 parse_interp3(const AtomTable& atoms, std::string_view s);
Interp2 parse_interp2(const AtomTable& atoms, std::string_view s);

// The four pointwise orders of the three-valued domain.
bool leq_t(const Interp3& x, const Interp3& y);
bool leq_s(const Interp3& x, const Interp3& y);
bool leq_i(const Interp3& x, const Interp3& y);
bool leq_u(const Interp3& x, const Interp3& y); // iff undefined(x) subseteq undefined(y)

// C(I): the cube of two-valued interpretations agreeing with I on every
// defined atom.
bool cset_contains(const Interp3& i3, const Interp2& i2);
// All 2^u members in increasing bit-pattern order.
std::vector<Interp2> cset_members(const Interp3& i3, int max_undefined = 20);

// Pointwise comparability under <=s in some direction per atom; equivalent to
// C(x) and C(y) sharing a state.
bool consistent(const Interp3& x, const Interp3& y);

// Pointwise min under <=s (the more-defined value wins). Requires pairwise
// consistency; C(result) is the intersection of the input cubes.
Interp3 intersect(std::span<const Interp3> es, const AtomTable* atoms = nullptr);

// Kleene value of rhs(a): max over disjuncts of min over literals. An empty
// disjunct is T, an empty disjunct list is F.
V3 eval_rhs3(const Completion& c, int a, const Interp3& i);
bool eval_rhs2(const Completion& c, int a, const Interp2& i);

// Value of rhs(a) over the whole cube C(I): T or F when every completion of
// the undefined atoms agrees, U otherwise. Differs from the Kleene value on
// formulas like "not d or (c and d)", which are two-valued on every
// completion but Kleene-undefined; the cube value is the one that matches
// closure of C(I) under the step operators. Cost is 2^w for w undefined
// atoms occurring in rhs(a), after a Kleene fast path.
V3 eval_rhs3_cube(const Completion& c, int a, const Interp3& i);

} // namespace trapsem

#endif
