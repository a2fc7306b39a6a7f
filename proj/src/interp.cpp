#include "trapsem/interp.hpp"

#include <algorithm>
#include <bit>

namespace trapsem {

char v3_char(V3 v) {
    switch (v) {
        case V3::F: return '0';
        case V3::T: return '1';
        default: return '*';
    }
}

void Interp3::set(int a, V3 v) {
    const std::uint32_t bit = 1u << a;
    if (v == V3::U) {
        defined &= ~bit;
        truth &= ~bit;
    } else {
        defined |= bit;
        if (v == V3::T)
            truth |= bit;
        else
            truth &= ~bit;
    }
}

int Interp3::undefined_count() const {
    return std::popcount(undefined_mask());
}

std::uint32_t Interp3::undefined_mask() const {
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
    return all & ~defined;
}

Interp3 Interp3::from_interp2(const Interp2& i) {
    const std::uint32_t all = i.n == 32 ? ~0u : ((1u << i.n) - 1u);
    return Interp3{all, i.bits & all, i.n};
}

std::string to_string(const Interp3& i) {
    std::string s(static_cast<std::size_t>(i.n), '*');
    for (int a = 0; a < i.n; ++a) s[static_cast<std::size_t>(a)] = v3_char(i.at(a));
    return s;
}

std::string to_string(const Interp2& i) {
    std::string s(static_cast<std::size_t>(i.n), '0');
    for (int a = 0; a < i.n; ++a)
        if (i.get(a)) s[static_cast<std::size_t>(a)] = '1';
    return s;
}

Interp3 interp3_from_compact(std::string_view s) {
    if (s.size() > 32) throw InvalidArgError("interpretation string too long");
    Interp3 i{0, 0, static_cast<int>(s.size())};
    for (int a = 0; a < i.n; ++a) {
        switch (s[static_cast<std::size_t>(a)]) {
            case '0': i.set(a, V3::F); break;
            case '1': i.set(a, V3::T); break;
            case '*': break;
            default: throw InvalidArgError("interpretation characters must be 0, 1 or *");
        }
    }
    return i;
}

Interp2 interp2_from_compact(std::string_view s) {
    Interp3 i3 = interp3_from_compact(s);
    if (i3.undefined_mask() != 0)
        throw InvalidArgError("two-valued interpretation must not contain '*'");
    return Interp2{i3.truth, i3.n};
}

namespace {

Interp3 parse_explicit(const AtomTable& atoms, std::string_view s) {
    Interp3 i = Interp3::all_undefined(atoms.size());
    std::uint32_t assigned = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string_view::npos) end = s.size();
        std::string_view item = s.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq + 2 != item.size())
            throw InvalidArgError("expected 'atom=0|1|*' items");
        int id = atoms.require(item.substr(0, eq));
        if ((assigned >> id) & 1u)
            throw InvalidArgError("atom '" + std::string(item.substr(0, eq)) + "' assigned twice");
        assigned |= 1u << id;
        switch (item.back()) {
            case '0': i.set(id, V3::F); break;
            case '1': i.set(id, V3::T); break;
            case '*': break;
            default: throw InvalidArgError("interpretation values must be 0, 1 or *");
        }
        pos = end + 1;
    }
    const std::uint32_t all = atoms.size() == 32 ? ~0u : ((1u << atoms.size()) - 1u);
    if (assigned != all) throw InvalidArgError("explicit interpretation must assign every atom");
    return i;
}

} // namespace

Interp3 parse_interp3(const AtomTable& atoms, std::string_view s) {
    if (s.find('=') != std::string_view::npos) return parse_explicit(atoms, s);
    Interp3 i = interp3_from_compact(s);
    if (i.n != atoms.size())
        throw InvalidArgError("interpretation length " + std::to_string(i.n) +
                              " does not match atom count " + std::to_string(atoms.size()));
    return i;
}

Interp2 parse_interp2(const AtomTable& atoms, std::string_view s) {
    Interp3 i3 = parse_interp3(atoms, s);
    if (i3.undefined_mask() != 0)
        throw InvalidArgError("two-valued interpretation must not contain '*'");
    return Interp2{i3.truth, i3.n};
}

namespace {

void check_same_table(const Interp3& x, const Interp3& y) {
    if (x.n != y.n) throw InvalidArgError("interpretations over different atom tables");
}

bool leq_t_val(V3 a, V3 b) {
    auto rank = [](V3 v) { return v == V3::F ? 0 : v == V3::U ? 1 : 2; };
    return rank(a) <= rank(b);
}

} // namespace

bool leq_t(const Interp3& x, const Interp3& y) {
    check_same_table(x, y);
    for (int a = 0; a < x.n; ++a)
        if (!leq_t_val(x.at(a), y.at(a))) return false;
    return true;
}

bool leq_s(const Interp3& x, const Interp3& y) {
    check_same_table(x, y);
    // x <=s y pointwise: x == y or y == U. Bit form: y's defined atoms must be
    // defined in x with the same truth value.
    if ((y.defined & ~x.defined) != 0) return false;
    return (x.truth & y.defined) == y.truth;
}

bool leq_i(const Interp3& x, const Interp3& y) {
    return leq_s(y, x);
}

bool leq_u(const Interp3& x, const Interp3& y) {
    check_same_table(x, y);
    return (x.undefined_mask() & ~y.undefined_mask()) == 0;
}

bool cset_contains(const Interp3& i3, const Interp2& i2) {
    if (i3.n != i2.n) throw InvalidArgError("interpretations over different atom tables");
    return (i2.bits & i3.defined) == i3.truth;
}

std::vector<Interp2> cset_members(const Interp3& i3, int max_undefined) {
    const int u = i3.undefined_count();
    if (u > max_undefined)
        throw CapError("C(I) enumeration over " + std::to_string(u) +
                       " undefined atoms exceeds the cap of " + std::to_string(max_undefined));
    std::vector<int> upos;
    for (int a = 0; a < i3.n; ++a)
        if (i3.at(a) == V3::U) upos.push_back(a);

    std::vector<Interp2> out;
    out.reserve(1u << u);
    for (std::uint32_t k = 0; k < (1u << u); ++k) {
        std::uint32_t bits = i3.truth;
        for (int j = 0; j < u; ++j)
            if ((k >> j) & 1u) bits |= 1u << upos[static_cast<std::size_t>(j)];
        out.push_back(Interp2{bits, i3.n});
    }
    std::sort(out.begin(), out.end(),
              [](const Interp2& a, const Interp2& b) { return a.bits < b.bits; });
    return out;
}

bool consistent(const Interp3& x, const Interp3& y) {
    check_same_table(x, y);
    // Conflict exactly where both are defined with different truth values.
    const std::uint32_t both = x.defined & y.defined;
    return ((x.truth ^ y.truth) & both) == 0;
}

Interp3 intersect(std::span<const Interp3> es, const AtomTable* atoms) {
    if (es.empty()) throw InvalidArgError("intersect requires a non-empty list");
    Interp3 out = es[0];
    for (std::size_t k = 1; k < es.size(); ++k) {
        const Interp3& e = es[k];
        check_same_table(out, e);
        const std::uint32_t both = out.defined & e.defined;
        const std::uint32_t clash = (out.truth ^ e.truth) & both;
        if (clash != 0) {
            int a = std::countr_zero(clash);
            throw InconsistencyError(atoms ? atoms->name(a) : "#" + std::to_string(a));
        }
        out.defined |= e.defined;
        out.truth |= e.truth;
    }
    return out;
}

V3 eval_rhs3(const Completion& c, int a, const Interp3& i) {
    V3 result = V3::F; // empty disjunct list is falsum
    for (const Disjunct& d : c.rhs[static_cast<std::size_t>(a)]) {
        V3 body = V3::T; // empty body is verum
        for (int q : d.pos) body = and3(body, i.at(q));
        for (int q : d.neg) body = and3(body, neg3(i.at(q)));
        result = or3(result, body);
        if (result == V3::T) break;
    }
    return result;
}

V3 eval_rhs3_cube(const Completion& c, int a, const Interp3& i) {
    V3 kleene = eval_rhs3(c, a, i);
    if (kleene != V3::U) return kleene; // Kleene-defined values hold cube-wide

    std::uint32_t free = 0;
    for (const Disjunct& d : c.rhs[static_cast<std::size_t>(a)]) {
        for (int q : d.pos) free |= 1u << q;
        for (int q : d.neg) free |= 1u << q;
    }
    free &= i.undefined_mask();
    if (free == 0) return V3::U; // U came from the fixed part of the cube

    // Walk all completions of the undefined atoms that rhs(a) touches.
    Interp3 j = i;
    V3 first = V3::U;
    for (std::uint32_t pick = free;; pick = (pick - 1) & free) {
        std::uint32_t choice = free & ~pick;
        j.defined = i.defined | free;
        j.truth = (i.truth & ~free) | choice;
        V3 v = eval_rhs3(c, a, j);
        if (first == V3::U)
            first = v;
        else if (v != first)
            return V3::U;
        if (pick == 0) break;
    }
    return first;
}

bool eval_rhs2(const Completion& c, int a, const Interp2& i) {
    for (const Disjunct& d : c.rhs[static_cast<std::size_t>(a)]) {
        bool body = true;
        for (int q : d.pos)
            if (!i.get(q)) {
                body = false;
                break;
            }
        if (body)
            for (int q : d.neg)
                if (i.get(q)) {
                    body = false;
                    break;
                }
        if (body) return true;
    }
    return false;
}

} // namespace trapsem
