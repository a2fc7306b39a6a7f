#include "trapsem/dynamics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace trapsem {

const char* kind_name(Kind k) {
    return k == Kind::Stable ? "stable" : "supported";
}

Kind kind_from_name(std::string_view s) {
    if (s == "stable") return Kind::Stable;
    if (s == "supported") return Kind::Supported;
    throw InvalidArgError("unknown kind '" + std::string(s) + "' (expected stable|supported)");
}

TransitionGraph build_graph(const Program& p, Kind kind, int max_atoms) {
    const int n = p.atoms.size();
    if (n > max_atoms)
        throw CapError("program has " + std::to_string(n) +
                       " atoms, above the transition-graph cap of " + std::to_string(max_atoms));
    TransitionGraph g;
    g.kind = kind;
    g.n = n;
    g.succ.resize(1u << n);
    const Completion c = kind == Kind::Supported ? completion(p) : Completion{};
    for (std::uint32_t s = 0; s < g.num_states(); ++s) {
        Interp2 i{s, n};
        Interp2 j = kind == Kind::Stable ? step_F(p, i) : step_T(c, i);
        g.succ[s] = j.bits;
    }
    return g;
}

namespace {

void sort_class_list(std::vector<StateSet>& classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const StateSet& a, const StateSet& b) { return a.front() < b.front(); });
}

} // namespace

std::vector<StateSet> strict_classes(const TransitionGraph& g) {
    // Colors: 0 unvisited, 1 on current walk, 2 finished. Walking an
    // unfinished path either closes a new cycle or joins a finished region.
    enum : unsigned char { White, Gray, Black };
    std::vector<unsigned char> color(g.succ.size(), White);
    std::vector<StateSet> cycles;

    std::vector<std::uint32_t> path;
    for (std::uint32_t start = 0; start < g.succ.size(); ++start) {
        if (color[start] != White) continue;
        path.clear();
        std::uint32_t v = start;
        while (color[v] == White) {
            color[v] = Gray;
            path.push_back(v);
            v = g.succ[v];
        }
        if (color[v] == Gray) {
            // Closed a new cycle: it starts at v's position in the path.
            auto it = std::find(path.begin(), path.end(), v);
            cycles.emplace_back(it, path.end());
        }
        for (std::uint32_t u : path) color[u] = Black;
    }
    sort_class_list(cycles);
    return cycles;
}

std::vector<StateSet> strict_classes_pointer_chase(const TransitionGraph& g) {
    // For every state, race two pointers to land on its terminal cycle, then
    // walk the cycle. Quadratic-ish but independent of the coloring sweep.
    std::map<std::uint32_t, StateSet> by_anchor; // smallest cycle member -> cycle
    for (std::uint32_t s = 0; s < g.succ.size(); ++s) {
        std::uint32_t slow = s, fast = s;
        do {
            slow = g.succ[slow];
            fast = g.succ[g.succ[fast]];
        } while (slow != fast);
        StateSet cycle{slow};
        for (std::uint32_t v = g.succ[slow]; v != slow; v = g.succ[v]) cycle.push_back(v);
        std::sort(cycle.begin(), cycle.end());
        by_anchor.emplace(cycle.front(), std::move(cycle));
    }
    std::vector<StateSet> out;
    out.reserve(by_anchor.size());
    for (auto& [anchor, cycle] : by_anchor) out.push_back(std::move(cycle));
    return out;
}

namespace {

bool member(const StateSet& s, std::uint32_t v) {
    return std::binary_search(s.begin(), s.end(), v);
}

StateSet sorted_copy(const StateSet& s) {
    StateSet t = s;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

void check_nonempty(const StateSet& s) {
    if (s.empty()) throw InvalidArgError("state set must be non-empty");
}

} // namespace

bool is_trap_set(const TransitionGraph& g, const StateSet& s) {
    check_nonempty(s);
    StateSet t = sorted_copy(s);
    for (std::uint32_t v : t)
        if (!member(t, g.succ[v])) return false;
    return true;
}

bool is_class(const TransitionGraph& g, const StateSet& s) {
    check_nonempty(s);
    StateSet t = sorted_copy(s);
    StateSet image;
    image.reserve(t.size());
    for (std::uint32_t v : t) image.push_back(g.succ[v]);
    return sorted_copy(image) == t;
}

bool is_strict_class(const TransitionGraph& g, const StateSet& s) {
    check_nonempty(s);
    StateSet t = sorted_copy(s);
    for (std::uint32_t v : t)
        if (orbit_closure(g, v) != t) return false;
    return true;
}

StateSet orbit_closure(const TransitionGraph& g, std::uint32_t s0) {
    StateSet seen;
    std::uint32_t v = s0;
    while (!member(seen, v)) {
        seen.insert(std::lower_bound(seen.begin(), seen.end(), v), v);
        v = g.succ[v];
    }
    return seen;
}

std::string to_dot(const TransitionGraph& g, std::span<const StateSet> highlight) {
    std::vector<int> group(g.succ.size(), -1);
    for (std::size_t k = 0; k < highlight.size(); ++k)
        for (std::uint32_t v : highlight[k]) group[v] = static_cast<int>(k);

    std::ostringstream out;
    out << "digraph " << (g.kind == Kind::Stable ? "stable" : "supported") << " {\n";
    for (std::uint32_t s = 0; s < g.succ.size(); ++s) {
        out << "  s" << s << " [label=\"" << to_string(Interp2{s, g.n}) << "\"";
        if (group[s] >= 0) out << ", peripheries=2";
        out << "];\n";
    }
    for (std::uint32_t s = 0; s < g.succ.size(); ++s)
        out << "  s" << s << " -> s" << g.succ[s] << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_json(const TransitionGraph& g, const AtomTable& atoms) {
    nlohmann::json j;
    j["kind"] = kind_name(g.kind);
    j["atoms"] = atoms.names();
    j["succ"] = g.succ;
    return j.dump();
}

} // namespace trapsem
