#ifndef TRAPSEM_DYNAMICS_HPP
#define TRAPSEM_DYNAMICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trapsem/operators.hpp"

namespace trapsem {

enum class Kind { Stable, Supported };

const char* kind_name(Kind k);
Kind kind_from_name(std::string_view s);

inline constexpr int kDefaultGraphAtomCap = 16;

// Fully materialized successor function over all 2^n states. State index =
// bit pattern of the Interp2.
struct TransitionGraph {
    Kind kind = Kind::Stable;
    int n = 0;
    std::vector<std::uint32_t> succ;

    std::uint32_t num_states() const { return 1u << n; }
};

// Sorted state indices; non-empty wherever used as a trap set or class.
using StateSet = std::vector<std::uint32_t>;

TransitionGraph build_graph(const Program& p, Kind kind, int max_atoms = kDefaultGraphAtomCap);

// Terminal cycles of the functional graph, via a visited-coloring sweep.
// These are exactly the subset-minimal trap sets, i.e. the strict classes.
// Sorted by smallest member.
std::vector<StateSet> strict_classes(const TransitionGraph& g);

// Independent route to the same sets: per-state pointer chasing with cycle
// extraction. Backs the oracle suite.
std::vector<StateSet> strict_classes_pointer_chase(const TransitionGraph& g);

bool is_trap_set(const TransitionGraph& g, const StateSet& s);     // image(s) subseteq s
bool is_class(const TransitionGraph& g, const StateSet& s);        // image(s) == s
bool is_strict_class(const TransitionGraph& g, const StateSet& s); // orbit closure of each member == s

// Forward-reachable set from s0 until the first repeat.
StateSet orbit_closure(const TransitionGraph& g, std::uint32_t s0);

std::string to_dot(const TransitionGraph& g, std::span<const StateSet> highlight = {});
std::string graph_json(const TransitionGraph& g, const AtomTable& atoms);

} // namespace trapsem

#endif
