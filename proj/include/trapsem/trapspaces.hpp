#ifndef TRAPSEM_TRAPSPACES_HPP
#define TRAPSEM_TRAPSPACES_HPP

#include <span>
#include <vector>

#include "trapsem/dynamics.hpp"

namespace trapsem {

inline constexpr int kDefaultEnum3AtomCap = 12;

// Local characterization: I is a supported trap space iff for every defined
// atom a, the rhs of a evaluates to I(a) in every completion of the cube C(I).
bool is_supported_trap_space(const Completion& c, const Interp3& i);
bool is_supported_trap_space(const Program& p, const Interp3& i);

// Stronger, Kleene-evaluated form of the local condition: every defined atom's
// rhs already has its value under the three-valued Kleene valuation, without
// enumerating the cube. Implies is_supported_trap_space; the converse fails
// (a rhs like "b or not b" is true on the whole cube but Kleene-undefined).
bool is_kleene_supported_trap_space(const Completion& c, const Interp3& i);
bool is_kleene_supported_trap_space(const Program& p, const Interp3& i);

// Stable trap spaces of P are the supported trap spaces of lfp(P).
bool is_stable_trap_space(const Program& p, const Interp3& i);

// <S>: the unique <=s-minimal trap space of the given kind covering the
// states. Computed by U-percolation from the componentwise join.
Interp3 cover(const Program& p, Kind kind, std::span<const Interp2> states);

// <=s-minimal trap spaces: percolate the covers of the strict classes of the
// kind's transition graph, then keep the <=s-minimal candidates.
std::vector<Interp3> minimal_trap_spaces(const Program& p, Kind kind,
                                         int max_atoms = kDefaultGraphAtomCap);

// Among the <=s-minimal stable trap spaces, those with subset-minimal
// undefined set. These are exactly the L-stable models.
std::vector<Interp3> u_minimal_stable_trap_spaces(const Program& p,
                                                  int max_atoms = kDefaultGraphAtomCap);

// Full 3^n scan with the local check; stable kind goes through lfp.
std::vector<Interp3> enumerate_trap_spaces(const Program& p, Kind kind,
                                           int max_atoms = kDefaultEnum3AtomCap);

// Iterate f_P from a Kleene supported trap space to its fixpoint: the unique
// supported partial model <=s the input. Converges within n+1 steps. The
// precondition is is_kleene_supported_trap_space (checked); on trap spaces
// that only satisfy the cube condition the supported partial model below the
// input need not exist or be unique, and f_P can lose defined atoms.
Interp3 percolate_to_supported_partial(const Program& p, const Interp3& i);
Interp3 percolate_to_supported_partial(const Completion& c, const Interp3& i);

// Keep the <=s-minimal elements of a set of interpretations.
std::vector<Interp3> s_minimal_elements(std::vector<Interp3> items);
// Keep the elements whose undefined set is subset-minimal within the set.
std::vector<Interp3> u_minimal_elements(std::vector<Interp3> items);
// Dedupe and sort by compact string.
std::vector<Interp3> canonical_sorted(std::vector<Interp3> items);

} // namespace trapsem

#endif
