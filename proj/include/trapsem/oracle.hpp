#ifndef TRAPSEM_ORACLE_HPP
#define TRAPSEM_ORACLE_HPP

#include <cstdint>
#include <span>

#include "trapsem/trapspaces.hpp"

namespace trapsem {

// Brute-force trap space test: enumerate C(I) and check closure under the
// operator applied directly to P. Deliberately avoids both the local
// characterization and (for the stable kind) the lfp transformation.
bool oracle_trap_space(const Program& p, Kind kind, const Interp3& i, int max_undefined = 20);

// <S> by its defining intersection: enumerate all trap spaces, keep those
// covering the states, intersect.
Interp3 oracle_cover(const Program& p, Kind kind, std::span<const Interp2> states,
                     int max_atoms = 6);

struct GenConfig {
    std::uint64_t seed = 0;
    int n_atoms = 4;
    int n_rules = 6;
    int max_body = 3;
    double neg_prob = 0.5;
};

// Deterministic seeded program generator. When neg_prob > 0 and rules exist,
// at least one negative literal is forced so the corpus is not positive-only.
Program gen_program(const GenConfig& cfg);

} // namespace trapsem

#endif
