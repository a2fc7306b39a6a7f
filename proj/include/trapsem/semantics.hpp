#ifndef TRAPSEM_SEMANTICS_HPP
#define TRAPSEM_SEMANTICS_HPP

#include <string_view>
#include <vector>

#include "trapsem/trapspaces.hpp"

namespace trapsem {

enum class Semantics { Stable, Supported, StablePartial, SupportedPartial, Regular, LStable };
enum class Method { Direct, Trap, Oracle };

const char* semantics_name(Semantics s);
Semantics semantics_from_name(std::string_view s);
const char* method_name(Method m);
Method method_from_name(std::string_view s);

inline constexpr int kDefaultScan2AtomCap = 20;

bool is_stable_model(const Program& p, const Interp2& i);
bool is_supported_model(const Program& p, const Interp2& i);
bool is_supported_partial(const Program& p, const Interp3& i);
bool is_stable_partial(const Program& p, const Interp3& i);

// Enumerates the full model set; two-valued semantics yield fully defined
// interpretations. Direct is the definition-based exhaustive scan and works
// for every semantics. Trap and Oracle exist only for Regular and LStable:
// Trap goes through strict-class covers, Oracle through the minimal elements
// of the full 3^n trap-space enumeration. All routes must agree.
std::vector<Interp3> enumerate_models(const Program& p, Semantics sem, Method method,
                                      int max_atoms_2 = kDefaultScan2AtomCap,
                                      int max_atoms_3 = kDefaultEnum3AtomCap,
                                      int max_atoms_graph = kDefaultGraphAtomCap);

} // namespace trapsem

#endif
