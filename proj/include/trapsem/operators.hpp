#ifndef TRAPSEM_OPERATORS_HPP
#define TRAPSEM_OPERATORS_HPP

#include "trapsem/interp.hpp"
#include "trapsem/program.hpp"

namespace trapsem {

// Rule of a three-valued reduct: no negative literals; undef_body marks rules
// whose stripped negative body kept at least one undefined literal (the
// special atom that always evaluates to U).
struct PosRule3 {
    int head = 0;
    std::vector<int> pos;
    bool undef_body = false;
};

struct PositiveProgram3 {
    int n = 0;
    std::vector<PosRule3> rules;
};

// Gelfond-Lifschitz reduct: drop rules with a true negative-body atom, strip
// the remaining negative literals. Output shares the atom table.
Program reduct2(const Program& p, const Interp2& i);

// Three-valued reduct: additionally flags rules that kept an undefined
// negative literal.
PositiveProgram3 reduct3(const Program& p, const Interp3& i);

// Least two-valued model of a positive program, by ascending immediate
// consequence iteration from all-false.
Interp2 least2(const Program& positive);

// Least three-valued model under the truth order, by Kleene iteration from
// all-false of the per-atom max/min evaluation.
Interp3 least3(const PositiveProgram3& pp);

// F_P: least model of the reduct.
Interp2 step_F(const Program& p, const Interp2& i);

// T_P: per-atom two-valued rhs evaluation.
Interp2 step_T(const Completion& c, const Interp2& i);
Interp2 step_T(const Program& p, const Interp2& i);

// f_P: per-atom three-valued rhs evaluation. Total as implemented; the
// trap-space precondition is asserted by the iteration driver, not here.
Interp3 step_f3(const Completion& c, const Interp3& i);

} // namespace trapsem

#endif
