#ifndef TRAPSEM_PROGRAM_HPP
#define TRAPSEM_PROGRAM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trapsem/errors.hpp"

namespace trapsem {

// Dense atom ids assigned in byte-wise sorted name order, so identical programs
// get identical ids regardless of rule order in the source text.
class AtomTable {
public:
    AtomTable() = default;
    explicit AtomTable(std::vector<std::string> sorted_names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int id) const { return names_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& names() const { return names_; }

    // Returns -1 when the name is unknown.
    int find(std::string_view name) const;
    int require(std::string_view name) const; // throws InvalidArgError

    bool operator==(const AtomTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

// One ground rule head <- pos, not neg. Bodies are sorted id sets; pos and neg
// may overlap (the body is then two-valued-unsatisfiable but syntactically legal).
struct Rule {
    int head = 0;
    std::vector<int> pos;
    std::vector<int> neg;

    bool operator==(const Rule&) const = default;
    auto operator<=>(const Rule&) const = default;
};

struct Program {
    AtomTable atoms;
    std::vector<Rule> rules; // deduplicated, input order

    bool operator==(const Program& other) const;
};

// Body of one rule, as it appears on the right-hand side of the head atom's
// completion equivalence.
struct Disjunct {
    std::vector<int> pos;
    std::vector<int> neg;

    bool operator==(const Disjunct&) const = default;
};

// Clark's completion: rhs[a] lists the bodies of the rules with head a, in
// input order. An empty list encodes the equivalence with falsum.
struct Completion {
    int n = 0;
    std::vector<std::vector<Disjunct>> rhs;
};

inline constexpr std::size_t kDefaultLfpRuleCap = 100000;

// Grammar: one statement per line, '%' starts a comment,
//   rule := atom ( ":-" body )? "."
//   body := literal ("," literal)*
//   literal := atom | "not" atom | "~" atom
// Atoms are lowercase-initial identifiers, optionally with nested ground
// argument syntax that is kept as part of the name. Uppercase-initial tokens
// are rejected: ground programs only.
Program parse_program(std::string_view text);

// Canonical text: "not" for negation, single space after commas, rules sorted
// by head atom then body. parse(pretty(p)) == p.
std::string pretty(const Program& p);

Completion completion(const Program& p);

// Least-fixpoint transformation: substitute positive body atoms with the
// bodies of already-derived negative rules, iterated from the empty set until
// the rule set stops growing. The result is a negative program over the same
// atom table with the same stable-semantics behavior.
Program lfp_transform(const Program& p, std::size_t max_rules = kDefaultLfpRuleCap);

bool is_uni_rule(const Program& p);
bool is_negative(const Program& p);
bool is_positive(const Program& p);

} // namespace trapsem

#endif
