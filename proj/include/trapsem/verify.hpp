#ifndef TRAPSEM_VERIFY_HPP
#define TRAPSEM_VERIFY_HPP

#include <string>
#include <vector>

#include "trapsem/oracle.hpp"

namespace trapsem {

struct PropertyResult {
    std::string property;
    bool pass = false;
    std::string detail; // witness on failure, empty on pass
};

// Cross-route checks for one program. Properties needing a 3^n or 2^n sweep
// are skipped (not reported) when the program is above the matching cap.
std::vector<PropertyResult> verify_program(const Program& p);

struct CorpusReport {
    std::vector<std::string> lines; // one per property per program
    int failures = 0;
};

// corpus_json: JSON array of generator configs
//   [{"seed":1,"n_atoms":5,"n_rules":7,"max_body":3,"neg_prob":0.5}, ...]
CorpusReport verify_corpus(const std::string& corpus_json);

} // namespace trapsem

#endif
