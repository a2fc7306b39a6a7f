#include "trapsem/program.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace trapsem {

AtomTable::AtomTable(std::vector<std::string> sorted_names) : names_(std::move(sorted_names)) {
    for (std::size_t i = 0; i + 1 < names_.size(); ++i) {
        if (!(names_[i] < names_[i + 1]))
            throw InvalidArgError("atom names must be strictly sorted");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        index_.emplace(names_[i], static_cast<int>(i));
}

int AtomTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

int AtomTable::require(std::string_view name) const {
    int id = find(name);
    if (id < 0) throw InvalidArgError("unknown atom '" + std::string(name) + "'");
    return id;
}

bool Program::operator==(const Program& other) const {
    if (!(atoms == other.atoms)) return false;
    auto a = rules;
    auto b = other.rules;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

namespace {

struct RawLiteral {
    std::string atom;
    bool negated = false;
};

struct RawRule {
    std::string head;
    std::vector<RawLiteral> body;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<RawRule> run() {
        std::vector<RawRule> rules;
        skip_ws();
        while (!at_end()) {
            rules.push_back(rule());
            skip_ws();
        }
        return rules;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col_, msg); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c, const char* what) {
        if (at_end() || peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    bool try_consume(std::string_view s) {
        if (text_.substr(pos_, s.size()) != s) return false;
        for (std::size_t i = 0; i < s.size(); ++i) advance();
        return true;
    }

    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string atom() {
        if (at_end()) fail("expected atom");
        char c = peek();
        if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
            fail("ground programs only");
        if (!std::islower(static_cast<unsigned char>(c))) fail("expected atom");
        std::string name;
        while (!at_end() && ident_char(peek())) {
            name.push_back(peek());
            advance();
        }
        if (!at_end() && peek() == '(') {
            name.push_back('(');
            advance();
            int depth = 1;
            while (depth > 0) {
                if (at_end()) fail("unterminated '(' in atom");
                char d = peek();
                if (d == '(') ++depth;
                if (d == ')') --depth;
                if (d == '\n') fail("unterminated '(' in atom");
                if (std::isupper(static_cast<unsigned char>(d)))
                    fail("ground programs only");
                name.push_back(d);
                advance();
            }
        }
        return name;
    }

    bool at_not_keyword() const {
        // "not" must be followed by a non-identifier character; "nothing" is an atom.
        if (text_.substr(pos_, 3) != "not") return false;
        return pos_ + 3 >= text_.size() || !ident_char(text_[pos_ + 3]);
    }

    RawLiteral literal() {
        RawLiteral lit;
        if (at_not_keyword()) {
            try_consume("not");
            skip_ws();
            lit.negated = true;
        } else if (!at_end() && peek() == '~') {
            advance();
            skip_ws();
            lit.negated = true;
        }
        lit.atom = atom();
        return lit;
    }

    RawRule rule() {
        RawRule r;
        r.head = atom();
        skip_ws();
        if (try_consume(":-")) {
            skip_ws();
            r.body.push_back(literal());
            skip_ws();
            while (!at_end() && peek() == ',') {
                advance();
                skip_ws();
                r.body.push_back(literal());
                skip_ws();
            }
        }
        expect('.', "'.'");
        return r;
    }
};

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Program parse_program(std::string_view text) {
    std::vector<RawRule> raw = Parser(text).run();

    std::set<std::string> names;
    for (const auto& r : raw) {
        names.insert(r.head);
        for (const auto& lit : r.body) names.insert(lit.atom);
    }
    AtomTable atoms(std::vector<std::string>(names.begin(), names.end()));

    Program prog;
    prog.atoms = atoms;
    std::set<Rule> seen;
    for (const auto& r : raw) {
        Rule rule;
        rule.head = atoms.require(r.head);
        for (const auto& lit : r.body)
            (lit.negated ? rule.neg : rule.pos).push_back(atoms.require(lit.atom));
        sort_unique(rule.pos);
        sort_unique(rule.neg);
        if (seen.insert(rule).second) prog.rules.push_back(rule);
    }
    return prog;
}

std::string pretty(const Program& p) {
    auto rules = p.rules;
    std::sort(rules.begin(), rules.end());
    std::ostringstream out;
    for (const auto& r : rules) {
        out << p.atoms.name(r.head);
        if (!r.pos.empty() || !r.neg.empty()) {
            out << " :- ";
            bool first = true;
            for (int a : r.pos) {
                if (!first) out << ", ";
                out << p.atoms.name(a);
                first = false;
            }
            for (int a : r.neg) {
                if (!first) out << ", ";
                out << "not " << p.atoms.name(a);
                first = false;
            }
        }
        out << ".\n";
    }
    return out.str();
}

Completion completion(const Program& p) {
    Completion c;
    c.n = p.atoms.size();
    c.rhs.resize(static_cast<std::size_t>(c.n));
    for (const auto& r : p.rules)
        c.rhs[static_cast<std::size_t>(r.head)].push_back(Disjunct{r.pos, r.neg});
    return c;
}

Program lfp_transform(const Program& p, std::size_t max_rules) {
    // Rules already negative pass through transl unchanged, so the iterates
    // form a subset-increasing chain and the fixpoint is the first repeat.
    std::set<Rule> current; // negative rules only
    auto step = [&]() {
        std::set<Rule> next;
        for (const auto& r : p.rules) {
            // Choice lists: one negative rule from `current` per positive body atom.
            std::vector<std::vector<const Rule*>> choices;
            bool feasible = true;
            for (int q : r.pos) {
                std::vector<const Rule*> opts;
                for (const auto& nr : current)
                    if (nr.head == q) opts.push_back(&nr);
                if (opts.empty()) {
                    feasible = false;
                    break;
                }
                choices.push_back(std::move(opts));
            }
            if (!feasible) continue;

            std::vector<std::size_t> idx(choices.size(), 0);
            while (true) {
                Rule gen;
                gen.head = r.head;
                gen.neg = r.neg;
                for (std::size_t i = 0; i < choices.size(); ++i) {
                    const Rule* picked = choices[i][idx[i]];
                    gen.neg.insert(gen.neg.end(), picked->neg.begin(), picked->neg.end());
                }
                sort_unique(gen.neg);
                next.insert(std::move(gen));
                if (next.size() > max_rules)
                    throw CapError("lfp transformation exceeded the rule cap of " +
                                   std::to_string(max_rules));
                // Advance the mixed-radix counter over the choice lists.
                std::size_t i = 0;
                for (; i < idx.size(); ++i) {
                    if (++idx[i] < choices[i].size()) break;
                    idx[i] = 0;
                }
                if (i == idx.size()) break; // counter wrapped; rules with empty
                                            // positive body run exactly once
            }
        }
        return next;
    };

    while (true) {
        std::set<Rule> next = step();
        if (next == current) break;
        current = std::move(next);
    }

    Program out;
    out.atoms = p.atoms;
    out.rules.assign(current.begin(), current.end());
    return out;
}

bool is_uni_rule(const Program& p) {
    std::vector<int> count(static_cast<std::size_t>(p.atoms.size()), 0);
    for (const auto& r : p.rules)
        if (++count[static_cast<std::size_t>(r.head)] > 1) return false;
    return true;
}

bool is_negative(const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(),
                       [](const Rule& r) { return r.pos.empty(); });
}

bool is_positive(const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(),
                       [](const Rule& r) { return r.neg.empty(); });
}

} // namespace trapsem
