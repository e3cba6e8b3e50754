#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loewy/corpus.hpp"

namespace loewy {

inline constexpr const char* kToolVersion = "0.1.0";

// A declaration survives parsing as plain data. Generator expressions are
// stored in a canonical text form produced by the printer, which is what
// makes parse(print(...)) the identity on declarations.
struct Declaration {
    enum class Kind { ring_quotient, ring_semigroup, module_cyclic, module_koszul };
    Kind kind = Kind::ring_quotient;
    std::string name;
    unsigned long characteristic = 0;  // quotient rings: 0 means Q
    std::vector<std::string> vars;     // quotient rings
    std::vector<std::string> gens;     // canonical generator expressions
    std::vector<long long> numbers;    // semigroup generators, or the t-exponent of a module
    std::string ring;                  // modules: name of the base ring

    bool operator==(const Declaration&) const = default;
};

std::string print_declaration(const Declaration& d);

struct Statement {
    enum class Kind { declaration, invariants, verify_main, verify_all, fuzz, set_truncation };
    Kind kind = Kind::declaration;
    unsigned line = 0;

    Declaration decl;                   // declaration
    std::string ring, module;           // commands naming things
    std::optional<std::uint64_t> seed;  // verify all --seed
    FuzzSpec fuzz;                      // fuzz command
    unsigned truncation = 0;            // set truncation
};

// Line-oriented, # starts a comment. Names are resolved while parsing, so an
// unknown ring, a duplicate name, a stray token or a non-homogeneous
// generator all surface as usage errors tagged "line L, col C".
std::vector<Statement> parse_session(const std::string& text);

struct SessionOptions {
    std::uint64_t seed = 0;
    std::optional<unsigned> truncation;  // overrides the per-ring default scan depth
    std::string format = "json";         // "json" or "table"
    int jobs = 0;                        // fuzz parallelism, <= 0 means the OpenMP default
};

struct SessionResult {
    std::vector<std::string> documents;  // one rendered report per command
    std::vector<std::string> warnings;   // small-field notes and error text
    // 0 every verdict holds, 1 some verdict failed, 2 input error,
    // 3 unknowns present but nothing failed
    int exit_code = 0;
};

SessionResult run_session(const std::string& text, const SessionOptions& opt);

}  // namespace loewy
