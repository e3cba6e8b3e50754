#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewy/invariants.hpp"
#include "loewy/rng.hpp"

namespace loewy {

// Random Artinian complete intersection in nvars variables, pure powers of
// degree 2..4 mixed with random forms; the numerator identity certifies the
// regular sequence, so a returned ideal is never a near miss.
Ideal random_artinian_ci(unsigned nvars, const Field& f, Rng& rng);

// Random graded complete intersection of dimension one: a plane curve or a
// codimension two quotient of three variables, degrees up to 5.
Ideal random_dim1_ci(const Field& f, Rng& rng);

// Minimal generators of every symmetric numerical semigroup with
// multiplicity <= max_mult and Frobenius number <= max_f, enumerated through
// apery tuples, multiplicity-major and deterministic.
std::vector<std::vector<long long>> symmetric_semigroups(long long max_mult, long long max_f);

// One fuzz case: a deterministic ring (and module) built from the index, all
// invariants and verdicts flattened into a canonical line. Lines are
// independent of evaluation order and carry no timing.
std::string fuzz_case_line(unsigned index, std::uint64_t seed);

enum class FuzzFamily { mixed, artinian, graded, semigroup };

struct FuzzSpec {
    unsigned count = 0;
    std::uint64_t seed = 0;
    int jobs = 0;  // <= 0 means the OpenMP default
    FuzzFamily family = FuzzFamily::mixed;
    // box for the symmetric-semigroup cases: multiplicity and frobenius caps
    long long box_mult = 8;
    long long box_frob = 40;
};

struct FuzzResult {
    std::vector<std::string> lines;  // index order
    std::uint64_t digest = 0;        // fnv-1a over the joined lines
    unsigned failed_verdicts = 0;
    unsigned unknown_verdicts = 0;
};

// Cases are generated per index, evaluated in parallel and aggregated back in
// index order, so the digest is a machine-independent fingerprint of the
// whole sweep.
FuzzResult run_fuzz(const FuzzSpec& spec);
// mixed family over the default box
FuzzResult run_fuzz(unsigned count, std::uint64_t seed, int jobs);

std::uint64_t fnv1a(const std::vector<std::string>& lines);

}  // namespace loewy
