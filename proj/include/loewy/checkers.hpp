#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewy/invariants.hpp"

namespace loewy {

// Every inequality and length identity the tool stands behind is emitted as a
// verdict. "holds" and "fails" are exact statements about this ring; a failure
// always carries the numbers that broke it. A hypothesis that provably cannot
// hold here (dimension zero, a zerodivisor cut, proved infinite projective
// dimension, a bound that presupposes a different CM profile) leaves the
// guarded statement vacuously true: the
// verdict holds and its witness starts with "vacuous:". "unknown" is reserved
// for genuine certification gaps, an uncertified projective dimension or a
// truncated regularity, and the reason names the gap.
enum class VerdictStatus { holds, fails, unknown };

const char* status_name(VerdictStatus s);

struct Verdict {
    std::string id;
    VerdictStatus status = VerdictStatus::unknown;
    std::string witness;  // the concrete numbers behind holds/fails
    std::string reason;   // for unknown: which hypothesis is missing
};

// per module: loewy_ge_ord, loewy_ge_index (only when the index is computed),
// loewy_ge_reg_plus_1
std::vector<Verdict> check_module_bounds(const RingAnalysis& an,
                                         const std::vector<ModuleReport>& modules);

// colon_low_degrees, theta_ge_ord, rho_le_reg_minus_1, theta_seq_le_reg_minus_1,
// power_not_in_principal, ord_descent
std::vector<Verdict> check_colon_behavior(const LocalAlgebraHandle& ring, const RingAnalysis& an);

// split_length_identity, multiplicity_constant, four_term_alternating_sum,
// one_dim_length_identity
std::vector<Verdict> check_length_identities(const LocalAlgebraHandle& ring,
                                             const RingAnalysis& an, std::uint64_t seed);

std::vector<Verdict> check_all(const LocalAlgebraHandle& ring, const RingAnalysis& an,
                               const std::vector<ModuleReport>& modules, std::uint64_t seed);

}  // namespace loewy
