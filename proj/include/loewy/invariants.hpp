#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loewy/artinian.hpp"
#include "loewy/graded.hpp"
#include "loewy/semigroup.hpp"

namespace loewy {

// invariant value that may be a number, +infinity, -infinity, or simply not
// defined for the ring at hand (dimension or backend does not support it)
struct ExtInt {
    enum class Kind { na, finite, plus_inf, minus_inf };
    Kind kind = Kind::na;
    long long value = 0;

    static ExtInt na() { return {}; }
    static ExtInt of(long long v) { return {Kind::finite, v}; }
    static ExtInt pos_inf() { return {Kind::plus_inf, 0}; }
    static ExtInt neg_inf() { return {Kind::minus_inf, 0}; }

    bool is_na() const { return kind == Kind::na; }
    bool is_finite() const { return kind == Kind::finite; }
    std::string str() const;

    bool operator==(const ExtInt& o) const { return kind == o.kind && (kind != Kind::finite || value == o.value); }
};

struct InvariantReport {
    int dimension = 0;
    unsigned embdim = 0;
    unsigned ord = 1;
    ExtInt loewy;                   // finite in dimension zero, +inf otherwise
    unsigned long multiplicity = 0;
    ExtInt index;                   // finite for an Artinian Gorenstein ring, na otherwise
    ExtInt theta;                   // na in dimension zero
    ExtInt rho;                     // na, finite, or an infinity
    std::vector<ExtInt> theta_seq;  // one entry per superficial cut, empty when na
    long reg = 0;
    std::optional<unsigned> reg_certified_to;  // empty means the value is exact
    bool g_cm = true;
    // settled for artinian rings (socle), semigroup rings (symmetry) and
    // non-CM graded rings (never gorenstein); open for CM graded rings of
    // positive dimension
    bool gorenstein_known = false;
    bool gorenstein = false;
    unsigned default_cap = 0;       // scan depth for the length identities
};

// plain-data view of a module, enough for every inequality we verify
struct ModuleReport {
    std::string label;
    bool zero = false;
    bool pd_certified = false;
    // set when infinite projective dimension is proved (over an artinian ring
    // finite projective dimension forces freeness, so not free settles it)
    bool pd_infinite = false;
    unsigned pd = 0;
    ExtInt loewy;
    std::optional<unsigned long> length;  // empty when infinite
};

class LocalAlgebraHandle {
  public:
    enum class Backend { artinian, graded, semigroup };

    explicit LocalAlgebraHandle(ArtinianAlgebra a) : impl_(std::move(a)) {}
    explicit LocalAlgebraHandle(GradedAlgebra a) : impl_(std::move(a)) {}
    explicit LocalAlgebraHandle(SemigroupRing a) : impl_(std::move(a)) {}

    Backend backend() const { return static_cast<Backend>(impl_.index()); }
    const ArtinianAlgebra& as_artinian() const;
    const GradedAlgebra& as_graded() const;
    const SemigroupRing& as_semigroup() const;

    int dimension() const;
    unsigned long quotient_length(unsigned n) const;

  private:
    std::variant<ArtinianAlgebra, GradedAlgebra, SemigroupRing> impl_;
};

// everything computed once per ring: the report plus, for a positive
// dimensional graded ring, the superficial chain the checks reuse
struct RingAnalysis {
    InvariantReport report;
    std::optional<GradedAlgebra::Chain> chain;
};

RingAnalysis analyze(const LocalAlgebraHandle& ring, std::uint64_t seed);

ModuleReport module_report(const FiniteModuleA& m, std::string label);
ModuleReport module_report(const GradedModule& m, std::string label);
// A/(t^k) over a semigroup ring: pd 1 by the valuation certificate
ModuleReport semigroup_cyclic_report(const SemigroupRing& s, long long k, std::string label);

}  // namespace loewy
