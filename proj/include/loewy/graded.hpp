#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loewy/hilbert.hpp"
#include "loewy/ideal.hpp"
#include "loewy/rng.hpp"

namespace loewy {

// what a linear form does to the ring: nonzerodivisor, or zerodivisor whose
// annihilator is finite length (then colons against powers of the maximal
// ideal collapse from a known level on), or worse
struct LinearFormCheck {
    bool superficial = false;           // annihilator has finite length
    bool nzd = false;
    std::optional<unsigned> theta;      // first level where the colon is strict
    // witness level c: (m^{n+1} : x) meet m^c equals m^n for every n >= c
    unsigned collapse_from = 0;
    std::vector<unsigned long> annihilator_hf;
};

// Standard graded quotient A = k[x_1..x_c]/I with I homogeneous. The ring is
// its own associated graded ring, so depth, regularity and colon behavior of
// initial forms are all read off exactly from ideal arithmetic.
class GradedAlgebra {
  public:
    static GradedAlgebra build(Ideal ideal);

    const Ideal& ideal() const { return ideal_; }
    const Field& field() const { return ideal_.field(); }
    unsigned nvars() const { return ideal_.nvars(); }
    const HilbertData& hilbert() const { return hd_; }

    int dimension() const { return hd_.krull_dim(); }
    unsigned embdim() const;                 // dim of the degree-1 piece
    bool is_regular() const;                 // polynomial ring after a change of coordinates
    unsigned long hf(unsigned n) const { return hd_.hf(n); }
    unsigned long quotient_length(unsigned n) const;  // lambda(A/m^n)
    unsigned long multiplicity() const { return hd_.multiplicity(); }
    unsigned ord() const;

    // dimension zero only
    unsigned long length() const;
    long top_degree() const;
    unsigned loewy_length() const;
    unsigned socle_dimension() const;
    bool is_gorenstein_artinian() const { return socle_dimension() == 1; }

    LinearFormCheck check_linear_form(const Polynomial& x) const;
    // (m^{n+1} : x) == m^n in A, decided by exact ideal comparison in R
    bool colon_power_matches(unsigned n, const Polynomial& x) const;
    // multiplication by x from degree i-1 to degree i is injective
    bool injective_at(unsigned i, const Polynomial& x) const;

    Polynomial random_linear(Rng& rng) const;
    GradedAlgebra quotient_by_linear(const Polynomial& x) const;

    struct Chain {
        std::vector<GradedAlgebra> rings;   // rings[0] = A, rings.back() Artinian
        std::vector<Polynomial> forms;      // forms[i] lives in rings[i]
        std::vector<LinearFormCheck> checks;
        bool all_nzd = true;
        std::optional<unsigned> theta;      // min over steps; empty means +infinity
    };
    // one superficial linear form per dimension, sampled deterministically
    Chain superficial_chain(std::uint64_t seed) const;
    bool is_cm(std::uint64_t seed) const;
    long regularity(std::uint64_t seed) const;  // exact, any depth

  private:
    explicit GradedAlgebra(Ideal i, HilbertData h) : ideal_(std::move(i)), hd_(std::move(h)) {}

    Ideal ideal_;
    HilbertData hd_;
};

// cyclic quotient of a graded ring, with an optional certificate that its
// projective dimension is finite (a verified regular sequence presentation)
class GradedModule {
  public:
    static GradedModule cyclic(const GradedAlgebra& a, const std::vector<Polynomial>& gens);
    // A/(f_1..f_r) where the f_i are checked to be a regular sequence through
    // exact Hilbert numerator identities; throws when the check fails
    static GradedModule koszul(const GradedAlgebra& a, const std::vector<Polynomial>& elems);

    bool is_zero() const { return total_.is_unit(); }
    bool pd_certified() const { return certified_; }
    unsigned pd() const;  // only when certified
    int dimension() const { return hd_.krull_dim(); }
    unsigned long length() const;       // dimension zero only
    unsigned loewy_length() const;      // dimension zero only
    const Ideal& presentation() const { return total_; }
    const HilbertData& hilbert() const { return hd_; }

  private:
    GradedModule(Ideal t, HilbertData h, bool c, unsigned p)
        : total_(std::move(t)), hd_(std::move(h)), certified_(c), pd_(p) {}

    Ideal total_;   // relations pulled back to the polynomial ring
    HilbertData hd_;
    bool certified_ = false;
    unsigned pd_ = 0;
};

// length bookkeeping around J = (m^s, x), all terms finite for dim 1 and x
// a superficial linear form
struct GradedSplitLengths {
    unsigned long left;          // lambda(J/xJ)
    unsigned long right_top;     // lambda(A/J)
    unsigned long right_bottom;  // lambda(J/(x))
};
GradedSplitLengths graded_split_lengths(const GradedAlgebra& a, const Polynomial& x, unsigned s);

// lambda((m^n:x)/m^{n-1}) - lambda(A/m^{n-1}) + lambda(A/m^n) - lambda(A/(m^n,x))
struct GradedFourTerm {
    unsigned long colon_excess, len_nm1, len_n, len_join;
    long long alternating_sum() const {
        return static_cast<long long>(colon_excess) - static_cast<long long>(len_nm1) +
               static_cast<long long>(len_n) - static_cast<long long>(len_join);
    }
};
GradedFourTerm graded_four_term(const GradedAlgebra& a, const Polynomial& x, unsigned n);

// lambda(m^{i+1} / x m^i), finite for dim 1
unsigned long graded_piece_over_shift(const GradedAlgebra& a, const Polynomial& x, unsigned i);

}  // namespace loewy
