#pragma once

#include <cstdint>
#include <vector>

#include "loewy/field.hpp"

namespace loewy {

// Numerical semigroup S and the invariants of A = k[[t^S]], a one-dimensional
// local domain. Powers of the maximal ideal, colon ideals and quotient
// lengths are all valuation sets, so every computation here is windowed
// integer combinatorics, exact because the window always extends past the
// degree where the filtration becomes periodic (m^{n+1} = t^{a1} * m^n).
class SemigroupRing {
  public:
    static SemigroupRing build(const std::vector<long long>& generators);

    const std::vector<long long>& gens() const { return gens_; }
    long long multiplicity() const { return gens_[0]; }  // e(A) = a1
    unsigned embdim() const { return static_cast<unsigned>(gens_.size()); }
    bool is_regular() const { return gens_[0] == 1; }
    long long frobenius() const { return frobenius_; }
    long long conductor() const { return frobenius_ + 1; }
    const std::vector<long long>& gap_set() const { return gaps_; }
    const std::vector<long long>& apery() const { return apery_; }
    bool is_symmetric() const { return symmetric_; }

    bool contains(long long v) const;
    // largest n with v in m^n; -1 when v is not in S
    int ord_of(long long v) const;
    // stable order: lim_k ord(v + k*a1) - k; exceeds ord_of(v) exactly on the
    // classes killed by a power of the initial form of t^{a1}
    int ord_inf(long long v) const;

    // first n with m^{n+1} = t^{a1} m^n; the filtration is periodic beyond it
    unsigned reduction_number() const { return reduction_; }

    unsigned long quotient_length(unsigned n) const;  // lambda(A/m^n)
    unsigned ord() const;

    // members of (m^{n+1} : t^a) below the cutoff; a must lie in S
    std::vector<long long> colon_valuations(unsigned n, long long a, long long cutoff) const;
    bool colon_equals_power(unsigned n, long long a) const;

    static constexpr unsigned kInf = 0xffffffffu;
    struct ThetaRho {
        unsigned theta = kInf;  // kInf encodes +infinity
        bool rho_finite = false;
        unsigned rho = 0;       // meaningful only when rho_finite
    };
    // scanned at the canonical superficial element t^{a1}
    ThetaRho theta_rho() const;
    bool g_cm() const { return theta_rho().theta == kInf; }
    long regularity() const;  // reg of the associated graded ring, exact

    // the Artinian reduction B = A/(t^{a1})
    unsigned long b_power_length(unsigned i) const;  // lambda(n^i B)
    std::vector<unsigned long> b_hilbert() const;    // lambda(n^i/n^{i+1}) over B
    unsigned b_loewy() const;
    unsigned b_embdim() const;
    unsigned b_ord() const;
    bool stretched() const;  // symmetric, embdim(B) >= 2, lambda(n^2/n^3) = 1

    // modules A/(t^k), k in S, k > 0: length k, projective dimension 1
    unsigned module_loewy(long long k) const;

    // multiplication by t^{a1} from m^{i-1}/m^i to m^i/m^{i+1} is injective
    bool initial_form_injective_at(unsigned i) const;

    // lambda((m^s, x)/x(m^s, x)), lambda(A/(m^s, x)), lambda((m^s, x)/(x))
    struct SplitLengths {
        unsigned long left, right_top, right_bottom;
    };
    SplitLengths split_lengths(unsigned s) const;

    // lambda((m^n : x)/m^{n-1}), lambda(A/m^{n-1}), lambda(A/m^n), lambda(A/(m^n, x))
    struct FourTerm {
        unsigned long colon_excess, len_nm1, len_n, len_join;
    };
    FourTerm four_term(unsigned n) const;

    // lambda(m^i/m^{i+1}) and lambda(m^{i+1}/x m^i)
    unsigned long piece_length(unsigned i) const;
    unsigned long piece_over_shift(unsigned i) const;

  private:
    SemigroupRing() = default;
    int ord_in(long long v, const std::vector<int>& table) const;
    std::vector<int> ord_table(long long upto) const;
    bool in_principal(long long v, long long k) const;  // v in k + S

    std::vector<long long> gens_;
    long long frobenius_ = -1;
    std::vector<long long> gaps_;
    std::vector<long long> apery_;
    bool symmetric_ = true;
    unsigned reduction_ = 0;
    long long window_ = 0;
    std::vector<int> ordv_;  // ord per valuation within the window, -1 outside S
};

}  // namespace loewy
