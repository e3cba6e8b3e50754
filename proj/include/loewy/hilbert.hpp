#pragma once

#include <optional>
#include <vector>

#include "loewy/ideal.hpp"

namespace loewy {

// Hilbert series of R/I as numerator(t) / (1-t)^nvars, computed exactly from
// the leading-term ideal by the pivot-variable recursion
//   N(I) = N(I + (x)) + t * N(I : x).
// Everything downstream (dimension, multiplicity, degreewise dimensions,
// finite-length counts) reads off this numerator, so results are exact and
// never depend on a truncation degree.
struct HilbertData {
    std::vector<long long> numerator;  // dense, numerator[j] = coeff of t^j
    unsigned nvars = 0;

    int krull_dim() const;                    // -1 for the zero ring
    unsigned long multiplicity() const;       // leading coefficient data: N~(1)
    unsigned long hf(unsigned n) const;       // dim_k (R/I)_n
    bool finite_length() const { return krull_dim() <= 0; }
    std::vector<long long> finite_hf() const;  // all degreewise dims (dim 0 only)
    long top_degree() const;                   // top nonzero degree (dim 0 only)
    unsigned long total_length() const;        // sum of finite_hf
};

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, unsigned nvars);
HilbertData hilbert_data(const Ideal& I);

// dim_k (R/I)_n for homogeneous I
unsigned long hilbert_function(const Ideal& I, unsigned n);

// dense-polynomial helpers shared with the backends
std::vector<long long> poly_trim(std::vector<long long> p);
std::vector<long long> poly_sub(const std::vector<long long>& a, const std::vector<long long>& b);
std::vector<long long> poly_mul_one_minus_tpow(const std::vector<long long>& p, unsigned d);
// divide by (1-t); nullopt when it does not divide exactly
std::optional<std::vector<long long>> poly_div_one_minus_t(const std::vector<long long>& p);
long long poly_eval_one(const std::vector<long long>& p);

}  // namespace loewy
