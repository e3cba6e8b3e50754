#pragma once

#include <vector>

#include "loewy/polynomial.hpp"

namespace loewy {

// Reduced Groebner basis: monic, interreduced, sorted ascending by leading
// monomial. Unique for (ideal, order), so printed output is reproducible.
struct GroebnerBasis {
    std::vector<Polynomial> elems;
    TermOrder order;
    unsigned nvars = 0;
    Field field;
};

// Buchberger with the normal pair-selection strategy (minimal lcm degree,
// ties by lcm in the order, then by generator indices) and both classic
// discard criteria (coprime leading terms; chain criterion).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, unsigned nvars, const Field& f,
                         TermOrder order);

// Remainder of multivariate division by the basis (deterministic: always
// reduces the current leading term by the first basis element that divides).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// g / f when f divides exactly; throws std::logic_error otherwise.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

}  // namespace loewy
