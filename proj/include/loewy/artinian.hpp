#pragma once

#include <vector>

#include "loewy/hilbert.hpp"
#include "loewy/subspace.hpp"

namespace loewy {

// Finite-dimensional local algebra A = k[x_1..x_n]/I, I primary to
// (x_1..x_n). The standard monomials of I are the k-basis; multiplication is
// carried by per-variable action matrices (structure constants sliced by
// variable), so socle/colon/annihilator queries are single kernel
// computations. The embedding dimension is read off the filtration, not the
// presentation, so declarations like (x + y^2, y^6) normalize to c = 1
// without any textual elimination.
class ArtinianAlgebra {
  public:
    static ArtinianAlgebra build(const Ideal& I);

    unsigned ambient_vars() const { return nvars_; }
    const Field& field() const { return field_; }
    const Ideal& ideal() const { return ideal_; }
    std::size_t length() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }

    std::vector<Scalar> to_vector(const Polynomial& f) const;
    const ExactMatrix& var_action(unsigned v) const { return action_[v]; }
    // multiplication-by-a matrix
    ExactMatrix action_of(const std::vector<Scalar>& a) const;
    ExactMatrix action_of(const Polynomial& f) const;

    // m^0 = A down to the first zero power
    const std::vector<Subspace>& filtration() const { return filtration_; }
    const Subspace& power(unsigned i) const;  // m^i (clamped past the end)
    std::size_t quotient_length(unsigned i) const;  // lambda(A/m^i)

    unsigned embdim() const { return embdim_; }
    unsigned loewy_length() const { return loewy_; }
    bool is_field() const { return basis_.size() == 1; }
    unsigned ord() const;

    const Subspace& socle() const { return socle_; }
    bool is_gorenstein() const { return socle_.dim() == 1; }
    // Gorenstein only; least n with m^n = 0, which is the Loewy length
    unsigned index() const;
    // top degree of the associated graded ring
    long regularity() const { return static_cast<long>(loewy_) - 1; }

    // ideal of A generated by the residues of gens: span closed under the
    // variable actions
    Subspace span_ideal(const std::vector<Polynomial>& gens) const;
    bool is_subideal(const Subspace& v) const;
    // {a in A : a*x in n}
    Subspace colon_space(const Subspace& n, const Polynomial& x) const;
    Subspace annihilator(const Subspace& v) const;  // (0 : v)

    // 1 iff the cyclic module A/i is A itself; Gorenstein only
    unsigned delta_cyclic(const Subspace& i) const;

  private:
    ArtinianAlgebra() : nvars_(0) {}

    unsigned nvars_ = 0;
    Field field_;
    Ideal ideal_;
    std::vector<Monomial> basis_;
    std::vector<ExactMatrix> action_;
    std::vector<Subspace> filtration_;
    unsigned embdim_ = 0;
    unsigned loewy_ = 0;
    Subspace socle_;
};

// Finitely generated A-module given by a free presentation: columns of the
// relation list span the defining submodule of A^g.
class FiniteModuleA {
  public:
    static FiniteModuleA free_module(const ArtinianAlgebra& a, unsigned rank);
    static FiniteModuleA cyclic(const ArtinianAlgebra& a, const std::vector<Polynomial>& gens);
    static FiniteModuleA from_presentation(const ArtinianAlgebra& a, unsigned gens,
                                           const std::vector<std::vector<Polynomial>>& columns);

    const ArtinianAlgebra& algebra() const { return *a_; }
    unsigned presentation_rank() const { return gens_; }
    std::size_t length() const;              // lambda(M)
    unsigned min_generators() const;         // mu(M) = dim M/mM
    unsigned loewy_length() const;
    bool is_free() const;                    // lambda = mu * lambda(A)
    bool pd_finite() const { return is_free(); }

  private:
    FiniteModuleA(const ArtinianAlgebra& a, unsigned gens, Subspace relations);

    const ArtinianAlgebra* a_;
    unsigned gens_;
    Subspace relations_;  // submodule of A^gens, closed under the action
};

}  // namespace loewy
