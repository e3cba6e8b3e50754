#pragma once

#include <vector>

#include "loewy/matrix.hpp"

namespace loewy {

// Subspace of k^n stored by its reduced row echelon basis, which is unique,
// so equality/containment are plain comparisons and every downstream
// computation that walks a basis is deterministic.
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    static Subspace zero(std::size_t ambient, const Field& f);
    static Subspace full(std::size_t ambient, const Field& f);
    static Subspace span(const std::vector<std::vector<Scalar>>& vectors, std::size_t ambient,
                         const Field& f);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    const Field& field() const { return field_; }
    const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    // canonical representative of v mod this subspace (zero iff contained)
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    std::size_t ambient_;
    Field field_;
    std::vector<std::vector<Scalar>> basis_;  // RREF rows, pivot columns increasing
};

}  // namespace loewy
