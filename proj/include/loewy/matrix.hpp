#pragma once

#include <cstddef>
#include <vector>

#include "loewy/field.hpp"

namespace loewy {

// Dense matrix over an exact field. Small by design: the algebra quotients
// this toolkit builds live well under the 10^4-length cap.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set_row(std::size_t i, const std::vector<Scalar>& row);
    std::vector<Scalar> row(std::size_t i) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M * v

    bool operator==(const ExactMatrix& o) const;

  private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;

    friend struct RrefOps;
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    ExactMatrix reduced;
};

// Reference Gauss-Jordan elimination, single-threaded. Kept verbatim as the
// oracle for the parallel kernel; both produce the same (unique) RREF.
RrefResult rref_serial(const ExactMatrix& m);

// Same elimination with the row updates of each pivot step fanned out across
// OpenMP threads. Exact arithmetic, fixed pivot choice => output is
// bit-identical to rref_serial regardless of thread count.
RrefResult rref(const ExactMatrix& m);

// Basis of { v : M v = 0 } from the RREF, free-variable = 1 convention.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

}  // namespace loewy
