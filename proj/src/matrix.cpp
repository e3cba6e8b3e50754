#include "loewy/matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loewy {

void ExactMatrix::set_row(std::size_t i, const std::vector<Scalar>& row) {
    if (row.size() != cols_) throw std::logic_error("set_row: width mismatch");
    for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j].field() != field_) throw usage_error("mixed-field entries in matrix");
        a_[i * cols_ + j] = row[j];
    }
}

std::vector<Scalar> ExactMatrix::row(std::size_t i) const {
    return std::vector<Scalar>(a_.begin() + static_cast<long>(i * cols_),
                               a_.begin() + static_cast<long>((i + 1) * cols_));
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::logic_error("apply: size mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& m = a_[i * cols_ + j];
            if (!m.is_zero() && !v[j].is_zero()) acc += m * v[j];
        }
        out[i] = acc;
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

namespace {

// eliminate column `col` from row `i` using the (already monic) pivot row
void eliminate_row(ExactMatrix& m, std::size_t i, std::size_t prow, std::size_t col) {
    Scalar f = m.at(i, col);
    if (f.is_zero()) return;
    std::size_t n = m.cols();
    for (std::size_t j = col; j < n; ++j) {
        const Scalar& p = m.at(prow, j);
        if (!p.is_zero()) m.at(i, j) -= f * p;
    }
}

RrefResult rref_impl(const ExactMatrix& input, bool parallel) {
    RrefResult res;
    res.reduced = input;
    ExactMatrix& m = res.reduced;
    std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        // first nonzero entry at or below r decides the pivot (deterministic)
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = col; j < nc; ++j) std::swap(m.at(r, j), m.at(piv, j));
        Scalar inv = m.at(r, col).inverse();
        for (std::size_t j = col; j < nc; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        if (parallel && nr >= 32) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long i = 0; i < static_cast<long long>(nr); ++i) {
                if (static_cast<std::size_t>(i) == r) continue;
                eliminate_row(m, static_cast<std::size_t>(i), r, col);
            }
        } else {
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r) continue;
                eliminate_row(m, i, r, col);
            }
        }
        res.pivots.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace

RrefResult rref_serial(const ExactMatrix& m) { return rref_impl(m, false); }
RrefResult rref(const ExactMatrix& m) { return rref_impl(m, true); }

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    const Field& f = m.field();
    std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(nc, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace loewy
