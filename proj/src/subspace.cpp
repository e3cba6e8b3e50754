#include "loewy/subspace.hpp"

#include <stdexcept>

namespace loewy {

Subspace Subspace::zero(std::size_t ambient, const Field& f) {
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = f;
    return s;
}

Subspace Subspace::full(std::size_t ambient, const Field& f) {
    std::vector<std::vector<Scalar>> id(ambient, std::vector<Scalar>(ambient, Scalar::zero(f)));
    for (std::size_t i = 0; i < ambient; ++i) id[i][i] = Scalar::one(f);
    return span(id, ambient, f);
}

Subspace Subspace::span(const std::vector<std::vector<Scalar>>& vectors, std::size_t ambient,
                        const Field& f) {
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = f;
    if (vectors.empty()) return s;
    ExactMatrix m(vectors.size(), ambient, f);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw std::logic_error("span: vector length mismatch");
        m.set_row(i, vectors[i]);
    }
    RrefResult r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
    return s;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    if (v.size() != ambient_) throw std::logic_error("reduce: length mismatch");
    for (const auto& b : basis_) {
        std::size_t piv = 0;
        while (piv < ambient_ && b[piv].is_zero()) ++piv;
        if (piv == ambient_) continue;
        if (!v[piv].is_zero()) {
            Scalar c = v[piv];
            for (std::size_t j = piv; j < ambient_; ++j)
                if (!b[j].is_zero()) v[j] -= c * b[j];
        }
    }
    return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    // reduce v against the RREF basis; zero remainder <=> membership
    for (const auto& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
        throw std::logic_error("sum: ambient mismatch");
    std::vector<std::vector<Scalar>> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(all, ambient_, field_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
        throw std::logic_error("intersect: ambient mismatch");
    // Zassenhaus: row reduce [V V; W 0]; rows whose left half is zero carry an
    // intersection basis in the right half.
    std::size_t n = ambient_;
    std::size_t rows = basis_.size() + other.basis_.size();
    if (rows == 0) return zero(n, field_);
    ExactMatrix m(rows, 2 * n, field_);
    std::size_t r = 0;
    for (const auto& b : basis_) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(r, j) = b[j];
            m.at(r, n + j) = b[j];
        }
        ++r;
    }
    for (const auto& b : other.basis_) {
        for (std::size_t j = 0; j < n; ++j) m.at(r, j) = b[j];
        ++r;
    }
    RrefResult red = rref(m);
    std::vector<std::vector<Scalar>> inter;
    for (std::size_t i = 0; i < red.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!red.reduced.at(i, j).is_zero()) left_zero = false;
        if (left_zero) {
            std::vector<Scalar> v(n, Scalar::zero(field_));
            for (std::size_t j = 0; j < n; ++j) v[j] = red.reduced.at(i, n + j);
            inter.push_back(std::move(v));
        }
    }
    return span(inter, n, field_);
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || field_ != o.field_ || basis_.size() != o.basis_.size())
        return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_[i][j] != o.basis_[i][j]) return false;
    return true;
}

}  // namespace loewy
