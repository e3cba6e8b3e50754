#include "loewy/artinian.hpp"

#include <algorithm>

namespace loewy {

namespace {

constexpr std::size_t kLengthCap = 10000;

// rows of a matrix whose kernel is exactly `n`: coordinates of the canonical
// representative mod n at the non-pivot positions
ExactMatrix quotient_map(const Subspace& n) {
    std::size_t dim = n.ambient();
    const Field& f = n.field();
    std::vector<bool> is_pivot(dim, false);
    for (const auto& b : n.basis()) {
        std::size_t piv = 0;
        while (piv < dim && b[piv].is_zero()) ++piv;
        if (piv < dim) is_pivot[piv] = true;
    }
    std::vector<std::size_t> residue_cols;
    for (std::size_t j = 0; j < dim; ++j)
        if (!is_pivot[j]) residue_cols.push_back(j);
    ExactMatrix t(residue_cols.size(), dim, f);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Scalar> e(dim, Scalar::zero(f));
        e[j] = Scalar::one(f);
        std::vector<Scalar> r = n.reduce(std::move(e));
        for (std::size_t i = 0; i < residue_cols.size(); ++i) t.at(i, j) = r[residue_cols[i]];
    }
    return t;
}

ExactMatrix stack(const std::vector<ExactMatrix>& ms) {
    std::size_t rows = 0;
    for (const auto& m : ms) rows += m.rows();
    ExactMatrix out(rows, ms.empty() ? 0 : ms[0].cols(), ms[0].field());
    std::size_t r = 0;
    for (const auto& m : ms)
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            for (std::size_t j = 0; j < m.cols(); ++j) out.at(r, j) = m.at(i, j);
    return out;
}

}  // namespace

ArtinianAlgebra ArtinianAlgebra::build(const Ideal& i) {
    for (const auto& g : i.gens())
        if (!g.is_zero() && !g.constant_coefficient().is_zero())
            throw usage_error("generator with nonzero constant term: the quotient is not local at the origin");

    auto sm = standard_monomials(i);
    if (!sm.has_value())
        throw usage_error("positive dimensional quotient; declare it as a graded ring instead");
    if (sm->empty()) throw usage_error("unit ideal: the quotient ring is zero");
    if (sm->size() > kLengthCap) throw usage_error("quotient length exceeds the supported cap");

    ArtinianAlgebra a;
    a.nvars_ = i.nvars();
    a.field_ = i.field();
    a.ideal_ = i;
    a.basis_ = std::move(*sm);
    std::sort(a.basis_.begin(), a.basis_.end(), [](const Monomial& x, const Monomial& y) {
        return TermOrder::grevlex().greater(y, x);
    });

    std::size_t dim = a.basis_.size();
    for (unsigned v = 0; v < a.nvars_; ++v) {
        ExactMatrix m(dim, dim, a.field_);
        for (std::size_t j = 0; j < dim; ++j) {
            Polynomial xb = Polynomial::from_terms(
                {{a.basis_[j].times(Monomial::var(v, a.nvars_)), Scalar::one(a.field_)}},
                a.nvars_, a.field_);
            std::vector<Scalar> col = a.to_vector(xb);
            for (std::size_t r = 0; r < dim; ++r) m.at(r, j) = col[r];
        }
        a.action_.push_back(std::move(m));
    }

    a.filtration_.push_back(Subspace::full(dim, a.field_));
    while (true) {
        const Subspace& cur = a.filtration_.back();
        std::vector<std::vector<Scalar>> next_gens;
        for (const auto& b : cur.basis())
            for (unsigned v = 0; v < a.nvars_; ++v) next_gens.push_back(a.action_[v].apply(b));
        Subspace next = Subspace::span(next_gens, dim, a.field_);
        if (next.dim() == cur.dim())
            throw usage_error(
                "zero-dimensional but not primary to the maximal ideal at the origin (the "
                "quotient has other maximal ideals)");
        a.filtration_.push_back(next);
        if (a.filtration_.back().dim() == 0) break;
    }
    a.loewy_ = static_cast<unsigned>(a.filtration_.size()) - 1;
    a.embdim_ = static_cast<unsigned>(a.filtration_[1].dim() -
                                      (a.filtration_.size() > 2 ? a.filtration_[2].dim() : 0));

    a.socle_ = Subspace::span(kernel_basis(stack(a.action_)), dim, a.field_);
    return a;
}

std::vector<Scalar> ArtinianAlgebra::to_vector(const Polynomial& f) const {
    Polynomial nf = normal_form(f, ideal_.groebner());
    std::vector<Scalar> out(basis_.size(), Scalar::zero(field_));
    for (const auto& t : nf.terms()) {
        auto it = std::find(basis_.begin(), basis_.end(), t.mono);
        if (it == basis_.end()) throw std::logic_error("normal form outside the standard basis");
        out[static_cast<std::size_t>(it - basis_.begin())] = t.coeff;
    }
    return out;
}

ExactMatrix ArtinianAlgebra::action_of(const std::vector<Scalar>& a) const {
    std::size_t dim = basis_.size();
    ExactMatrix m(dim, dim, field_);
    for (std::size_t j = 0; j < dim; ++j) {
        // column j = a * basis_j, via the variable actions on a
        std::vector<Scalar> w = a;
        for (unsigned v = 0; v < nvars_; ++v)
            for (unsigned e = 0; e < basis_[j].exp[v]; ++e) w = action_[v].apply(w);
        for (std::size_t r = 0; r < dim; ++r) m.at(r, j) = w[r];
    }
    return m;
}

ExactMatrix ArtinianAlgebra::action_of(const Polynomial& f) const { return action_of(to_vector(f)); }

const Subspace& ArtinianAlgebra::power(unsigned i) const {
    if (i < filtration_.size()) return filtration_[i];
    return filtration_.back();
}

std::size_t ArtinianAlgebra::quotient_length(unsigned i) const {
    return basis_.size() - power(i).dim();
}

unsigned ArtinianAlgebra::ord() const {
    if (is_field()) return 1;
    for (unsigned n = 1;; ++n) {
        mpz_class lam(static_cast<long>(quotient_length(n + 1)));
        if (lam < binomial(n + embdim_, n)) return n;
    }
}

unsigned ArtinianAlgebra::index() const {
    if (!is_gorenstein()) throw usage_error("index requires a Gorenstein ring");
    return loewy_;
}

Subspace ArtinianAlgebra::span_ideal(const std::vector<Polynomial>& gens) const {
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& g : gens) vecs.push_back(to_vector(g));
    Subspace cur = Subspace::span(vecs, basis_.size(), field_);
    while (true) {
        std::vector<std::vector<Scalar>> grown;
        for (const auto& b : cur.basis()) {
            grown.push_back(b);
            for (unsigned v = 0; v < nvars_; ++v) grown.push_back(action_[v].apply(b));
        }
        Subspace next = Subspace::span(grown, basis_.size(), field_);
        if (next.dim() == cur.dim()) return cur;
        cur = next;
    }
}

bool ArtinianAlgebra::is_subideal(const Subspace& v) const {
    for (const auto& b : v.basis())
        for (unsigned w = 0; w < nvars_; ++w)
            if (!v.contains(action_[w].apply(b))) return false;
    return true;
}

Subspace ArtinianAlgebra::colon_space(const Subspace& n, const Polynomial& x) const {
    std::vector<Scalar> xv = to_vector(x);
    bool zero = true;
    for (const auto& c : xv)
        if (!c.is_zero()) zero = false;
    if (zero) return Subspace::full(basis_.size(), field_);  // (n : 0) = A
    ExactMatrix t = quotient_map(n);
    ExactMatrix mx = action_of(xv);
    // rows of t * mx; kernel = {a : a x in n}
    ExactMatrix comp(t.rows(), basis_.size(), field_);
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            Scalar acc = Scalar::zero(field_);
            for (std::size_t k = 0; k < basis_.size(); ++k) acc += t.at(i, k) * mx.at(k, j);
            comp.at(i, j) = acc;
        }
    return Subspace::span(kernel_basis(comp), basis_.size(), field_);
}

Subspace ArtinianAlgebra::annihilator(const Subspace& v) const {
    Subspace acc = Subspace::full(basis_.size(), field_);
    for (const auto& b : v.basis()) {
        ExactMatrix mb = action_of(b);
        acc = acc.intersect(Subspace::span(kernel_basis(mb), basis_.size(), field_));
    }
    return acc;
}

unsigned ArtinianAlgebra::delta_cyclic(const Subspace& i) const {
    if (!is_gorenstein()) throw usage_error("delta is only computed over Gorenstein rings");
    return i.dim() == 0 ? 1 : 0;
}

FiniteModuleA::FiniteModuleA(const ArtinianAlgebra& a, unsigned gens, Subspace relations)
    : a_(&a), gens_(gens), relations_(std::move(relations)) {}

FiniteModuleA FiniteModuleA::free_module(const ArtinianAlgebra& a, unsigned rank) {
    return from_presentation(a, rank, {});
}

FiniteModuleA FiniteModuleA::cyclic(const ArtinianAlgebra& a, const std::vector<Polynomial>& gens) {
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : gens) cols.push_back({g});
    return from_presentation(a, 1, cols);
}

FiniteModuleA FiniteModuleA::from_presentation(const ArtinianAlgebra& a, unsigned gens,
                                               const std::vector<std::vector<Polynomial>>& columns) {
    std::size_t la = a.length();
    std::size_t ambient = gens * la;
    if (ambient > kLengthCap) throw usage_error("module length cap exceeded");
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& col : columns) {
        if (col.size() != gens) throw usage_error("presentation column length mismatch");
        std::vector<Scalar> v;
        v.reserve(ambient);
        for (const auto& entry : col) {
            std::vector<Scalar> part = a.to_vector(entry);
            v.insert(v.end(), part.begin(), part.end());
        }
        vecs.push_back(std::move(v));
    }
    // close the relation span under the algebra action, blockwise per generator
    Subspace cur = Subspace::span(vecs, ambient, a.field());
    while (true) {
        std::vector<std::vector<Scalar>> grown;
        for (const auto& b : cur.basis()) {
            grown.push_back(b);
            for (unsigned v = 0; v < a.ambient_vars(); ++v) {
                std::vector<Scalar> w(ambient, Scalar::zero(a.field()));
                for (unsigned g = 0; g < gens; ++g) {
                    std::vector<Scalar> blk(b.begin() + g * la, b.begin() + (g + 1) * la);
                    std::vector<Scalar> img = a.var_action(v).apply(blk);
                    for (std::size_t t = 0; t < la; ++t) w[g * la + t] = img[t];
                }
                grown.push_back(std::move(w));
            }
        }
        Subspace next = Subspace::span(grown, ambient, a.field());
        if (next.dim() == cur.dim()) break;
        cur = next;
    }
    return FiniteModuleA(a, gens, std::move(cur));
}

std::size_t FiniteModuleA::length() const { return gens_ * a_->length() - relations_.dim(); }

unsigned FiniteModuleA::min_generators() const {
    // mu = dim A^g / (m A^g + relations)
    std::size_t la = a_->length();
    std::vector<std::vector<Scalar>> vecs(relations_.basis());
    for (unsigned g = 0; g < gens_; ++g)
        for (const auto& b : a_->power(1).basis()) {
            std::vector<Scalar> v(gens_ * la, Scalar::zero(a_->field()));
            for (std::size_t t = 0; t < la; ++t) v[g * la + t] = b[t];
            vecs.push_back(std::move(v));
        }
    Subspace top = Subspace::span(vecs, gens_ * la, a_->field());
    return static_cast<unsigned>(gens_ * la - top.dim());
}

unsigned FiniteModuleA::loewy_length() const {
    // least i with m^i A^g inside the relations
    std::size_t la = a_->length();
    for (unsigned i = 0;; ++i) {
        bool inside = true;
        for (unsigned g = 0; g < gens_ && inside; ++g)
            for (const auto& b : a_->power(i).basis()) {
                std::vector<Scalar> v(gens_ * la, Scalar::zero(a_->field()));
                for (std::size_t t = 0; t < la; ++t) v[g * la + t] = b[t];
                if (!relations_.contains(v)) {
                    inside = false;
                    break;
                }
            }
        if (inside) return i;
    }
}

bool FiniteModuleA::is_free() const { return length() == min_generators() * a_->length(); }

}  // namespace loewy
