#include "loewy/graded.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

namespace loewy {

namespace {

Ideal power_ideal(unsigned nvars, const Field& f, unsigned k) {
    std::vector<Polynomial> gens;
    for (const Monomial& m : monomials_of_degree(nvars, k))
        gens.push_back(Polynomial::from_terms({{m, Scalar::one(f)}}, nvars, f));
    return Ideal(std::move(gens), nvars, f);
}

unsigned long colength(const Ideal& I) {
    HilbertData hd = hilbert_data(I);
    if (!hd.finite_length()) throw std::logic_error("expected a finite colength here");
    return hd.total_length();
}

void check_linear(const Polynomial& x, unsigned nvars, const Field& f) {
    if (x.nvars() != nvars || x.field() != f) throw usage_error("linear form lives in the wrong ring");
    if (x.is_zero() || x.degree() != 1 || !x.is_homogeneous())
        throw usage_error("expected a nonzero homogeneous linear form");
}

// degreewise dimensions of the finite-length module whose Hilbert numerator
// difference this is; empty when zero
std::vector<long long> finite_hf_from_diff(std::vector<long long> diff, unsigned nvars) {
    diff = poly_trim(std::move(diff));
    if (diff.empty()) return {};
    for (unsigned i = 0; i < nvars; ++i) {
        auto q = poly_div_one_minus_t(diff);
        if (!q) throw std::logic_error("numerator difference is not a finite-length module");
        diff = *q;
    }
    return poly_trim(std::move(diff));
}

}  // namespace

GradedAlgebra GradedAlgebra::build(Ideal ideal) {
    for (const Polynomial& g : ideal.gens())
        if (!g.is_zero() && !g.is_homogeneous())
            throw usage_error("graded quotient needs homogeneous generators; declare this ring differently");
    if (ideal.is_unit()) throw usage_error("unit ideal defines the zero ring");
    HilbertData hd = hilbert_data(ideal);
    return GradedAlgebra(std::move(ideal), std::move(hd));
}

unsigned GradedAlgebra::embdim() const { return static_cast<unsigned>(hd_.hf(1)); }

bool GradedAlgebra::is_regular() const {
    std::vector<long long> expected{1};
    for (unsigned i = embdim(); i < nvars(); ++i) expected = poly_mul_one_minus_tpow(expected, 1);
    return poly_trim(hd_.numerator) == poly_trim(expected);
}

unsigned long GradedAlgebra::quotient_length(unsigned n) const {
    unsigned long total = 0;
    for (unsigned j = 0; j < n; ++j) total += hd_.hf(j);
    return total;
}

unsigned GradedAlgebra::ord() const {
    if (is_regular()) return 1;
    for (unsigned n = 1;; ++n) {
        mpz_class len(quotient_length(n + 1));
        if (len < binomial(n + embdim(), n)) return n;
    }
}

unsigned long GradedAlgebra::length() const {
    if (!hd_.finite_length()) throw std::logic_error("length of a positive-dimensional ring");
    return hd_.total_length();
}

long GradedAlgebra::top_degree() const {
    if (!hd_.finite_length()) throw std::logic_error("top degree of a positive-dimensional ring");
    return hd_.top_degree();
}

unsigned GradedAlgebra::loewy_length() const { return static_cast<unsigned>(top_degree()) + 1; }

unsigned GradedAlgebra::socle_dimension() const {
    unsigned long total = length();
    Ideal socle_colon = colon_ideal(ideal_, variable_ideal(nvars(), field()));
    return static_cast<unsigned>(total - colength(socle_colon));
}

LinearFormCheck GradedAlgebra::check_linear_form(const Polynomial& x) const {
    check_linear(x, nvars(), field());
    LinearFormCheck out;
    Ideal cx = colon(ideal_, x);
    std::vector<long long> diff = poly_sub(hd_.numerator, hilbert_data(cx).numerator);
    if (poly_trim(diff).empty()) {
        out.superficial = true;
        out.nzd = true;
        return out;
    }
    // (m^{n+1} : x) = m^n + (0:x)_{<n}, so everything is decided by the
    // degreewise dimensions of the annihilator: it must be finite length,
    // the colon is strict past its initial degree, and intersecting with
    // m^{n0} restores equality from one past its top degree
    std::vector<long long> ann;
    diff = poly_trim(std::move(diff));
    for (unsigned i = 0; i < nvars(); ++i) {
        auto q = poly_div_one_minus_t(diff);
        if (!q) return out;  // annihilator has positive dimension
        diff = *q;
    }
    ann = poly_trim(std::move(diff));
    out.superficial = true;
    for (long long c : ann)
        if (c < 0) throw std::logic_error("annihilator hilbert function went negative");
    unsigned indeg = 0;
    while (ann[indeg] == 0) ++indeg;
    out.theta = indeg + 1;
    out.collapse_from = static_cast<unsigned>(ann.size());  // top degree + 1
    out.annihilator_hf.assign(ann.begin(), ann.end());
    return out;
}

bool GradedAlgebra::colon_power_matches(unsigned n, const Polynomial& x) const {
    check_linear(x, nvars(), field());
    Ideal high = ideal_sum(ideal_, power_ideal(nvars(), field(), n + 1));
    Ideal low = ideal_sum(ideal_, power_ideal(nvars(), field(), n));
    return equal_ideals(colon(high, x), low);
}

bool GradedAlgebra::injective_at(unsigned i, const Polynomial& x) const {
    check_linear(x, nvars(), field());
    if (i == 0) return true;
    Ideal quot = ideal_sum(ideal_, Ideal({x}, nvars(), field()));
    unsigned long coker = hilbert_data(quot).hf(i);
    unsigned long hi = hd_.hf(i), lo = hd_.hf(i - 1);
    return hi >= lo && coker == hi - lo;
}

Polynomial GradedAlgebra::random_linear(Rng& rng) const {
    const Field& f = field();
    for (;;) {
        Polynomial x = Polynomial::zero(nvars(), f);
        for (unsigned v = 0; v < nvars(); ++v) {
            long long c = f.is_rationals() ? rng.range(-50, 50)
                                           : static_cast<long long>(rng.below(f.characteristic()));
            if (c != 0) x = x + poly_var(v, nvars(), f).scaled(Scalar::from_int(f, c));
        }
        if (!x.is_zero()) return x;
    }
}

GradedAlgebra GradedAlgebra::quotient_by_linear(const Polynomial& x) const {
    check_linear(x, nvars(), field());
    const Field& f = field();
    unsigned pivot = 0;
    Scalar cp = Scalar::zero(f);
    for (const Term& t : x.terms()) {
        unsigned v = 0;
        while (t.mono.exp[v] == 0) ++v;
        if (cp.is_zero() || v > pivot) {
            pivot = v;
            cp = t.coeff;
        }
    }
    Polynomial value = Polynomial::zero(nvars(), f);
    for (const Term& t : x.terms()) {
        unsigned v = 0;
        while (t.mono.exp[v] == 0) ++v;
        if (v == pivot) continue;
        value = value + poly_var(v, nvars(), f).scaled(-(t.coeff / cp));
    }
    std::vector<Polynomial> gens;
    for (const Polynomial& g : ideal_.gens()) {
        Polynomial h = g.substitute(pivot, value).drop_var(pivot);
        if (!h.is_zero()) gens.push_back(h);
    }
    return build(Ideal(std::move(gens), nvars() - 1, f));
}

GradedAlgebra::Chain GradedAlgebra::superficial_chain(std::uint64_t seed) const {
    Chain chain;
    chain.rings.push_back(*this);
    Rng rng(Rng::mix(seed, 0x5a93));
    while (chain.rings.back().dimension() > 0) {
        const GradedAlgebra& cur = chain.rings.back();
        bool placed = false;
        for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
            Polynomial x = cur.random_linear(rng);
            LinearFormCheck lf = cur.check_linear_form(x);
            if (!lf.superficial) continue;
            GradedAlgebra next = cur.quotient_by_linear(x);
            if (next.dimension() != cur.dimension() - 1)
                throw std::logic_error("superficial quotient kept the dimension");
            chain.forms.push_back(x);
            chain.checks.push_back(lf);
            chain.all_nzd = chain.all_nzd && lf.nzd;
            if (lf.theta && (!chain.theta || *lf.theta < *chain.theta)) chain.theta = lf.theta;
            chain.rings.push_back(std::move(next));
            placed = true;
        }
        if (!placed)
            throw usage_error("no superficial linear form in 32 draws; the coefficient field is too small");
    }
    return chain;
}

bool GradedAlgebra::is_cm(std::uint64_t seed) const {
    if (dimension() <= 0) return true;
    return superficial_chain(seed).all_nzd;
}

long GradedAlgebra::regularity(std::uint64_t seed) const {
    Rng rng(Rng::mix(seed, 0x7e60));
    GradedAlgebra cur = *this;
    long acc = LONG_MIN;
    while (cur.dimension() > 0) {
        Ideal sat = saturate(cur.ideal_, variable_ideal(cur.nvars(), cur.field()));
        if (!equal_ideals(sat, cur.ideal_)) {
            // split off the finite part; regularity is the larger of its top
            // degree and the regularity of the remaining positive-depth ring
            std::vector<long long> h0 = finite_hf_from_diff(
                poly_sub(cur.hd_.numerator, hilbert_data(sat).numerator), cur.nvars());
            if (!h0.empty()) acc = std::max(acc, static_cast<long>(h0.size()) - 1);
            cur = build(sat);
        }
        bool placed = false;
        for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
            Polynomial x = cur.random_linear(rng);
            if (!cur.check_linear_form(x).nzd) continue;
            cur = cur.quotient_by_linear(x);
            placed = true;
        }
        if (!placed)
            throw usage_error("no linear nonzerodivisor in 32 draws; the coefficient field is too small");
    }
    return std::max(acc, cur.top_degree());
}

GradedModule GradedModule::cyclic(const GradedAlgebra& a, const std::vector<Polynomial>& gens) {
    for (const Polynomial& g : gens)
        if (!g.is_zero() && !g.is_homogeneous())
            throw usage_error("graded module relations must be homogeneous");
    Ideal total = ideal_sum(a.ideal(), Ideal(gens, a.nvars(), a.field()));
    HilbertData hd = hilbert_data(total);
    // the only cheap certificate: no new relations, so the module is free
    bool fr = equal_ideals(total, a.ideal());
    return GradedModule(std::move(total), std::move(hd), fr, 0);
}

GradedModule GradedModule::koszul(const GradedAlgebra& a, const std::vector<Polynomial>& elems) {
    Ideal cur = a.ideal();
    std::vector<long long> num = a.hilbert().numerator;
    unsigned step = 0;
    for (const Polynomial& f : elems) {
        ++step;
        if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
            throw usage_error("koszul elements must be nonzero homogeneous of positive degree");
        Ideal next = ideal_sum(cur, Ideal({f}, a.nvars(), a.field()));
        std::vector<long long> got = hilbert_data(next).numerator;
        std::vector<long long> expected = poly_mul_one_minus_tpow(num, f.degree());
        if (poly_trim(got) != poly_trim(expected))
            throw usage_error("element " + std::to_string(step) +
                              " is a zerodivisor on the previous quotient; not a regular sequence");
        cur = std::move(next);
        num = std::move(got);
    }
    HilbertData hd = hilbert_data(cur);
    return GradedModule(std::move(cur), std::move(hd), true, static_cast<unsigned>(elems.size()));
}

unsigned GradedModule::pd() const {
    if (!certified_) throw std::logic_error("projective dimension queried without a certificate");
    return pd_;
}

unsigned long GradedModule::length() const {
    if (is_zero()) return 0;
    if (!hd_.finite_length()) throw std::logic_error("length of a positive-dimensional module");
    return hd_.total_length();
}

unsigned GradedModule::loewy_length() const {
    if (is_zero()) return 0;
    if (!hd_.finite_length()) throw std::logic_error("loewy length of a positive-dimensional module");
    return static_cast<unsigned>(hd_.top_degree()) + 1;
}

GradedSplitLengths graded_split_lengths(const GradedAlgebra& a, const Polynomial& x, unsigned s) {
    const Field& f = a.field();
    unsigned nv = a.nvars();
    Ideal join = ideal_sum(ideal_sum(a.ideal(), power_ideal(nv, f, s)), Ideal({x}, nv, f));
    Ideal principal = ideal_sum(a.ideal(), Ideal({x}, nv, f));
    std::vector<Polynomial> shifted;
    for (const Monomial& m : monomials_of_degree(nv, s))
        shifted.push_back(x.times_term(Scalar::one(f), m));
    shifted.push_back(x * x);
    Ideal xj = ideal_sum(a.ideal(), Ideal(std::move(shifted), nv, f));

    GradedSplitLengths out{};
    out.right_top = colength(join);
    out.right_bottom = colength(principal) - out.right_top;
    out.left = colength(xj) - out.right_top;
    return out;
}

GradedFourTerm graded_four_term(const GradedAlgebra& a, const Polynomial& x, unsigned n) {
    if (n == 0) throw std::logic_error("four-term sum needs n >= 1");
    const Field& f = a.field();
    unsigned nv = a.nvars();
    Ideal pn = ideal_sum(a.ideal(), power_ideal(nv, f, n));
    GradedFourTerm out{};
    out.len_nm1 = a.quotient_length(n - 1);
    out.len_n = a.quotient_length(n);
    out.colon_excess = out.len_nm1 - colength(colon(pn, x));
    out.len_join = colength(ideal_sum(pn, Ideal({x}, nv, f)));
    return out;
}

unsigned long graded_piece_over_shift(const GradedAlgebra& a, const Polynomial& x, unsigned i) {
    const Field& f = a.field();
    unsigned nv = a.nvars();
    std::vector<Polynomial> shifted;
    for (const Monomial& m : monomials_of_degree(nv, i))
        shifted.push_back(x.times_term(Scalar::one(f), m));
    Ideal xmi = ideal_sum(a.ideal(), Ideal(std::move(shifted), nv, f));
    return colength(xmi) - a.quotient_length(i + 1);
}

}  // namespace loewy
