#include "loewy/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace loewy {

std::vector<long long> poly_trim(std::vector<long long> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<long long> poly_sub(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

std::vector<long long> poly_mul_one_minus_tpow(const std::vector<long long>& p, unsigned d) {
    std::vector<long long> r(p.size() + d, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] += p[i];
        r[i + d] -= p[i];
    }
    return poly_trim(std::move(r));
}

std::optional<std::vector<long long>> poly_div_one_minus_t(const std::vector<long long>& p) {
    if (p.empty()) return std::vector<long long>{};
    // p = (1-t) q  =>  q_0 = p_0, q_i = p_i + q_{i-1}, remainder must vanish
    std::vector<long long> q(p.size(), 0);
    long long carry = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        carry += p[i];
        q[i] = carry;
    }
    if (carry != 0) return std::nullopt;
    q.pop_back();
    return poly_trim(std::move(q));
}

long long poly_eval_one(const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
}

namespace {

std::vector<long long> numerator_rec(std::vector<Monomial> gens, unsigned nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    for (const Monomial& g : gens)
        if (g.is_one()) return {};  // unit ideal, zero ring
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        std::vector<long long> n{1};
        for (const Monomial& g : gens) n = poly_mul_one_minus_tpow(n, g.deg);
        return n;
    }
    // pivot: the variable hitting the most generators (>=2 exists here)
    unsigned best = 0, best_count = 0;
    for (unsigned v = 0; v < nvars; ++v) {
        unsigned count = 0;
        for (const Monomial& g : gens)
            if (g.exp[v] > 0) ++count;
        if (count > best_count) {
            best_count = count;
            best = v;
        }
    }
    // I + (x): drop generators containing x, add x itself
    std::vector<Monomial> plus{Monomial::var(best, nvars)};
    for (const Monomial& g : gens)
        if (g.exp[best] == 0) plus.push_back(g);
    // I : x: divide x out where present
    std::vector<Monomial> col;
    for (const Monomial& g : gens) {
        if (g.exp[best] > 0) {
            Monomial h = g;
            --h.exp[best];
            --h.deg;
            col.push_back(h);
        } else {
            col.push_back(g);
        }
    }
    std::vector<long long> a = numerator_rec(std::move(plus), nvars);
    std::vector<long long> b = numerator_rec(std::move(col), nvars);
    std::vector<long long> r(std::max(a.size(), b.size() + 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    return poly_trim(std::move(r));
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, unsigned nvars) {
    return numerator_rec(std::move(gens), nvars);
}

HilbertData hilbert_data(const Ideal& I) {
    HilbertData h;
    h.nvars = I.nvars();
    h.numerator = hilbert_numerator(I.lead_monomials(), I.nvars());
    return h;
}

int HilbertData::krull_dim() const {
    if (poly_trim(numerator).empty()) return -1;
    std::vector<long long> n = numerator;
    unsigned v = 0;
    while (true) {
        auto q = poly_div_one_minus_t(n);
        if (!q) break;
        n = *q;
        ++v;
    }
    return static_cast<int>(nvars) - static_cast<int>(v);
}

unsigned long HilbertData::multiplicity() const {
    std::vector<long long> n = poly_trim(numerator);
    if (n.empty()) return 0;
    while (true) {
        auto q = poly_div_one_minus_t(n);
        if (!q) break;
        n = *q;
    }
    long long e = poly_eval_one(n);
    if (e <= 0) throw std::logic_error("nonpositive multiplicity");
    return static_cast<unsigned long>(e);
}

unsigned long HilbertData::hf(unsigned n) const {
    // coefficient of t^n in numerator / (1-t)^c
    mpz_class acc = 0;
    unsigned c = nvars;
    for (std::size_t j = 0; j < numerator.size(); ++j) {
        if (j > n) break;
        if (numerator[j] == 0) continue;
        if (c == 0) {
            if (j == n) acc += static_cast<long>(numerator[j]);
            continue;
        }
        acc += mpz_class(static_cast<long>(numerator[j])) * binomial(n - j + c - 1, c - 1);
    }
    if (acc < 0) throw std::logic_error("negative Hilbert value");
    if (!acc.fits_ulong_p()) throw std::logic_error("Hilbert value overflow");
    return acc.get_ui();
}

std::vector<long long> HilbertData::finite_hf() const {
    std::vector<long long> n = numerator;
    for (unsigned i = 0; i < nvars; ++i) {
        auto q = poly_div_one_minus_t(n);
        if (!q) throw std::logic_error("finite_hf on a ring of positive dimension");
        n = *q;
    }
    for (long long c : n)
        if (c < 0) throw std::logic_error("negative degreewise dimension");
    return poly_trim(std::move(n));
}

long HilbertData::top_degree() const {
    auto h = finite_hf();
    return static_cast<long>(h.size()) - 1;  // -1 for the zero ring
}

unsigned long HilbertData::total_length() const {
    long long s = poly_eval_one(finite_hf());
    return static_cast<unsigned long>(s);
}

unsigned long hilbert_function(const Ideal& I, unsigned n) {
    for (const Polynomial& g : I.gens())
        if (!g.is_homogeneous())
            throw usage_error("Hilbert function requires homogeneous generators");
    return hilbert_data(I).hf(n);
}

}  // namespace loewy
