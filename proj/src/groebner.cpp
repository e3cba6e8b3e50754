#include "loewy/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace loewy {

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = f.times_term(lf.coeff.inverse(), l.divide(lf.mono));
    Polynomial b = g.times_term(lg.coeff.inverse(), l.divide(lg.mono));
    return a - b;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial rem = Polynomial::zero(f.nvars(), f.field(), f.order());
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            const Term& lg = g.leading_term();
            if (lg.mono.divides(lt.mono)) {
                work = work - g.times_term(lt.coeff / lg.coeff, lt.mono.divide(lg.mono));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + Polynomial::from_terms({lt}, f.nvars(), f.field(), f.order());
            work = work - Polynomial::from_terms({lt}, f.nvars(), f.field(), f.order());
        }
    }
    return rem;
}

struct Pair {
    unsigned deg;       // total degree of the lcm
    Monomial lcm;
    std::size_t i, j;   // i < j
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, unsigned nvars, const Field& f,
                         TermOrder order) {
    GroebnerBasis out;
    out.order = order;
    out.nvars = nvars;
    out.field = f;

    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        Polynomial h = g.with_order(order);
        if (!h.is_zero()) basis.push_back(h.monic());
    }

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Pair p;
        p.i = i;
        p.j = j;
        p.lcm = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        p.deg = p.lcm.deg;
        return p;
    };

    std::vector<Pair> pending;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.push_back(make_pair(i, j));

    auto pending_has = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        for (const Pair& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);

        const Monomial& li = basis[p.i].leading_monomial();
        const Monomial& lj = basis[p.j].leading_monomial();
        if (li.coprime(lj)) continue;  // product criterion
        // chain criterion: some other leading term divides the lcm and both
        // sub-pairs have already been handled
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].leading_monomial().divides(p.lcm) && !pending_has(p.i, k) &&
                !pending_has(p.j, k))
                chained = true;
        }
        if (chained) continue;

        Polynomial r = reduce_full(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        std::size_t nw = basis.size() - 1;
        for (std::size_t i = 0; i < nw; ++i) pending.push_back(make_pair(i, nw));
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce to the unique reduced basis
    std::vector<Polynomial> reduced(minimal);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = reduce_full(minimal[i], others).monic();
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    out.elems = std::move(reduced);
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return reduce_full(f.with_order(gb.order), gb.elems);
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw std::logic_error("divide_exact by zero");
    Polynomial q = Polynomial::zero(g.nvars(), g.field(), g.order());
    Polynomial r = g.with_order(f.order());
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        const Term& lf = f.leading_term();
        if (!lf.mono.divides(lr.mono)) throw std::logic_error("divide_exact: not divisible");
        Scalar c = lr.coeff / lf.coeff;
        Monomial m = lr.mono.divide(lf.mono);
        q = q + Polynomial::from_terms({{m, c}}, g.nvars(), g.field(), g.order());
        r = r - f.times_term(c, m);
    }
    return q;
}

}  // namespace loewy
