#include "loewy/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace loewy {

Ideal::Ideal(std::vector<Polynomial> gens, unsigned nvars, const Field& f)
    : nvars_(nvars), field_(f) {
    for (Polynomial& g : gens) {
        if (g.nvars() != nvars) throw std::logic_error("ideal generator with wrong variable count");
        if (g.field() != f) throw usage_error("ideal generator over wrong field");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal::Ideal(const Ideal& o) : gens_(o.gens_), nvars_(o.nvars_), field_(o.field_) {
    std::scoped_lock lock(o.mu_);
    cache_ = o.cache_;
}

Ideal& Ideal::operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mu_, o.mu_);
    gens_ = o.gens_;
    nvars_ = o.nvars_;
    field_ = o.field_;
    cache_ = o.cache_;
    return *this;
}

Ideal Ideal::unit(unsigned nvars, const Field& f) {
    return Ideal({Polynomial::constant(Scalar::one(f), nvars)}, nvars, f);
}

const GroebnerBasis& Ideal::groebner(TermOrder order) const {
    std::scoped_lock lock(mu_);
    auto key = std::make_pair(static_cast<int>(order.kind()), order.split());
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto gb = std::make_shared<GroebnerBasis>(buchberger(gens_, nvars_, field_, order));
        it = cache_.emplace(key, std::move(gb)).first;
    }
    return *it->second;
}

bool Ideal::contains(const Polynomial& f) const {
    return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_zero() const { return groebner().elems.empty(); }

bool Ideal::is_unit() const {
    const GroebnerBasis& gb = groebner();
    return gb.elems.size() == 1 && gb.elems[0].leading_monomial().is_one();
}

std::vector<Monomial> Ideal::lead_monomials() const {
    std::vector<Monomial> out;
    for (const Polynomial& g : groebner().elems) out.push_back(g.leading_monomial());
    return out;
}

bool equal_ideals(const Ideal& a, const Ideal& b) {
    const GroebnerBasis& ga = a.groebner();
    const GroebnerBasis& gb = b.groebner();
    if (ga.elems.size() != gb.elems.size()) return false;
    for (std::size_t i = 0; i < ga.elems.size(); ++i)
        if (ga.elems[i] != gb.elems[i]) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(std::move(gens), a.nvars(), a.field());
}

namespace {

// generators of (t*A + (1-t)*B) in k[t, x_1..x_n], t is variable 0
std::vector<Polynomial> mix_with_tag(const Ideal& A, const Ideal& B) {
    unsigned n = A.nvars() + 1;
    const Field& f = A.field();
    Polynomial t = poly_var(0, n, f);
    Polynomial one_minus_t = Polynomial::constant(Scalar::one(f), n) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : A.gens()) gens.push_back(t * g.insert_var_front());
    for (const Polynomial& g : B.gens()) gens.push_back(one_minus_t * g.insert_var_front());
    return gens;
}

// elements of the reduced basis free of the front variable, with it dropped
std::vector<Polynomial> eliminate_front(const std::vector<Polynomial>& gens, unsigned nvars_with_t,
                                        const Field& f) {
    GroebnerBasis gb = buchberger(gens, nvars_with_t, f, TermOrder::block_elim(1));
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elems) {
        if (g.leading_monomial().exp[0] == 0) kept.push_back(g.drop_var(0));
    }
    return kept;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars() || a.field() != b.field())
        throw std::logic_error("intersect: ring mismatch");
    if (a.has_zero_gens_only() || b.has_zero_gens_only()) return Ideal::zero(a.nvars(), a.field());
    std::vector<Polynomial> kept = eliminate_front(mix_with_tag(a, b), a.nvars() + 1, a.field());
    std::vector<Polynomial> back;
    for (Polynomial& g : kept) back.push_back(g.with_order(TermOrder::grevlex()));
    return Ideal(std::move(back), a.nvars(), a.field());
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.nvars() != I.nvars() || f.field() != I.field())
        throw std::logic_error("colon: ring mismatch");
    if (f.is_zero()) throw usage_error("colon by the zero element");
    if (I.has_zero_gens_only()) return Ideal::zero(I.nvars(), I.field());
    Ideal fI({f}, I.nvars(), I.field());
    Ideal inter = intersect(I, fI);
    std::vector<Polynomial> quot;
    for (const Polynomial& g : inter.gens()) quot.push_back(divide_exact(g, f));
    return Ideal(std::move(quot), I.nvars(), I.field());
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
    if (J.has_zero_gens_only()) return Ideal::unit(I.nvars(), I.field());
    bool first = true;
    Ideal acc;
    for (const Polynomial& f : J.gens()) {
        Ideal c = colon(I, f);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int guard = 0; guard < 1000; ++guard) {
        Ideal next = colon_ideal(cur, J);
        if (equal_ideals(next, cur)) return cur;
        cur = next;
    }
    throw std::logic_error("saturation did not stabilize");
}

Ideal ideal_power(const Ideal& I, unsigned n) {
    if (n == 0) return Ideal::unit(I.nvars(), I.field());
    const auto& gens = I.gens();
    if (gens.empty()) return Ideal::zero(I.nvars(), I.field());
    // all degree-n products of generators (combinations with repetition)
    std::vector<Polynomial> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Polynomial prod = gens[idx[0]];
        for (unsigned k = 1; k < n; ++k) prod = prod * gens[idx[k]];
        out.push_back(prod);
        // next nondecreasing index tuple
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && idx[pos] == gens.size() - 1) --pos;
        if (pos < 0) break;
        std::size_t v = idx[pos] + 1;
        for (unsigned k = pos; k < n; ++k) idx[k] = v;
    }
    return Ideal(std::move(out), I.nvars(), I.field());
}

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(nvars, 0);
    // enumerate exponent vectors summing to d
    auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
        if (pos + 1 == nvars) {
            e[pos] = left;
            out.push_back(Monomial(e));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<unsigned>{}));
        return out;
    }
    rec(rec, 0, d);
    TermOrder g = TermOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return g.compare(a, b) > 0; });
    return out;
}

Ideal variable_ideal(unsigned nvars, const Field& f) {
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < nvars; ++i) gens.push_back(poly_var(i, nvars, f));
    return Ideal(std::move(gens), nvars, f);
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < ms.size() && !redundant; ++j) {
            if (i == j) continue;
            if (ms[j].divides(ms[i]) && !(ms[i] == ms[j] && j > i)) redundant = true;
        }
        if (!redundant) out.push_back(ms[i]);
    }
    return out;
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I) {
    std::vector<Monomial> leads = I.lead_monomials();
    unsigned n = I.nvars();
    if (!leads.empty() && leads[0].is_one()) return std::vector<Monomial>{};  // unit ideal
    // finite iff every variable has a pure power among the leading terms
    for (unsigned v = 0; v < n; ++v) {
        bool pure = false;
        for (const Monomial& m : leads) {
            bool only_v = m.exp[v] > 0;
            for (unsigned w = 0; w < n && only_v; ++w)
                if (w != v && m.exp[w] > 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return std::nullopt;
    }
    auto divisible = [&](const Monomial& m) {
        for (const Monomial& l : leads)
            if (l.divides(m)) return true;
        return false;
    };
    // standard monomials are closed under division: grow from 1
    TermOrder g = TermOrder::grevlex();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return g.compare(a, b) < 0; };
    std::set<Monomial, decltype(cmp)> seen(cmp);
    std::deque<Monomial> queue;
    Monomial one = Monomial::one(n);
    if (!divisible(one)) {
        seen.insert(one);
        queue.push_back(one);
    }
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (unsigned v = 0; v < n; ++v) {
            Monomial next = m.times(Monomial::var(v, n));
            if (divisible(next) || seen.count(next)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    return std::vector<Monomial>(seen.begin(), seen.end());
}

}  // namespace loewy
