#include "loewy/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace loewy {

Monomial::Monomial(std::vector<unsigned> e) : exp(std::move(e)) {
    if (exp.size() > kMaxVars) throw usage_error("too many variables (max 16)");
    for (unsigned x : exp) deg += x;
}

Monomial Monomial::var(unsigned i, unsigned nvars, unsigned power) {
    std::vector<unsigned> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (unsigned i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
    r.deg += o.deg;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (unsigned i = 0; i < exp.size(); ++i)
        if (exp[i] > o.exp[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r = *this;
    for (unsigned i = 0; i < exp.size(); ++i) r.exp[i] -= o.exp[i];
    r.deg -= o.deg;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (unsigned i = 0; i < a.exp.size(); ++i) {
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
        r.deg += r.exp[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (unsigned i = 0; i < exp.size(); ++i)
        if (exp[i] > 0 && o.exp[i] > 0) return false;
    return true;
}

Monomial Monomial::insert_var_front() const {
    std::vector<unsigned> e;
    e.reserve(exp.size() + 1);
    e.push_back(0);
    e.insert(e.end(), exp.begin(), exp.end());
    return Monomial(std::move(e));
}

Monomial Monomial::drop_var(unsigned i) const {
    std::vector<unsigned> e = exp;
    e.erase(e.begin() + i);
    return Monomial(std::move(e));
}

TermOrder TermOrder::lex() {
    TermOrder t;
    t.kind_ = Kind::lex;
    return t;
}

TermOrder TermOrder::block_elim(unsigned split) {
    TermOrder t;
    t.kind_ = Kind::block;
    t.split_ = split;
    return t;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
    unsigned da = 0, db = 0;
    for (unsigned i = lo; i < hi; ++i) {
        da += a.exp[i];
        db += b.exp[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (unsigned i = hi; i-- > lo;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;  // last diff negative => a > b
    }
    return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    unsigned n = a.nvars();
    if (n != b.nvars()) throw std::logic_error("order: variable count mismatch");
    switch (kind_) {
        case Kind::grevlex:
            return grevlex_range(a, b, 0, n);
        case Kind::lex:
            for (unsigned i = 0; i < n; ++i)
                if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
            return 0;
        case Kind::block: {
            int c = grevlex_range(a, b, 0, split_);
            if (c != 0) return c;
            return grevlex_range(a, b, split_, n);
        }
    }
    return 0;
}

Polynomial Polynomial::zero(unsigned nvars, const Field& f, TermOrder ord) {
    return Polynomial(nvars, f, ord);
}

Polynomial Polynomial::constant(const Scalar& c, unsigned nvars, TermOrder ord) {
    Polynomial p(nvars, c.field(), ord);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(nvars), c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, unsigned nvars, const Field& f,
                                  TermOrder ord) {
    Polynomial p(nvars, f, ord);
    p.normalize(std::move(terms));
    return p;
}

void Polynomial::normalize(std::vector<Term> terms) {
    for (const Term& t : terms) {
        if (t.mono.nvars() != nvars_) throw std::logic_error("term with wrong variable count");
        if (t.coeff.field() != field_) throw usage_error("mixed-field coefficients");
    }
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
    terms_.clear();
    for (Term& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono)
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
        if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
    }
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.deg);
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_[0].mono.deg;
    for (const Term& t : terms_)
        if (t.mono.deg != d) return false;
    return true;
}

Scalar Polynomial::constant_coefficient() const {
    for (const Term& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Scalar::zero(field_);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(field_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("add: variable count mismatch");
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    Polynomial r(nvars_, field_, order_);
    r.normalize(std::move(all));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(nvars_, field_, order_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
    if (c.is_zero()) return zero(nvars_, field_, order_);
    Polynomial r(nvars_, field_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
    // multiplying by a fixed monomial preserves relative order
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("mul: variable count mismatch");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) acc.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    Polynomial r(nvars_, field_, order_);
    r.normalize(std::move(acc));
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_term().coeff.inverse());
}

Polynomial Polynomial::with_order(TermOrder ord) const {
    Polynomial r(nvars_, field_, ord);
    r.normalize(terms_);
    return r;
}

Polynomial Polynomial::substitute(unsigned var, const Polynomial& value) const {
    Polynomial acc = zero(nvars_, field_, order_);
    for (const Term& t : terms_) {
        Polynomial part = constant(t.coeff, nvars_, order_);
        Monomial rest = t.mono;
        unsigned e = rest.exp[var];
        rest.deg -= e;
        rest.exp[var] = 0;
        part = part.times_term(Scalar::one(field_), rest);
        for (unsigned k = 0; k < e; ++k) part = part * value;
        acc = acc + part;
    }
    return acc;
}

Polynomial Polynomial::insert_var_front() const {
    Polynomial r(nvars_ + 1, field_, order_);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_) ts.push_back({t.mono.insert_var_front(), t.coeff});
    r.normalize(std::move(ts));
    return r;
}

Polynomial Polynomial::drop_var(unsigned var) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (t.mono.exp[var] != 0) throw std::logic_error("drop_var: variable still present");
        ts.push_back({t.mono.drop_var(var), t.coeff});
    }
    Polynomial r(nvars_ - 1, field_, order_);
    r.normalize(std::move(ts));
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
    // compare as term sets; order tags may differ
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < o.terms_.size() && !found; ++j)
            if (terms_[i].mono == o.terms_[j].mono && terms_[i].coeff == o.terms_[j].coeff)
                found = true;
        if (!found) return false;
    }
    return true;
}

std::string Polynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (unsigned i = 0; i < t.mono.nvars(); ++i) {
            unsigned e = t.mono.exp[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names.at(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += c;
        } else if (c == "1") {
            out += mono;
        } else {
            out += c + "*" + mono;
        }
    }
    return out;
}

Polynomial poly_var(unsigned i, unsigned nvars, const Field& f, TermOrder ord) {
    return Polynomial::from_terms({{Monomial::var(i, nvars), Scalar::one(f)}}, nvars, f, ord);
}

}  // namespace loewy
