#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewy/field.hpp"

namespace loewy {

inline constexpr unsigned kMaxVars = 16;

// Exponent vector with cached total degree.
struct Monomial {
    std::vector<unsigned> exp;
    unsigned deg = 0;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e);
    static Monomial one(unsigned nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
    static Monomial var(unsigned i, unsigned nvars, unsigned power = 1);

    unsigned nvars() const { return static_cast<unsigned>(exp.size()); }
    bool is_one() const { return deg == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial divide(const Monomial& o) const;   // this / o, assumes o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    Monomial insert_var_front() const;  // new variable with exponent 0 at index 0
    Monomial drop_var(unsigned i) const;

    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator!=(const Monomial& o) const { return exp != o.exp; }
};

// Term orders. Conventions (fixed, documented, tested):
//  - grevlex: higher total degree wins; on equal degree the *last* nonzero
//    entry of a-b decides, negative meaning a > b. So x > y > z, x^2 > x*y.
//  - lex: the first nonzero entry of a-b decides, positive meaning a > b.
//  - block(s): grevlex on variables [0, s) first, ties broken by grevlex on
//    the rest; eliminates the leading block (used for colon/intersection).
class TermOrder {
  public:
    enum class Kind { grevlex, lex, block };

    TermOrder() : kind_(Kind::grevlex), split_(0) {}
    static TermOrder grevlex() { return TermOrder(); }
    static TermOrder lex();
    static TermOrder block_elim(unsigned split);

    Kind kind() const { return kind_; }
    unsigned split() const { return split_; }

    // negative: a < b, zero: equal, positive: a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const TermOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }
    bool operator!=(const TermOrder& o) const { return !(*this == o); }

  private:
    Kind kind_;
    unsigned split_;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Polynomial in a fixed number of variables with terms kept sorted strictly
// descending in the attached order (so terms_[0] is the leading term).
class Polynomial {
  public:
    Polynomial() : nvars_(0) {}
    Polynomial(unsigned nvars, const Field& f, TermOrder ord = TermOrder::grevlex())
        : nvars_(nvars), field_(f), order_(ord) {}

    static Polynomial zero(unsigned nvars, const Field& f, TermOrder ord = TermOrder::grevlex());
    static Polynomial constant(const Scalar& c, unsigned nvars, TermOrder ord = TermOrder::grevlex());
    static Polynomial from_terms(std::vector<Term> terms, unsigned nvars, const Field& f,
                                 TermOrder ord = TermOrder::grevlex());

    unsigned nvars() const { return nvars_; }
    const Field& field() const { return field_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    unsigned degree() const;  // total degree; 0 for the zero polynomial
    bool is_homogeneous() const;
    Scalar constant_coefficient() const;
    Scalar coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Scalar& c, const Monomial& m) const;
    Polynomial monic() const;

    Polynomial with_order(TermOrder ord) const;

    // substitute variable i by `value` (same variable count), then the caller
    // may drop_var; value must not involve variable i
    Polynomial substitute(unsigned var, const Polynomial& value) const;
    Polynomial insert_var_front() const;
    Polynomial drop_var(unsigned var) const;  // requires exponent 0 everywhere

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& var_names) const;

  private:
    void normalize(std::vector<Term> terms);

    unsigned nvars_ = 0;
    Field field_;
    TermOrder order_;
    std::vector<Term> terms_;
};

// x_i as a polynomial
Polynomial poly_var(unsigned i, unsigned nvars, const Field& f,
                    TermOrder ord = TermOrder::grevlex());

}  // namespace loewy
