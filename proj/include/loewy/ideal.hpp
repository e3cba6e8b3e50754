#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <map>
#include <vector>

#include "loewy/groebner.hpp"

namespace loewy {

// Ideal of k[x_1..x_n] with cached reduced Groebner bases per order.
class Ideal {
  public:
    Ideal() : nvars_(0) {}
    Ideal(std::vector<Polynomial> gens, unsigned nvars, const Field& f);
    Ideal(const Ideal& o);
    Ideal& operator=(const Ideal& o);

    static Ideal zero(unsigned nvars, const Field& f) { return Ideal({}, nvars, f); }
    static Ideal unit(unsigned nvars, const Field& f);

    unsigned nvars() const { return nvars_; }
    const Field& field() const { return field_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool has_zero_gens_only() const { return gens_.empty(); }

    const GroebnerBasis& groebner(TermOrder order = TermOrder::grevlex()) const;

    bool contains(const Polynomial& f) const;
    bool is_zero() const;
    bool is_unit() const;

    std::vector<Monomial> lead_monomials() const;  // of the reduced grevlex basis

  private:
    std::vector<Polynomial> gens_;
    unsigned nvars_;
    Field field_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, unsigned>, std::shared_ptr<const GroebnerBasis>> cache_;
};

bool equal_ideals(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

// (I : f) via the extra-variable trick: eliminate t from t*I + (1-t)*(f),
// then divide the surviving generators by f.
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon_ideal(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Ideal& J);

Ideal ideal_power(const Ideal& I, unsigned n);

// all monomials of total degree d in n variables (grevlex-descending)
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d);

// ideal generated by the images of the variables, i.e. (x_1, ..., x_n)
Ideal variable_ideal(unsigned nvars, const Field& f);

// monomials outside the leading-term ideal; nullopt when infinite
std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I);

// true when every generator is minimal, used by tests
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms);

}  // namespace loewy
