#include "doctest.h"
#include "loewy/hilbert.hpp"
#include "loewy/matrix.hpp"
#include "loewy/rng.hpp"

#include <map>

using namespace loewy;

namespace {

// Independent degreewise oracle: dim (R/I)_n = #monomials(n) - rank of the
// span of { m*g : g generator, deg(m*g) = n } written in the monomial basis.
unsigned long oracle_hf(const std::vector<Polynomial>& gens, unsigned nvars, const Field& f,
                        unsigned n) {
  auto basis = monomials_of_degree(nvars, n);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exp] = i;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > n) continue;
    for (const auto& m : monomials_of_degree(nvars, n - g.degree())) {
      Polynomial mg = g.times_term(Scalar::from_int(f, 1), m);
      std::vector<Scalar> row(basis.size(), Scalar::zero(f));
      for (const auto& t : mg.terms()) row[index.at(t.mono.exp)] = t.coeff;
      rows.push_back(row);
    }
  }
  if (rows.empty()) return basis.size();
  ExactMatrix mat(rows.size(), basis.size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i) mat.set_row(i, rows[i]);
  return basis.size() - rref(mat).rank;
}

// max independent set of variables missing the support of every generator,
// the combinatorial reading of the dimension of a monomial quotient
int oracle_monomial_dim(const std::vector<Monomial>& gens, unsigned nvars) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool inside = g.deg > 0;
      for (unsigned v = 0; v < nvars && inside; ++v)
        if (g.exp[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) { ok = false; break; }
    }
    if (ok) best = std::max(best, (int)__builtin_popcount(mask));
  }
  return best;
}

Polynomial rand_homog(unsigned nvars, unsigned deg, const Field& f, Rng& rng) {
  auto ms = monomials_of_degree(nvars, deg);
  std::vector<Term> terms;
  for (const auto& m : ms)
    if (rng.below(3) == 0) terms.push_back({m, Scalar::from_int(f, (long long)rng.below(100) + 1)});
  if (terms.empty()) terms.push_back({ms[rng.below(ms.size())], Scalar::from_int(f, 1)});
  return Polynomial::from_terms(terms, nvars, f);
}

}  // namespace

TEST_CASE("hilbert data of hand-checked quotients") {
  Field q = Field::rationals();
  Polynomial x = poly_var(0, 2, q), y = poly_var(1, 2, q);

  Ideal I({x * x, y * y}, 2, q);
  HilbertData h = hilbert_data(I);
  CHECK(h.krull_dim() == 0);
  CHECK(h.finite_hf() == std::vector<long long>{1, 2, 1});
  CHECK(h.top_degree() == 2);
  CHECK(h.total_length() == 4);
  CHECK(standard_monomials(I)->size() == h.total_length());

  Ideal cubic({x * x * x + y * y * y}, 2, q);
  HilbertData hc = hilbert_data(cubic);
  CHECK(hc.krull_dim() == 1);
  CHECK(hc.multiplicity() == 3);
  CHECK(hilbert_function(cubic, 0) == 1);
  CHECK(hilbert_function(cubic, 1) == 2);
  CHECK(hilbert_function(cubic, 3) == 3);
  CHECK(hilbert_function(cubic, 9) == 3);

  CHECK(hilbert_data(Ideal::zero(3, q)).krull_dim() == 3);
  CHECK(hilbert_data(Ideal::unit(2, q)).krull_dim() == -1);
  CHECK(hilbert_data(Ideal::zero(2, q)).hf(5) == 6);
}

TEST_CASE("hilbert function matches the degreewise rank oracle") {
  Rng rng(1234);
  Field fp = Field::prime(32003);
  for (int trial = 0; trial < 12; ++trial) {
    unsigned nvars = 2 + (unsigned)rng.below(2);
    std::vector<Polynomial> gens;
    unsigned ng = 1 + (unsigned)rng.below(3);
    for (unsigned i = 0; i < ng; ++i)
      gens.push_back(rand_homog(nvars, 2 + (unsigned)rng.below(2), fp, rng));
    Ideal I(gens, nvars, fp);
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(hilbert_function(I, n) == oracle_hf(gens, nvars, fp, n));
  }
}

TEST_CASE("dimension matches the combinatorial oracle on monomial ideals") {
  Rng rng(555);
  Field q = Field::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    unsigned nvars = 2 + (unsigned)rng.below(3);
    std::vector<Polynomial> gens;
    std::vector<Monomial> monos;
    for (unsigned i = 0; i < 1 + rng.below(4); ++i) {
      std::vector<unsigned> e(nvars, 0);
      for (int d = 0; d < 1 + (int)rng.below(3); ++d) e[rng.below(nvars)]++;
      Monomial m(e);
      monos.push_back(m);
      gens.push_back(Polynomial::from_terms({{m, Scalar::from_int(q, 1)}}, nvars, q));
    }
    CHECK(hilbert_data(Ideal(gens, nvars, q)).krull_dim() == oracle_monomial_dim(monos, nvars));
  }
}

TEST_CASE("inhomogeneous input is rejected for graded queries") {
  Field q = Field::rationals();
  Polynomial x = poly_var(0, 2, q), y = poly_var(1, 2, q);
  CHECK_THROWS_AS((void)hilbert_function(Ideal({x * x - y}, 2, q), 2), usage_error);
}

TEST_CASE("series helper identities") {
  std::vector<long long> p{1, -1};
  auto shifted = poly_mul_one_minus_tpow({1}, 3);
  CHECK(shifted == std::vector<long long>{1, 0, 0, -1});
  auto d = poly_div_one_minus_t({1, 0, 0, -1});
  REQUIRE(d.has_value());
  CHECK(*d == std::vector<long long>{1, 1, 1});
  CHECK(!poly_div_one_minus_t({1, 1}).has_value());
  CHECK(poly_eval_one({1, 2, 3}) == 6);
  CHECK(poly_trim({1, 0, 0}) == std::vector<long long>{1});
  CHECK(poly_sub({1, 2}, {1}) == std::vector<long long>{0, 2});
}
