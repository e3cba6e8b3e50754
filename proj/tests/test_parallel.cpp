#include "doctest.h"
#include "loewy/matrix.hpp"
#include "loewy/rng.hpp"

using namespace loewy;

namespace {

ExactMatrix seeded_matrix(std::size_t r, std::size_t c, const Field& f, uint64_t seed) {
  Rng rng(seed);
  ExactMatrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (rng.below(4) == 0)
        m.at(i, j) = Scalar::zero(f);
      else
        m.at(i, j) = Scalar::from_int(f, (long long)rng.below(2001) - 1000);
    }
  return m;
}

}  // namespace

TEST_CASE("parallel elimination agrees with the serial reference") {
  Field q = Field::rationals();
  Field fp = Field::prime(32003);
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    for (const Field* f : {&q, &fp}) {
      std::size_t r = 20 + (seed * 7) % 45, c = 15 + (seed * 11) % 40;
      ExactMatrix m = seeded_matrix(r, c, *f, seed * 1000 + (f->characteristic() != 0));
      RrefResult a = rref_serial(m);
      RrefResult b = rref(m);
      REQUIRE(a.rank == b.rank);
      REQUIRE(a.pivots == b.pivots);
      CHECK(a.reduced == b.reduced);
    }
  }
}
