#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "loewy/artinian.hpp"
#include "loewy/rng.hpp"
#include "loewy/semigroup.hpp"

using namespace loewy;

namespace {

// independent model: membership by plain reachability, filtration levels by
// explicit n-fold sumsets, nothing shared with the windowed implementation
struct Brute {
  std::vector<long long> gens;
  long long bound;
  std::vector<char> in;
  std::vector<std::vector<char>> level;  // level[j][v] <=> v in m^j

  Brute(std::vector<long long> g, long long b, int levels) : gens(std::move(g)), bound(b) {
    in.assign(bound + 1, 0);
    in[0] = 1;
    for (long long v = 1; v <= bound; ++v)
      for (long long a : gens)
        if (v >= a && in[v - a]) {
          in[v] = 1;
          break;
        }
    level.assign(levels + 1, std::vector<char>(bound + 1, 0));
    level[0] = in;
    for (int j = 1; j <= levels; ++j)
      for (long long v = 0; v <= bound; ++v)
        for (long long a : gens)
          if (v >= a && level[j - 1][v - a]) {
            level[j][v] = 1;
            break;
          }
  }

  int levels() const { return static_cast<int>(level.size()) - 1; }
  // capped at the deepest precomputed level
  int ord(long long v) const {
    if (v < 0 || !in[v]) return -1;
    int o = 0;
    for (int j = 1; j <= levels(); ++j)
      if (level[j][v]) o = j;
    return o;
  }
  long long frobenius() const {
    for (long long v = bound; v >= 0; --v)
      if (!in[v]) return v;
    return -1;
  }
  unsigned long quotient_length(int n) const {  // lambda(A/m^n), needs n <= levels
    unsigned long c = 0;
    for (long long v = 0; v <= bound; ++v)
      if (in[v] && !level[n][v]) ++c;
    return c;
  }
};

}  // namespace

TEST_CASE("semigroup generated by 3 and 4") {
  SemigroupRing s = SemigroupRing::build({3, 4});
  CHECK(s.gens() == std::vector<long long>{3, 4});
  CHECK(s.multiplicity() == 3);
  CHECK(s.embdim() == 2);
  CHECK(s.frobenius() == 5);
  CHECK(s.gap_set() == std::vector<long long>{1, 2, 5});
  CHECK(s.apery() == std::vector<long long>{0, 4, 8});
  CHECK(s.is_symmetric());
  CHECK_FALSE(s.is_regular());

  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(6));
  CHECK_FALSE(s.contains(-3));

  CHECK(s.ord_of(0) == 0);
  CHECK(s.ord_of(3) == 1);
  CHECK(s.ord_of(4) == 1);
  CHECK(s.ord_of(5) == -1);
  CHECK(s.ord_of(8) == 2);
  // 12 = 3*4 wins over 4+4+4
  CHECK(s.ord_of(12) == 4);

  CHECK(s.quotient_length(0) == 0);
  CHECK(s.quotient_length(1) == 1);
  CHECK(s.quotient_length(2) == 3);
  CHECK(s.quotient_length(3) == 6);
  CHECK(s.quotient_length(4) == 9);
  CHECK(s.ord() == 3);
  CHECK(s.reduction_number() == 2);

  // every colon collapses: the associated graded ring is Cohen-Macaulay
  auto tr = s.theta_rho();
  CHECK(tr.theta == SemigroupRing::kInf);
  CHECK_FALSE(tr.rho_finite);
  CHECK(s.g_cm());
  for (unsigned n = 0; n <= 5; ++n) CHECK(s.colon_equals_power(n, 3));
  CHECK(s.regularity() == 2);

  CHECK(s.b_power_length(0) == 3);
  CHECK(s.b_power_length(1) == 2);
  CHECK(s.b_power_length(2) == 1);
  CHECK(s.b_power_length(3) == 0);
  CHECK(s.b_loewy() == 3);
  CHECK(s.b_hilbert() == std::vector<unsigned long>{1, 1, 1});
  CHECK(s.b_embdim() == 1);
  CHECK(s.b_ord() == 3);
  CHECK_FALSE(s.stretched());  // symmetric but the reduction is a hypersurface

  CHECK(s.module_loewy(3) == 3);
  CHECK(s.module_loewy(4) == 4);
  CHECK_THROWS_AS(s.module_loewy(5), usage_error);
  CHECK_THROWS_AS(s.module_loewy(0), usage_error);

  auto sl = s.split_lengths(1);
  CHECK(sl.left == 3);
  CHECK(sl.right_top == 1);
  CHECK(sl.right_bottom == 2);

  for (unsigned i = 1; i <= 4; ++i) CHECK(s.initial_form_injective_at(i));
}

TEST_CASE("semigroup 3,4 reduction matches its polynomial model") {
  // A/(t^3) is k[y]/(y^3) on the nose
  SemigroupRing s = SemigroupRing::build({3, 4});
  Field q = Field::rationals();
  Polynomial y = poly_var(0, 1, q);
  ArtinianAlgebra b = ArtinianAlgebra::build(Ideal({y * y * y}, 1, q));
  CHECK(b.length() == static_cast<unsigned long>(s.multiplicity()));
  CHECK(b.loewy_length() == s.b_loewy());
  CHECK(b.ord() == s.b_ord());
  CHECK(b.embdim() == s.b_embdim());
}

TEST_CASE("semigroup generated by 2 and 3, and the numbers themselves") {
  SemigroupRing s = SemigroupRing::build({2, 3});
  CHECK(s.frobenius() == 1);
  CHECK(s.gap_set() == std::vector<long long>{1});
  CHECK(s.is_symmetric());
  CHECK(s.ord() == 2);
  CHECK(s.reduction_number() == 1);
  CHECK(s.quotient_length(2) == 3);
  CHECK(s.regularity() == 1);
  CHECK(s.b_loewy() == 2);
  CHECK(s.b_hilbert() == std::vector<unsigned long>{1, 1});
  CHECK(s.g_cm());
  CHECK(s.module_loewy(2) == 2);

  SemigroupRing n = SemigroupRing::build({1});
  CHECK(n.is_regular());
  CHECK(n.frobenius() == -1);
  CHECK(n.gap_set().empty());
  CHECK(n.is_symmetric());
  CHECK(n.multiplicity() == 1);
  CHECK(n.embdim() == 1);
  CHECK(n.ord() == 1);
  CHECK(n.reduction_number() == 0);
  CHECK(n.regularity() == 0);
  CHECK(n.b_loewy() == 1);
  CHECK(n.g_cm());
  CHECK(n.theta_rho().theta == SemigroupRing::kInf);
  CHECK(n.module_loewy(1) == 1);
  CHECK(n.ord_of(17) == 17);
}

TEST_CASE("semigroup generated by 2 and 5") {
  SemigroupRing s = SemigroupRing::build({2, 5});
  CHECK(s.frobenius() == 3);
  CHECK(s.gap_set() == std::vector<long long>{1, 3});
  CHECK(s.is_symmetric());
  CHECK(s.ord() == 2);
  CHECK(s.reduction_number() == 1);
  CHECK(s.regularity() == 1);
  CHECK(s.ord_of(10) == 5);
  CHECK(s.b_hilbert() == std::vector<unsigned long>{1, 1});
  CHECK(s.b_ord() == 2);
}

TEST_CASE("semigroup generated by 3,4,5 is not symmetric") {
  SemigroupRing s = SemigroupRing::build({3, 4, 5});
  CHECK(s.embdim() == 3);
  CHECK(s.frobenius() == 2);
  CHECK(s.gap_set() == std::vector<long long>{1, 2});
  CHECK_FALSE(s.is_symmetric());
  CHECK(s.ord() == 2);
  CHECK(s.quotient_length(2) == 4);
  CHECK(s.quotient_length(3) == 7);
  CHECK(s.reduction_number() == 1);
  CHECK(s.g_cm());
  CHECK(s.regularity() == 1);
  CHECK(s.b_loewy() == 2);
  CHECK(s.b_hilbert() == std::vector<unsigned long>{1, 2});
  CHECK(s.b_ord() == 2);
  CHECK_FALSE(s.stretched());  // fails symmetry
}

TEST_CASE("stretched reduction for 4,5,6") {
  SemigroupRing s = SemigroupRing::build({4, 5, 6});
  CHECK(s.frobenius() == 7);
  CHECK(s.is_symmetric());
  CHECK(s.b_hilbert() == std::vector<unsigned long>{1, 2, 1});
  CHECK(s.b_embdim() == 2);
  CHECK(s.stretched());
  CHECK(s.ord() == 2);
  CHECK(s.g_cm());
  CHECK(s.theta_rho().theta == SemigroupRing::kInf);  // theta >= 3 holds vacuously
  CHECK(s.reduction_number() == 2);
}

TEST_CASE("semigroup 6,7,15 has depth zero associated graded ring") {
  SemigroupRing s = SemigroupRing::build({6, 7, 15});
  CHECK(s.gens() == std::vector<long long>{6, 7, 15});
  CHECK(s.frobenius() == 23);
  CHECK(s.gap_set().size() == 12);
  CHECK(s.is_symmetric());
  CHECK(s.ord() == 2);
  CHECK(s.reduction_number() == 5);

  // t^15 climbs: 15 + 6 = 21 = 7+7+7 jumps two steps in the filtration
  CHECK(s.ord_of(15) == 1);
  CHECK(s.ord_of(21) == 3);
  CHECK(s.ord_inf(15) == 2);
  CHECK(s.ord_of(22) == 2);
  CHECK(s.ord_inf(22) == 3);

  auto tr = s.theta_rho();
  REQUIRE(tr.theta != SemigroupRing::kInf);
  REQUIRE(tr.rho_finite);
  CHECK(tr.theta == 2);
  CHECK(tr.rho == 4);
  CHECK_FALSE(s.g_cm());
  CHECK(s.regularity() == 5);
  CHECK(tr.theta >= s.ord());
  CHECK(static_cast<long>(tr.rho) <= s.regularity() - 1);

  CHECK(s.colon_equals_power(0, 6));
  CHECK(s.colon_equals_power(1, 6));
  // witnesses t^15, t^22, t^29 make levels 2,3,4 strict
  CHECK_FALSE(s.colon_equals_power(2, 6));
  CHECK_FALSE(s.colon_equals_power(3, 6));
  CHECK_FALSE(s.colon_equals_power(4, 6));
  CHECK(s.colon_equals_power(5, 6));

  CHECK(s.b_power_length(0) == 6);
  CHECK(s.b_loewy() == 4);
  CHECK(s.b_hilbert() == std::vector<unsigned long>{1, 2, 2, 1});
  CHECK(s.b_embdim() == 2);
  CHECK(s.b_ord() == 2);
  CHECK_FALSE(s.stretched());  // lambda(n^2/n^3) = 2
  CHECK(s.module_loewy(6) == 4);

  CHECK(s.initial_form_injective_at(1));
  CHECK_FALSE(s.initial_form_injective_at(2));

  auto sl = s.split_lengths(1);
  CHECK(sl.left == 6);
  CHECK(sl.right_top == 1);
  CHECK(sl.right_bottom == 5);

  auto ft = s.four_term(3);
  CHECK(ft.colon_excess == 1);
  CHECK(ft.len_nm1 == 4);
  CHECK(ft.len_n == 8);
  CHECK(ft.len_join == 5);

  CHECK(s.piece_length(2) == 4);
  CHECK(s.piece_over_shift(2) == 2);
}

TEST_CASE("generator input is reduced to minimal generators") {
  SemigroupRing s = SemigroupRing::build({10, 3, 7, 4});
  CHECK(s.gens() == std::vector<long long>{3, 4});
  CHECK(s.frobenius() == 5);
  CHECK(s.ord() == 3);

  SemigroupRing t = SemigroupRing::build({2, 4, 5});
  CHECK(t.gens() == std::vector<long long>{2, 5});
  CHECK(t.frobenius() == 3);
}

TEST_CASE("bad generator data is rejected") {
  CHECK_THROWS_AS(SemigroupRing::build({}), usage_error);
  CHECK_THROWS_AS(SemigroupRing::build({4, 6}), usage_error);
  CHECK_THROWS_AS(SemigroupRing::build({0, 3}), usage_error);
  CHECK_THROWS_AS(SemigroupRing::build({-2, 3}), usage_error);
  CHECK_THROWS_AS(SemigroupRing::build({6, 10, 15}).colon_equals_power(1, 4), usage_error);
}

TEST_CASE("orders extend past the table window by periodicity") {
  SemigroupRing s = SemigroupRing::build({3, 4});
  CHECK(s.ord_of(3 * 50000) == 50000);
  CHECK(s.ord_of(3 * 50000 + 4) == 50001);
  CHECK(s.ord_of(3 * 50000 + 5) == 50001);  // = 3*49999 + 4*2
  CHECK(s.quotient_length(1001) - s.quotient_length(1000) == 3);
  CHECK(s.module_loewy(3 * 2000) == 2 + 3 * 2000 / 3);  // ll(A/(t^k)) = ord(k)+r stabilized
}

TEST_CASE("random semigroups agree with the sumset model") {
  Rng rng(0x5eedbeef);
  int tried = 0;
  for (int trial = 0; tried < 40; ++trial) {
    REQUIRE(trial < 400);
    int count = 2 + static_cast<int>(rng.below(3));
    std::vector<long long> gens;
    for (int i = 0; i < count; ++i) gens.push_back(2 + static_cast<long long>(rng.below(24)));
    long long d = 0;
    for (long long g : gens) d = std::gcd(d, g);
    if (d != 1) continue;
    ++tried;
    CAPTURE(gens);

    SemigroupRing s = SemigroupRing::build(gens);
    long long lo = *std::min_element(gens.begin(), gens.end());
    long long hi = *std::max_element(gens.begin(), gens.end());
    int levels = 8;
    Brute b(gens, lo * hi + hi + levels * hi + 2, levels);

    CHECK(s.frobenius() == b.frobenius());
    // symmetry has an independent numerical criterion: exactly (F+1)/2 gaps
    bool half = 2 * static_cast<long long>(s.gap_set().size()) == s.frobenius() + 1;
    CHECK(s.is_symmetric() == half);

    for (long long v = 0; v <= 60; ++v) {
      CHECK(s.contains(v) == (b.in[v] != 0));
      int o = s.ord_of(v);
      CHECK(std::min(o, levels) == b.ord(v));
    }
    for (int n = 0; n <= 6; ++n) CHECK(s.quotient_length(n) == b.quotient_length(n));

    unsigned r = s.reduction_number();
    // pieces of the filtration all have size e past the reduction number
    for (unsigned i = r; i < r + 3; ++i)
      CHECK(s.piece_length(i) == static_cast<unsigned long>(s.multiplicity()));
    if (r + 1 <= static_cast<unsigned>(levels)) {
      long long safe = b.bound - 2 * hi;
      bool stable = true;
      for (long long v = 0; v <= safe; ++v)
        if (b.level[r + 1][v] && !(v >= lo && b.level[r][v - lo])) stable = false;
      CHECK(stable);
      if (r > 0) {
        bool previous_stable = true;
        for (long long v = 0; v <= safe; ++v)
          if (b.level[r][v] && !(v >= lo && b.level[r - 1][v - lo])) previous_stable = false;
        CHECK_FALSE(previous_stable);
      }
    }

    // colon strictness against the model, for the levels the model covers
    auto tr = s.theta_rho();
    for (unsigned n = 0; n + 1 <= static_cast<unsigned>(levels) && n < r; ++n) {
      bool strict_model = false;
      for (long long v = 0; v + lo <= b.bound; ++v) {
        if (!b.in[v] || b.ord(v) >= static_cast<int>(n)) continue;
        if (b.level[n + 1][v + lo]) strict_model = true;
      }
      CHECK(s.colon_equals_power(n, lo) == !strict_model);
      bool in_range = tr.theta != SemigroupRing::kInf && tr.theta <= n &&
                      tr.rho_finite && n <= tr.rho;
      if (strict_model) CHECK(in_range);
    }

    // depth of the graded ring is detected consistently by jumps and colons
    bool jump = false;
    for (long long v = 0; v < s.conductor() + static_cast<long long>(r) * hi; ++v)
      if (s.contains(v) && s.ord_inf(v) > s.ord_of(v)) jump = true;
    CHECK(s.g_cm() == !jump);

    if (tr.theta != SemigroupRing::kInf) {
      CHECK(tr.theta >= s.ord());
      CHECK(static_cast<long>(tr.rho) <= s.regularity() - 1);
      CHECK(static_cast<long>(tr.theta) <= s.regularity() - 1);
      CHECK(tr.theta <= tr.rho);
      // powers of the maximal ideal escape (x) strictly past theta
      CHECK(s.b_loewy() > tr.theta);
    }

    CHECK(s.b_ord() >= s.ord());
    CHECK(s.b_loewy() <= r + 1);
    CHECK(s.module_loewy(lo) == s.b_loewy());
    CHECK(s.module_loewy(lo) >= s.ord());
    long long member = lo * (1 + static_cast<long long>(rng.below(4)));
    CHECK(s.module_loewy(member) >= s.ord());

    // length bookkeeping identities, unconditionally
    for (unsigned n = 1; n <= 6; ++n) {
      auto ft = s.four_term(n);
      long long sum = static_cast<long long>(ft.colon_excess) - static_cast<long long>(ft.len_nm1) +
                      static_cast<long long>(ft.len_n) - static_cast<long long>(ft.len_join);
      CHECK(sum == 0);
    }
    for (unsigned sdeg = 1; sdeg <= 5; ++sdeg) {
      auto sl = s.split_lengths(sdeg);
      CHECK(sl.left == sl.right_top + sl.right_bottom);
      CHECK(sl.left == static_cast<unsigned long>(s.multiplicity()));
    }
    for (unsigned i = 0; i <= 5; ++i)
      CHECK(s.piece_length(i) ==
            static_cast<unsigned long>(s.multiplicity()) - s.piece_over_shift(i));

    // colon members form an ideal: closed under adding any generator
    auto cv = s.colon_valuations(s.ord(), lo, b.bound - hi);
    std::set<long long> cset(cv.begin(), cv.end());
    for (long long v : cv)
      for (long long g : gens)
        if (v + g <= b.bound - hi) CHECK(cset.count(v + g) == 1);
  }
}
