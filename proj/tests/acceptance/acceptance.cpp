// Acceptance gate. Every criterion is exact: pinned fixture values, sweeps
// that must hold on every instance, and cross-checks where two independent
// computations have to agree to the byte. One PASS/FAIL line per criterion,
// nonzero exit when anything fails. Later criteria reuse the ring corpus the
// order bound sweep builds, so the order of the runs below matters.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "loewy/artinian.hpp"
#include "loewy/checkers.hpp"
#include "loewy/corpus.hpp"
#include "loewy/graded.hpp"
#include "loewy/groebner.hpp"
#include "loewy/hilbert.hpp"
#include "loewy/ideal.hpp"
#include "loewy/invariants.hpp"
#include "loewy/matrix.hpp"
#include "loewy/polynomial.hpp"
#include "loewy/rng.hpp"
#include "loewy/semigroup.hpp"
#include "loewy/subspace.hpp"

using namespace loewy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Polynomial pure_power(unsigned v, unsigned nvars, unsigned k, const Field& f) {
    return Polynomial::from_terms({{Monomial::var(v, nvars, k), Scalar::one(f)}}, nvars, f);
}

const Verdict* find_verdict(const std::vector<Verdict>& vs, const char* id) {
    for (const Verdict& v : vs)
        if (v.id == id) return &v;
    return nullptr;
}

// holds with a concrete witness, not a vacuously satisfied hypothesis
bool real_holds(const Verdict* v) {
    return v != nullptr && v->status == VerdictStatus::holds &&
           v->witness.rfind("vacuous:", 0) != 0;
}

struct Case {
    LocalAlgebraHandle ring;
    RingAnalysis an;
    std::vector<ModuleReport> mods;
    std::vector<Verdict> bounds;
};

std::vector<Case> corpus;
// per dim-1 corpus index: the length identity verdicts, computed once
std::vector<std::pair<std::size_t, std::vector<Verdict>>> identity_cache;

// ---------------------------------------------------------------- criterion 1

bool fixtures(std::string& detail) {
    Field q = Field::rationals();
    bool ok = true;
    double worst = 0;
    auto timed = [&](auto&& body) {
        auto t0 = Clock::now();
        bool r = body();
        double s = seconds_since(t0);
        worst = std::max(worst, s);
        ok = ok && r && s < 1.0;
    };
    timed([&] {
        ArtinianAlgebra a = ArtinianAlgebra::build(Ideal({pure_power(0, 1, 3, q)}, 1, q));
        return a.ord() == 3 && a.loewy_length() == 3 && a.is_gorenstein() && a.index() == 3;
    });
    timed([&] {
        Ideal i({pure_power(0, 2, 2, q), pure_power(1, 2, 2, q)}, 2, q);
        ArtinianAlgebra a = ArtinianAlgebra::build(i);
        return a.ord() == 2 && a.loewy_length() == 3 && a.socle().dim() == 1 && a.index() == 3;
    });
    timed([&] {
        SemigroupRing s = SemigroupRing::build({3, 4});
        return s.frobenius() == 5 && s.is_symmetric() && s.ord() == 3 && s.multiplicity() == 3 &&
               s.theta_rho().theta == SemigroupRing::kInf && s.module_loewy(3) == 3;
    });
    timed([&] {
        Polynomial f = pure_power(0, 2, 3, q) + pure_power(1, 2, 3, q);
        LocalAlgebraHandle h(GradedAlgebra::build(Ideal({f}, 2, q)));
        RingAnalysis an = analyze(h, 0);
        GradedModule m = GradedModule::koszul(h.as_graded(), {pure_power(1, 2, 1, q)});
        ModuleReport mr = module_report(m, "M");
        return h.dimension() == 1 && an.report.multiplicity == 3 && an.report.reg == 2 &&
               !an.report.reg_certified_to && mr.pd_certified && mr.loewy == ExtInt::of(3);
    });
    char buf[64];
    std::snprintf(buf, sizeof buf, "4 rings, slowest %.3fs", worst);
    detail = buf;
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool order_bound_sweep(std::string& detail) {
    auto t0 = Clock::now();
    Field fp = Field::prime(32003);
    bool ok = true;
    unsigned cases = 0;

    auto push = [&](LocalAlgebraHandle h, RingAnalysis an, std::vector<ModuleReport> mods) {
        std::vector<Verdict> vs = check_module_bounds(an, mods);
        ok = ok && real_holds(find_verdict(vs, "loewy_ge_ord"));
        corpus.push_back({std::move(h), std::move(an), std::move(mods), std::move(vs)});
        ++cases;
    };

    for (unsigned i = 0; i < 100; ++i) {
        Rng rng(Rng::mix(0xa11ce, i));
        unsigned nv = 1 + static_cast<unsigned>(rng.below(3));
        LocalAlgebraHandle h(ArtinianAlgebra::build(random_artinian_ci(nv, fp, rng)));
        RingAnalysis an = analyze(h, i);
        // a complete intersection has a one-dimensional socle
        ok = ok && an.report.gorenstein_known && an.report.gorenstein;
        unsigned rank = 1 + static_cast<unsigned>(rng.below(2));
        std::vector<ModuleReport> mods{
            module_report(FiniteModuleA::free_module(h.as_artinian(), rank), "F")};
        push(std::move(h), std::move(an), std::move(mods));
    }

    for (unsigned i = 0; i < 100; ++i) {
        Rng rng(Rng::mix(0x6beef, i));
        LocalAlgebraHandle h(GradedAlgebra::build(random_dim1_ci(fp, rng)));
        RingAnalysis an = analyze(h, 1000 + i);
        ok = ok && h.dimension() == 1 && an.chain.has_value();
        std::vector<ModuleReport> mods;
        try {
            // the first chain form is a nonzerodivisor here (depth one), so
            // the quotient comes with a projective dimension certificate
            GradedModule m = GradedModule::koszul(h.as_graded(), {an.chain->forms[0]});
            mods.push_back(module_report(m, "K"));
        } catch (const std::exception&) {
            ok = false;
            continue;
        }
        push(std::move(h), std::move(an), std::move(mods));
    }

    for (const auto& gens : symmetric_semigroups(8, 40)) {
        LocalAlgebraHandle h(SemigroupRing::build(gens));
        RingAnalysis an = analyze(h, 7);
        std::vector<ModuleReport> mods{semigroup_cyclic_report(h.as_semigroup(), gens[0], "M")};
        push(std::move(h), std::move(an), std::move(mods));
    }

    double secs = seconds_since(t0);
    ok = ok && secs < 300.0;
    detail = std::to_string(cases) + " rings, every loewy >= ord witnessed";
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool colon_suite(std::string& detail) {
    bool ok = true;
    unsigned rings = 0, noncm = 0;

    auto run = [&](const LocalAlgebraHandle& h, const RingAnalysis& an) {
        std::vector<Verdict> vs = check_colon_behavior(h, an);
        for (const Verdict& v : vs) ok = ok && v.status == VerdictStatus::holds;
        if (!an.report.g_cm) {
            ++noncm;
            // finite theta: the strict side of each statement must actually run
            ok = ok && real_holds(find_verdict(vs, "rho_le_reg_minus_1")) &&
                 real_holds(find_verdict(vs, "theta_seq_le_reg_minus_1")) &&
                 real_holds(find_verdict(vs, "power_not_in_principal"));
        }
        ok = ok && real_holds(find_verdict(vs, "colon_low_degrees")) &&
             real_holds(find_verdict(vs, "theta_ge_ord")) &&
             real_holds(find_verdict(vs, "ord_descent"));
        ++rings;
    };

    for (const Case& c : corpus)
        if (c.ring.backend() == LocalAlgebraHandle::Backend::semigroup) run(c.ring, c.an);

    // a ring whose tangent cone is not cohen-macaulay, so the coverage
    // assertion below can never silently pass on an all-tame corpus
    LocalAlgebraHandle pinned(SemigroupRing::build({6, 7, 15}));
    RingAnalysis pan = analyze(pinned, 5);
    ok = ok && !pan.report.g_cm;
    run(pinned, pan);
    corpus.push_back({std::move(pinned), std::move(pan), {}, {}});

    ok = ok && noncm >= 1;
    detail = std::to_string(rings) + " semigroup rings, " + std::to_string(noncm) +
             " with a non-CM tangent cone";
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool regularity_bound(std::string& detail) {
    bool ok = true;
    unsigned applied = 0;
    for (const Case& c : corpus) {
        if (c.mods.empty() || !c.an.report.g_cm) continue;
        const ModuleReport& m = c.mods[0];
        if (m.zero || !m.pd_certified) continue;
        ok = ok && real_holds(find_verdict(c.bounds, "loewy_ge_reg_plus_1"));
        ++applied;
    }
    // the hypothesis side must not be quietly empty
    ok = ok && applied >= 200;
    detail = std::to_string(applied) + " certified modules over CM tangent cones";
    return ok;
}

// ---------------------------------------------------------------- criterion 5

bool split_identity(std::string& detail) {
    bool ok = true;
    unsigned rings = 0;
    identity_cache.clear();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Case& c = corpus[i];
        if (c.ring.dimension() != 1) continue;
        std::vector<Verdict> vs = check_length_identities(c.ring, c.an, 40 + i);
        ok = ok && real_holds(find_verdict(vs, "split_length_identity"));
        identity_cache.emplace_back(i, std::move(vs));
        ++rings;
    }
    detail = std::to_string(rings) + " one-dimensional rings";
    return ok && rings > 0;
}

// ---------------------------------------------------------------- criterion 6

bool bookkeeping(std::string& detail) {
    bool ok = true;
    for (const auto& [idx, vs] : identity_cache) {
        (void)idx;
        ok = ok && real_holds(find_verdict(vs, "four_term_alternating_sum")) &&
             real_holds(find_verdict(vs, "one_dim_length_identity")) &&
             real_holds(find_verdict(vs, "multiplicity_constant"));
    }
    // the multiplicity read off the chain may not depend on how the chain was
    // sampled: re-run a slice of the graded corpus under five fresh seeds
    unsigned resampled = 0;
    for (const Case& c : corpus) {
        if (resampled >= 8) break;
        if (c.ring.backend() != LocalAlgebraHandle::Backend::graded || c.ring.dimension() != 1)
            continue;
        unsigned long e0 = c.an.report.multiplicity;
        for (std::uint64_t s = 1; s <= 5; ++s) {
            RingAnalysis an2 = analyze(c.ring, s * 7919);
            ok = ok && an2.report.multiplicity == e0;
            std::vector<Verdict> vs2 = check_length_identities(c.ring, an2, s);
            ok = ok && real_holds(find_verdict(vs2, "multiplicity_constant"));
        }
        ++resampled;
    }
    ok = ok && resampled == 8;
    detail = std::to_string(identity_cache.size()) + " rings, 8 resampled under 5 seeds each";
    return ok;
}

// ---------------------------------------------------------------- criterion 7

// length of R/I summed degree by degree with dense row reduction; no division
// by a basis anywhere, so it is an independent route to the same number
unsigned long rref_length(const Ideal& I) {
    const Field& f = I.field();
    unsigned nv = I.nvars();
    unsigned long total = 0;
    for (unsigned d = 0; d < 256; ++d) {
        std::vector<Monomial> mons = monomials_of_degree(nv, d);
        std::map<std::vector<unsigned>, std::size_t> col;
        for (std::size_t j = 0; j < mons.size(); ++j) col.emplace(mons[j].exp, j);
        std::vector<std::vector<Scalar>> rows;
        for (const Polynomial& g : I.gens()) {
            if (g.is_zero() || g.degree() > d) continue;
            for (const Monomial& m : monomials_of_degree(nv, d - g.degree())) {
                Polynomial p = g.times_term(Scalar::one(f), m);
                std::vector<Scalar> row(mons.size(), Scalar::zero(f));
                for (const Term& t : p.terms()) row[col.at(t.mono.exp)] = t.coeff;
                rows.push_back(std::move(row));
            }
        }
        std::size_t rank = 0;
        if (!rows.empty()) {
            ExactMatrix m(rows.size(), mons.size(), f);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t j = 0; j < mons.size(); ++j) m.at(r, j) = rows[r][j];
            rank = rref(m).rank;
        }
        unsigned long here = mons.size() - rank;
        total += here;
        if (here == 0) return total;  // a full degree stays full from here on
    }
    return total;
}

std::string print_basis(const GroebnerBasis& g) {
    static const std::vector<std::string> names = {"x", "y", "z"};
    std::vector<std::string> vars(names.begin(), names.begin() + g.nvars);
    std::string out;
    for (const Polynomial& p : g.elems) {
        out += p.str(vars);
        out += '\n';
    }
    return out;
}

bool kernel_oracles(std::string& detail) {
    Field fp = Field::prime(32003);
    bool ok = true;
    unsigned ideals = 0;
    for (unsigned i = 0; i < 50; ++i) {
        Rng rng(Rng::mix(0xfacade, i));
        unsigned nv = 1 + static_cast<unsigned>(rng.below(3));
        Ideal I = random_artinian_ci(nv, fp, rng);

        ok = ok && hilbert_data(I).total_length() == rref_length(I);

        // colon space against plain multiplication, certified from both sides:
        // every basis vector multiplies into n, and rank-nullity of v -> x*v
        // mod n says nothing outside the space qualifies
        ArtinianAlgebra a = ArtinianAlgebra::build(I);
        Polynomial x = pure_power(static_cast<unsigned>(rng.below(nv)), nv, 1, fp);
        const Subspace& n = a.power(1 + static_cast<unsigned>(rng.below(a.loewy_length())));
        Subspace c = a.colon_space(n, x);
        ExactMatrix M = a.action_of(x);
        for (const auto& v : c.basis()) ok = ok && n.contains(M.apply(v));
        std::vector<std::vector<Scalar>> image;
        for (std::size_t j = 0; j < a.length(); ++j) {
            std::vector<Scalar> e(a.length(), Scalar::zero(fp));
            e[j] = Scalar::one(fp);
            image.push_back(M.apply(e));
        }
        Subspace reach = Subspace::span(image, a.length(), fp).sum(n);
        ok = ok && c.dim() + reach.dim() == a.length() + n.dim();

        // the reduced basis is a function of the ideal alone: recomputing it,
        // and recomputing it from rotated generators, must print the same bytes
        GroebnerBasis g1 = buchberger(I.gens(), nv, fp, TermOrder::grevlex());
        std::vector<Polynomial> perm = I.gens();
        if (perm.size() > 1)
            std::rotate(perm.begin(), perm.begin() + 1 + (i % (perm.size() - 1)), perm.end());
        GroebnerBasis g2 = buchberger(perm, nv, fp, TermOrder::grevlex());
        GroebnerBasis g3 = buchberger(I.gens(), nv, fp, TermOrder::grevlex());
        std::string s1 = print_basis(g1);
        ok = ok && s1 == print_basis(g2) && s1 == print_basis(g3) && !s1.empty();
        ++ideals;
    }
    detail = std::to_string(ideals) + " primary ideals cross-checked";
    return ok;
}

// ---------------------------------------------------------------- criterion 8

bool fuzz_reproducibility(std::string& detail) {
    FuzzSpec sp;
    sp.count = 30;
    sp.seed = 0xf00d;
    sp.family = FuzzFamily::mixed;
    sp.jobs = 1;
    FuzzResult r1 = run_fuzz(sp);
    FuzzResult r2 = run_fuzz(sp);
    sp.jobs = 4;
    FuzzResult r3 = run_fuzz(sp);
    bool ok = r1.digest == r2.digest && r1.digest == r3.digest && r1.lines == r3.lines &&
              r1.failed_verdicts == 0 && r3.failed_verdicts == 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "30 cases, digest %016llx",
                  static_cast<unsigned long long>(r1.digest));
    detail = buf;
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance: exact fixtures, inequality sweeps, kernel cross-checks\n");
    int failed = 0;
    auto run = [&](const char* name, bool (*fn)(std::string&)) {
        auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %-28s %7.2fs  %s\n", ok ? "PASS" : "FAIL", name, seconds_since(t0),
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    };
    run("fixture exactness", fixtures);
    run("order bound sweep", order_bound_sweep);
    run("superficial colon suite", colon_suite);
    run("regularity lower bound", regularity_bound);
    run("principal cover length split", split_identity);
    run("length bookkeeping", bookkeeping);
    run("kernel oracles", kernel_oracles);
    run("fuzz reproducibility", fuzz_reproducibility);
    if (failed) {
        std::printf("acceptance: %d of 8 criteria failed\n", failed);
        return 1;
    }
    std::printf("acceptance: all 8 criteria hold\n");
    return 0;
}
