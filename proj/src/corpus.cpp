#include "loewy/corpus.hpp"

#include <sstream>
#include <stdexcept>

#include "loewy/checkers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loewy {

namespace {

long long nonzero_coeff(const Field& f, Rng& rng) {
    if (f.is_rationals()) {
        long long c = rng.range(-50, 50);
        return c == 0 ? 1 : c;
    }
    return static_cast<long long>(rng.below(f.characteristic() - 1)) + 1;
}

// pure power of var plus a sparse form in the other monomials of that degree
Polynomial power_plus_tail(unsigned var, unsigned deg, unsigned nvars, const Field& f, Rng& rng) {
    Monomial pure = Monomial::var(var, nvars, deg);
    std::vector<Term> terms{{pure, Scalar::one(f)}};
    for (const Monomial& m : monomials_of_degree(nvars, deg)) {
        if (m == pure) continue;
        if (rng.below(2) == 0) terms.push_back({m, Scalar::from_int(f, nonzero_coeff(f, rng))});
    }
    return Polynomial::from_terms(terms, nvars, f);
}

std::vector<long long> ci_numerator(const std::vector<unsigned>& degs) {
    std::vector<long long> acc{1};
    for (unsigned d : degs) acc = poly_mul_one_minus_tpow(acc, d);
    return poly_trim(acc);
}

Ideal ci_with_degrees(const std::vector<unsigned>& degs, unsigned nvars, const Field& f,
                      Rng& rng) {
    std::vector<long long> expected = ci_numerator(degs);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Polynomial> gens;
        for (unsigned i = 0; i < degs.size(); ++i)
            gens.push_back(power_plus_tail(i, degs[i], nvars, f, rng));
        Ideal ideal(std::move(gens), nvars, f);
        if (poly_trim(hilbert_data(ideal).numerator) == expected) return ideal;
    }
    throw std::logic_error("could not hit a complete intersection in 64 draws");
}

}  // namespace

Ideal random_artinian_ci(unsigned nvars, const Field& f, Rng& rng) {
    std::vector<unsigned> degs;
    for (unsigned i = 0; i < nvars; ++i) degs.push_back(2 + static_cast<unsigned>(rng.below(3)));
    return ci_with_degrees(degs, nvars, f, rng);
}

Ideal random_dim1_ci(const Field& f, Rng& rng) {
    if (rng.below(2) == 0) {
        std::vector<unsigned> degs{2 + static_cast<unsigned>(rng.below(4))};
        return ci_with_degrees(degs, 2, f, rng);
    }
    std::vector<unsigned> degs{2 + static_cast<unsigned>(rng.below(2)),
                               2 + static_cast<unsigned>(rng.below(4))};
    return ci_with_degrees(degs, 3, f, rng);
}

std::vector<std::vector<long long>> symmetric_semigroups(long long max_mult, long long max_f) {
    std::vector<std::vector<long long>> out;
    for (long long m = 1; m <= max_mult; ++m) {
        if (m == 1) {
            if (-1 <= max_f) out.push_back({1});
            continue;
        }
        // odometer over apery tuples w_i = i + m*k_i, k_i >= 1, w_i <= max_f + m
        std::vector<long long> k(m, 1);  // k[0] unused
        for (;;) {
            std::vector<long long> w(m, 0);
            bool in_range = true;
            for (long long i = 1; i < m && in_range; ++i) {
                w[i] = i + m * k[i];
                if (w[i] > max_f + m) in_range = false;
            }
            if (in_range) {
                bool closed = true;
                for (long long i = 1; i < m && closed; ++i)
                    for (long long j = i; j < m && closed; ++j) {
                        long long c = (i + j) % m;
                        if (c != 0 && w[i] + w[j] < w[c]) closed = false;
                    }
                if (closed) {
                    std::vector<long long> gens{m};
                    for (long long i = 1; i < m; ++i) gens.push_back(w[i]);
                    SemigroupRing s = SemigroupRing::build(gens);
                    if (s.frobenius() <= max_f && s.is_symmetric()) out.push_back(s.gens());
                }
            }
            // advance; carry resets to 1
            long long pos = m - 1;
            while (pos >= 1) {
                ++k[pos];
                if (pos + m * k[pos] <= max_f + m) break;
                k[pos] = 1;
                --pos;
            }
            if (pos < 1) break;
        }
    }
    return out;
}

namespace {

const std::vector<std::vector<long long>>& fuzz_semigroup_pool() {
    static const std::vector<std::vector<long long>> pool = symmetric_semigroups(8, 40);
    return pool;
}

void append_report(std::ostringstream& os, const InvariantReport& r) {
    os << " dim=" << r.dimension << " embdim=" << r.embdim << " ord=" << r.ord
       << " loewy=" << r.loewy.str() << " e=" << r.multiplicity << " index=" << r.index.str()
       << " theta=" << r.theta.str() << " rho=" << r.rho.str() << " reg=" << r.reg
       << " g_cm=" << (r.g_cm ? 1 : 0);
}

void append_verdicts(std::ostringstream& os, const std::vector<Verdict>& vs) {
    os << " v:";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ";";
        os << vs[i].id << "=" << status_name(vs[i].status);
        if (vs[i].status == VerdictStatus::fails) os << "[" << vs[i].witness << "]";
    }
}

std::string case_line(unsigned index, std::uint64_t seed, FuzzFamily family,
                      const std::vector<std::vector<long long>>& pool) {
    Rng rng(Rng::mix(seed, index));
    std::uint64_t case_seed = Rng::mix(seed ^ 0x517cc1b727220a95ull, index);
    Field f = Field::prime(32003);
    std::ostringstream os;
    os << "i=" << index;

    unsigned kind = 0;
    switch (family) {
        case FuzzFamily::mixed: kind = index % 3; break;
        case FuzzFamily::artinian: kind = 0; break;
        case FuzzFamily::graded: kind = 1; break;
        case FuzzFamily::semigroup: kind = 2; break;
    }
    if (kind == 0) {
        unsigned nvars = 1 + static_cast<unsigned>(rng.below(3));
        Ideal ideal = random_artinian_ci(nvars, f, rng);
        os << " kind=artinian_ci degs=";
        for (unsigned i = 0; i < nvars; ++i) os << (i ? "," : "") << ideal.gens()[i].degree();
        ArtinianAlgebra a = ArtinianAlgebra::build(ideal);
        LocalAlgebraHandle h(a);
        std::vector<ModuleReport> mods;
        mods.push_back(module_report(
            FiniteModuleA::free_module(a, 1 + static_cast<unsigned>(rng.below(2))), "free"));
        Polynomial cut = poly_var(static_cast<unsigned>(rng.below(nvars)), nvars, f);
        mods.push_back(module_report(FiniteModuleA::cyclic(a, {cut}), "cyclic"));
        RingAnalysis an = analyze(h, case_seed);
        append_report(os, an.report);
        append_verdicts(os, check_all(h, an, mods, case_seed));
        return os.str();
    }

    if (kind == 1) {
        Ideal ideal = random_dim1_ci(f, rng);
        unsigned nvars = ideal.nvars();
        os << " kind=graded_ci nvars=" << nvars << " degs=";
        for (std::size_t i = 0; i < ideal.gens().size(); ++i)
            os << (i ? "," : "") << ideal.gens()[i].degree();
        GradedAlgebra g = GradedAlgebra::build(ideal);
        LocalAlgebraHandle h(g);
        RingAnalysis an = analyze(h, case_seed);
        std::vector<ModuleReport> mods;
        for (int tries = 0; tries < 16 && mods.empty(); ++tries) {
            Polynomial cut = power_plus_tail(static_cast<unsigned>(rng.below(nvars)),
                                             1 + static_cast<unsigned>(rng.below(2)), nvars, f,
                                             rng);
            try {
                mods.push_back(module_report(GradedModule::koszul(g, {cut}), "koszul"));
            } catch (const usage_error&) {
            }
        }
        if (mods.empty()) mods.push_back(module_report(GradedModule::cyclic(g, {}), "free"));
        append_report(os, an.report);
        append_verdicts(os, check_all(h, an, mods, case_seed));
        return os.str();
    }

    if (pool.empty()) throw usage_error("the semigroup box is empty");
    std::size_t pick = (family == FuzzFamily::semigroup ? index : index / 3) % pool.size();
    const std::vector<long long>& gens = pool[pick];
    SemigroupRing s = SemigroupRing::build(gens);
    os << " kind=semigroup gens=";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
    LocalAlgebraHandle h(s);
    long long k = rng.below(2) == 0
                      ? gens[rng.below(gens.size())]
                      : s.conductor() + static_cast<long long>(rng.below(8));
    std::vector<ModuleReport> mods{semigroup_cyclic_report(s, k, "cyclic")};
    RingAnalysis an = analyze(h, case_seed);
    append_report(os, an.report);
    append_verdicts(os, check_all(h, an, mods, case_seed));
    return os.str();
}

}  // namespace

std::string fuzz_case_line(unsigned index, std::uint64_t seed) {
    return case_line(index, seed, FuzzFamily::mixed, fuzz_semigroup_pool());
}

std::uint64_t fnv1a(const std::vector<std::string>& lines) {
    std::uint64_t h = 14695981039346656037ull;
    auto eat = [&](unsigned char c) {
        h ^= c;
        h *= 1099511628211ull;
    };
    for (const std::string& line : lines) {
        for (unsigned char c : line) eat(c);
        eat('\n');
    }
    return h;
}

FuzzResult run_fuzz(const FuzzSpec& spec) {
    // the pool is enumerated once up front; cases only read it
    std::vector<std::vector<long long>> boxed;
    bool default_box = spec.box_mult == 8 && spec.box_frob == 40;
    if (!default_box) boxed = symmetric_semigroups(spec.box_mult, spec.box_frob);
    const auto& pool = default_box ? fuzz_semigroup_pool() : boxed;

    FuzzResult res;
    res.lines.assign(spec.count, {});
#ifdef _OPENMP
    int threads = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < static_cast<int>(spec.count); ++i)
        res.lines[i] = case_line(static_cast<unsigned>(i), spec.seed, spec.family, pool);
#else
    for (unsigned i = 0; i < spec.count; ++i)
        res.lines[i] = case_line(i, spec.seed, spec.family, pool);
#endif
    for (const std::string& line : res.lines) {
        for (std::size_t p = line.find("=fails"); p != std::string::npos;
             p = line.find("=fails", p + 1))
            ++res.failed_verdicts;
        for (std::size_t p = line.find("=unknown"); p != std::string::npos;
             p = line.find("=unknown", p + 1))
            ++res.unknown_verdicts;
    }
    res.digest = fnv1a(res.lines);
    return res;
}

FuzzResult run_fuzz(unsigned count, std::uint64_t seed, int jobs) {
    FuzzSpec spec;
    spec.count = count;
    spec.seed = seed;
    spec.jobs = jobs;
    return run_fuzz(spec);
}

}  // namespace loewy
