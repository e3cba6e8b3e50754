#include "loewy/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace loewy {

namespace {

// window guard; the table is linear in conductor + reduction scans
constexpr long long kMaxWindow = 50'000'000;

}  // namespace

SemigroupRing SemigroupRing::build(const std::vector<long long>& generators) {
    if (generators.empty()) throw usage_error("semigroup needs at least one generator");
    for (long long g : generators)
        if (g <= 0) throw usage_error("semigroup generators must be positive");
    long long d = 0;
    for (long long g : generators) d = std::gcd(d, g);
    if (d != 1) throw usage_error("semigroup generators must have gcd 1, got gcd " + std::to_string(d));

    long long lo = *std::min_element(generators.begin(), generators.end());
    long long hi = *std::max_element(generators.begin(), generators.end());

    // membership sieve; the Frobenius number of a gcd-1 semigroup is below
    // lo*hi, so the sieve always ends in a run of at least lo members
    long long bound = lo * hi + hi + 2;
    if (bound > kMaxWindow) throw usage_error("semigroup generators too large for exact analysis");
    std::vector<char> in(static_cast<size_t>(bound) + 1, 0);
    in[0] = 1;
    for (long long v = 1; v <= bound; ++v)
        for (long long g : generators)
            if (v >= g && in[static_cast<size_t>(v - g)]) {
                in[static_cast<size_t>(v)] = 1;
                break;
            }

    SemigroupRing s;
    s.frobenius_ = -1;
    for (long long v = bound; v >= 1; --v)
        if (!in[static_cast<size_t>(v)]) {
            s.frobenius_ = v;
            break;
        }
    for (long long v = std::max(s.frobenius_ + 1, bound - lo); v <= bound; ++v)
        if (!in[static_cast<size_t>(v)]) throw std::logic_error("sieve window too small");

    // minimal generators are the members with no splitting into two members;
    // each lies below F + lo since subtracting the multiplicity must leave a gap
    for (long long v = 1; v <= std::max(s.frobenius_ + lo, lo); ++v) {
        if (!in[static_cast<size_t>(v)]) continue;
        bool atom = true;
        for (long long u = 1; atom && 2 * u <= v; ++u)
            if (in[static_cast<size_t>(u)] && in[static_cast<size_t>(v - u)]) atom = false;
        if (atom) s.gens_.push_back(v);
    }
    long long a1 = s.gens_[0];

    s.apery_.assign(static_cast<size_t>(a1), -1);
    long long found = 0;
    for (long long v = 0; v <= bound && found < a1; ++v) {
        if (!in[static_cast<size_t>(v)]) continue;
        long long r = v % a1;
        if (s.apery_[static_cast<size_t>(r)] < 0) {
            s.apery_[static_cast<size_t>(r)] = v;
            ++found;
        }
    }
    if (found != a1) throw std::logic_error("missing residue class in sieve");

    for (long long v = 1; v <= s.frobenius_; ++v)
        if (!in[static_cast<size_t>(v)]) s.gaps_.push_back(v);

    s.symmetric_ = true;
    for (long long z = 0; z <= s.frobenius_; ++z)
        if ((in[static_cast<size_t>(z)] != 0) == (in[static_cast<size_t>(s.frobenius_ - z)] != 0)) {
            s.symmetric_ = false;
            break;
        }

    // order table; levels above rcap never show a fresh element, because any
    // decomposition that long can be rewritten to start with the multiplicity
    long long k = static_cast<long long>(s.gens_.size());
    long long amax = s.gens_.back();
    long long rcap = (k - 1) * (a1 - 1) + 2;
    long long c0 = s.frobenius_ + 1;
    s.window_ = c0 + (rcap + 3) * amax + 2 * a1 + 8;
    if (s.window_ > kMaxWindow) throw usage_error("semigroup generators too large for exact analysis");
    s.ordv_ = s.ord_table(s.window_);

    bool have_r = false;
    for (long long n = 0; n <= rcap && !have_r; ++n) {
        bool equal = true;
        for (long long v = 0; equal && v <= c0 + (n + 1) * amax; ++v) {
            if (s.ordv_[static_cast<size_t>(v)] < n + 1) continue;
            if (v < a1 || !s.contains(v - a1) || s.ordv_[static_cast<size_t>(v - a1)] < n) equal = false;
        }
        if (equal) {
            s.reduction_ = static_cast<unsigned>(n);
            have_r = true;
        }
    }
    if (!have_r) throw std::logic_error("reduction number beyond provable cap");
    return s;
}

std::vector<int> SemigroupRing::ord_table(long long upto) const {
    std::vector<int> t(static_cast<size_t>(upto) + 1, -1);
    t[0] = 0;
    for (long long v = 1; v <= upto; ++v) {
        if (!contains(v)) continue;
        int best = -1;
        for (long long g : gens_)
            if (v >= g && t[static_cast<size_t>(v - g)] > best) best = t[static_cast<size_t>(v - g)];
        if (best < 0) throw std::logic_error("member with no generator peel");
        t[static_cast<size_t>(v)] = best + 1;
    }
    return t;
}

bool SemigroupRing::contains(long long v) const {
    if (v < 0) return false;
    return v >= apery_[static_cast<size_t>(v % gens_[0])];
}

bool SemigroupRing::in_principal(long long v, long long k) const { return v >= k && contains(v - k); }

int SemigroupRing::ord_of(long long v) const {
    if (!contains(v)) return -1;
    if (v <= window_) return ordv_[static_cast<size_t>(v)];
    // beyond the window the filtration is periodic: stepping down by the
    // multiplicity lowers the order by exactly one as long as we stay past
    // conductor + r * amax, and the window margin keeps the landing spot there
    long long a1 = gens_[0];
    long long steps = (v - window_ + a1 - 1) / a1;
    long long vp = v - steps * a1;
    if (vp < conductor() + static_cast<long long>(reduction_) * gens_.back())
        throw std::logic_error("window extension landed too low");
    return ordv_[static_cast<size_t>(vp)] + static_cast<int>(steps);
}

int SemigroupRing::ord_inf(long long v) const {
    if (!contains(v)) return -1;
    return ord_of(v + static_cast<long long>(reduction_) * gens_[0]) - static_cast<int>(reduction_);
}

unsigned long SemigroupRing::quotient_length(unsigned n) const {
    if (n == 0) return 0;
    long long a1 = gens_[0], amax = gens_.back(), c0 = conductor();
    unsigned base = std::min(n, reduction_ + 2);
    unsigned long count = 0;
    for (long long v = 0; v < c0 + static_cast<long long>(base) * amax; ++v)
        if (contains(v) && ordv_[static_cast<size_t>(v)] < static_cast<int>(base)) ++count;
    return count + static_cast<unsigned long>(n - base) * static_cast<unsigned long>(a1);
}

unsigned SemigroupRing::ord() const {
    if (is_regular()) return 1;
    for (unsigned n = 1;; ++n) {
        mpz_class len(static_cast<unsigned long>(quotient_length(n + 1)));
        if (len < binomial(n + embdim(), n)) return n;
    }
}

std::vector<long long> SemigroupRing::colon_valuations(unsigned n, long long a, long long cutoff) const {
    if (a <= 0 || !contains(a)) throw usage_error("colon divisor must be a positive member of the semigroup");
    std::vector<long long> out;
    for (long long v = 0; v <= cutoff; ++v)
        if (contains(v) && ord_of(v + a) >= static_cast<int>(n) + 1) out.push_back(v);
    return out;
}

bool SemigroupRing::colon_equals_power(unsigned n, long long a) const {
    if (a <= 0 || !contains(a)) throw usage_error("colon divisor must be a positive member of the semigroup");
    // one containment is automatic; a violation has order below n, hence sits
    // below conductor + n * amax
    for (long long v = 0; v < conductor() + static_cast<long long>(n) * gens_.back(); ++v) {
        if (!contains(v) || ord_of(v) >= static_cast<int>(n)) continue;
        if (ord_of(v + a) >= static_cast<int>(n) + 1) return false;
    }
    return true;
}

SemigroupRing::ThetaRho SemigroupRing::theta_rho() const {
    ThetaRho tr;
    // beyond the reduction number the colon collapses to the previous power
    // in any domain, so the scan window is complete
    for (unsigned n = 0; n < reduction_; ++n) {
        if (colon_equals_power(n, gens_[0])) continue;
        if (tr.theta == kInf) tr.theta = n;
        tr.rho_finite = true;
        tr.rho = n;
    }
    return tr;
}

long SemigroupRing::regularity() const {
    long long a1 = gens_[0], amax = gens_.back(), c0 = conductor();
    long long r = reduction_;
    // classes killed by a power of the initial form x* of t^a1 live in orders
    // below r; they span the degreewise finite part that caps regularity below
    long end_h0 = -1;
    for (long long v = 0; v < c0 + r * amax; ++v) {
        if (!contains(v)) continue;
        int o = ordv_[static_cast<size_t>(v)];
        if (ord_inf(v) > o && o > end_h0) end_h0 = o;
    }
    // remaining classes form a ring on which x* acts injectively: regularity
    // drops to the top degree after quotienting by the x*-image
    long top = 0;
    for (long long v = 0; v < c0 + (r + 1) * amax; ++v) {
        if (!contains(v)) continue;
        int o = ordv_[static_cast<size_t>(v)];
        if (ord_inf(v) > o) continue;
        if (v >= a1 && contains(v - a1) && ord_of(v - a1) == o - 1) continue;
        if (o > top) top = o;
    }
    return std::max(end_h0, top);
}

unsigned long SemigroupRing::b_power_length(unsigned i) const {
    // everything past a1 + conductor lies in the principal part
    unsigned long count = 0;
    for (long long v = 0; v < gens_[0] + conductor(); ++v)
        if (contains(v) && ord_of(v) >= static_cast<int>(i) && !in_principal(v, gens_[0])) ++count;
    return count;
}

unsigned SemigroupRing::b_loewy() const {
    for (unsigned i = 0;; ++i)
        if (b_power_length(i) == 0) return i;
}

std::vector<unsigned long> SemigroupRing::b_hilbert() const {
    std::vector<unsigned long> h;
    for (unsigned i = 0; i < b_loewy(); ++i) h.push_back(b_power_length(i) - b_power_length(i + 1));
    return h;
}

unsigned SemigroupRing::b_embdim() const {
    auto h = b_hilbert();
    return h.size() >= 2 ? static_cast<unsigned>(h[1]) : 0;
}

unsigned SemigroupRing::b_ord() const {
    if (gens_[0] == 1) return 1;
    unsigned long total = static_cast<unsigned long>(gens_[0]);
    unsigned c = b_embdim();
    for (unsigned n = 1;; ++n) {
        mpz_class len(total - b_power_length(n + 1));
        if (len < binomial(n + c, n)) return n;
    }
}

bool SemigroupRing::stretched() const {
    if (!symmetric_ || b_embdim() < 2) return false;
    auto h = b_hilbert();
    return h.size() >= 3 && h[2] == 1;
}

unsigned SemigroupRing::module_loewy(long long k) const {
    if (k <= 0 || !contains(k)) throw usage_error("module divisor must be a positive member of the semigroup");
    for (unsigned i = 0;; ++i) {
        bool outside = false;
        for (long long v = 0; v < k + conductor() && !outside; ++v)
            if (contains(v) && ord_of(v) >= static_cast<int>(i) && !in_principal(v, k)) outside = true;
        if (!outside) return i;
    }
}

bool SemigroupRing::initial_form_injective_at(unsigned i) const {
    if (i == 0) return true;
    if (static_cast<long long>(i) - 1 >= static_cast<long long>(reduction_)) return true;
    for (long long v = 0; v < conductor() + static_cast<long long>(i) * gens_.back(); ++v) {
        if (!contains(v) || ord_of(v) != static_cast<int>(i) - 1) continue;
        if (ord_of(v + gens_[0]) != static_cast<int>(i)) return false;
    }
    return true;
}

SemigroupRing::SplitLengths SemigroupRing::split_lengths(unsigned s) const {
    long long a1 = gens_[0], c0 = conductor();
    auto in_join = [&](long long v) {
        return contains(v) && (ord_of(v) >= static_cast<int>(s) || in_principal(v, a1));
    };
    SplitLengths out{0, 0, 0};
    for (long long v = 0; v < a1 + c0; ++v)
        if (contains(v) && !in_join(v)) ++out.right_top;
    out.right_bottom = b_power_length(s);
    for (long long v = 0; v < 2 * a1 + c0; ++v)
        if (in_join(v) && !(v >= a1 && in_join(v - a1))) ++out.left;
    return out;
}

SemigroupRing::FourTerm SemigroupRing::four_term(unsigned n) const {
    if (n == 0) throw std::logic_error("four_term needs n >= 1");
    FourTerm out{0, 0, 0, 0};
    long long a1 = gens_[0];
    if (n <= reduction_ + 1) {
        // members of (m^n : t^a1) outside m^{n-1} have order below n - 1
        for (long long v = 0; v < conductor() + static_cast<long long>(n) * gens_.back(); ++v) {
            if (!contains(v) || ord_of(v) >= static_cast<int>(n) - 1) continue;
            if (ord_of(v + a1) >= static_cast<int>(n)) ++out.colon_excess;
        }
    }
    out.len_nm1 = quotient_length(n - 1);
    out.len_n = quotient_length(n);
    out.len_join = static_cast<unsigned long>(a1) - b_power_length(n);
    return out;
}

unsigned long SemigroupRing::piece_length(unsigned i) const {
    return quotient_length(i + 1) - quotient_length(i);
}

unsigned long SemigroupRing::piece_over_shift(unsigned i) const {
    if (i >= reduction_) return 0;
    long long a1 = gens_[0], amax = gens_.back(), c0 = conductor();
    unsigned long count = 0;
    for (long long v = 0; v < a1 + c0 + static_cast<long long>(i) * amax + amax; ++v) {
        if (!contains(v) || ord_of(v) < static_cast<int>(i) + 1) continue;
        if (v >= a1 && contains(v - a1) && ord_of(v - a1) >= static_cast<int>(i)) continue;
        ++count;
    }
    return count;
}

}  // namespace loewy
