#include "loewy/field.hpp"

namespace loewy {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 30)) throw usage_error("field characteristic too large (need p < 2^30)");
    if (!is_prime_u64(p)) throw usage_error("field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::str() const {
    return p_ == 0 ? std::string("Q") : "Fp(" + std::to_string(p_) + ")";
}

Scalar Scalar::from_int(const Field& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.rat_ = mpq_class(static_cast<long>(v));
    } else {
        std::int64_t p = static_cast<std::int64_t>(f.characteristic());
        s.res_ = ((v % p) + p) % p;
        s.rat_ = 0;
    }
    return s;
}

Scalar Scalar::from_rational(const Field& f, long long num, long long den) {
    if (den == 0) throw usage_error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return from_rational(f, q);
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.rat_ = q;
        s.rat_.canonicalize();
    } else {
        std::int64_t p = static_cast<std::int64_t>(f.characteristic());
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        std::int64_t n = ((num.get_si() % p) + p) % p;
        std::int64_t d = ((den.get_si() % p) + p) % p;
        if (d == 0) throw usage_error("denominator vanishes in F_" + std::to_string(p));
        s.res_ = n * mod_pow(d, static_cast<std::uint64_t>(p - 2), p) % p;
        s.rat_ = 0;
    }
    return s;
}

bool Scalar::is_zero() const { return field_.is_rationals() ? rat_ == 0 : res_ == 0; }
bool Scalar::is_one() const { return field_.is_rationals() ? rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw usage_error("mixed-field arithmetic: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = rat_ + o.rat_;
    } else {
        std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
        s.res_ = (res_ + o.res_) % p;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = rat_ - o.rat_;
    } else {
        std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
        s.res_ = (res_ - o.res_ % p + p) % p;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = rat_ * o.rat_;
    } else {
        std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
        s.res_ = res_ * o.res_ % p;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw usage_error("division by zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = 1 / rat_;
    } else {
        std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
        s.res_ = mod_pow(res_, static_cast<std::uint64_t>(p - 2), p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = -rat_;
    } else {
        std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
        s.res_ = (p - res_) % p;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (field_.is_rationals()) return rat_.get_str();
    return std::to_string(res_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw std::logic_error("rational() on prime-field scalar");
    return rat_;
}

std::int64_t Scalar::residue() const {
    if (field_.is_rationals()) throw std::logic_error("residue() on rational scalar");
    return res_;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace loewy
