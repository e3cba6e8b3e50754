#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loewy {

// User-facing input problem (bad declaration, mixed fields, non-prime p, ...).
// The CLI maps this to exit code 2; checkers map it to "unknown" verdicts.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient field: Q (p == 0) or a prime field F_p with p < 2^30 so that
// products of residues stay inside int64.
class Field {
  public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string str() const;

  private:
    std::uint64_t p_;
};

// Exact field element. Rationals are GMP-backed, prime fields are canonical
// residues in [0, p). Mixing fields in one operation is a usage error.
class Scalar {
  public:
    Scalar() : field_(), rat_(0) {}  // rational zero

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_rational(const Field& f, const mpq_class& q);
    static Scalar from_rational(const Field& f, long long num, long long den);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // canonical text: "3", "-1/2"; residues print as 0..p-1
    std::string str() const;

    const mpq_class& rational() const;  // rationals only
    std::int64_t residue() const;       // prime fields only

  private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    mpq_class rat_;          // used when field is Q
    std::int64_t res_ = 0;   // used when field is F_p
};

// binomial(n, k) as an arbitrary-precision integer; 0 when k > n
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace loewy
