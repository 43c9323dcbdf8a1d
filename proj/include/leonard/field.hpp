#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leonard/errors.hpp"

namespace leonard {

/// An exactly representable coefficient field: the rationals, or GF(p) for an
/// odd prime p < 2^16. Fields of characteristic 2 are rejected outright.
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string describe() const;

  private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_; // 0 encodes the rationals
};

/// One field element in canonical form: a reduced fraction over the
/// rationals, a residue in [0, p) over GF(p). Equality is structural and all
/// arithmetic is exact.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}
    Scalar(const Field& f, long n); // the image of the integer n
    Scalar(const Field& f, const mpz_class& n);
    static Scalar from_rational(const mpq_class& value);
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws std::domain_error on /0
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical total order used for deterministic output: numeric order
    /// over the rationals, residue order over GF(p).
    int cmp(const Scalar& o) const;
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }

    /// Text form: "n" or "n/d" with d > 0 and gcd(|n|, d) = 1 over the
    /// rationals; the decimal residue over GF(p).
    std::string str() const;

    const mpq_class& rational_value() const;
    std::uint32_t residue_value() const;

  private:
    Scalar(const Field& f, mpq_class r, std::uint32_t v)
        : field_(f), rat_(std::move(r)), res_(v) {}

    void check_same_field(const Scalar& o) const;

    Field field_;
    mpq_class rat_;     // meaningful iff field_.is_rationals()
    std::uint32_t res_; // meaningful iff field_.is_prime_field()
};

/// x^e with e any integer; 0^0 = 1, negative e inverts first.
Scalar pow(const Scalar& x, long e);

/// All y in the field with y^2 = x: {0}, a +/- pair, or empty when x is not
/// a square. Over GF(p) this is an exhaustive search, which is why the
/// modulus is capped at 2^16.
std::vector<Scalar> square_roots(const Scalar& x);

bool is_square(const Scalar& x);

} // namespace leonard
