#include "leonard/field.hpp"

#include <algorithm>
#include <sstream>

namespace leonard {

PrimaryDataInvalid::PrimaryDataInvalid(std::vector<std::string> v)
    : std::invalid_argument([&v] {
          std::string msg = "primary data invalid:";
          for (const auto& s : v) msg += " [" + s + "]";
          return msg;
      }()),
      violations(std::move(v)) {}

namespace {

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 16))
        throw std::invalid_argument("prime field modulus must be < 2^16, got " + std::to_string(p));
    if (!is_odd_prime(p))
        throw std::invalid_argument("prime field modulus must be an odd prime >= 3, got " +
                                    std::to_string(p));
    return Field(p);
}

std::string Field::describe() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(const Field& f, long n) : field_(f), rat_(0), res_(0) {
    if (f.is_rationals()) {
        rat_ = n;
    } else {
        long p = static_cast<long>(f.modulus());
        long v = n % p;
        if (v < 0) v += p;
        res_ = static_cast<std::uint32_t>(v);
    }
}

Scalar::Scalar(const Field& f, const mpz_class& n) : field_(f), rat_(0), res_(0) {
    if (f.is_rationals()) {
        rat_ = n;
    } else {
        mpz_class v = n % static_cast<long>(f.modulus());
        if (v < 0) v += static_cast<long>(f.modulus());
        res_ = static_cast<std::uint32_t>(v.get_ui());
    }
}

Scalar Scalar::from_rational(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    return Scalar(Field::rationals(), std::move(v), 0);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    auto digits = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    size_t slash = text.find('/');
    size_t start = (text[0] == '-') ? 1 : 0;
    if (slash == std::string::npos) {
        if (!digits(text, start, text.size()))
            throw std::invalid_argument("bad scalar literal: " + text);
    } else {
        if (!digits(text, start, slash) || !digits(text, slash + 1, text.size()))
            throw std::invalid_argument("bad scalar literal: " + text);
    }
    if (f.is_rationals()) {
        mpq_class v(text);
        if (slash != std::string::npos && mpz_sgn(v.get_den().get_mpz_t()) == 0)
            throw std::invalid_argument("zero denominator: " + text);
        v.canonicalize();
        return Scalar(f, std::move(v), 0);
    }
    if (slash != std::string::npos || text[0] == '-')
        throw std::invalid_argument("GF(p) scalars are plain residues, got: " + text);
    mpz_class v(text);
    if (v >= static_cast<long>(f.modulus()))
        throw std::invalid_argument("residue " + text + " out of range for " + f.describe());
    return Scalar(f, mpq_class(), static_cast<std::uint32_t>(v.get_ui()));
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalars from " + field_.describe() + " and " + o.field_.describe());
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, mpq_class(-rat_), 0);
    return Scalar(field_, mpq_class(), res_ == 0 ? 0 : field_.modulus() - res_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rat_ + o.rat_), 0);
    std::uint64_t s = static_cast<std::uint64_t>(res_) + o.res_;
    if (s >= field_.modulus()) s -= field_.modulus();
    return Scalar(field_, mpq_class(), static_cast<std::uint32_t>(s));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rat_ * o.rat_), 0);
    std::uint64_t m = static_cast<std::uint64_t>(res_) * o.res_ % field_.modulus();
    return Scalar(field_, mpq_class(), static_cast<std::uint32_t>(m));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in " + field_.describe());
    if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / rat_), 0);
    return Scalar(field_, mpq_class(), mod_pow(res_, field_.modulus() - 2, field_.modulus()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

int Scalar::cmp(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return mpq_cmp(rat_.get_mpq_t(), o.rat_.get_mpq_t());
    return res_ < o.res_ ? -1 : (res_ > o.res_ ? 1 : 0);
}

std::string Scalar::str() const {
    return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rationals()) throw FieldMismatch("rational_value() on a GF(p) scalar");
    return rat_;
}

std::uint32_t Scalar::residue_value() const {
    if (!field_.is_prime_field()) throw FieldMismatch("residue_value() on a rational scalar");
    return res_;
}

Scalar pow(const Scalar& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    Scalar r(x.field(), 1);
    Scalar b = x;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::vector<Scalar> square_roots(const Scalar& x) {
    const Field& f = x.field();
    if (x.is_zero()) return {Scalar(f, 0)};
    if (f.is_rationals()) {
        const mpq_class& v = x.rational_value();
        if (sgn(v) < 0) return {};
        mpz_class num = v.get_num(), den = v.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return {};
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Scalar r = Scalar::from_rational(mpq_class(rn, rd));
        return {-r, r};
    }
    // Exhaustive over GF(p); the modulus cap keeps this a desk-scale scan.
    std::uint64_t p = f.modulus();
    for (std::uint64_t y = 1; 2 * y <= p; ++y) {
        if (y * y % p == x.residue_value()) {
            Scalar a(f, static_cast<long>(y));
            Scalar b = -a;
            std::vector<Scalar> out{a, b};
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return {};
}

bool is_square(const Scalar& x) { return !square_roots(x).empty(); }

} // namespace leonard
