#pragma once

#include <utility>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Dense univariate polynomials as coefficient vectors, ascending degree
/// (coeffs[k] multiplies lambda^k). The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

Scalar poly_eval(const Poly& p, const Scalar& x);
Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Scalar& c);
Poly poly_from_roots(const Field& f, const std::vector<Scalar>& roots);
bool poly_equal(const Poly& a, const Poly& b);

/// Euclidean division over the field; returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd over the field.
Poly poly_gcd(Poly a, Poly b);

/// Quotient of p by (lambda - r); the caller guarantees p(r) = 0.
Poly poly_deflate(const Poly& p, const Scalar& r);

struct RootReport {
    std::vector<std::pair<Scalar, int>> roots; // (value, multiplicity), canonically sorted
    int unfactored_degree = 0;                 // remaining degree with no root in the field
    bool split() const { return unfactored_degree == 0; }
};

/// All roots of p that lie in the base field, with multiplicities. GF(p)
/// scans the residues; the rationals go through integer-root isolation on
/// a monic integer model (Sturm bisection, no factoring of coefficients).
RootReport field_roots(const Poly& p);

} // namespace leonard
