#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leonard/matrix.hpp"

namespace leonard {

/// (theta_i; theta*_i; phi1_i; phi2_i): eigenvalue sequences plus first and
/// second split sequences. This is the full isomorphism invariant of a
/// Leonard pair; validity is checked by validate_parameter_array, not here.
struct ParameterArray {
    ParameterArray(std::vector<Scalar> theta_in, std::vector<Scalar> theta_star_in,
                   std::vector<Scalar> phi1_in, std::vector<Scalar> phi2_in);

    int d() const { return static_cast<int>(theta.size()) - 1; }
    const Field& field() const { return theta[0].field(); }

    std::vector<Scalar> theta;      // size d+1
    std::vector<Scalar> theta_star; // size d+1
    std::vector<Scalar> phi1;       // size d, first split sequence
    std::vector<Scalar> phi2;       // size d, second split sequence

    bool operator==(const ParameterArray& o) const;
};

/// (a_i; x_i; theta*_i): the normalized tridiagonal/diagonal presentation
/// data. Construction enforces x_i != 0 and distinct theta*_i; diameter 0 is
/// excluded throughout the library.
struct TddSequence {
    TddSequence(std::vector<Scalar> a_in, std::vector<Scalar> x_in,
                std::vector<Scalar> theta_star_in);

    int d() const { return static_cast<int>(a.size()) - 1; }
    const Field& field() const { return a[0].field(); }

    std::vector<Scalar> a;          // size d+1
    std::vector<Scalar> x;          // size d, entries x_1..x_d
    std::vector<Scalar> theta_star; // size d+1

    bool operator==(const TddSequence& o) const;
};

/// Evaluation context for the split polynomials
///   tau*_i(lambda) = (lambda-ths_0)...(lambda-ths_{i-1}),
///   eta*_i(lambda) = (lambda-ths_d)...(lambda-ths_{d-i+1}).
class SplitPolynomials {
  public:
    explicit SplitPolynomials(std::vector<Scalar> theta_star);
    Scalar tau_star(int i, const Scalar& lambda) const;
    Scalar eta_star(int i, const Scalar& lambda) const;

  private:
    std::vector<Scalar> ths_;
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> violations; // labeled "(i)".."(v)" with detail
    std::optional<Scalar> beta;          // attached when d >= 3 and clause (v) holds
};

/// Decision procedure for "is a parameter array": distinct eigenvalues,
/// nonzero split sequences, the two sum identities, and the common-ratio
/// condition with its fundamental constant.
ValidationReport validate_parameter_array(const ParameterArray& p);

/// The four parameter arrays of the same Leonard pair, base array first:
/// identity; theta*-reversal with split swap-reversal; theta-reversal with
/// split swap; both reversals.
std::array<ParameterArray, 4> parameter_array_relatives(const ParameterArray& p);

ParameterArray affine_transform(const ParameterArray& p, const Scalar& xi, const Scalar& zeta,
                                const Scalar& xi_star, const Scalar& zeta_star);

/// a_i and x_i from the split-sequence formulas (the phi1 route).
TddSequence tdd_from_parameter_array(const ParameterArray& p);

/// Same sequence through the phi2-based formulas; equals the phi1 route on
/// every valid array (kept separate as a cross-check surface).
TddSequence tdd_from_parameter_array_second_route(const ParameterArray& p);

struct TddToArraysResult {
    enum class Status { Ok, NotSplitOverField, NotLeonard };
    Status status = Status::NotLeonard;
    std::string detail;
    std::vector<ParameterArray> arrays; // the array and its theta-reversed partner
};

/// Reconstructs the corresponding parameter array(s) by realizing the
/// sequence, splitting the spectrum in-field, and searching the eigenvalue
/// orderings consistent with every defining identity.
TddToArraysResult parameter_arrays_from_tdd(const TddSequence& t);

/// Normalized TD/D form: A with diagonal a, subdiagonal 1, superdiagonal x;
/// A* = diag(theta*).
MatrixPair realize_matrices(const TddSequence& t);

TddSequence tdd_affine(const TddSequence& t, const Scalar& xi, const Scalar& zeta,
                       const Scalar& xi_star, const Scalar& zeta_star);

} // namespace leonard
