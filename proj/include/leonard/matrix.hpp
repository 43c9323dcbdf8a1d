#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leonard/poly.hpp"

namespace leonard {

/// Dense square matrix over one field, rows and columns indexed 0..n-1.
class ExactMatrix {
  public:
    ExactMatrix(const Field& f, int n) : f_(f), n_(n), e_(size_t(n) * n, Scalar(f, 0)) {}
    static ExactMatrix identity(const Field& f, int n);
    static ExactMatrix diagonal(const std::vector<Scalar>& d);

    int dim() const { return n_; }
    const Field& field() const { return f_; }

    Scalar& at(int i, int j) { return e_[size_t(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& c) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    Scalar trace() const;
    bool is_zero() const;
    bool is_diagonal() const;

    std::string str() const; // row-per-line debug form

  private:
    Field f_;
    int n_;
    std::vector<Scalar> e_;
};

/// Candidate or verified Leonard pair (A, A*) of equal dimension.
struct MatrixPair {
    MatrixPair(ExactMatrix a_in, ExactMatrix astar_in);
    ExactMatrix a;
    ExactMatrix astar;
    int dim() const { return a.dim(); }
    const Field& field() const { return a.field(); }
};

struct SpectrumReport {
    bool split = false;
    std::vector<std::pair<Scalar, int>> eigenvalues; // (value, multiplicity), sorted
    bool multiplicity_free = false;
};

/// Monic characteristic polynomial det(lambda I - M), ascending coefficients.
/// Division-free (Berkowitz), so it is exact over any of our fields.
Poly char_poly(const ExactMatrix& m);

SpectrumReport spectrum(const ExactMatrix& m);

/// Spectral projectors E_0..E_d of a multiplicity-free matrix, one per listed
/// eigenvalue, via the Lagrange product over (M - theta_j I)/(theta_i - theta_j).
std::vector<ExactMatrix> primitive_idempotents(const ExactMatrix& m,
                                               const std::vector<Scalar>& eigenvalues);

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

struct VerificationReport {
    enum class Status { LeonardPair, NotLeonard, NotSplitOverField };
    Status status = Status::NotLeonard;
    std::string reason; // empty on success

    // On success: one standard eigenvalue ordering per matrix (the canonically
    // smaller of the two; the other standard ordering is its reverse).
    std::vector<Scalar> theta_order;
    std::vector<Scalar> theta_star_order;

    bool ok() const { return status == Status::LeonardPair; }
};

/// Brute-force Leonard-pair check straight from the definition: each matrix
/// must act as an irreducible tridiagonal matrix on some eigenbasis of the
/// other. Used as the oracle against every formula-level route.
VerificationReport verify_leonard_pair(const MatrixPair& p);

/// (a_i, x_i) of a verified pair for a given standard ordering of the A*
/// eigenvalues: a_i = tr(A E*_i), x_i = tr(E*_i A E*_{i-1} A).
/// Throws NotStandardOrdering if the ordering is not standard.
std::pair<std::vector<Scalar>, std::vector<Scalar>>
trace_data(const MatrixPair& p, const std::vector<Scalar>& theta_star_order);

// Shared exact-linear-algebra helpers.
std::optional<ExactMatrix> try_inverse(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);

/// Basis of the kernel, deterministic pivoting, each free variable set to 1.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

/// Index orderings under which m is irreducible tridiagonal (0, 1, or 2; a
/// found ordering and its reverse). Empty when no ordering works.
std::vector<std::vector<int>> tridiagonal_orderings(const ExactMatrix& m);

} // namespace leonard
