#pragma once

#include "leonard/params.hpp"

namespace leonard {

/// F = sum_i E*_i A E*_i, the diagonal of A in an A*-eigenbasis.
struct FlatPart {
    ExactMatrix flat;                // F
    std::optional<Scalar> a_common;  // set iff F is a scalar multiple of I
};

struct FlatPartResult {
    enum class Status { Ok, NotSplitOverField, RepeatedEigenvalue };
    Status status = Status::NotSplitOverField;
    std::optional<FlatPart> part;
    bool ok() const { return status == Status::Ok; }
};

/// Requires the A* spectrum to split in-field; independent of the choice of
/// TD/D sequence.
FlatPartResult flat_part(const MatrixPair& p);

struct BipartiteStatus {
    bool bipartite = false;
    bool essentially_bipartite = false;
    std::optional<bool> near_bipartite; // unknown until a contraction is attempted
    std::optional<Scalar> alpha;        // common a_i when essentially bipartite
};

/// From a TD/D sequence the a_i are tested directly; from a parameter array
/// the eigenvalue-sum and split-sum characterizations are used. The two
/// routes agree on every valid input.
BipartiteStatus bipartite_status(const TddSequence& t);
BipartiteStatus bipartite_status(const ParameterArray& p);

struct BipartiteContractionResult {
    enum class Status {
        Contracted,
        InputNotLeonard,
        SpectrumNotInField,  // contraction eigenvalues are not in the field
        RepeatedEigenvalue,  // contraction char poly has a repeated root
        NotTridiagonal,      // multiplicity-free but fails the tridiagonal test
    };
    Status status = Status::InputNotLeonard;
    std::string detail;
    std::optional<MatrixPair> pair;      // (A - F, A*)
    std::optional<ParameterArray> array; // a parameter array of the contraction
    bool ok() const { return status == Status::Contracted; }
};

/// Matrix-route contraction: form B = A - F and accept iff (B, A*) passes
/// the brute-force verifier. Works at every diameter and needs no type
/// analysis, so it cross-checks the formula routes everywhere.
BipartiteContractionResult bipartite_contraction(const MatrixPair& p);

/// phi1_i phi2_i = phi1'_i phi2'_i for all i, given identical theta* and a
/// bipartite partner: the exact condition for b to be the contraction of p.
bool contraction_condition(const ParameterArray& p, const ParameterArray& b);

struct ClassificationD1 {
    bool leonard = false;             // (A, A*) is a Leonard pair over the field
    bool split_in_field = false;      // the two A-eigenvalues lie in the field
    bool contraction_leonard = false; // (A - diag(a), A*) is a Leonard pair
    bool bipartite = false;
    bool essentially_bipartite = false;
    bool near_bipartite = false;
};

/// Complete diameter-one classification from the five defining scalars of
/// the normalized form. With closed_field_form the in-field root checks are
/// dropped, giving the algebraically-closed statements.
ClassificationD1 leonard_d1(const Scalar& a0, const Scalar& a1, const Scalar& x1,
                            const Scalar& ths0, const Scalar& ths1,
                            bool closed_field_form = false);

struct ClassificationD2 {
    bool conditions_hold = false;            // the four displayed conditions
    bool split_in_field = false;             // A-eigenvalue discriminant is a square
    bool leonard = false;
    bool contraction_conditions_hold = false; // same x and theta*, a = 0
    bool contraction_split_in_field = false;  // x1 + x2 is a square
    bool contraction_leonard = false;
    bool bipartite = false;
    bool essentially_bipartite = false;
    std::optional<bool> near_bipartite;        // only defined when leonard
    std::optional<bool> expansion_of_shared_b; // only defined when contraction_leonard
};

/// Complete diameter-two classification; B is taken implicitly through the
/// shared (x_1, x_2, theta*).
ClassificationD2 leonard_d2(const std::array<Scalar, 3>& a, const std::array<Scalar, 2>& x,
                            const std::array<Scalar, 3>& ths, bool closed_field_form = false);

} // namespace leonard
