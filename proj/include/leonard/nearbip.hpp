#pragma once

#include "leonard/flatbip.hpp"
#include "leonard/primary.hpp"

namespace leonard {

enum class NbReason { EssentiallyBipartite, ReinforcedDualQKrawtchouk, Krawtchouk };

std::string nb_reason_name(NbReason r);

struct NearBipartiteClassification {
    bool near_bipartite = false;
    std::vector<NbReason> reasons;

    // Contraction data: the parameter array when it exists over the field,
    // and always the sequence-level contraction (zero diagonal, same x, same
    // theta*) when near-bipartite.
    std::optional<ParameterArray> contraction;
    std::optional<TddSequence> contraction_tdd;

    // Documented in-field caveats.
    bool no_q_in_field = false;          // type I without an in-field q
    bool mu_prime_not_in_field = false;  // contraction eigenvalue data needs a missing root

    // Matrix-route cross-check (always executed).
    BipartiteContractionResult::Status matrix_route =
        BipartiteContractionResult::Status::InputNotLeonard;
    std::string matrix_route_detail;
};

/// Trichotomy-based classification at diameter >= 3: near-bipartite iff
/// essentially bipartite, reinforced dual q-Krawtchouk, or Krawtchouk. The
/// matrix route is run alongside and any disagreement beyond the documented
/// missing-root fallbacks throws logic_error. Diameters 1 and 2 are handled
/// by leonard_d1 / leonard_d2 instead.
NearBipartiteClassification classify_near_bipartite(const ParameterArray& p);

struct TypedContractionResult {
    enum class Status { Contracted, NotReinforced, MuPrimeNotInField };
    Status status = Status::NotReinforced;
    std::optional<PrimaryData> pd;
    std::optional<ParameterArray> array;
    std::optional<TddSequence> tdd_fallback; // set for MuPrimeNotInField
    bool ok() const { return status == Status::Contracted; }
};

/// Contraction of a dual q-Krawtchouk pair: exists iff reinforced; the
/// parameter-array presentation additionally needs mu' = sqrt(-mu h) in the
/// field, otherwise the sequence-level contraction is returned as fallback.
TypedContractionResult contract_dual_q_krawtchouk(const PrimaryData& pd);

/// Contraction of a Krawtchouk pair: always exists; mu'^2 = mu^2 - 4 tau^2 / mu*^2.
TypedContractionResult contract_krawtchouk(const PrimaryData& pd);

/// Diagonal structure matrices of the expansion formulas.
ExactMatrix structure_matrix_k(const Field& f, int d, const Scalar& q); // (i,i) = q^(2i-d)
ExactMatrix structure_matrix_h(const Field& f, int d);                  // (i,i) = 2i-d

struct DualQExpansionResult {
    enum class Status { Ok, MuZero, MuForbidden };
    Status status = Status::MuZero;
    int forbidden_index = 0; // the exponent i violating the mu inequality
    std::optional<PrimaryData> pd;
    std::optional<ParameterArray> array;
    std::optional<MatrixPair> matrices; // A = B + (mu+h) K^(+-1) + delta I, with A*
    bool ok() const { return status == Status::Ok; }
};

/// Near-bipartite expansion of a bipartite dual q-Krawtchouk pair for the
/// chosen (delta, mu): h = mu' h' / mu, tau = 0, and mu must avoid
/// mu^2 = -mu'^2 q^(2i) for |i| < d (vacuous when -1 is a non-square).
DualQExpansionResult expand_dual_q_krawtchouk(const PrimaryData& bipartite_pd,
                                              const Scalar& delta, const Scalar& mu);

struct KrawtchoukExpansionItem {
    Scalar tau;
    PrimaryData pd;
    ParameterArray array;
    MatrixPair matrices;
};

struct KrawtchoukExpansionResult {
    enum class Status { Ok, MuZero, NoTauInField };
    Status status = Status::MuZero;
    std::vector<KrawtchoukExpansionItem> items; // one per tau sign, canonical order
    bool ok() const { return status == Status::Ok; }
};

/// Near-bipartite expansions of a bipartite Krawtchouk pair for the chosen
/// (delta, mu): h = 0 and 4 tau^2 = (mu^2 - mu'^2) mu*^2, solved for tau.
KrawtchoukExpansionResult expand_krawtchouk(const PrimaryData& bipartite_pd, const Scalar& delta,
                                            const Scalar& mu);

} // namespace leonard
