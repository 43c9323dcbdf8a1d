#pragma once

#include "leonard/params.hpp"

namespace leonard {

enum class TypeTag { I, II, IIIPlus, IIIMinus };

std::string type_tag_name(TypeTag t);

/// Type of a parameter array with d >= 3, read off the fundamental constant:
/// I when beta != +-2, II when beta = 2, III+/- when beta = -2 by parity of d.
struct FundamentalType {
    TypeTag tag;
    Scalar beta;
};

FundamentalType fundamental_type(const ParameterArray& p);

/// All q in the field with q^2 + q^-2 = beta, canonically sorted; may be
/// empty. Every returned q has q != 0 and q^4 != 1.
std::vector<Scalar> q_from_beta(const Scalar& beta);

enum class PrimaryType { I, II, IIIPlus };

/// The closed-form parametrization data of a parameter array. For type III+
/// the mu and mu_star slots hold s and s*.
struct PrimaryData {
    PrimaryType type;
    int d;
    std::optional<Scalar> q; // present iff type I
    Scalar delta, mu, h, delta_star, mu_star, h_star, tau;

    const Field& field() const { return delta.field(); }
    bool operator==(const PrimaryData& o) const;
};

PrimaryData make_primary_i(int d, const Scalar& q, const Scalar& delta, const Scalar& mu,
                           const Scalar& h, const Scalar& delta_star, const Scalar& mu_star,
                           const Scalar& h_star, const Scalar& tau);
PrimaryData make_primary_ii(int d, const Scalar& delta, const Scalar& mu, const Scalar& h,
                            const Scalar& delta_star, const Scalar& mu_star,
                            const Scalar& h_star, const Scalar& tau);
PrimaryData make_primary_iiiplus(int d, const Scalar& delta, const Scalar& s, const Scalar& h,
                                 const Scalar& delta_star, const Scalar& s_star,
                                 const Scalar& h_star, const Scalar& tau);

/// Violated inequalities of the matching type lemma; empty iff admissible.
std::vector<std::string> primary_data_violations(const PrimaryData& pd);

/// Evaluates the closed forms. Throws PrimaryDataInvalid when an inequality
/// fails; otherwise the result always passes validate_parameter_array.
ParameterArray parameter_array_from_primary_data(const PrimaryData& pd);

/// Inverse extraction via small linear solves on the leading indices plus a
/// full consistency check; round-trips exactly. Type I needs an in-field q
/// (supplied, or the canonically first result of q_from_beta).
PrimaryData primary_data_from_parameter_array(const ParameterArray& p,
                                              std::optional<Scalar> q_choice = std::nullopt);

/// The primary data of the four relative parameter arrays, base first.
std::array<PrimaryData, 4> primary_data_relatives(const PrimaryData& pd);

struct SpecialTypeFlags {
    bool dual_q_krawtchouk = false;
    bool krawtchouk = false;
    bool reinforced = false; // meaningful only alongside dual_q_krawtchouk
    bool bipartite = false;
    bool essentially_bipartite = false;
};

SpecialTypeFlags special_type_flags(const PrimaryData& pd);

/// True iff phi1_i phi2_i agree for all i between the arrays of pd1 and pd2,
/// decided through the per-type closed conditions. Requires the same type
/// and the same (delta*, mu*, h*) block.
bool phi_products_equal(const PrimaryData& pd1, const PrimaryData& pd2);

// Array-level predicates, independent of the primary-data route; they agree
// with the flags above on every valid array and need no in-field q.
bool dual_q_krawtchouk_by_ratios(const ParameterArray& p);
bool krawtchouk_by_differences(const ParameterArray& p);

/// For a dual q-Krawtchouk array: whether (q^2)^i != -1 for 1 <= i <= d-1,
/// read from the theta* ratio, so no in-field q is needed.
bool reinforced_by_ratio(const ParameterArray& p);

/// Fast path: true when q cannot be a root of unity, so the reinforced power
/// scan is vacuous. Over the rationals this holds for every admissible q
/// (the only rational roots of unity are +-1, excluded by q^4 != 1).
bool reinforced_without_scan(const Scalar& q);

/// Documented type II variant of the constant-ratio conditions ("mu h = 0
/// and h* = 0"); not used by the classifier.
bool type2_constant_ratio_variant(const ParameterArray& p);

} // namespace leonard
