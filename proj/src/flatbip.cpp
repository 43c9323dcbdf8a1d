#include "leonard/flatbip.hpp"

namespace leonard {

FlatPartResult flat_part(const MatrixPair& p) {
    FlatPartResult res;
    SpectrumReport spec = spectrum(p.astar);
    if (!spec.split) {
        res.status = FlatPartResult::Status::NotSplitOverField;
        return res;
    }
    if (!spec.multiplicity_free) {
        res.status = FlatPartResult::Status::RepeatedEigenvalue;
        return res;
    }
    std::vector<Scalar> eigs;
    for (const auto& [v, m] : spec.eigenvalues) eigs.push_back(v);
    auto es = primitive_idempotents(p.astar, eigs);
    ExactMatrix f(p.field(), p.dim());
    for (const auto& e : es) f = f + e * p.a * e;

    std::optional<Scalar> a_common;
    ExactMatrix scaled_id = ExactMatrix::identity(p.field(), p.dim()).scaled(f.at(0, 0));
    if (f == scaled_id) a_common = f.at(0, 0);
    res.status = FlatPartResult::Status::Ok;
    res.part = FlatPart{std::move(f), std::move(a_common)};
    return res;
}

BipartiteStatus bipartite_status(const TddSequence& t) {
    BipartiteStatus st;
    st.essentially_bipartite = std::all_of(t.a.begin(), t.a.end(),
                                           [&](const Scalar& v) { return v == t.a[0]; });
    st.bipartite = st.essentially_bipartite && t.a[0].is_zero();
    if (st.essentially_bipartite) {
        st.alpha = t.a[0];
        st.near_bipartite = true;
    }
    return st;
}

BipartiteStatus bipartite_status(const ParameterArray& p) {
    BipartiteStatus st;
    int d = p.d();
    const Field& f = p.field();
    Scalar sum0 = p.theta[0] + p.theta[d];
    bool sums_const = true, sums_zero = true, splits_cancel = true;
    for (int i = 0; i <= d; ++i) {
        Scalar s = p.theta[i] + p.theta[d - i];
        if (s != sum0) sums_const = false;
        if (!s.is_zero()) sums_zero = false;
    }
    for (int i = 0; i < d; ++i)
        if (!(p.phi1[i] + p.phi2[i]).is_zero()) splits_cancel = false;
    st.essentially_bipartite = sums_const && splits_cancel;
    st.bipartite = sums_zero && splits_cancel;
    if (st.essentially_bipartite) {
        st.alpha = sum0 / Scalar(f, 2); // theta_i + theta_{d-i} = 2 alpha
        st.near_bipartite = true;
    }
    return st;
}

BipartiteContractionResult bipartite_contraction(const MatrixPair& p) {
    BipartiteContractionResult res;
    VerificationReport input = verify_leonard_pair(p);
    if (!input.ok()) {
        res.status = BipartiteContractionResult::Status::InputNotLeonard;
        res.detail = input.reason;
        return res;
    }
    FlatPartResult fl = flat_part(p);
    if (!fl.ok()) {
        res.status = BipartiteContractionResult::Status::SpectrumNotInField;
        res.detail = "A* spectrum not split in-field";
        return res;
    }
    MatrixPair contracted(p.a - fl.part->flat, p.astar);
    VerificationReport rep = verify_leonard_pair(contracted);
    if (!rep.ok()) {
        // A repeated root is detected over the closure via gcd(f, f'), so it
        // is reported even when no root lies in the base field.
        Poly f = char_poly(contracted.a);
        if (poly_gcd(f, poly_derivative(f)).size() > 1) {
            res.status = BipartiteContractionResult::Status::RepeatedEigenvalue;
            res.detail = "contraction characteristic polynomial has a repeated root";
        } else if (!spectrum(contracted.a).split) {
            res.status = BipartiteContractionResult::Status::SpectrumNotInField;
            res.detail = "contraction eigenvalues are not in the field";
        } else {
            res.status = BipartiteContractionResult::Status::NotTridiagonal;
            res.detail = rep.reason;
        }
        return res;
    }
    auto [a_seq, x_seq] = trace_data(contracted, rep.theta_star_order);
    TddSequence tdd(a_seq, x_seq, rep.theta_star_order);
    TddToArraysResult arrays = parameter_arrays_from_tdd(tdd);
    if (arrays.status != TddToArraysResult::Status::Ok)
        throw std::logic_error("verified contraction lacks a parameter array: " + arrays.detail);
    res.status = BipartiteContractionResult::Status::Contracted;
    res.pair = std::move(contracted);
    res.array = arrays.arrays.front();
    return res;
}

bool contraction_condition(const ParameterArray& p, const ParameterArray& b) {
    if (p.theta_star != b.theta_star)
        throw ThetaStarMismatch("contraction condition needs identical theta* sequences");
    if (!bipartite_status(b).bipartite)
        throw std::invalid_argument("second array must be bipartite");
    for (int i = 0; i < p.d(); ++i)
        if (p.phi1[i] * p.phi2[i] != b.phi1[i] * b.phi2[i]) return false;
    return true;
}

ClassificationD1 leonard_d1(const Scalar& a0, const Scalar& a1, const Scalar& x1,
                            const Scalar& ths0, const Scalar& ths1, bool closed_field_form) {
    ClassificationD1 c;
    const Field& f = a0.field();
    bool basic = !x1.is_zero() && ths0 != ths1;
    Scalar disc = (a0 - a1) * (a0 - a1) + Scalar(f, 4) * x1;
    c.split_in_field = is_square(disc);
    bool closed_leonard = basic && !disc.is_zero();
    c.leonard = closed_leonard && (closed_field_form || c.split_in_field);
    c.contraction_leonard = basic && (closed_field_form || is_square(x1));
    c.bipartite = c.leonard && a0.is_zero() && a1.is_zero();
    c.essentially_bipartite = c.leonard && a0 == a1;
    c.near_bipartite = c.leonard && c.contraction_leonard;
    return c;
}

ClassificationD2 leonard_d2(const std::array<Scalar, 3>& a, const std::array<Scalar, 2>& x,
                            const std::array<Scalar, 3>& ths, bool closed_field_form) {
    ClassificationD2 c;
    const Field& f = a[0].field();
    Scalar two(f, 2);

    bool distinct = ths[0] != ths[1] && ths[0] != ths[2] && ths[1] != ths[2] &&
                    !x[0].is_zero() && !x[1].is_zero();
    if (!distinct) return c;

    Scalar d01 = ths[0] - ths[1], d02 = ths[0] - ths[2], d12 = ths[1] - ths[2];
    Scalar weighted = a[0] * d01 + a[1] * (ths[2] - ths[0]) + a[2] * d12;

    bool equat = x[0] / (-d12) + x[1] / d01 == (a[0] - a[2]) / (d02 * d02) * weighted;
    Scalar nz1 = x[0] / (d12 * d12) + x[1] / (d01 * d01) + (a[0] - a[2]) * (a[0] - a[2]) / (d02 * d02);
    Scalar nz2 = x[0] / (-d12) - x[1] / d01 + (a[0] - a[2]) * (a[0] - a[2]) / (two * (-d02)) +
                 weighted * weighted / (two * (-d02) * (-d02) * (-d02));
    c.conditions_hold = equat && !nz1.is_zero() && !nz2.is_zero();

    Scalar disc = two * (-d02) * nz2; // (theta_0 - theta_2)^2 of the realized matrix
    c.split_in_field = is_square(disc);
    c.leonard = c.conditions_hold && (closed_field_form || c.split_in_field);

    bool contraction_cond = x[0] / d12 == x[1] / d01;
    c.contraction_conditions_hold = contraction_cond;
    c.contraction_split_in_field = is_square(x[0] + x[1]);
    c.contraction_leonard =
        contraction_cond && (closed_field_form || c.contraction_split_in_field);

    bool a_zero = a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
    bool a_const = a[0] == a[1] && a[1] == a[2];
    c.bipartite = c.leonard && a_zero;
    c.essentially_bipartite = c.leonard && a_const;
    if (c.leonard) c.near_bipartite = c.contraction_leonard;

    if (c.contraction_leonard) {
        bool expansion;
        if (a[0] == a[2]) {
            Scalar t = (a[0] - a[1]) * (a[0] - a[1]) + Scalar(f, 4) * (x[0] + x[1]);
            expansion = !t.is_zero();
        } else {
            Scalar aux = a[0] * d01 + a[2] * d12 + a[1] * (ths[2] - ths[0]);
            Scalar t1 = (a[0] - a[2]) * (a[0] - a[2]) + Scalar(f, 4) * (x[0] + x[1]);
            Scalar sum = x[0] + x[1];
            Scalar t2 = (a[0] - a[2]) * (a[0] - a[2]) + sum * sum * sum / (x[0] * x[1]);
            expansion = aux.is_zero() && !t1.is_zero() && !t2.is_zero();
        }
        c.expansion_of_shared_b = expansion && (closed_field_form || c.split_in_field);
    }
    return c;
}

} // namespace leonard
