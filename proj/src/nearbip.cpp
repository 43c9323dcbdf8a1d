#include "leonard/nearbip.hpp"

namespace leonard {

std::string nb_reason_name(NbReason r) {
    switch (r) {
        case NbReason::EssentiallyBipartite: return "EssentiallyBipartite";
        case NbReason::ReinforcedDualQKrawtchouk: return "ReinforcedDualQKrawtchouk";
        case NbReason::Krawtchouk: return "Krawtchouk";
    }
    return "?";
}

namespace {

TddSequence zero_diagonal(const TddSequence& t) {
    return TddSequence(std::vector<Scalar>(t.a.size(), Scalar(t.field(), 0)), t.x, t.theta_star);
}

// The relative of `a` presenting theta* in the given order; one always
// exists because both standard orders appear among the four relatives.
ParameterArray relative_with_theta_star(const ParameterArray& a,
                                        const std::vector<Scalar>& theta_star) {
    for (const ParameterArray& r : parameter_array_relatives(a))
        if (r.theta_star == theta_star) return r;
    throw std::logic_error("no relative matches the requested theta* order");
}

} // namespace

TypedContractionResult contract_dual_q_krawtchouk(const PrimaryData& pd) {
    TypedContractionResult res;
    if (pd.type != PrimaryType::I) throw NotDualQKrawtchouk("primary data is not of type I");
    SpecialTypeFlags fl = special_type_flags(pd);
    if (!fl.dual_q_krawtchouk)
        throw NotDualQKrawtchouk("mu* h* = 0 and tau = 0 do not hold");
    if (!fl.reinforced) {
        res.status = TypedContractionResult::Status::NotReinforced;
        return res;
    }
    const Field& f = pd.field();
    auto roots = square_roots(-(pd.mu * pd.h)); // mu' + h' = 0 and mu' h' = mu h
    if (roots.empty()) {
        res.status = TypedContractionResult::Status::MuPrimeNotInField;
        res.tdd_fallback = zero_diagonal(tdd_from_parameter_array(parameter_array_from_primary_data(pd)));
        return res;
    }
    Scalar mu_prime = roots.front();
    PrimaryData cpd = make_primary_i(pd.d, *pd.q, Scalar(f, 0), mu_prime, -mu_prime,
                                     pd.delta_star, pd.mu_star, pd.h_star, Scalar(f, 0));
    res.status = TypedContractionResult::Status::Contracted;
    res.array = parameter_array_from_primary_data(cpd);
    res.pd = std::move(cpd);
    return res;
}

TypedContractionResult contract_krawtchouk(const PrimaryData& pd) {
    TypedContractionResult res;
    if (pd.type != PrimaryType::II) throw NotKrawtchouk("primary data is not of type II");
    SpecialTypeFlags fl = special_type_flags(pd);
    if (!fl.krawtchouk) throw NotKrawtchouk("h = 0 and h* = 0 do not hold");
    const Field& f = pd.field();
    Scalar target = pd.mu * pd.mu - Scalar(f, 4) * pd.tau * pd.tau / (pd.mu_star * pd.mu_star);
    auto roots = square_roots(target);
    if (roots.empty()) {
        res.status = TypedContractionResult::Status::MuPrimeNotInField;
        res.tdd_fallback = zero_diagonal(tdd_from_parameter_array(parameter_array_from_primary_data(pd)));
        return res;
    }
    Scalar mu_prime = roots.front(); // nonzero: 2 tau != +- mu mu*
    PrimaryData cpd = make_primary_ii(pd.d, Scalar(f, 0), mu_prime, Scalar(f, 0), pd.delta_star,
                                      pd.mu_star, pd.h_star, Scalar(f, 0));
    res.status = TypedContractionResult::Status::Contracted;
    res.array = parameter_array_from_primary_data(cpd);
    res.pd = std::move(cpd);
    return res;
}

NearBipartiteClassification classify_near_bipartite(const ParameterArray& p) {
    if (p.d() < 3)
        throw std::invalid_argument("classification needs diameter >= 3; use leonard_d1/leonard_d2");
    if (!validate_parameter_array(p).valid)
        throw std::invalid_argument("input is not a parameter array");

    NearBipartiteClassification out;
    const Field& f = p.field();
    FundamentalType ft = fundamental_type(p);
    BipartiteStatus bs = bipartite_status(p);

    std::optional<PrimaryData> pd;
    if (ft.tag != TypeTag::IIIMinus) {
        try {
            pd = primary_data_from_parameter_array(p);
        } catch (const NoQInField&) {
            out.no_q_in_field = true; // type I whose q lives outside the field
        }
    }

    if (bs.essentially_bipartite) out.reasons.push_back(NbReason::EssentiallyBipartite);
    std::optional<TypedContractionResult> typed;
    if (ft.tag == TypeTag::I) {
        bool dual_q = pd ? special_type_flags(*pd).dual_q_krawtchouk
                         : dual_q_krawtchouk_by_ratios(p);
        if (dual_q) {
            bool reinforced = pd ? special_type_flags(*pd).reinforced : reinforced_by_ratio(p);
            if (reinforced) {
                out.reasons.push_back(NbReason::ReinforcedDualQKrawtchouk);
                if (pd) typed = contract_dual_q_krawtchouk(*pd);
            }
        }
    } else if (ft.tag == TypeTag::II && pd && special_type_flags(*pd).krawtchouk) {
        out.reasons.push_back(NbReason::Krawtchouk);
        typed = contract_krawtchouk(*pd);
    }
    out.near_bipartite = !out.reasons.empty();

    if (out.near_bipartite) {
        out.contraction_tdd = zero_diagonal(tdd_from_parameter_array(p));
        if (bs.essentially_bipartite) {
            Scalar one(f, 1);
            out.contraction = affine_transform(p, one, -*bs.alpha, one, Scalar(f, 0));
        } else if (typed) {
            if (typed->ok())
                out.contraction = typed->array;
            else
                out.mu_prime_not_in_field = true;
        }
    }

    // Matrix route, run unconditionally as the definitional cross-check.
    BipartiteContractionResult mr = bipartite_contraction(realize_matrices(tdd_from_parameter_array(p)));
    out.matrix_route = mr.status;
    out.matrix_route_detail = mr.detail;

    bool matrix_ok = mr.ok();
    if (!out.near_bipartite && matrix_ok)
        throw std::logic_error("matrix route contracted a pair the trichotomy rejects");
    if (out.near_bipartite) {
        if (!out.contraction && matrix_ok) // e.g. q outside the field, contraction still splits
            out.contraction = relative_with_theta_star(*mr.array, p.theta_star);
        if (out.contraction && !matrix_ok)
            throw std::logic_error("in-field contraction exists but the matrix route failed: " +
                                   mr.detail);
        if (!out.contraction) {
            if (mr.status != BipartiteContractionResult::Status::SpectrumNotInField)
                throw std::logic_error("missing-root fallback expected SpectrumNotInField, got: " +
                                       mr.detail);
            out.mu_prime_not_in_field = true;
        }
        if (out.contraction && matrix_ok &&
            !contraction_condition(p, relative_with_theta_star(*mr.array, p.theta_star)))
            throw std::logic_error("matrix-route contraction disagrees with the array route");
    }
    return out;
}

ExactMatrix structure_matrix_k(const Field&, int d, const Scalar& q) {
    std::vector<Scalar> diag;
    for (int i = 0; i <= d; ++i) diag.push_back(pow(q, 2 * i - d));
    return ExactMatrix::diagonal(diag);
}

ExactMatrix structure_matrix_h(const Field& f, int d) {
    std::vector<Scalar> diag;
    for (int i = 0; i <= d; ++i) diag.push_back(Scalar(f, 2 * i - d));
    return ExactMatrix::diagonal(diag);
}

namespace {

// B and A* realized from the bipartite pair's own sequence data.
MatrixPair realize_bipartite(const PrimaryData& b) {
    return realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(b)));
}

void check_flat_subtraction(const MatrixPair& expanded, const ExactMatrix& b) {
    FlatPartResult fl = flat_part(expanded);
    if (!fl.ok() || !(expanded.a - fl.part->flat == b))
        throw std::logic_error("expansion does not contract back onto B");
}

} // namespace

DualQExpansionResult expand_dual_q_krawtchouk(const PrimaryData& bipartite_pd, const Scalar& delta,
                                              const Scalar& mu) {
    const PrimaryData& b = bipartite_pd;
    if (b.type != PrimaryType::I) throw NotDualQKrawtchouk("base pair is not of type I");
    SpecialTypeFlags fl = special_type_flags(b);
    if (!fl.dual_q_krawtchouk || !fl.bipartite)
        throw std::invalid_argument("base pair must be bipartite of dual q-Krawtchouk type");

    DualQExpansionResult res;
    const Field& f = b.field();
    if (mu.is_zero()) {
        res.status = DualQExpansionResult::Status::MuZero;
        return res;
    }
    const Scalar& q = *b.q;
    Scalar mu_prime_sq = -(b.mu * b.h); // = mu'^2 since h' = -mu'
    for (int i = 1 - b.d; i <= b.d - 1; ++i) {
        // mu = +- sqrt(-1) mu' q^i, phrased root-free as mu^2 + mu'^2 q^(2i) = 0
        if ((mu * mu + mu_prime_sq * pow(q, 2 * i)).is_zero()) {
            res.status = DualQExpansionResult::Status::MuForbidden;
            res.forbidden_index = i;
            return res;
        }
    }
    Scalar h = b.mu * b.h / mu; // h = mu' h' / mu
    PrimaryData pd = make_primary_i(b.d, q, delta, mu, h, b.delta_star, b.mu_star, b.h_star,
                                    Scalar(f, 0));
    ParameterArray array = parameter_array_from_primary_data(pd);

    MatrixPair base = realize_bipartite(b);
    ExactMatrix shift = b.mu_star.is_zero() ? structure_matrix_k(f, b.d, q)
                                            : structure_matrix_k(f, b.d, q.inverse());
    ExactMatrix a = base.a + shift.scaled(mu + h) +
                    ExactMatrix::identity(f, b.d + 1).scaled(delta);
    MatrixPair expanded(std::move(a), base.astar);
    check_flat_subtraction(expanded, base.a);

    res.status = DualQExpansionResult::Status::Ok;
    res.pd = std::move(pd);
    res.array = std::move(array);
    res.matrices = std::move(expanded);
    return res;
}

KrawtchoukExpansionResult expand_krawtchouk(const PrimaryData& bipartite_pd, const Scalar& delta,
                                            const Scalar& mu) {
    const PrimaryData& b = bipartite_pd;
    if (b.type != PrimaryType::II) throw NotKrawtchouk("base pair is not of type II");
    SpecialTypeFlags fl = special_type_flags(b);
    if (!fl.krawtchouk || !fl.bipartite)
        throw std::invalid_argument("base pair must be bipartite of Krawtchouk type");

    KrawtchoukExpansionResult res;
    const Field& f = b.field();
    if (mu.is_zero()) {
        res.status = KrawtchoukExpansionResult::Status::MuZero;
        return res;
    }
    Scalar target = (mu * mu - b.mu * b.mu) * b.mu_star * b.mu_star / Scalar(f, 4);
    auto taus = square_roots(target);
    if (taus.empty()) {
        res.status = KrawtchoukExpansionResult::Status::NoTauInField;
        return res;
    }
    MatrixPair base = realize_bipartite(b);
    ExactMatrix hmat = structure_matrix_h(f, b.d);
    for (const Scalar& tau : taus) {
        PrimaryData pd = make_primary_ii(b.d, delta, mu, Scalar(f, 0), b.delta_star, b.mu_star,
                                         b.h_star, tau);
        ParameterArray array = parameter_array_from_primary_data(pd);
        ExactMatrix a = base.a + hmat.scaled(tau / b.mu_star) +
                        ExactMatrix::identity(f, b.d + 1).scaled(delta);
        MatrixPair expanded(std::move(a), base.astar);
        check_flat_subtraction(expanded, base.a);
        res.items.push_back(KrawtchoukExpansionItem{tau, std::move(pd), std::move(array),
                                                    std::move(expanded)});
    }
    res.status = KrawtchoukExpansionResult::Status::Ok;
    return res;
}

} // namespace leonard
