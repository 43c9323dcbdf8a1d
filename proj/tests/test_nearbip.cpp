#include <doctest.h>

#include "leonard/nearbip.hpp"
#include "leonard/sampling.hpp"

using namespace leonard;

namespace {

const Field Q = Field::rationals();
const Field F13 = Field::prime(13);

std::vector<Scalar> seq(const Field& f, std::vector<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(f, x);
    return out;
}

ParameterArray krawtchouk_13() {
    return ParameterArray(seq(F13, {7, 11, 2, 6}), seq(F13, {10, 12, 1, 3}), seq(F13, {3, 4, 3}),
                          seq(F13, {1, 10, 1}));
}

PrimaryData krawtchouk_13_pd() {
    return make_primary_ii(3, Scalar(F13, 0), Scalar(F13, 4), Scalar(F13, 0), Scalar(F13, 0),
                           Scalar(F13, 2), Scalar(F13, 0), Scalar(F13, 5));
}

PrimaryData bip_dual_q_pd() {
    return make_primary_i(3, Scalar(Q, 2), Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, -1),
                          Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 0));
}

PrimaryData non_reinforced_17_pd() {
    Field f = Field::prime(17);
    return make_primary_i(3, Scalar(f, 2), Scalar(f, 0), Scalar(f, 1), Scalar(f, 3), Scalar(f, 0),
                          Scalar(f, 0), Scalar(f, 1), Scalar(f, 0));
}

} // namespace

TEST_CASE("classification of the GF(13) Krawtchouk pair") {
    NearBipartiteClassification cls = classify_near_bipartite(krawtchouk_13());
    CHECK(cls.near_bipartite);
    REQUIRE(cls.reasons.size() == 1);
    CHECK(cls.reasons[0] == NbReason::Krawtchouk);
    REQUIRE(cls.contraction);
    CHECK(bipartite_status(*cls.contraction).bipartite);
    // the contraction is Krawtchouk with mu'^2 = 4 (mu' = +-2)
    PrimaryData cpd = primary_data_from_parameter_array(*cls.contraction);
    CHECK(cpd.mu * cpd.mu == Scalar(F13, 4));
    CHECK(special_type_flags(cpd).krawtchouk);
    REQUIRE(cls.contraction_tdd);
    CHECK(cls.contraction_tdd->x == seq(F13, {3, 4, 3}));
    CHECK(cls.matrix_route == BipartiteContractionResult::Status::Contracted);
}

TEST_CASE("classification of an essentially bipartite shift") {
    ParameterArray base = parameter_array_from_primary_data(
        make_primary_ii(3, Scalar(Q, 0), Scalar(Q, 2), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 2),
                        Scalar(Q, 0), Scalar(Q, 0)));
    ParameterArray shifted =
        affine_transform(base, Scalar(Q, 1), Scalar(Q, 5), Scalar(Q, 1), Scalar(Q, 0));
    NearBipartiteClassification cls = classify_near_bipartite(shifted);
    CHECK(cls.near_bipartite);
    bool has_ess = false;
    for (auto r : cls.reasons) has_ess |= r == NbReason::EssentiallyBipartite;
    CHECK(has_ess);
    REQUIRE(cls.contraction);
    CHECK(*cls.contraction == base); // subtracting alpha = 5 recovers the bipartite array
}

TEST_CASE("classification of the non-reinforced pair") {
    ParameterArray p = parameter_array_from_primary_data(non_reinforced_17_pd());
    NearBipartiteClassification cls = classify_near_bipartite(p);
    CHECK_FALSE(cls.near_bipartite);
    CHECK(cls.reasons.empty());
    CHECK(cls.matrix_route == BipartiteContractionResult::Status::RepeatedEigenvalue);
}

TEST_CASE("typed contraction of a dual q-Krawtchouk expansion") {
    auto exp = expand_dual_q_krawtchouk(bip_dual_q_pd(), Scalar(Q, 0), Scalar(Q, 2));
    REQUIRE(exp.ok());
    CHECK(exp.pd->h == Scalar::parse(Q, "-1/2"));
    TypedContractionResult contr = contract_dual_q_krawtchouk(*exp.pd);
    REQUIRE(contr.ok());
    // mu' h' = mu h = -1 and mu' + h' = 0, so mu' = +-1
    CHECK(contr.pd->mu * contr.pd->mu == Scalar(Q, 1));
    CHECK(contr.pd->h == -contr.pd->mu);

    // round trip: expanding the contraction with the original (delta, mu)
    auto back = expand_dual_q_krawtchouk(*contr.pd, Scalar(Q, 0), Scalar(Q, 2));
    REQUIRE(back.ok());
    CHECK(*back.pd == *exp.pd);
}

TEST_CASE("typed contraction refuses non-reinforced input") {
    TypedContractionResult r = contract_dual_q_krawtchouk(non_reinforced_17_pd());
    CHECK(r.status == TypedContractionResult::Status::NotReinforced);
    CHECK_FALSE(r.array.has_value());
    CHECK_THROWS_AS(contract_dual_q_krawtchouk(krawtchouk_13_pd()), NotDualQKrawtchouk);
}

TEST_CASE("typed contraction of a bipartite pair is itself up to the sign choice") {
    TypedContractionResult r = contract_dual_q_krawtchouk(bip_dual_q_pd());
    REQUIRE(r.ok());
    CHECK(r.pd->mu * r.pd->mu == Scalar(Q, 1));
    ParameterArray orig = parameter_array_from_primary_data(bip_dual_q_pd());
    bool same = false;
    for (const auto& rel : parameter_array_relatives(*r.array)) same |= rel == orig;
    CHECK(same);
}

TEST_CASE("Krawtchouk contraction over GF(13)") {
    TypedContractionResult r = contract_krawtchouk(krawtchouk_13_pd());
    REQUIRE(r.ok());
    // mu'^2 = mu^2 - 4 tau^2 / mu*^2 = 16 - 100/4 = 4 mod 13
    CHECK(r.pd->mu * r.pd->mu == Scalar(F13, 4));
    TddSequence t = tdd_from_parameter_array(*r.array);
    CHECK(t.x == seq(F13, {3, 4, 3}));
    for (auto& v : t.a) CHECK(v.is_zero());
    CHECK_THROWS_AS(contract_krawtchouk(bip_dual_q_pd()), NotKrawtchouk);
}

TEST_CASE("Krawtchouk contraction with tau = 0 is the identity on arrays") {
    PrimaryData b = make_primary_ii(3, Scalar(F13, 0), Scalar(F13, 2), Scalar(F13, 0),
                                    Scalar(F13, 0), Scalar(F13, 2), Scalar(F13, 0),
                                    Scalar(F13, 0));
    TypedContractionResult r = contract_krawtchouk(b);
    REQUIRE(r.ok());
    CHECK(r.pd->mu * r.pd->mu == b.mu * b.mu);
    ParameterArray orig = parameter_array_from_primary_data(b);
    bool same = false;
    for (const auto& rel : parameter_array_relatives(*r.array)) same |= rel == orig;
    CHECK(same);
}

TEST_CASE("Krawtchouk contraction falls back to the sequence level over Q") {
    // mu = 2, mu* = 2, tau = 1: mu'^2 = 3, irrational
    PrimaryData pd = make_primary_ii(3, Scalar(Q, 0), Scalar(Q, 2), Scalar(Q, 0), Scalar(Q, 0),
                                     Scalar(Q, 2), Scalar(Q, 0), Scalar(Q, 1));
    TypedContractionResult r = contract_krawtchouk(pd);
    CHECK(r.status == TypedContractionResult::Status::MuPrimeNotInField);
    REQUIRE(r.tdd_fallback);
    TddSequence t = tdd_from_parameter_array(parameter_array_from_primary_data(pd));
    CHECK(r.tdd_fallback->x == t.x);
    for (auto& v : r.tdd_fallback->a) CHECK(v.is_zero());

    // the classifier reports the same situation without failing
    NearBipartiteClassification cls =
        classify_near_bipartite(parameter_array_from_primary_data(pd));
    CHECK(cls.near_bipartite);
    CHECK(cls.mu_prime_not_in_field);
    CHECK_FALSE(cls.contraction.has_value());
    CHECK(cls.matrix_route == BipartiteContractionResult::Status::SpectrumNotInField);
}

TEST_CASE("structure matrices") {
    ExactMatrix k = structure_matrix_k(Q, 3, Scalar(Q, 2));
    CHECK(k == ExactMatrix::diagonal({Scalar::parse(Q, "1/8"), Scalar::parse(Q, "1/2"),
                                      Scalar(Q, 2), Scalar(Q, 8)}));
    ExactMatrix h = structure_matrix_h(Q, 3);
    CHECK(h == ExactMatrix::diagonal(seq(Q, {-3, -1, 1, 3})));
}

TEST_CASE("dual q-Krawtchouk expansion matrix form") {
    auto exp = expand_dual_q_krawtchouk(bip_dual_q_pd(), Scalar(Q, 0), Scalar(Q, 2));
    REQUIRE(exp.ok());
    // A = B + (mu + h) K + delta I with mu + h = 3/2 (mu* = 0 branch)
    MatrixPair base = realize_matrices(
        tdd_from_parameter_array(parameter_array_from_primary_data(bip_dual_q_pd())));
    ExactMatrix expect =
        base.a + structure_matrix_k(Q, 3, Scalar(Q, 2)).scaled(Scalar::parse(Q, "3/2"));
    CHECK(exp.matrices->a == expect);
    // diagonal entries: (3/2) * (1/8, 1/2, 2, 8)
    CHECK(exp.matrices->a.at(0, 0) == Scalar::parse(Q, "3/16"));
    CHECK(exp.matrices->a.at(3, 3) == Scalar(Q, 12));
    CHECK(verify_leonard_pair(*exp.matrices).ok());
    // and the realized pair of the expansion array is this very pair
    CHECK(realize_matrices(tdd_from_parameter_array(*exp.array)).a == exp.matrices->a);
}

TEST_CASE("zero expansion returns the base pair") {
    auto exp = expand_dual_q_krawtchouk(bip_dual_q_pd(), Scalar(Q, 0), Scalar(Q, 1));
    REQUIRE(exp.ok());
    CHECK(exp.pd->h == Scalar(Q, -1)); // mu + h = 0
    MatrixPair base = realize_matrices(
        tdd_from_parameter_array(parameter_array_from_primary_data(bip_dual_q_pd())));
    CHECK(exp.matrices->a == base.a);
}

TEST_CASE("forbidden mu over GF(13)") {
    Field f = F13;
    // base: bipartite dual q-Krawtchouk with q = 2, mu' = 1
    PrimaryData b = make_primary_i(3, Scalar(f, 2), Scalar(f, 0), Scalar(f, 1), Scalar(f, -1),
                                   Scalar(f, 0), Scalar(f, 0), Scalar(f, 1), Scalar(f, 0));
    auto exp = expand_dual_q_krawtchouk(b, Scalar(f, 0), Scalar(f, 10)); // 10 = 5 * 2, 5^2 = -1
    CHECK(exp.status == DualQExpansionResult::Status::MuForbidden);
    CHECK(exp.forbidden_index == 1);
    auto zero = expand_dual_q_krawtchouk(b, Scalar(f, 0), Scalar(f, 0));
    CHECK(zero.status == DualQExpansionResult::Status::MuZero);
}

TEST_CASE("Krawtchouk expansions over GF(13)") {
    PrimaryData b = make_primary_ii(3, Scalar(F13, 0), Scalar(F13, 2), Scalar(F13, 0),
                                    Scalar(F13, 0), Scalar(F13, 2), Scalar(F13, 0),
                                    Scalar(F13, 0));
    KrawtchoukExpansionResult r = expand_krawtchouk(b, Scalar(F13, 0), Scalar(F13, 4));
    REQUIRE(r.ok());
    REQUIRE(r.items.size() == 2);
    CHECK(r.items[0].tau == Scalar(F13, 5));
    CHECK(r.items[1].tau == Scalar(F13, 8));
    // tau = 5 reproduces the sample diagonal (12, 4, 9, 1)
    const auto& first = r.items[0];
    for (int i = 0; i <= 3; ++i)
        CHECK(first.matrices.a.at(i, i) == Scalar(F13, 2 * i - 3) * first.tau / Scalar(F13, 2));
    CHECK(first.pd == krawtchouk_13_pd());
    CHECK(verify_leonard_pair(first.matrices).ok());

    // mu = mu': tau = 0, A = B
    KrawtchoukExpansionResult same = expand_krawtchouk(b, Scalar(F13, 0), Scalar(F13, 2));
    REQUIRE(same.ok());
    REQUIRE(same.items.size() == 1);
    CHECK(same.items[0].tau.is_zero());

    // mu = 5: tau^2 = 8, a non-residue
    KrawtchoukExpansionResult none = expand_krawtchouk(b, Scalar(F13, 0), Scalar(F13, 5));
    CHECK(none.status == KrawtchoukExpansionResult::Status::NoTauInField);
}

TEST_CASE("contraction and expansion round trip on random Krawtchouk samples") {
    Rng rng(23);
    int done = 0;
    while (done < 20) {
        PrimaryData b = sample_bipartite_krawtchouk(3, F13, rng);
        Scalar delta = random_scalar(rng, F13);
        Scalar mu = random_nonzero_scalar(rng, F13);
        KrawtchoukExpansionResult r = expand_krawtchouk(b, delta, mu);
        if (!r.ok()) continue;
        ++done;
        for (const auto& item : r.items) {
            // matrix route brings A back to B
            BipartiteContractionResult back = bipartite_contraction(item.matrices);
            REQUIRE(back.ok());
            MatrixPair base = realize_matrices(
                tdd_from_parameter_array(parameter_array_from_primary_data(b)));
            CHECK(back.pair->a == base.a);
            // typed route recovers mu'^2
            TypedContractionResult tc = contract_krawtchouk(item.pd);
            REQUIRE(tc.ok());
            CHECK(tc.pd->mu * tc.pd->mu == b.mu * b.mu);
            // re-expanding the contraction with the original (delta, mu)
            // brings the original array back as one of the tau solutions
            KrawtchoukExpansionResult again = expand_krawtchouk(*tc.pd, delta, mu);
            REQUIRE(again.ok());
            bool recovered = false;
            for (const auto& it2 : again.items) recovered |= it2.array == item.array;
            CHECK(recovered);
        }
    }
}

TEST_CASE("eigenvalues of the contracted matrix match the closed form") {
    // char_poly(A - F) = prod (lambda - theta'_i) with theta'_i = mu' c_i,
    // c_i = q^(2i-d) - q^(d-2i); computed via mu'^2 through the +- pairing.
    Rng rng(24);
    for (int k = 0; k < 10; ++k) {
        auto pds = sample_primary_family(SampleFamily::DualQKrawtchouk, 3, Q, 1, 300 + k);
        const PrimaryData& pd = pds[0];
        MatrixPair pair =
            realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(pd)));
        FlatPartResult fl = flat_part(pair);
        REQUIRE(fl.ok());
        Poly actual = char_poly(pair.a - fl.part->flat);

        const Scalar& q = *pd.q;
        Scalar mu_prime_sq = -(pd.mu * pd.h);
        Poly expect{Scalar(Q, 1)};
        for (int i = 0; 2 * i < pd.d; ++i) {
            Scalar c = pow(q, 2 * i - pd.d) - pow(q, pd.d - 2 * i);
            // (lambda - mu' c)(lambda + mu' c) = lambda^2 - mu'^2 c^2
            expect = poly_mul(expect, Poly{-(mu_prime_sq * c * c), Scalar(Q, 0), Scalar(Q, 1)});
        }
        if (pd.d % 2 == 0) expect = poly_mul(expect, Poly{Scalar(Q, 0), Scalar(Q, 1)});
        CHECK(poly_equal(actual, expect));
    }
}

TEST_CASE("theta' distinctness tracks the reinforced scan") {
    // reinforced sample: distinct roots; non-reinforced witness: repeated
    Field f17 = Field::prime(17);
    PrimaryData bad = non_reinforced_17_pd();
    MatrixPair pair =
        realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(bad)));
    FlatPartResult fl = flat_part(pair);
    Poly cp = char_poly(pair.a - fl.part->flat);
    CHECK(poly_gcd(cp, poly_derivative(cp)).size() > 1);

    auto good = sample_primary_family(SampleFamily::DualQKrawtchouk, 3, Field::prime(13), 1, 7);
    MatrixPair gpair =
        realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(good[0])));
    FlatPartResult gfl = flat_part(gpair);
    Poly gcp = char_poly(gpair.a - gfl.part->flat);
    CHECK(poly_gcd(gcp, poly_derivative(gcp)).size() == 1);
}

TEST_CASE("Krawtchouk pairs are always near-bipartite") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pds = sample_primary_family(SampleFamily::Krawtchouk, 3, F13, 1, 400 + seed);
        NearBipartiteClassification cls =
            classify_near_bipartite(parameter_array_from_primary_data(pds[0]));
        CHECK(cls.near_bipartite);
        // in-field contraction array, or a sequence-level fallback
        CHECK((cls.contraction.has_value() || cls.mu_prime_not_in_field));
        REQUIRE(cls.contraction_tdd);
    }
}

TEST_CASE("type preservation under contraction") {
    NearBipartiteClassification cls = classify_near_bipartite(krawtchouk_13());
    REQUIRE(cls.contraction);
    CHECK(fundamental_type(*cls.contraction).tag == fundamental_type(krawtchouk_13()).tag);

    auto exp = expand_dual_q_krawtchouk(bip_dual_q_pd(), Scalar(Q, 0), Scalar(Q, 2));
    NearBipartiteClassification cls2 = classify_near_bipartite(*exp.array);
    REQUIRE(cls2.contraction);
    CHECK(fundamental_type(*cls2.contraction).tag == TypeTag::I);
}

TEST_CASE("classification when q lies outside the field") {
    auto sc = [&](const char* s) { return Scalar::parse(Q, s); };
    // theta_i = 3*2^(i-2) + 2^(1-i) and theta*_i = 2^(3-i): the generating q
    // is sqrt(2), outside Q, yet every array entry is rational
    ParameterArray p({sc("11/4"), sc("5/2"), sc("7/2"), sc("25/4")},
                     {sc("8"), sc("4"), sc("2"), sc("1")},
                     {sc("-7"), sc("-9/2"), sc("-7/4")},
                     {sc("-21"), sc("-27/2"), sc("-21/4")});
    ValidationReport rep = validate_parameter_array(p);
    REQUIRE(rep.valid);
    CHECK(*rep.beta == Scalar::parse(Q, "5/2"));
    CHECK(fundamental_type(p).tag == TypeTag::I);
    CHECK(q_from_beta(*rep.beta).empty());
    CHECK_THROWS_AS(primary_data_from_parameter_array(p), NoQInField);
    CHECK(dual_q_krawtchouk_by_ratios(p));
    CHECK(reinforced_by_ratio(p));

    NearBipartiteClassification cls = classify_near_bipartite(p);
    CHECK(cls.near_bipartite);
    CHECK(cls.no_q_in_field);
    CHECK(cls.mu_prime_not_in_field); // contraction eigenvalues need sqrt(-3/2)
    CHECK_FALSE(cls.contraction.has_value());
    REQUIRE(cls.contraction_tdd);
    CHECK(cls.contraction_tdd->x == tdd_from_parameter_array(p).x);
    CHECK(cls.matrix_route == BipartiteContractionResult::Status::SpectrumNotInField);
}

TEST_CASE("classification rejects small diameters and invalid arrays") {
    ParameterArray bad = krawtchouk_13();
    bad.phi1[0] = Scalar(F13, 0);
    CHECK_THROWS_AS(classify_near_bipartite(bad), std::invalid_argument);
}
