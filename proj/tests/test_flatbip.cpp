#include <doctest.h>

#include "leonard/flatbip.hpp"
#include "leonard/primary.hpp"
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

ParameterArray bip_krawtchouk_q() {
    return ParameterArray(seq(Q, {-3, -1, 1, 3}), seq(Q, {-3, -1, 1, 3}), seq(Q, {-6, -8, -6}),
                          seq(Q, {6, 8, 6}));
}

ParameterArray krawtchouk_13() {
    return ParameterArray(seq(F13, {7, 11, 2, 6}), seq(F13, {10, 12, 1, 3}), seq(F13, {3, 4, 3}),
                          seq(F13, {1, 10, 1}));
}

// non-reinforced dual q-Krawtchouk witness over GF(17)
ParameterArray non_reinforced_17() {
    Field f = Field::prime(17);
    PrimaryData pd = make_primary_i(3, Scalar(f, 2), Scalar(f, 0), Scalar(f, 1), Scalar(f, 3),
                                    Scalar(f, 0), Scalar(f, 0), Scalar(f, 1), Scalar(f, 0));
    return parameter_array_from_primary_data(pd);
}

} // namespace

TEST_CASE("flat part of the Krawtchouk pair over GF(13)") {
    MatrixPair pair = realize_matrices(tdd_from_parameter_array(krawtchouk_13()));
    FlatPartResult fl = flat_part(pair);
    REQUIRE(fl.ok());
    CHECK(fl.part->flat == ExactMatrix::diagonal(seq(F13, {12, 4, 9, 1})));
    CHECK_FALSE(fl.part->a_common.has_value());
}

TEST_CASE("flat part of a bipartite pair vanishes") {
    MatrixPair pair = realize_matrices(tdd_from_parameter_array(bip_krawtchouk_q()));
    FlatPartResult fl = flat_part(pair);
    REQUIRE(fl.ok());
    CHECK(fl.part->flat.is_zero());
    REQUIRE(fl.part->a_common);
    CHECK(fl.part->a_common->is_zero());
}

TEST_CASE("flat part is affine-covariant") {
    TddSequence t = tdd_from_parameter_array(bip_krawtchouk_q());
    Scalar one(Q, 1), five(Q, 5);
    MatrixPair shifted = realize_matrices(tdd_affine(t, one, five, one, Scalar(Q, 0)));
    FlatPartResult fl = flat_part(shifted);
    REQUIRE(fl.ok());
    CHECK(fl.part->flat == ExactMatrix::identity(Q, 4).scaled(five));
    REQUIRE(fl.part->a_common);
    CHECK(*fl.part->a_common == five);
}

TEST_CASE("bipartite status agrees between the two routes") {
    auto check_both = [](const ParameterArray& p, bool bip, bool ess) {
        BipartiteStatus from_array = bipartite_status(p);
        BipartiteStatus from_tdd = bipartite_status(tdd_from_parameter_array(p));
        CHECK(from_array.bipartite == bip);
        CHECK(from_array.essentially_bipartite == ess);
        CHECK(from_tdd.bipartite == bip);
        CHECK(from_tdd.essentially_bipartite == ess);
        CHECK(from_array.alpha == from_tdd.alpha);
    };
    check_both(bip_krawtchouk_q(), true, true);
    check_both(krawtchouk_13(), false, false);

    ParameterArray shifted =
        affine_transform(bip_krawtchouk_q(), Scalar(Q, 1), Scalar(Q, 5), Scalar(Q, 1), Scalar(Q, 0));
    BipartiteStatus st = bipartite_status(shifted);
    CHECK_FALSE(st.bipartite);
    CHECK(st.essentially_bipartite);
    REQUIRE(st.alpha);
    CHECK(*st.alpha == Scalar(Q, 5));
    // theta_i + theta_{d-i} = 2 alpha
    for (int i = 0; i <= 3; ++i)
        CHECK(shifted.theta[i] + shifted.theta[3 - i] == Scalar(Q, 2) * *st.alpha);
    CHECK(st.near_bipartite.value_or(false));
}

TEST_CASE("bipartite contraction of the GF(13) Krawtchouk pair") {
    MatrixPair pair = realize_matrices(tdd_from_parameter_array(krawtchouk_13()));
    BipartiteContractionResult r = bipartite_contraction(pair);
    REQUIRE(r.ok());
    MatrixPair expect =
        realize_matrices(TddSequence(seq(F13, {0, 0, 0, 0}), seq(F13, {3, 4, 3}),
                                     seq(F13, {10, 12, 1, 3})));
    CHECK(r.pair->a == expect.a);
    CHECK(r.pair->astar == expect.astar);
    CHECK(bipartite_status(*r.array).bipartite);
    // contraction of a normalized pair stays normalized: subdiagonal 1, zero diagonal
    for (int i = 1; i <= 3; ++i) CHECK(r.pair->a.at(i, i - 1) == Scalar(F13, 1));
    for (int i = 0; i <= 3; ++i) CHECK(r.pair->a.at(i, i).is_zero());
}

TEST_CASE("bipartite contraction of a bipartite pair is itself") {
    MatrixPair pair = realize_matrices(tdd_from_parameter_array(bip_krawtchouk_q()));
    BipartiteContractionResult r = bipartite_contraction(pair);
    REQUIRE(r.ok());
    CHECK(r.pair->a == pair.a);
}

TEST_CASE("non-reinforced contraction fails with a repeated root") {
    Field f = Field::prime(17);
    MatrixPair pair = realize_matrices(tdd_from_parameter_array(non_reinforced_17()));
    BipartiteContractionResult r = bipartite_contraction(pair);
    CHECK(r.status == BipartiteContractionResult::Status::RepeatedEigenvalue);
    // the oracle behind the status: gcd(f, f') is nontrivial
    FlatPartResult fl = flat_part(pair);
    Poly cp = char_poly(pair.a - fl.part->flat);
    CHECK(poly_gcd(cp, poly_derivative(cp)).size() > 1);
}

TEST_CASE("commutator identity [A, A*] = [A-F, A*]") {
    for (const ParameterArray& p : {bip_krawtchouk_q(), krawtchouk_13()}) {
        MatrixPair pair = realize_matrices(tdd_from_parameter_array(p));
        FlatPartResult fl = flat_part(pair);
        REQUIRE(fl.ok());
        CHECK(commutator(pair.a, pair.astar) ==
              commutator(pair.a - fl.part->flat, pair.astar));
    }
}

TEST_CASE("contraction is affine-covariant") {
    MatrixPair pair = realize_matrices(tdd_from_parameter_array(krawtchouk_13()));
    Scalar xi(F13, 3), zeta(F13, 4), xis(F13, 5), zetas(F13, 6);
    ExactMatrix id = ExactMatrix::identity(F13, 4);
    MatrixPair moved(pair.a.scaled(xi) + id.scaled(zeta),
                     pair.astar.scaled(xis) + id.scaled(zetas));
    BipartiteContractionResult r0 = bipartite_contraction(pair);
    BipartiteContractionResult r1 = bipartite_contraction(moved);
    REQUIRE(r0.ok());
    REQUIRE(r1.ok());
    CHECK(r1.pair->a == r0.pair->a.scaled(xi));
    CHECK(r1.pair->astar == moved.astar);
}

TEST_CASE("contraction condition") {
    ParameterArray p = krawtchouk_13();
    BipartiteContractionResult r =
        bipartite_contraction(realize_matrices(tdd_from_parameter_array(p)));
    REQUIRE(r.ok());
    ParameterArray b = [&] {
        for (const ParameterArray& cand : parameter_array_relatives(*r.array))
            if (cand.theta_star == p.theta_star) return cand;
        throw std::logic_error("no matching relative");
    }();
    CHECK(contraction_condition(p, b));
    CHECK(contraction_condition(b, b));

    // breaking the x-scale on one side kills the products
    ParameterArray scaled = affine_transform(p, Scalar(F13, 2), Scalar(F13, 0), Scalar(F13, 1),
                                             Scalar(F13, 0));
    CHECK_FALSE(contraction_condition(scaled, b));

    ParameterArray other_ths = parameter_array_relatives(p)[1];
    CHECK_THROWS_AS(contraction_condition(other_ths, b), ThetaStarMismatch);
    CHECK_THROWS_AS(contraction_condition(p, p), std::invalid_argument); // p not bipartite
}

TEST_CASE("contraction condition tracks equality of x sequences") {
    Rng rng(8);
    PrimaryData bpd = sample_bipartite_krawtchouk(3, F13, rng);
    ParameterArray b = parameter_array_from_primary_data(bpd);
    TddSequence tb = tdd_from_parameter_array(b);
    for (int k = 0; k < 25; ++k) {
        PrimaryData pd = sample_generic_primary(PrimaryType::II, 3, F13, rng);
        // align the dual block so the arrays share theta*
        pd.delta_star = bpd.delta_star;
        pd.mu_star = bpd.mu_star;
        pd.h_star = bpd.h_star;
        if (!primary_data_violations(pd).empty()) continue;
        ParameterArray p = parameter_array_from_primary_data(pd);
        REQUIRE(p.theta_star == b.theta_star);
        TddSequence tp = tdd_from_parameter_array(p);
        CHECK(contraction_condition(p, b) == (tp.x == tb.x));
    }
}

TEST_CASE("diameter-one classification examples") {
    Scalar z(Q, 0), one(Q, 1);
    ClassificationD1 c = leonard_d1(z, z, one, z, one);
    CHECK(c.leonard);
    CHECK(c.bipartite);
    CHECK(c.near_bipartite);

    // irrational eigenvalues over Q, fine over GF(7)
    ClassificationD1 cq = leonard_d1(Scalar(Q, 3), one, one, z, one);
    CHECK_FALSE(cq.leonard);
    CHECK_FALSE(cq.split_in_field);
    CHECK(leonard_d1(Scalar(Q, 3), one, one, z, one, true).leonard); // closed-field form
    Field f7 = Field::prime(7);
    CHECK(leonard_d1(Scalar(f7, 3), Scalar(f7, 1), Scalar(f7, 1), Scalar(f7, 0), Scalar(f7, 1))
              .leonard);

    // (a0 - a1)^2 + 4 x1 = 0 boundary
    ClassificationD1 cb = leonard_d1(one, -one, -one, z, one);
    CHECK_FALSE(cb.leonard);
    CHECK_FALSE(leonard_d1(one, -one, -one, z, one, true).leonard);
}

TEST_CASE("diameter-two classification examples") {
    std::array<Scalar, 3> ths{Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 2)};
    std::array<Scalar, 2> x{Scalar(Q, 1), Scalar(Q, 1)};
    Scalar z(Q, 0), one(Q, 1);

    // zero diagonal: the displayed conditions hold (bipartite over the closure)
    ClassificationD2 c0 = leonard_d2({z, z, z}, x, ths, true);
    CHECK(c0.leonard);
    CHECK(c0.bipartite);
    CHECK(c0.contraction_conditions_hold);
    // over Q itself the eigenvalues are irrational
    ClassificationD2 c0q = leonard_d2({z, z, z}, x, ths);
    CHECK_FALSE(c0q.leonard);
    CHECK_FALSE(c0q.split_in_field);

    // constant diagonal c=1: (a0-a1)^2 + 4(x1+x2) = 8 != 0, a valid expansion
    ClassificationD2 c1 = leonard_d2({one, one, one}, x, ths, true);
    CHECK(c1.leonard);
    CHECK(c1.contraction_leonard);
    REQUIRE(c1.expansion_of_shared_b);
    CHECK(*c1.expansion_of_shared_b);

    // a = (1, 0, 2): the weighted-sum condition fails, so not an expansion
    ClassificationD2 c2 = leonard_d2({one, z, Scalar(Q, 2)}, x, ths, true);
    REQUIRE(c2.expansion_of_shared_b);
    CHECK_FALSE(*c2.expansion_of_shared_b);
    CHECK_FALSE(c2.leonard);
}

TEST_CASE("diameter-two flags agree with the matrix oracle on spot checks") {
    Field f = Field::prime(7);
    Rng rng(31);
    int checked = 0;
    while (checked < 60) {
        std::array<Scalar, 3> a{random_scalar(rng, f), random_scalar(rng, f),
                                random_scalar(rng, f)};
        std::array<Scalar, 2> x{random_nonzero_scalar(rng, f), random_nonzero_scalar(rng, f)};
        std::array<Scalar, 3> ths{random_scalar(rng, f), random_scalar(rng, f),
                                  random_scalar(rng, f)};
        if (ths[0] == ths[1] || ths[0] == ths[2] || ths[1] == ths[2]) continue;
        ++checked;
        ClassificationD2 pred = leonard_d2(a, x, ths);
        MatrixPair pair = realize_matrices(
            TddSequence({a[0], a[1], a[2]}, {x[0], x[1]}, {ths[0], ths[1], ths[2]}));
        CHECK(pred.leonard == verify_leonard_pair(pair).ok());
    }
}
