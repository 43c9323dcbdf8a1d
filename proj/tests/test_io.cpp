#include <doctest.h>

#include "leonard/io.hpp"
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

template <typename T>
void check_round_trip(const T& value) {
    Document doc = make_document(value);
    std::string text = render_document(doc);
    Document back = parse_document(text);
    CHECK(back.kind() == doc.kind());
    CHECK(std::get<T>(back.payload) == value);
    // canonical text is a fixed point
    CHECK(render_document(back) == text);
}

} // namespace

TEST_CASE("document round trips for every kind") {
    ParameterArray p(seq(F13, {7, 11, 2, 6}), seq(F13, {10, 12, 1, 3}), seq(F13, {3, 4, 3}),
                     seq(F13, {1, 10, 1}));
    check_round_trip(p);
    TddSequence t = tdd_from_parameter_array(p);
    check_round_trip(t);

    ParameterArray pq(seq(Q, {-3, -1, 1, 3}), seq(Q, {-3, -1, 1, 3}), seq(Q, {-6, -8, -6}),
                      seq(Q, {6, 8, 6}));
    check_round_trip(pq);

    check_round_trip(make_primary_i(3, Scalar(Q, 2), Scalar(Q, 0), Scalar::parse(Q, "1/3"),
                                    Scalar(Q, -1), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 1),
                                    Scalar(Q, 0)));
    check_round_trip(make_primary_ii(3, Scalar(F13, 0), Scalar(F13, 4), Scalar(F13, 0),
                                     Scalar(F13, 0), Scalar(F13, 2), Scalar(F13, 0),
                                     Scalar(F13, 5)));
    check_round_trip(make_primary_iiiplus(4, Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 2),
                                          Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 2),
                                          Scalar(Q, 0)));
}

TEST_CASE("matrix pair documents") {
    TddSequence t(seq(Q, {0, 0, 0, 0}), seq(Q, {3, 4, 3}), seq(Q, {-3, -1, 1, 3}));
    MatrixPair pair = realize_matrices(t);
    Document doc = make_document(pair);
    Document back = parse_document(render_document(doc));
    const auto& got = std::get<MatrixPair>(back.payload);
    CHECK(got.a == pair.a);
    CHECK(got.astar == pair.astar);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_document("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_document("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_document(R"({"field":{"kind":"rationals"},"d":0,"kind":"tdd",
        "payload":{"a":["0"],"x":[],"theta_star":["0"]}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_document(R"({"field":{"kind":"prime","p":4},"d":1,"kind":"tdd",
        "payload":{"a":["0","0"],"x":["1"],"theta_star":["0","1"]}})"),
                    std::invalid_argument);
    // wrong payload lengths
    CHECK_THROWS_AS(parse_document(R"({"field":{"kind":"rationals"},"d":2,"kind":"tdd",
        "payload":{"a":["0","0"],"x":["1"],"theta_star":["0","1"]}})"),
                    std::invalid_argument);
    // scalars must be exact strings, never floats
    CHECK_THROWS_AS(parse_document(R"({"field":{"kind":"rationals"},"d":1,"kind":"tdd",
        "payload":{"a":[0.5,"0"],"x":["1"],"theta_star":["0","1"]}})"),
                    std::invalid_argument);
}

TEST_CASE("sampling is deterministic and always valid") {
    auto a = sample_primary_family(SampleFamily::DualQKrawtchouk, 3, F13, 10, 12345);
    auto b = sample_primary_family(SampleFamily::DualQKrawtchouk, 3, F13, 10, 12345);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(render_document(make_document(a[i])) == render_document(make_document(b[i])));
    }
    auto c = sample_primary_family(SampleFamily::DualQKrawtchouk, 3, F13, 10, 54321);
    CHECK(a != c);
}

TEST_CASE("samples satisfy their family flags") {
    struct Case {
        SampleFamily fam;
        int d;
        Field f;
    };
    for (const Case& cs : {Case{SampleFamily::Krawtchouk, 3, F13},
                           Case{SampleFamily::Krawtchouk, 4, Q},
                           Case{SampleFamily::DualQKrawtchouk, 3, Q},
                           Case{SampleFamily::EssentiallyBipartiteI, 3, F13},
                           Case{SampleFamily::EssentiallyBipartiteII, 5, Q},
                           Case{SampleFamily::EssentiallyBipartiteIIIPlus, 4, F13}}) {
        auto samples = sample_primary_family(cs.fam, cs.d, cs.f, 8, 777);
        for (const auto& pd : samples) {
            CHECK(primary_data_violations(pd).empty());
            ParameterArray p = parameter_array_from_primary_data(pd);
            CHECK(validate_parameter_array(p).valid);
            SpecialTypeFlags fl = special_type_flags(pd);
            switch (cs.fam) {
                case SampleFamily::Krawtchouk: CHECK(fl.krawtchouk); break;
                case SampleFamily::DualQKrawtchouk: CHECK(fl.dual_q_krawtchouk); break;
                default: CHECK(fl.essentially_bipartite); break;
            }
        }
    }
}

TEST_CASE("family names round trip") {
    for (SampleFamily fam : {SampleFamily::Krawtchouk, SampleFamily::DualQKrawtchouk,
                             SampleFamily::EssentiallyBipartiteI,
                             SampleFamily::EssentiallyBipartiteII,
                             SampleFamily::EssentiallyBipartiteIIIPlus})
        CHECK(sample_family_from_name(sample_family_name(fam)) == fam);
    CHECK_THROWS_AS(sample_family_from_name("nope"), std::invalid_argument);
}
