#include "leonard/census.hpp"

#include <sstream>

namespace leonard {

namespace {

void record(CensusResult& res, const std::string& what) {
    ++res.mismatches;
    if (res.examples.size() < 10) res.examples.push_back(what);
}

} // namespace

CensusResult census_d1(std::uint32_t p) {
    Field f = Field::prime(p);
    CensusResult res;
    long pl = static_cast<long>(p);
    for (long t0 = 0; t0 < pl; ++t0)
        for (long t1 = 0; t1 < pl; ++t1) {
            if (t0 == t1) continue;
            std::vector<Scalar> ths{Scalar(f, t0), Scalar(f, t1)};
            for (long x1 = 1; x1 < pl; ++x1) {
                Scalar x(f, x1);
                // the contraction (B, A*) does not depend on the diagonal
                MatrixPair bpair = realize_matrices(
                    TddSequence({Scalar(f, 0), Scalar(f, 0)}, {x}, ths));
                bool contraction_ok = verify_leonard_pair(bpair).ok();
                for (long a0 = 0; a0 < pl; ++a0)
                    for (long a1 = 0; a1 < pl; ++a1) {
                        ++res.tuples;
                        ClassificationD1 pred =
                            leonard_d1(Scalar(f, a0), Scalar(f, a1), x, ths[0], ths[1]);
                        MatrixPair pair = realize_matrices(
                            TddSequence({Scalar(f, a0), Scalar(f, a1)}, {x}, ths));
                        bool oracle = verify_leonard_pair(pair).ok();
                        std::ostringstream tag;
                        tag << "p=" << p << " a=(" << a0 << "," << a1 << ") x=" << x1
                            << " ths=(" << t0 << "," << t1 << ")";
                        if (pred.leonard != oracle) record(res, "leonard: " + tag.str());
                        if (pred.contraction_leonard != contraction_ok)
                            record(res, "contraction: " + tag.str());
                        if (oracle && pred.near_bipartite != (oracle && contraction_ok))
                            record(res, "near-bipartite: " + tag.str());
                    }
            }
        }
    return res;
}

CensusResult census_d2(std::uint32_t p) {
    Field f = Field::prime(p);
    CensusResult res;
    long pl = static_cast<long>(p);
    std::vector<Scalar> elems;
    for (long v = 0; v < pl; ++v) elems.push_back(Scalar(f, v));
    Scalar zero(f, 0);

    for (long t0 = 0; t0 < pl; ++t0)
        for (long t1 = 0; t1 < pl; ++t1)
            for (long t2 = 0; t2 < pl; ++t2) {
                if (t0 == t1 || t0 == t2 || t1 == t2) continue;
                std::array<Scalar, 3> ths{elems[t0], elems[t1], elems[t2]};
                std::vector<Scalar> ths_vec{ths[0], ths[1], ths[2]};
                for (long x1 = 1; x1 < pl; ++x1)
                    for (long x2 = 1; x2 < pl; ++x2) {
                        std::array<Scalar, 2> x{elems[x1], elems[x2]};
                        MatrixPair bpair = realize_matrices(
                            TddSequence({zero, zero, zero}, {x[0], x[1]}, ths_vec));
                        bool contraction_ok = verify_leonard_pair(bpair).ok();
                        for (long a0 = 0; a0 < pl; ++a0)
                            for (long a1 = 0; a1 < pl; ++a1)
                                for (long a2 = 0; a2 < pl; ++a2) {
                                    ++res.tuples;
                                    std::array<Scalar, 3> a{elems[a0], elems[a1], elems[a2]};
                                    ClassificationD2 pred = leonard_d2(a, x, ths);
                                    MatrixPair pair = realize_matrices(TddSequence(
                                        {a[0], a[1], a[2]}, {x[0], x[1]}, ths_vec));
                                    bool oracle = verify_leonard_pair(pair).ok();
                                    std::ostringstream tag;
                                    tag << "p=" << p << " a=(" << a0 << "," << a1 << "," << a2
                                        << ") x=(" << x1 << "," << x2 << ") ths=(" << t0 << ","
                                        << t1 << "," << t2 << ")";
                                    if (pred.leonard != oracle)
                                        record(res, "leonard: " + tag.str());
                                    if (pred.contraction_leonard != contraction_ok)
                                        record(res, "contraction: " + tag.str());
                                    if (pred.contraction_leonard &&
                                        pred.expansion_of_shared_b.value_or(false) !=
                                            pred.leonard)
                                        record(res, "expansion: " + tag.str());
                                    if (!oracle) continue;
                                    if (pred.near_bipartite.value_or(false) != contraction_ok)
                                        record(res, "near-bipartite: " + tag.str());
                                    FlatPartResult fl = flat_part(pair);
                                    if (!fl.ok() ||
                                        !(fl.part->flat ==
                                          ExactMatrix::diagonal({a[0], a[1], a[2]})))
                                        record(res, "flat-part: " + tag.str());
                                    else if (fl.part->flat.is_zero() != pred.bipartite)
                                        record(res, "bipartite: " + tag.str());
                                }
                    }
            }
    return res;
}

} // namespace leonard
