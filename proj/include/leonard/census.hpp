#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leonard/flatbip.hpp"

namespace leonard {

struct CensusResult {
    std::uint64_t tuples = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> examples; // first few mismatching tuples, if any
};

/// Every (a0, a1, x1 != 0, ths0 != ths1) over GF(p): the diameter-one
/// predicate against the brute-force verifier on the realized matrices,
/// plus the contraction flag against the verifier on (A - diag(a), A*).
CensusResult census_d1(std::uint32_t p);

/// Every (a, x != 0, theta* distinct) over GF(p): the diameter-two predicate
/// against the verifier, and on Leonard tuples the flat part, bipartite,
/// contraction and expansion flags against their matrix-route counterparts.
CensusResult census_d2(std::uint32_t p);

} // namespace leonard
