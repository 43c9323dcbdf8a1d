#pragma once

#include <cstdint>

#include "leonard/primary.hpp"

namespace leonard {

/// splitmix64: fixed-width arithmetic only, so streams are bit-identical
/// across platforms for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n); // uniform-enough for desk-scale draws
    long integer_in(long lo, long hi);    // inclusive

  private:
    std::uint64_t state_;
};

/// Uniform residue over GF(p); small integer in [-12, 12] over the rationals.
Scalar random_scalar(Rng& rng, const Field& f);
Scalar random_nonzero_scalar(Rng& rng, const Field& f);

enum class SampleFamily {
    Krawtchouk,
    DualQKrawtchouk,
    EssentiallyBipartiteI,
    EssentiallyBipartiteII,
    EssentiallyBipartiteIIIPlus,
};

SampleFamily sample_family_from_name(const std::string& name);
std::string sample_family_name(SampleFamily fam);

/// Rejection sampling of admissible primary data with the family's structural
/// zeros pinned; at most 10^4 draws per item before giving up.
std::vector<PrimaryData> sample_primary_family(SampleFamily fam, int d, const Field& f, int count,
                                               std::uint64_t seed,
                                               std::optional<Scalar> q = std::nullopt);

/// Generic admissible primary data of one type (no special-type structure).
PrimaryData sample_generic_primary(PrimaryType type, int d, const Field& f, Rng& rng,
                                   std::optional<Scalar> q = std::nullopt);

/// Bipartite special-type base pairs for the expansion constructions.
PrimaryData sample_bipartite_dual_q(int d, const Field& f, Rng& rng, const Scalar& q);
PrimaryData sample_bipartite_krawtchouk(int d, const Field& f, Rng& rng);

/// A valid parameter array with fundamental constant -2 and odd diameter
/// (the type without a primary-data parametrization), built by running the
/// eigenvalue recurrence from random seeds of the two spectra.
ParameterArray sample_type3minus_array(int d, const Field& f, Rng& rng);

} // namespace leonard
