#include "leonard/sampling.hpp"

namespace leonard {

namespace {
constexpr int kMaxTries = 10000;
}

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

long Rng::integer_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar random_scalar(Rng& rng, const Field& f) {
    if (f.is_prime_field()) return Scalar(f, static_cast<long>(rng.below(f.modulus())));
    return Scalar(f, rng.integer_in(-12, 12));
}

Scalar random_nonzero_scalar(Rng& rng, const Field& f) {
    for (;;) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

SampleFamily sample_family_from_name(const std::string& name) {
    if (name == "krawtchouk") return SampleFamily::Krawtchouk;
    if (name == "dualq") return SampleFamily::DualQKrawtchouk;
    if (name == "essbip-I") return SampleFamily::EssentiallyBipartiteI;
    if (name == "essbip-II") return SampleFamily::EssentiallyBipartiteII;
    if (name == "essbip-III+") return SampleFamily::EssentiallyBipartiteIIIPlus;
    throw std::invalid_argument("unknown family: " + name);
}

std::string sample_family_name(SampleFamily fam) {
    switch (fam) {
        case SampleFamily::Krawtchouk: return "krawtchouk";
        case SampleFamily::DualQKrawtchouk: return "dualq";
        case SampleFamily::EssentiallyBipartiteI: return "essbip-I";
        case SampleFamily::EssentiallyBipartiteII: return "essbip-II";
        case SampleFamily::EssentiallyBipartiteIIIPlus: return "essbip-III+";
    }
    throw std::invalid_argument("unknown family");
}

namespace {

void check_q_usable(const Scalar& q, int d) {
    const Field& f = q.field();
    if (q.is_zero() || pow(q, 4) == Scalar(f, 1))
        throw std::invalid_argument("q must satisfy q != 0 and q^4 != 1");
    for (int i = 1; i <= d; ++i)
        if (pow(q, 2 * i) == Scalar(f, 1))
            throw std::invalid_argument("q^(2i) = 1 at i=" + std::to_string(i) +
                                        "; pick another q or a smaller diameter");
}

template <typename Draw>
PrimaryData draw_until_admissible(Draw&& draw) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
        PrimaryData pd = draw();
        if (primary_data_violations(pd).empty()) return pd;
    }
    throw std::runtime_error("sampler exhausted its retry budget");
}

} // namespace

PrimaryData sample_generic_primary(PrimaryType type, int d, const Field& f, Rng& rng,
                                   std::optional<Scalar> q) {
    Scalar zero(f, 0);
    switch (type) {
        case PrimaryType::I: {
            if (!q) throw std::invalid_argument("type I sampling needs q");
            check_q_usable(*q, d);
            return draw_until_admissible([&] {
                return make_primary_i(d, *q, random_scalar(rng, f), random_scalar(rng, f),
                                      random_scalar(rng, f), random_scalar(rng, f),
                                      random_scalar(rng, f), random_scalar(rng, f),
                                      random_scalar(rng, f));
            });
        }
        case PrimaryType::II:
            return draw_until_admissible([&] {
                return make_primary_ii(d, random_scalar(rng, f), random_scalar(rng, f),
                                       random_scalar(rng, f), random_scalar(rng, f),
                                       random_scalar(rng, f), random_scalar(rng, f),
                                       random_scalar(rng, f));
            });
        case PrimaryType::IIIPlus:
            return draw_until_admissible([&] {
                return make_primary_iiiplus(d, random_scalar(rng, f), random_scalar(rng, f),
                                            random_nonzero_scalar(rng, f), random_scalar(rng, f),
                                            random_scalar(rng, f),
                                            random_nonzero_scalar(rng, f),
                                            random_scalar(rng, f));
            });
    }
    throw std::invalid_argument("unknown primary type");
}

PrimaryData sample_bipartite_dual_q(int d, const Field& f, Rng& rng, const Scalar& q) {
    check_q_usable(q, d);
    Scalar zero(f, 0);
    return draw_until_admissible([&] {
        Scalar mu = random_nonzero_scalar(rng, f);
        bool mu_star_zero = rng.below(2) == 0;
        Scalar other = random_nonzero_scalar(rng, f);
        return make_primary_i(d, q, zero, mu, -mu, random_scalar(rng, f),
                              mu_star_zero ? zero : other, mu_star_zero ? other : zero, zero);
    });
}

PrimaryData sample_bipartite_krawtchouk(int d, const Field& f, Rng& rng) {
    Scalar zero(f, 0);
    return draw_until_admissible([&] {
        return make_primary_ii(d, zero, random_nonzero_scalar(rng, f), zero,
                               random_scalar(rng, f), random_nonzero_scalar(rng, f), zero, zero);
    });
}

std::vector<PrimaryData> sample_primary_family(SampleFamily fam, int d, const Field& f, int count,
                                               std::uint64_t seed, std::optional<Scalar> q) {
    Rng rng(seed);
    Scalar zero(f, 0);
    Scalar qval = q.value_or(Scalar(f, 2));
    std::vector<PrimaryData> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        switch (fam) {
            case SampleFamily::Krawtchouk:
                out.push_back(draw_until_admissible([&] {
                    return make_primary_ii(d, random_scalar(rng, f),
                                           random_nonzero_scalar(rng, f), zero,
                                           random_scalar(rng, f), random_nonzero_scalar(rng, f),
                                           zero, random_scalar(rng, f));
                }));
                break;
            case SampleFamily::DualQKrawtchouk: {
                check_q_usable(qval, d);
                out.push_back(draw_until_admissible([&] {
                    bool mu_star_zero = rng.below(2) == 0;
                    Scalar other = random_nonzero_scalar(rng, f);
                    return make_primary_i(d, qval, random_scalar(rng, f),
                                          random_nonzero_scalar(rng, f),
                                          random_nonzero_scalar(rng, f), random_scalar(rng, f),
                                          mu_star_zero ? zero : other,
                                          mu_star_zero ? other : zero, zero);
                }));
                break;
            }
            case SampleFamily::EssentiallyBipartiteI: {
                check_q_usable(qval, d);
                out.push_back(draw_until_admissible([&] {
                    Scalar mu = random_nonzero_scalar(rng, f);
                    return make_primary_i(d, qval, random_scalar(rng, f), mu, -mu,
                                          random_scalar(rng, f), random_scalar(rng, f),
                                          random_scalar(rng, f), zero);
                }));
                break;
            }
            case SampleFamily::EssentiallyBipartiteII:
                out.push_back(draw_until_admissible([&] {
                    return make_primary_ii(d, random_scalar(rng, f),
                                           random_nonzero_scalar(rng, f), zero,
                                           random_scalar(rng, f), random_scalar(rng, f),
                                           random_scalar(rng, f), zero);
                }));
                break;
            case SampleFamily::EssentiallyBipartiteIIIPlus:
                out.push_back(draw_until_admissible([&] {
                    return make_primary_iiiplus(d, random_scalar(rng, f), zero,
                                                random_nonzero_scalar(rng, f),
                                                random_scalar(rng, f), random_scalar(rng, f),
                                                random_nonzero_scalar(rng, f), zero);
                }));
                break;
        }
    }
    return out;
}

ParameterArray sample_type3minus_array(int d, const Field& f, Rng& rng) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("fundamental constant -2 with this construction needs odd d >= 3");
    // theta_{i+1} = theta_{i-2} + theta_{i-1} - theta_i gives ratio -1.
    auto spectrum_from_seed = [&]() -> std::optional<std::vector<Scalar>> {
        std::vector<Scalar> th{random_scalar(rng, f), random_scalar(rng, f),
                               random_scalar(rng, f)};
        while (static_cast<int>(th.size()) <= d) {
            size_t m = th.size();
            th.push_back(th[m - 3] + th[m - 2] - th[m - 1]);
        }
        for (size_t i = 0; i < th.size(); ++i)
            for (size_t j = i + 1; j < th.size(); ++j)
                if (th[i] == th[j]) return std::nullopt;
        return th;
    };
    for (int tries = 0; tries < kMaxTries; ++tries) {
        auto th = spectrum_from_seed();
        auto ths = spectrum_from_seed();
        if (!th || !ths) continue;
        Scalar phi1_1 = random_nonzero_scalar(rng, f);
        // clauses (iii)/(iv) force the rest of the split sequences
        Scalar denom = (*th)[0] - (*th)[d];
        std::vector<Scalar> cumsum(d + 1, Scalar(f, 0));
        for (int i = 1; i <= d; ++i)
            cumsum[i] = cumsum[i - 1] + ((*th)[i - 1] - (*th)[d - i + 1]) / denom;
        std::vector<Scalar> phi2(d, Scalar(f, 0)), phi1(d, Scalar(f, 0));
        for (int i = 1; i <= d; ++i)
            phi2[i - 1] =
                phi1_1 * cumsum[i] + ((*ths)[i] - (*ths)[0]) * ((*th)[d - i + 1] - (*th)[0]);
        for (int i = 1; i <= d; ++i)
            phi1[i - 1] =
                phi2[0] * cumsum[i] + ((*ths)[i] - (*ths)[0]) * ((*th)[i - 1] - (*th)[d]);
        ParameterArray cand(*th, *ths, phi1, phi2);
        if (!validate_parameter_array(cand).valid) continue;
        if (fundamental_type(cand).tag != TypeTag::IIIMinus) continue;
        return cand;
    }
    throw std::runtime_error("type III- sampler exhausted its retry budget");
}

} // namespace leonard
