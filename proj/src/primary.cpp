#include "leonard/primary.hpp"

#include <algorithm>

namespace leonard {

std::string type_tag_name(TypeTag t) {
    switch (t) {
        case TypeTag::I: return "I";
        case TypeTag::II: return "II";
        case TypeTag::IIIPlus: return "III+";
        case TypeTag::IIIMinus: return "III-";
    }
    return "?";
}

FundamentalType fundamental_type(const ParameterArray& p) {
    int d = p.d();
    if (d < 3) throw std::invalid_argument("type is defined for diameter >= 3");
    const Field& f = p.field();
    std::optional<Scalar> common;
    for (int i = 2; i <= d - 1; ++i) {
        Scalar r1 = (p.theta[i - 2] - p.theta[i + 1]) / (p.theta[i - 1] - p.theta[i]);
        Scalar r2 = (p.theta_star[i - 2] - p.theta_star[i + 1]) /
                    (p.theta_star[i - 1] - p.theta_star[i]);
        if (r1 != r2) throw RatioNotConstant("theta and theta* ratios disagree");
        if (!common)
            common = r1;
        else if (*common != r1)
            throw RatioNotConstant("eigenvalue ratio depends on i");
    }
    Scalar beta = *common - Scalar(f, 1);
    TypeTag tag;
    if (beta == Scalar(f, 2))
        tag = TypeTag::II;
    else if (beta == Scalar(f, -2))
        tag = (d % 2 == 0) ? TypeTag::IIIPlus : TypeTag::IIIMinus;
    else
        tag = TypeTag::I;
    return FundamentalType{tag, beta};
}

std::vector<Scalar> q_from_beta(const Scalar& beta) {
    const Field& f = beta.field();
    if (beta == Scalar(f, 2) || beta == Scalar(f, -2))
        throw std::invalid_argument("beta = +-2 is outside type I");
    // q^2 solves z^2 - beta z + 1 = 0, then q is a square root of z.
    Scalar disc = beta * beta - Scalar(f, 4);
    std::vector<Scalar> qs;
    for (const Scalar& s : square_roots(disc)) {
        Scalar z = (beta + s) / Scalar(f, 2);
        for (const Scalar& q : square_roots(z)) qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

bool PrimaryData::operator==(const PrimaryData& o) const {
    return type == o.type && d == o.d && q == o.q && delta == o.delta && mu == o.mu && h == o.h &&
           delta_star == o.delta_star && mu_star == o.mu_star && h_star == o.h_star && tau == o.tau;
}

namespace {
void check_d(int d) {
    if (d < 3) throw std::invalid_argument("primary data needs diameter >= 3");
}
} // namespace

PrimaryData make_primary_i(int d, const Scalar& q, const Scalar& delta, const Scalar& mu,
                           const Scalar& h, const Scalar& delta_star, const Scalar& mu_star,
                           const Scalar& h_star, const Scalar& tau) {
    check_d(d);
    return PrimaryData{PrimaryType::I, d, q, delta, mu, h, delta_star, mu_star, h_star, tau};
}

PrimaryData make_primary_ii(int d, const Scalar& delta, const Scalar& mu, const Scalar& h,
                            const Scalar& delta_star, const Scalar& mu_star, const Scalar& h_star,
                            const Scalar& tau) {
    check_d(d);
    return PrimaryData{PrimaryType::II, d,         std::nullopt, delta, mu,
                       h,               delta_star, mu_star,     h_star, tau};
}

PrimaryData make_primary_iiiplus(int d, const Scalar& delta, const Scalar& s, const Scalar& h,
                                 const Scalar& delta_star, const Scalar& s_star,
                                 const Scalar& h_star, const Scalar& tau) {
    check_d(d);
    if (d % 2 != 0) throw std::invalid_argument("type III+ needs even diameter");
    return PrimaryData{PrimaryType::IIIPlus, d,         std::nullopt, delta, s,
                       h,                    delta_star, s_star,      h_star, tau};
}

namespace {

// half-integer helpers: (2i - d)/2 and (2i - d - 1)/2 as field elements
Scalar half_off(const Field& f, int two_val) { return Scalar(f, two_val) / Scalar(f, 2); }

std::vector<std::string> violations_type1(const PrimaryData& pd) {
    std::vector<std::string> v;
    const Field& f = pd.field();
    const Scalar& q = *pd.q;
    int d = pd.d;
    if (q.is_zero() || pow(q, 4) == Scalar(f, 1)) v.push_back("q = 0 or q^4 = 1");
    for (int i = 1; i <= d; ++i)
        if (pow(q, 2 * i) == Scalar(f, 1))
            v.push_back("q^(2i) = 1 at i=" + std::to_string(i));
    for (int i = 1 - d; i <= d - 1; ++i) {
        if (pd.mu == pd.h * pow(q, 2 * i)) v.push_back("mu = h q^(2i) at i=" + std::to_string(i));
        if (pd.mu_star == pd.h_star * pow(q, 2 * i))
            v.push_back("mu* = h* q^(2i) at i=" + std::to_string(i));
    }
    for (int i = 1; i <= d; ++i) {
        if (pd.tau == pd.mu * pd.mu_star * pow(q, 2 * i - d - 1) +
                          pd.h * pd.h_star * pow(q, d - 2 * i + 1))
            v.push_back("tau hits mu mu* q^(2i-d-1) + h h* q^(d-2i+1) at i=" + std::to_string(i));
        if (pd.tau == pd.h * pd.mu_star * pow(q, 2 * i - d - 1) +
                          pd.mu * pd.h_star * pow(q, d - 2 * i + 1))
            v.push_back("tau hits h mu* q^(2i-d-1) + mu h* q^(d-2i+1) at i=" + std::to_string(i));
    }
    return v;
}

std::vector<std::string> violations_type2(const PrimaryData& pd) {
    std::vector<std::string> v;
    const Field& f = pd.field();
    int d = pd.d;
    std::uint32_t ch = f.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint32_t>(d))
        v.push_back("Char(F) = " + std::to_string(ch) + " is not 0 or > d");
    for (int i = 1 - d; i <= d - 1; ++i) {
        if (pd.mu == pd.h * Scalar(f, i)) v.push_back("mu = h i at i=" + std::to_string(i));
        if (pd.mu_star == pd.h_star * Scalar(f, i))
            v.push_back("mu* = h* i at i=" + std::to_string(i));
    }
    for (int i = 1; i <= d; ++i) {
        Scalar mid = half_off(f, 2 * i - d - 1); // i - (d+1)/2
        Scalar span = Scalar(f, (i - 1) * (d - i));
        Scalar lhs1 = pd.mu * pd.mu_star / Scalar(f, 2) -
                      (pd.h * pd.mu_star + pd.mu * pd.h_star) * mid - pd.h * pd.h_star * span;
        if (pd.tau == lhs1) v.push_back("tau hits the first split bound at i=" + std::to_string(i));
        Scalar lhs2 = -(pd.mu * pd.mu_star / Scalar(f, 2)) -
                      (pd.h * pd.mu_star - pd.mu * pd.h_star) * mid - pd.h * pd.h_star * span;
        if (pd.tau == lhs2)
            v.push_back("tau hits the second split bound at i=" + std::to_string(i));
    }
    return v;
}

std::vector<std::string> violations_type3plus(const PrimaryData& pd) {
    std::vector<std::string> v;
    const Field& f = pd.field();
    int d = pd.d;
    if (d % 2 != 0) v.push_back("diameter must be even for type III+");
    std::uint32_t ch = f.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint32_t>(d / 2))
        v.push_back("Char(F) = " + std::to_string(ch) + " is not 0 or > d/2");
    if (pd.h.is_zero()) v.push_back("h = 0");
    if (pd.h_star.is_zero()) v.push_back("h* = 0");
    const Scalar& s = pd.mu;
    const Scalar& s_star = pd.mu_star;
    Scalar two(f, 2);
    for (int i = 1 - d; i <= d - 1; ++i) {
        if (i % 2 == 0) continue;
        if (two * s == Scalar(f, i) * pd.h) v.push_back("2s = i h at i=" + std::to_string(i));
        if (two * s_star == Scalar(f, i) * pd.h_star)
            v.push_back("2s* = i h* at i=" + std::to_string(i));
    }
    for (int i = 1; i <= d; ++i) {
        Scalar mid = half_off(f, 2 * i - d - 1);
        Scalar core = s * pd.h_star + s_star * pd.h + pd.h * pd.h_star * mid;
        Scalar alt = s * pd.h_star - s_star * pd.h - pd.h * pd.h_star * mid;
        Scalar bound1 = (i % 2 == 0) ? core : -core;
        Scalar bound2 = (i % 2 == 0) ? alt : -alt;
        if (pd.tau == bound1)
            v.push_back("tau hits the first split bound at i=" + std::to_string(i));
        if (pd.tau == bound2)
            v.push_back("tau hits the second split bound at i=" + std::to_string(i));
    }
    return v;
}

// Closed forms without the admissibility gate; shared by the public builder
// and the extraction round-trip.
ParameterArray build_array(const PrimaryData& pd) {
    const Field& f = pd.field();
    int d = pd.d;
    std::vector<Scalar> th, ths, f1, f2;
    switch (pd.type) {
        case PrimaryType::I: {
            const Scalar& q = *pd.q;
            for (int i = 0; i <= d; ++i) {
                th.push_back(pd.delta + pd.mu * pow(q, 2 * i - d) + pd.h * pow(q, d - 2 * i));
                ths.push_back(pd.delta_star + pd.mu_star * pow(q, 2 * i - d) +
                              pd.h_star * pow(q, d - 2 * i));
            }
            for (int i = 1; i <= d; ++i) {
                Scalar window = (pow(q, i) - pow(q, -i)) * (pow(q, d - i + 1) - pow(q, i - d - 1));
                f1.push_back(window * (pd.tau - pd.mu * pd.mu_star * pow(q, 2 * i - d - 1) -
                                       pd.h * pd.h_star * pow(q, d - 2 * i + 1)));
                f2.push_back(window * (pd.tau - pd.h * pd.mu_star * pow(q, 2 * i - d - 1) -
                                       pd.mu * pd.h_star * pow(q, d - 2 * i + 1)));
            }
            break;
        }
        case PrimaryType::II: {
            for (int i = 0; i <= d; ++i) {
                Scalar off = half_off(f, 2 * i - d);
                Scalar span(f, i * (d - i));
                th.push_back(pd.delta + pd.mu * off + pd.h * span);
                ths.push_back(pd.delta_star + pd.mu_star * off + pd.h_star * span);
            }
            for (int i = 1; i <= d; ++i) {
                Scalar window(f, i * (d - i + 1));
                Scalar mid = half_off(f, 2 * i - d - 1);
                Scalar span(f, (i - 1) * (d - i));
                f1.push_back(window * (pd.tau - pd.mu * pd.mu_star / Scalar(f, 2) +
                                       (pd.h * pd.mu_star + pd.mu * pd.h_star) * mid +
                                       pd.h * pd.h_star * span));
                f2.push_back(window * (pd.tau + pd.mu * pd.mu_star / Scalar(f, 2) +
                                       (pd.h * pd.mu_star - pd.mu * pd.h_star) * mid +
                                       pd.h * pd.h_star * span));
            }
            break;
        }
        case PrimaryType::IIIPlus: {
            const Scalar& s = pd.mu;
            const Scalar& s_star = pd.mu_star;
            for (int i = 0; i <= d; ++i) {
                Scalar off = half_off(f, 2 * i - d);
                if (i % 2 == 0) {
                    th.push_back(pd.delta + s + pd.h * off);
                    ths.push_back(pd.delta_star + s_star + pd.h_star * off);
                } else {
                    th.push_back(pd.delta - s - pd.h * off);
                    ths.push_back(pd.delta_star - s_star - pd.h_star * off);
                }
            }
            for (int i = 1; i <= d; ++i) {
                Scalar mid = half_off(f, 2 * i - d - 1);
                Scalar core = pd.tau - s * pd.h_star - s_star * pd.h - pd.h * pd.h_star * mid;
                Scalar alt = pd.tau - s * pd.h_star + s_star * pd.h + pd.h * pd.h_star * mid;
                if (i % 2 == 0) {
                    f1.push_back(Scalar(f, i) * core);
                    f2.push_back(Scalar(f, i) * alt);
                } else {
                    Scalar window(f, d - i + 1);
                    f1.push_back(window *
                                 (pd.tau + s * pd.h_star + s_star * pd.h + pd.h * pd.h_star * mid));
                    f2.push_back(window *
                                 (pd.tau + s * pd.h_star - s_star * pd.h - pd.h * pd.h_star * mid));
                }
            }
            break;
        }
    }
    return ParameterArray(std::move(th), std::move(ths), std::move(f1), std::move(f2));
}

} // namespace

std::vector<std::string> primary_data_violations(const PrimaryData& pd) {
    switch (pd.type) {
        case PrimaryType::I: return violations_type1(pd);
        case PrimaryType::II: return violations_type2(pd);
        case PrimaryType::IIIPlus: return violations_type3plus(pd);
    }
    return {};
}

ParameterArray parameter_array_from_primary_data(const PrimaryData& pd) {
    auto v = primary_data_violations(pd);
    if (!v.empty()) throw PrimaryDataInvalid(std::move(v));
    ParameterArray out = build_array(pd);
    if (!validate_parameter_array(out).valid)
        throw std::logic_error("admissible primary data produced an invalid array");
    return out;
}

namespace {

// Solve the 3x3 system  sum_j m[i][j] u[j] = rhs[i].
std::array<Scalar, 3> solve3(const Field& f, const std::array<std::array<Scalar, 3>, 3>& m,
                             const std::array<Scalar, 3>& rhs) {
    ExactMatrix a(f, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = m[i][j];
    auto inv = try_inverse(a);
    if (!inv) throw InconsistentArray("degenerate solve while extracting primary data");
    std::array<Scalar, 3> u{Scalar(f, 0), Scalar(f, 0), Scalar(f, 0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) u[i] += inv->at(i, j) * rhs[j];
    return u;
}

} // namespace

PrimaryData primary_data_from_parameter_array(const ParameterArray& p,
                                              std::optional<Scalar> q_choice) {
    const Field& f = p.field();
    int d = p.d();
    ValidationReport val = validate_parameter_array(p);
    if (!val.valid) throw InconsistentArray("not a parameter array");
    FundamentalType ft = fundamental_type(p);
    Scalar one(f, 1), two(f, 2);

    PrimaryData pd{PrimaryType::II, d, std::nullopt, one, one, one, one, one, one, one};
    switch (ft.tag) {
        case TypeTag::IIIMinus:
            throw std::invalid_argument("type III- has no primary-data parametrization");
        case TypeTag::I: {
            Scalar q = [&] {
                if (q_choice) {
                    if (*q_choice * *q_choice + (*q_choice * *q_choice).inverse() != ft.beta)
                        throw std::invalid_argument("supplied q does not match beta");
                    return *q_choice;
                }
                auto qs = q_from_beta(ft.beta);
                if (qs.empty())
                    throw NoQInField("no q in " + f.describe() + " with q^2 + q^-2 = beta");
                return qs.front();
            }();
            auto solve_block = [&](const std::vector<Scalar>& seq) {
                std::array<std::array<Scalar, 3>, 3> m;
                std::array<Scalar, 3> rhs{seq[0], seq[1], seq[2]};
                for (int i = 0; i < 3; ++i)
                    m[i] = {one, pow(q, 2 * i - d), pow(q, d - 2 * i)};
                return solve3(f, m, rhs);
            };
            auto [delta, mu, h] = solve_block(p.theta);
            auto [delta_star, mu_star, h_star] = solve_block(p.theta_star);
            Scalar window = (q - q.inverse()) * (pow(q, d) - pow(q, -d));
            Scalar tau = p.phi1[0] / window + mu * mu_star * pow(q, 1 - d) +
                         h * h_star * pow(q, d - 1);
            pd = PrimaryData{PrimaryType::I, d, q, delta, mu, h, delta_star, mu_star, h_star, tau};
            break;
        }
        case TypeTag::II: {
            auto solve_block = [&](const std::vector<Scalar>& seq) {
                std::array<std::array<Scalar, 3>, 3> m;
                std::array<Scalar, 3> rhs{seq[0], seq[1], seq[2]};
                for (int i = 0; i < 3; ++i)
                    m[i] = {one, half_off(f, 2 * i - d), Scalar(f, i * (d - i))};
                return solve3(f, m, rhs);
            };
            auto [delta, mu, h] = solve_block(p.theta);
            auto [delta_star, mu_star, h_star] = solve_block(p.theta_star);
            Scalar window(f, d);
            Scalar tau = p.phi1[0] / window + mu * mu_star / two -
                         (h * mu_star + mu * h_star) * half_off(f, 1 - d);
            pd = PrimaryData{PrimaryType::II, d,          std::nullopt, delta, mu,
                             h,               delta_star, mu_star,      h_star, tau};
            break;
        }
        case TypeTag::IIIPlus: {
            auto solve_block = [&](const std::vector<Scalar>& seq) -> std::array<Scalar, 3> {
                // even i: delta + s + h(i-d/2); odd i: delta - s - h(i-d/2)
                Scalar h = (seq[2] - seq[0]) / two;
                Scalar even_part = seq[0] + h * half_off(f, d); // delta + s
                Scalar odd_part = seq[1] + h * half_off(f, 2 - d); // delta - s
                Scalar delta = (even_part + odd_part) / two;
                Scalar s = (even_part - odd_part) / two;
                return {delta, s, h};
            };
            auto [delta, s, h] = solve_block(p.theta);
            auto [delta_star, s_star, h_star] = solve_block(p.theta_star);
            Scalar window(f, d); // i = 1 is odd: phi1_1 = d (tau + s h* + s* h + h h* (1-(d+1)/2))
            Scalar tau = p.phi1[0] / window - s * h_star - s_star * h -
                         h * h_star * half_off(f, 1 - d);
            pd = PrimaryData{PrimaryType::IIIPlus, d,          std::nullopt, delta, s,
                             h,                    delta_star, s_star,       h_star, tau};
            break;
        }
    }

    if (!(build_array(pd) == p))
        throw InconsistentArray("array is not generated by its leading-index solve");
    return pd;
}

std::array<PrimaryData, 4> primary_data_relatives(const PrimaryData& pd) {
    PrimaryData second = pd, third = pd, fourth = pd;
    switch (pd.type) {
        case PrimaryType::I:
            std::swap(second.mu_star, second.h_star);
            std::swap(third.mu, third.h);
            std::swap(fourth.mu, fourth.h);
            std::swap(fourth.mu_star, fourth.h_star);
            break;
        case PrimaryType::II:
            second.mu_star = -second.mu_star;
            third.mu = -third.mu;
            fourth.mu = -fourth.mu;
            fourth.mu_star = -fourth.mu_star;
            break;
        case PrimaryType::IIIPlus:
            second.h_star = -second.h_star;
            third.h = -third.h;
            fourth.h = -fourth.h;
            fourth.h_star = -fourth.h_star;
            break;
    }
    return {pd, second, third, fourth};
}

SpecialTypeFlags special_type_flags(const PrimaryData& pd) {
    SpecialTypeFlags fl;
    const Field& f = pd.field();
    switch (pd.type) {
        case PrimaryType::I: {
            fl.dual_q_krawtchouk = (pd.mu_star * pd.h_star).is_zero() && pd.tau.is_zero();
            fl.essentially_bipartite = (pd.mu + pd.h).is_zero() && pd.tau.is_zero();
            if (fl.dual_q_krawtchouk) {
                fl.reinforced = true;
                if (!reinforced_without_scan(*pd.q))
                    for (int i = 1; i <= pd.d - 1; ++i)
                        if (pow(*pd.q, 2 * i) == Scalar(f, -1)) fl.reinforced = false;
            }
            break;
        }
        case PrimaryType::II:
            fl.krawtchouk = pd.h.is_zero() && pd.h_star.is_zero();
            fl.essentially_bipartite = pd.h.is_zero() && pd.tau.is_zero();
            break;
        case PrimaryType::IIIPlus:
            fl.essentially_bipartite = pd.mu.is_zero() && pd.tau.is_zero(); // s = 0, tau = 0
            break;
    }
    fl.bipartite = fl.essentially_bipartite && pd.delta.is_zero();
    return fl;
}

bool phi_products_equal(const PrimaryData& pd1, const PrimaryData& pd2) {
    if (pd1.type != pd2.type || pd1.d != pd2.d)
        throw TypeMismatch("primary data of different type or diameter");
    if (pd1.q != pd2.q) throw DualMismatch("type I data must share q");
    if (pd1.delta_star != pd2.delta_star || pd1.mu_star != pd2.mu_star ||
        pd1.h_star != pd2.h_star)
        throw DualMismatch("primary data must share the (delta*, mu*, h*) block");
    const Field& f = pd1.field();
    switch (pd1.type) {
        case PrimaryType::I: {
            if (pd1.mu * pd1.h != pd2.mu * pd2.h) return false;
            if (pd1.tau * (pd1.mu + pd1.h) != pd2.tau * (pd2.mu + pd2.h)) return false;
            Scalar s1 = pd1.mu + pd1.h, s2 = pd2.mu + pd2.h;
            return pd1.tau * pd1.tau + s1 * s1 * pd1.mu_star * pd1.h_star ==
                   pd2.tau * pd2.tau + s2 * s2 * pd1.mu_star * pd1.h_star;
        }
        case PrimaryType::II: {
            if (pd1.h * pd1.h != pd2.h * pd2.h) return false;
            if (Scalar(f, 2) * pd1.h * pd1.tau + pd1.mu * pd1.mu * pd1.h_star !=
                Scalar(f, 2) * pd2.h * pd2.tau + pd2.mu * pd2.mu * pd1.h_star)
                return false;
            Scalar dual = pd1.mu_star * pd1.mu_star +
                          Scalar(f, (pd1.d - 1) * (pd1.d - 1)) * pd1.h_star * pd1.h_star;
            return Scalar(f, 4) * pd1.tau * pd1.tau - pd1.mu * pd1.mu * dual ==
                   Scalar(f, 4) * pd2.tau * pd2.tau - pd2.mu * pd2.mu * dual;
        }
        case PrimaryType::IIIPlus: {
            if (pd1.h * pd1.h != pd2.h * pd2.h) return false;
            Scalar p1 = pd1.tau + pd1.mu * pd1.h_star, p2 = pd2.tau + pd2.mu * pd1.h_star;
            Scalar m1 = pd1.tau - pd1.mu * pd1.h_star, m2 = pd2.tau - pd2.mu * pd1.h_star;
            return p1 * p1 == p2 * p2 && m1 * m1 == m2 * m2;
        }
    }
    return false;
}

bool dual_q_krawtchouk_by_ratios(const ParameterArray& p) {
    int d = p.d();
    FundamentalType ft = fundamental_type(p);
    if (ft.tag != TypeTag::I) return false;
    std::optional<Scalar> ratio;
    for (int i = 1; i <= d - 1; ++i) {
        Scalar r = (p.theta_star[i - 1] - p.theta_star[i]) / (p.theta_star[i] - p.theta_star[i + 1]);
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            return false;
    }
    std::optional<Scalar> quot;
    for (int i = 0; i < d; ++i) {
        Scalar r = p.phi1[i] / p.phi2[i];
        if (!quot)
            quot = r;
        else if (*quot != r)
            return false;
    }
    return true;
}

bool krawtchouk_by_differences(const ParameterArray& p) {
    int d = p.d();
    FundamentalType ft = fundamental_type(p);
    if (ft.tag != TypeTag::II) return false;
    for (int i = 2; i <= d; ++i) {
        if (p.theta[i] - p.theta[i - 1] != p.theta[1] - p.theta[0]) return false;
        if (p.theta_star[i] - p.theta_star[i - 1] != p.theta_star[1] - p.theta_star[0])
            return false;
    }
    return true;
}

bool reinforced_by_ratio(const ParameterArray& p) {
    if (!dual_q_krawtchouk_by_ratios(p)) throw NotDualQKrawtchouk("array lacks the ratio form");
    const Field& f = p.field();
    // the theta* ratio equals q^2 or q^-2; either generates the same scan
    Scalar q_sq = (p.theta_star[0] - p.theta_star[1]) / (p.theta_star[1] - p.theta_star[2]);
    Scalar acc(f, 1);
    for (int i = 1; i <= p.d() - 1; ++i) {
        acc *= q_sq;
        if (acc == Scalar(f, -1)) return false;
    }
    return true;
}

bool reinforced_without_scan(const Scalar& q) {
    const Field& f = q.field();
    return f.is_rationals() && !q.is_zero() && pow(q, 4) != Scalar(f, 1);
}

bool type2_constant_ratio_variant(const ParameterArray& p) {
    int d = p.d();
    FundamentalType ft = fundamental_type(p);
    if (ft.tag != TypeTag::II) return false;
    std::optional<Scalar> ratio;
    for (int i = 1; i <= d - 1; ++i) {
        Scalar r = (p.theta_star[i - 1] - p.theta_star[i]) / (p.theta_star[i] - p.theta_star[i + 1]);
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            return false;
    }
    std::optional<Scalar> quot;
    for (int i = 0; i < d; ++i) {
        Scalar r = p.phi1[i] / p.phi2[i];
        if (!quot)
            quot = r;
        else if (*quot != r)
            return false;
    }
    return true;
}

} // namespace leonard
