#include "leonard/params.hpp"

#include <algorithm>
#include <map>

namespace leonard {

namespace {

void check_lengths(size_t n_theta, size_t n_ths, size_t n_phi1, size_t n_phi2) {
    if (n_theta < 2) throw LengthMismatch("diameter must be at least 1");
    if (n_ths != n_theta) throw LengthMismatch("theta and theta* lengths differ");
    if (n_phi1 != n_theta - 1 || n_phi2 != n_theta - 1)
        throw LengthMismatch("split sequences must have length d");
}

void check_one_field(const std::vector<const std::vector<Scalar>*>& seqs) {
    const Field& f = (*seqs[0])[0].field();
    for (const auto* s : seqs)
        for (const Scalar& v : *s)
            if (v.field() != f) throw FieldMismatch("mixed fields in sequence data");
}

bool all_distinct(const std::vector<Scalar>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

} // namespace

ParameterArray::ParameterArray(std::vector<Scalar> theta_in, std::vector<Scalar> theta_star_in,
                               std::vector<Scalar> phi1_in, std::vector<Scalar> phi2_in)
    : theta(std::move(theta_in)), theta_star(std::move(theta_star_in)), phi1(std::move(phi1_in)),
      phi2(std::move(phi2_in)) {
    check_lengths(theta.size(), theta_star.size(), phi1.size(), phi2.size());
    check_one_field({&theta, &theta_star, &phi1, &phi2});
}

bool ParameterArray::operator==(const ParameterArray& o) const {
    return theta == o.theta && theta_star == o.theta_star && phi1 == o.phi1 && phi2 == o.phi2;
}

TddSequence::TddSequence(std::vector<Scalar> a_in, std::vector<Scalar> x_in,
                         std::vector<Scalar> theta_star_in)
    : a(std::move(a_in)), x(std::move(x_in)), theta_star(std::move(theta_star_in)) {
    if (a.size() < 2) throw LengthMismatch("diameter must be at least 1");
    if (theta_star.size() != a.size() || x.size() != a.size() - 1)
        throw LengthMismatch("TD/D sequence lengths inconsistent");
    check_one_field({&a, &x, &theta_star});
    for (const Scalar& v : x)
        if (v.is_zero()) throw std::invalid_argument("x_i must be nonzero in a TD/D sequence");
    if (!all_distinct(theta_star))
        throw std::invalid_argument("theta*_i must be mutually distinct in a TD/D sequence");
}

bool TddSequence::operator==(const TddSequence& o) const {
    return a == o.a && x == o.x && theta_star == o.theta_star;
}

SplitPolynomials::SplitPolynomials(std::vector<Scalar> theta_star) : ths_(std::move(theta_star)) {}

Scalar SplitPolynomials::tau_star(int i, const Scalar& lambda) const {
    Scalar r(lambda.field(), 1);
    for (int j = 0; j < i; ++j) r *= lambda - ths_[j];
    return r;
}

Scalar SplitPolynomials::eta_star(int i, const Scalar& lambda) const {
    int d = static_cast<int>(ths_.size()) - 1;
    Scalar r(lambda.field(), 1);
    for (int j = 0; j < i; ++j) r *= lambda - ths_[d - j];
    return r;
}

ValidationReport validate_parameter_array(const ParameterArray& p) {
    ValidationReport rep;
    const Field& f = p.field();
    int d = p.d();

    auto note = [&](const std::string& v) { rep.violations.push_back(v); };

    bool theta_ok = all_distinct(p.theta);
    bool ths_ok = all_distinct(p.theta_star);
    if (!theta_ok) note("(i) theta_i not mutually distinct");
    if (!ths_ok) note("(i) theta*_i not mutually distinct");

    for (int i = 0; i < d; ++i) {
        if (p.phi1[i].is_zero()) note("(ii) phi1[" + std::to_string(i + 1) + "] = 0");
        if (p.phi2[i].is_zero()) note("(ii) phi2[" + std::to_string(i + 1) + "] = 0");
    }

    if (theta_ok && ths_ok) {
        // partial sums of (theta_l - theta_{d-l}) / (theta_0 - theta_d)
        Scalar denom = p.theta[0] - p.theta[d];
        std::vector<Scalar> cumsum(d + 1, Scalar(f, 0));
        for (int i = 1; i <= d; ++i)
            cumsum[i] = cumsum[i - 1] + (p.theta[i - 1] - p.theta[d - i + 1]) / denom;
        for (int i = 1; i <= d; ++i) {
            Scalar rhs3 = p.phi2[0] * cumsum[i] +
                          (p.theta_star[i] - p.theta_star[0]) * (p.theta[i - 1] - p.theta[d]);
            if (p.phi1[i - 1] != rhs3) note("(iii) fails at i=" + std::to_string(i));
            Scalar rhs4 = p.phi1[0] * cumsum[i] +
                          (p.theta_star[i] - p.theta_star[0]) * (p.theta[d - i + 1] - p.theta[0]);
            if (p.phi2[i - 1] != rhs4) note("(iv) fails at i=" + std::to_string(i));
        }
        if (d >= 3) {
            std::optional<Scalar> common;
            bool ok = true;
            for (int i = 2; i <= d - 1; ++i) {
                Scalar r1 = (p.theta[i - 2] - p.theta[i + 1]) / (p.theta[i - 1] - p.theta[i]);
                Scalar r2 = (p.theta_star[i - 2] - p.theta_star[i + 1]) /
                            (p.theta_star[i - 1] - p.theta_star[i]);
                if (r1 != r2) ok = false;
                if (!common)
                    common = r1;
                else if (*common != r1)
                    ok = false;
            }
            if (!ok)
                note("(v) eigenvalue ratios not equal and i-independent");
            else
                rep.beta = *common - Scalar(f, 1);
        }
    }

    rep.valid = rep.violations.empty();
    return rep;
}

std::array<ParameterArray, 4> parameter_array_relatives(const ParameterArray& p) {
    auto rev = [&](const std::vector<Scalar>& v) {
        return std::vector<Scalar>(v.rbegin(), v.rend());
    };
    // index maps: second = (theta; theta* reversed; phi2 reversed; phi1 reversed),
    // third = (theta reversed; theta*; phi2; phi1), fourth = both reversals.
    ParameterArray second(p.theta, rev(p.theta_star), rev(p.phi2), rev(p.phi1));
    ParameterArray third(rev(p.theta), p.theta_star, p.phi2, p.phi1);
    ParameterArray fourth(rev(p.theta), rev(p.theta_star), rev(p.phi1), rev(p.phi2));
    return {p, second, third, fourth};
}

ParameterArray affine_transform(const ParameterArray& p, const Scalar& xi, const Scalar& zeta,
                                const Scalar& xi_star, const Scalar& zeta_star) {
    if (xi.is_zero() || xi_star.is_zero()) throw ZeroScale("affine scale must be nonzero");
    std::vector<Scalar> th, ths, f1, f2;
    for (const auto& v : p.theta) th.push_back(xi * v + zeta);
    for (const auto& v : p.theta_star) ths.push_back(xi_star * v + zeta_star);
    for (const auto& v : p.phi1) f1.push_back(xi * xi_star * v);
    for (const auto& v : p.phi2) f2.push_back(xi * xi_star * v);
    return ParameterArray(std::move(th), std::move(ths), std::move(f1), std::move(f2));
}

TddSequence tdd_from_parameter_array(const ParameterArray& p) {
    int d = p.d();
    const auto& th = p.theta;
    const auto& ths = p.theta_star;
    SplitPolynomials sp(ths);
    std::vector<Scalar> a, x;
    a.push_back(th[0] + p.phi1[0] / (ths[0] - ths[1]));
    for (int i = 1; i <= d - 1; ++i)
        a.push_back(th[i] + p.phi1[i - 1] / (ths[i] - ths[i - 1]) +
                    p.phi1[i] / (ths[i] - ths[i + 1]));
    a.push_back(th[d] + p.phi1[d - 1] / (ths[d] - ths[d - 1]));
    for (int i = 1; i <= d; ++i) {
        Scalar num = sp.tau_star(i - 1, ths[i - 1]) * sp.eta_star(d - i, ths[i]);
        Scalar den = sp.tau_star(i, ths[i]) * sp.eta_star(d - i + 1, ths[i - 1]);
        x.push_back(p.phi1[i - 1] * p.phi2[i - 1] * num / den);
    }
    return TddSequence(std::move(a), std::move(x), ths);
}

TddSequence tdd_from_parameter_array_second_route(const ParameterArray& p) {
    int d = p.d();
    const auto& th = p.theta;
    const auto& ths = p.theta_star;
    SplitPolynomials sp(ths);
    std::vector<Scalar> a, x;
    a.push_back(th[d] + p.phi2[0] / (ths[0] - ths[1]));
    for (int i = 1; i <= d - 1; ++i)
        a.push_back(th[d - i] + p.phi2[i - 1] / (ths[i] - ths[i - 1]) +
                    p.phi2[i] / (ths[i] - ths[i + 1]));
    a.push_back(th[0] + p.phi2[d - 1] / (ths[d] - ths[d - 1]));
    for (int i = 1; i <= d; ++i) {
        Scalar num = sp.tau_star(i - 1, ths[i - 1]) * sp.eta_star(d - i, ths[i]);
        Scalar den = sp.tau_star(i, ths[i]) * sp.eta_star(d - i + 1, ths[i - 1]);
        x.push_back(p.phi1[i - 1] * p.phi2[i - 1] * num / den);
    }
    return TddSequence(std::move(a), std::move(x), ths);
}

MatrixPair realize_matrices(const TddSequence& t) {
    const Field& f = t.field();
    int d = t.d();
    ExactMatrix a(f, d + 1);
    for (int i = 0; i <= d; ++i) a.at(i, i) = t.a[i];
    for (int i = 1; i <= d; ++i) {
        a.at(i, i - 1) = Scalar(f, 1);
        a.at(i - 1, i) = t.x[i - 1];
    }
    return MatrixPair(std::move(a), ExactMatrix::diagonal(t.theta_star));
}

TddSequence tdd_affine(const TddSequence& t, const Scalar& xi, const Scalar& zeta,
                       const Scalar& xi_star, const Scalar& zeta_star) {
    if (xi.is_zero() || xi_star.is_zero()) throw ZeroScale("affine scale must be nonzero");
    std::vector<Scalar> a, x, ths;
    for (const auto& v : t.a) a.push_back(xi * v + zeta);
    for (const auto& v : t.x) x.push_back(xi * xi * v);
    for (const auto& v : t.theta_star) ths.push_back(xi_star * v + zeta_star);
    return TddSequence(std::move(a), std::move(x), std::move(ths));
}

namespace {

// Builds the split sequences a candidate theta-ordering would force, then
// accepts the ordering only if the whole array reproduces t exactly.
std::optional<ParameterArray> try_theta_ordering(const TddSequence& t,
                                                 const std::vector<Scalar>& theta) {
    const Field& f = t.field();
    int d = t.d();
    if (theta[0] == theta[d]) return std::nullopt;
    Scalar denom = theta[0] - theta[d];
    std::vector<Scalar> cumsum(d + 1, Scalar(f, 0));
    for (int i = 1; i <= d; ++i)
        cumsum[i] = cumsum[i - 1] + (theta[i - 1] - theta[d - i + 1]) / denom;

    Scalar phi1_1 = (t.a[0] - theta[0]) * (t.theta_star[0] - t.theta_star[1]);
    std::vector<Scalar> phi2(d, Scalar(f, 0)), phi1(d, Scalar(f, 0));
    for (int i = 1; i <= d; ++i)
        phi2[i - 1] = phi1_1 * cumsum[i] +
                      (t.theta_star[i] - t.theta_star[0]) * (theta[d - i + 1] - theta[0]);
    for (int i = 1; i <= d; ++i)
        phi1[i - 1] = phi2[0] * cumsum[i] +
                      (t.theta_star[i] - t.theta_star[0]) * (theta[i - 1] - theta[d]);
    if (phi1[0] != phi1_1) return std::nullopt;
    for (int i = 0; i < d; ++i)
        if (phi1[i].is_zero() || phi2[i].is_zero()) return std::nullopt;

    ParameterArray cand(theta, t.theta_star, phi1, phi2);
    if (!validate_parameter_array(cand).valid) return std::nullopt;
    if (!(tdd_from_parameter_array(cand) == t)) return std::nullopt;
    return cand;
}

bool same_multiset(std::vector<Scalar> a, std::vector<Scalar> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

TddToArraysResult parameter_arrays_from_tdd(const TddSequence& t) {
    TddToArraysResult res;
    int d = t.d();
    MatrixPair pair = realize_matrices(t);
    SpectrumReport spec = spectrum(pair.a);
    if (!spec.split) {
        res.status = TddToArraysResult::Status::NotSplitOverField;
        res.detail = "characteristic polynomial of the realized matrix does not split over " +
                     t.field().describe();
        return res;
    }
    if (!spec.multiplicity_free) {
        res.status = TddToArraysResult::Status::NotLeonard;
        res.detail = "realized matrix has a repeated eigenvalue";
        return res;
    }
    std::vector<Scalar> roots;
    for (const auto& [r, m] : spec.eigenvalues) roots.push_back(r);

    std::vector<ParameterArray> found;
    auto consider = [&](const std::vector<Scalar>& theta) {
        if (auto cand = try_theta_ordering(t, theta)) {
            if (std::find(found.begin(), found.end(), *cand) == found.end())
                found.push_back(std::move(*cand));
        }
    };

    if (d <= 2) {
        std::vector<Scalar> perm = roots;
        std::sort(perm.begin(), perm.end());
        std::vector<int> idx(d + 1);
        for (int i = 0; i <= d; ++i) idx[i] = i;
        do {
            std::vector<Scalar> theta;
            for (int i : idx) theta.push_back(perm[i]);
            consider(theta);
        } while (std::next_permutation(idx.begin(), idx.end()));
    } else {
        // A standard ordering obeys the three-term recurrence whose ratio is
        // fixed by theta*, so the first three entries determine the rest.
        std::optional<Scalar> ratio;
        for (int i = 2; i <= d - 1; ++i) {
            Scalar r = (t.theta_star[i - 2] - t.theta_star[i + 1]) /
                       (t.theta_star[i - 1] - t.theta_star[i]);
            if (!ratio)
                ratio = r;
            else if (*ratio != r) {
                res.status = TddToArraysResult::Status::NotLeonard;
                res.detail = "theta* does not satisfy the common-ratio condition";
                return res;
            }
        }
        int n = d + 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    std::vector<Scalar> theta{roots[i], roots[j], roots[k]};
                    bool bad = false;
                    while (static_cast<int>(theta.size()) < n) {
                        size_t m = theta.size();
                        if (theta[m - 2] == theta[m - 1]) {
                            bad = true;
                            break;
                        }
                        theta.push_back(theta[m - 3] - *ratio * (theta[m - 2] - theta[m - 1]));
                    }
                    if (!bad && same_multiset(theta, roots)) consider(theta);
                }
    }

    if (found.empty()) {
        res.status = TddToArraysResult::Status::NotLeonard;
        res.detail = "no eigenvalue ordering is consistent with the sequence";
        return res;
    }
    if (found.size() > 2)
        throw std::logic_error("more than two parameter arrays for one TD/D sequence");
    std::sort(found.begin(), found.end(), [](const ParameterArray& a, const ParameterArray& b) {
        for (size_t i = 0; i < a.theta.size(); ++i) {
            int c = a.theta[i].cmp(b.theta[i]);
            if (c) return c < 0;
        }
        return false;
    });
    res.status = TddToArraysResult::Status::Ok;
    res.arrays = std::move(found);
    return res;
}

} // namespace leonard
