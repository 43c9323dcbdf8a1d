#include "leonard/poly.hpp"

#include <algorithm>
#include <cassert>

namespace leonard {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

} // namespace

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar acc(x.field(), 0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (size_t k = 1; k < p.size(); ++k)
        d.push_back(Scalar(p[k].field(), static_cast<long>(k)) * p[k]);
    trim(d);
    return d;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const Field& f = a[0].field();
    Poly r(a.size() + b.size() - 1, Scalar(f, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Scalar(b[0].field(), 0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Scalar& c) {
    Poly r = a;
    for (auto& v : r) v *= c;
    trim(r);
    return r;
}

Poly poly_from_roots(const Field& f, const std::vector<Scalar>& roots) {
    Poly p{Scalar(f, 1)};
    for (const Scalar& r : roots) p = poly_mul(p, Poly{-r, Scalar(f, 1)});
    return p;
}

bool poly_equal(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    trim(x);
    trim(y);
    return x == y;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly rem = a, quo;
    trim(rem);
    Poly bb = b;
    trim(bb);
    if (bb.empty()) throw std::domain_error("polynomial division by zero");
    const Field& f = bb[0].field();
    if (degree(rem) < degree(bb)) return {Poly{}, rem};
    quo.assign(rem.size() - bb.size() + 1, Scalar(f, 0));
    Scalar lead_inv = bb.back().inverse();
    for (int k = degree(rem) - degree(bb); k >= 0; --k) {
        Scalar c = rem[k + bb.size() - 1] * lead_inv;
        quo[k] = c;
        if (c.is_zero()) continue;
        for (size_t i = 0; i < bb.size(); ++i) rem[k + i] -= c * bb[i];
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) a = poly_scale(a, a.back().inverse());
    return a;
}

Poly poly_deflate(const Poly& p, const Scalar& r) {
    assert(p.size() >= 2);
    Poly q(p.size() - 1, Scalar(r.field(), 0));
    Scalar carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + r * carry;
    }
    assert(carry.is_zero());
    return q;
}

namespace {

// --- rational root machinery: monic integer model + Sturm isolation ------

using ZPoly = std::vector<mpz_class>; // ascending
using QPoly = std::vector<mpq_class>; // ascending

mpq_class qpoly_eval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_rem(QPoly a, const QPoly& b) {
    qtrim(a);
    while (!a.empty() && a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        qtrim(a);
    }
    return a;
}

// Renormalize to a primitive integer vector with the same sign pattern.
QPoly qpoly_primitive(const QPoly& p) {
    if (p.empty()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : p) {
        mpz_class n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    QPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(c * den_lcm / num_gcd);
    return r;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(qpoly_primitive(p));
    QPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    qtrim(d);
    if (d.empty()) return chain;
    chain.push_back(qpoly_primitive(d));
    while (chain.back().size() > 1) {
        QPoly r = qpoly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(qpoly_primitive(r));
    }
    return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int var = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sgn(qpoly_eval(s, x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

void isolate_integer_roots(const std::vector<QPoly>& chain, const QPoly& qs, const mpq_class& lo,
                           const mpq_class& hi, std::vector<mpz_class>& out) {
    if (sign_variations(chain, lo) - sign_variations(chain, hi) == 0) return;
    if (hi - lo <= 1) {
        // non-integer endpoints: at most one integer strictly inside
        mpz_class m;
        mpz_fdiv_q(m.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        if (mpq_class(m) > lo && mpq_class(m) < hi && qpoly_eval(qs, mpq_class(m)) == 0)
            out.push_back(m);
        return;
    }
    mpq_class t = (lo + hi) / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    mpq_class mid = mpq_class(fl) + mpq_class(1, 2); // never an integer
    isolate_integer_roots(chain, qs, lo, mid, out);
    isolate_integer_roots(chain, qs, mid, hi, out);
}

// p monic over Q. Returns integer roots of the substituted monic integer
// polynomial q(y) = den^n p(y/den) along with den.
void rational_roots(const Poly& p, std::vector<std::pair<Scalar, int>>& out) {
    int n = degree(p);
    mpz_class den = 1;
    for (const Scalar& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational_value().get_den().get_mpz_t());
    ZPoly q(n + 1);
    mpz_class scale = 1; // den^(n-i-1) built bottom-up from the top
    q[n] = 1;
    for (int i = n - 1; i >= 0; --i) {
        mpq_class c = p[i].rational_value() * scale * den;
        q[i] = c.get_num(); // exact: den^(n-i) clears the denominator
        scale *= den;
    }

    // squarefree part over Q (monic integer by Gauss's lemma)
    QPoly qq(q.begin(), q.end());
    QPoly dq;
    for (int k = 1; k <= n; ++k) dq.push_back(mpq_class(q[k]) * k);
    QPoly g = qq;
    {
        QPoly a = qq, b = dq;
        qtrim(a);
        qtrim(b);
        while (!b.empty()) {
            QPoly r = qpoly_rem(a, b);
            a = std::move(b);
            b = qpoly_primitive(r);
            qtrim(b);
        }
        g = a;
    }
    QPoly qs;
    if (g.size() <= 1) {
        qs = qq;
    } else {
        // exact division qq / (g normalized monic)
        QPoly gm = g;
        for (auto& c : gm) c /= g.back();
        QPoly rem = qq, quo(qq.size() - gm.size() + 1, mpq_class(0));
        for (int k = static_cast<int>(rem.size() - gm.size()); k >= 0; --k) {
            mpq_class c = rem[k + gm.size() - 1];
            quo[k] = c;
            for (size_t i = 0; i < gm.size(); ++i) rem[k + i] -= c * gm[i];
        }
        qs = quo;
        qtrim(qs);
    }

    if (qs.size() <= 1) return;
    auto chain = sturm_chain(qs);
    mpq_class bound = 1;
    for (const auto& c : qs) {
        mpq_class a = abs(c / qs.back());
        if (a > bound) bound = a;
    }
    mpq_class hi = bound + mpq_class(3, 2);
    mpz_class hn;
    mpz_fdiv_q(hn.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    hi = mpq_class(hn) + mpq_class(1, 2); // half-integer beyond every real root
    std::vector<mpz_class> iroots;
    isolate_integer_roots(chain, qs, -hi, hi, iroots);

    for (const mpz_class& y : iroots) {
        // multiplicity via repeated synthetic division of the full q
        int mult = 0;
        ZPoly cur = q;
        while (cur.size() >= 2) {
            ZPoly nxt(cur.size() - 1);
            mpz_class carry = cur.back();
            for (size_t i = cur.size() - 1; i-- > 0;) {
                nxt[i] = carry;
                carry = cur[i] + y * carry;
            }
            if (carry != 0) break;
            ++mult;
            cur = std::move(nxt);
        }
        if (mult > 0) out.emplace_back(Scalar::from_rational(mpq_class(y, den)), mult);
    }
}

} // namespace

RootReport field_roots(const Poly& p_in) {
    Poly p = p_in;
    trim(p);
    RootReport rep;
    if (p.size() <= 1) return rep;
    const Field& f = p[0].field();
    if (!p.back().is_one()) p = poly_scale(p, p.back().inverse());

    if (f.is_prime_field()) {
        Poly cur = p;
        for (std::uint32_t v = 0; v < f.modulus() && cur.size() > 1; ++v) {
            Scalar r(f, static_cast<long>(v));
            int mult = 0;
            while (cur.size() > 1 && poly_eval(cur, r).is_zero()) {
                cur = poly_deflate(cur, r);
                ++mult;
            }
            if (mult) rep.roots.emplace_back(r, mult);
        }
        rep.unfactored_degree = degree(cur);
        return rep;
    }

    rational_roots(p, rep.roots);
    int found = 0;
    for (const auto& [r, m] : rep.roots) found += m;
    rep.unfactored_degree = degree(p) - found;
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rep;
}

} // namespace leonard
