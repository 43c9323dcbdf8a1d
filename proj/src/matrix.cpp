#include "leonard/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace leonard {

ExactMatrix ExactMatrix::identity(const Field& f, int n) {
    ExactMatrix m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Scalar>& d) {
    if (d.empty()) throw DimensionMismatch("empty diagonal");
    ExactMatrix m(d[0].field(), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

namespace {
void check_dims(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("matrix dimensions " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    if (a.field() != b.field())
        throw FieldMismatch("matrices over " + a.field().describe() + " and " +
                            b.field().describe());
}
} // namespace

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check_dims(*this, o);
    ExactMatrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    check_dims(*this, o);
    ExactMatrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    check_dims(*this, o);
    ExactMatrix r(f_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix r = *this;
    for (auto& v : r.e_) v *= c;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return n_ == o.n_ && f_ == o.f_ && e_ == o.e_;
}

Scalar ExactMatrix::trace() const {
    Scalar t(f_, 0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& v) { return v.is_zero(); });
}

bool ExactMatrix::is_diagonal() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

MatrixPair::MatrixPair(ExactMatrix a_in, ExactMatrix astar_in)
    : a(std::move(a_in)), astar(std::move(astar_in)) {
    check_dims(a, astar);
}

Poly char_poly(const ExactMatrix& m) {
    // Berkowitz: grow the characteristic polynomial of leading principal
    // submatrices through lower-triangular Toeplitz products.
    const Field& f = m.field();
    int n = m.dim();
    std::vector<Scalar> v{Scalar(f, 1), -m.at(0, 0)}; // descending coefficients
    for (int r = 1; r < n; ++r) {
        std::vector<Scalar> col;
        col.reserve(r + 2);
        col.push_back(Scalar(f, 1));
        col.push_back(-m.at(r, r));
        std::vector<Scalar> u(r); // iterated A_r^k * C products
        for (int i = 0; i < r; ++i) u[i] = m.at(i, r);
        for (int k = 0; k < r; ++k) {
            Scalar dot(f, 0);
            for (int i = 0; i < r; ++i) dot += m.at(r, i) * u[i];
            col.push_back(-dot);
            if (k + 1 < r) {
                std::vector<Scalar> nu(r, Scalar(f, 0));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) nu[i] += m.at(i, j) * u[j];
                u = std::move(nu);
            }
        }
        std::vector<Scalar> nv(r + 2, Scalar(f, 0));
        for (int i = 0; i < r + 2; ++i)
            for (int k = 0; k <= i && k < static_cast<int>(col.size()); ++k)
                if (i - k <= r) nv[i] += col[k] * v[i - k];
        v = std::move(nv);
    }
    return Poly(v.rbegin(), v.rend()); // ascending
}

SpectrumReport spectrum(const ExactMatrix& m) {
    SpectrumReport rep;
    if (m.is_diagonal()) {
        std::vector<Scalar> diag;
        for (int i = 0; i < m.dim(); ++i) diag.push_back(m.at(i, i));
        std::sort(diag.begin(), diag.end());
        for (const Scalar& v : diag) {
            if (!rep.eigenvalues.empty() && rep.eigenvalues.back().first == v)
                ++rep.eigenvalues.back().second;
            else
                rep.eigenvalues.emplace_back(v, 1);
        }
        rep.split = true;
        rep.multiplicity_free = rep.eigenvalues.size() == static_cast<size_t>(m.dim());
        return rep;
    }
    RootReport roots = field_roots(char_poly(m));
    rep.split = roots.split();
    rep.eigenvalues = std::move(roots.roots);
    rep.multiplicity_free =
        rep.split && std::all_of(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                                 [](const auto& r) { return r.second == 1; });
    return rep;
}

std::vector<ExactMatrix> primitive_idempotents(const ExactMatrix& m,
                                               const std::vector<Scalar>& eigenvalues) {
    const Field& f = m.field();
    int n = m.dim();
    if (static_cast<int>(eigenvalues.size()) != n)
        throw DimensionMismatch("need exactly dim-many eigenvalues");
    for (size_t i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues[i].field() != f) throw EigenvalueNotInField("eigenvalue field mismatch");
        for (size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw DuplicateEigenvalue("repeated eigenvalue " + eigenvalues[i].str());
    }
    std::vector<ExactMatrix> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        ExactMatrix e = ExactMatrix::identity(f, n);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            ExactMatrix factor = m - ExactMatrix::identity(f, n).scaled(eigenvalues[j]);
            e = e * factor.scaled((eigenvalues[i] - eigenvalues[j]).inverse());
        }
        out.push_back(std::move(e));
    }
    return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    check_dims(a, b);
    return a * b - b * a;
}

std::optional<ExactMatrix> try_inverse(const ExactMatrix& m) {
    const Field& f = m.field();
    int n = m.dim();
    ExactMatrix a = m, inv = ExactMatrix::identity(f, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Scalar s = a.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) *= s;
            inv.at(c, j) *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            Scalar fct = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= fct * a.at(c, j);
                inv.at(r, j) -= fct * inv.at(c, j);
            }
        }
    }
    return inv;
}

ExactMatrix inverse(const ExactMatrix& m) {
    auto inv = try_inverse(m);
    if (!inv) throw std::domain_error("singular matrix");
    return *inv;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    const Field& f = m.field();
    int n = m.dim();
    ExactMatrix a = m;
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < n && row < n; ++c) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!a.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
        Scalar s = a.at(row, c).inverse();
        for (int j = 0; j < n; ++j) a.at(row, j) *= s;
        for (int r = 0; r < n; ++r) {
            if (r == row || a.at(r, c).is_zero()) continue;
            Scalar fct = a.at(r, c);
            for (int j = 0; j < n; ++j) a.at(r, j) -= fct * a.at(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(n, Scalar(f, 0));
        v[c] = Scalar(f, 1);
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a.at(int(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<int>> tridiagonal_orderings(const ExactMatrix& m) {
    int n = m.dim();
    if (n == 1) return {{0}};
    auto linked = [&](int i, int j) { return !m.at(i, j).is_zero() || !m.at(j, i).is_zero(); };
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (linked(i, j)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> ends;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 2) return {};
        if (adj[i].size() == 1) ends.push_back(i);
        if (adj[i].empty()) return {};
    }
    if (ends.size() != 2) return {};
    auto walk = [&](int start) {
        std::vector<int> order{start};
        int prev = -1, cur = start;
        while (static_cast<int>(order.size()) < n) {
            int nxt = -1;
            for (int cand : adj[cur])
                if (cand != prev) {
                    nxt = cand;
                    break;
                }
            if (nxt < 0) return std::vector<int>{};
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        return order;
    };
    std::vector<int> path = walk(ends[0]);
    if (static_cast<int>(path.size()) != n) return {}; // disconnected
    // irreducibility: both directions nonzero on every consecutive pair
    for (int k = 0; k + 1 < n; ++k)
        if (m.at(path[k], path[k + 1]).is_zero() || m.at(path[k + 1], path[k]).is_zero())
            return {};
    std::vector<int> rev(path.rbegin(), path.rend());
    return {path, rev};
}

namespace {

struct ClauseResult {
    bool split = false;        // char poly of the diagonalized matrix splits
    bool mult_free = false;    // distinct eigenvalues
    bool tridiagonal = false;  // partner tridiagonalizable on the eigenbasis
    std::vector<Scalar> standard_order;
};

// One Leonard clause: diagonalize `diag_side`, represent `tri_side` on that
// eigenbasis, and look for an ordering that is irreducible tridiagonal.
ClauseResult check_clause(const ExactMatrix& diag_side, const ExactMatrix& tri_side) {
    ClauseResult res;
    const Field& f = diag_side.field();
    int n = diag_side.dim();
    SpectrumReport spec = spectrum(diag_side);
    res.split = spec.split;
    res.mult_free = spec.multiplicity_free;
    if (!spec.multiplicity_free) return res;

    // An already-diagonal matrix has the standard basis as eigenbasis, so the
    // partner needs no change of basis at all.
    ExactMatrix rep(f, n);
    if (diag_side.is_diagonal()) {
        rep = tri_side;
        spec.eigenvalues.clear();
        for (int i = 0; i < n; ++i) spec.eigenvalues.emplace_back(diag_side.at(i, i), 1);
    } else {
        ExactMatrix basis(f, n);
        for (int i = 0; i < n; ++i) {
            ExactMatrix shifted =
                diag_side - ExactMatrix::identity(f, n).scaled(spec.eigenvalues[i].first);
            auto kb = kernel_basis(shifted);
            if (kb.size() != 1) {
                res.mult_free = false;
                return res;
            }
            for (int r = 0; r < n; ++r) basis.at(r, i) = kb[0][r];
        }
        rep = inverse(basis) * tri_side * basis;
    }
    auto orders = tridiagonal_orderings(rep);
    if (orders.empty()) return res;
    res.tridiagonal = true;
    std::vector<Scalar> a, b;
    for (int idx : orders[0]) a.push_back(spec.eigenvalues[idx].first);
    for (int idx : orders[1]) b.push_back(spec.eigenvalues[idx].first);
    res.standard_order = (a[0] < b[0]) ? a : b;
    return res;
}

} // namespace

VerificationReport verify_leonard_pair(const MatrixPair& p) {
    VerificationReport rep;
    if (p.dim() < 2) throw DimensionMismatch("Leonard pairs need dimension >= 2 (diameter >= 1)");

    ClauseResult c1 = check_clause(p.astar, p.a); // A* diagonal, A tridiagonal
    ClauseResult c2 = check_clause(p.a, p.astar); // A diagonal, A* tridiagonal
    if (!c1.split || !c2.split) {
        rep.status = VerificationReport::Status::NotSplitOverField;
        rep.reason = std::string(!c1.split ? "A*" : "A") +
                     " has characteristic polynomial that does not split over " +
                     p.field().describe();
        return rep;
    }
    auto fail = [&](const std::string& why) {
        rep.status = VerificationReport::Status::NotLeonard;
        rep.reason = why;
        return rep;
    };
    if (!c1.mult_free) return fail("A* is not multiplicity-free");
    if (!c2.mult_free) return fail("A is not multiplicity-free");
    if (!c1.tridiagonal)
        return fail("A is not irreducible tridiagonal on any eigenbasis ordering of A*");
    if (!c2.tridiagonal)
        return fail("A* is not irreducible tridiagonal on any eigenbasis ordering of A");
    rep.status = VerificationReport::Status::LeonardPair;
    rep.theta_star_order = c1.standard_order;
    rep.theta_order = c2.standard_order;
    return rep;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>>
trace_data(const MatrixPair& p, const std::vector<Scalar>& theta_star_order) {
    int n = p.dim();
    if (static_cast<int>(theta_star_order.size()) != n)
        throw LengthMismatch("theta* ordering has wrong length");
    // Standardness: A must be irreducible tridiagonal on the A*-eigenbasis
    // permuted into this eigenvalue order.
    ClauseResult probe = check_clause(p.astar, p.a);
    if (!probe.tridiagonal) throw NotStandardOrdering("pair is not a Leonard pair");
    std::vector<Scalar> rev(probe.standard_order.rbegin(), probe.standard_order.rend());
    if (theta_star_order != probe.standard_order && theta_star_order != rev)
        throw NotStandardOrdering("given eigenvalue ordering of A* is not standard");

    auto es = primitive_idempotents(p.astar, theta_star_order);
    std::vector<Scalar> a, x;
    for (int i = 0; i < n; ++i) a.push_back((p.a * es[i]).trace());
    for (int i = 1; i < n; ++i) x.push_back((es[i] * p.a * es[i - 1] * p.a).trace());
    return {a, x};
}

} // namespace leonard
