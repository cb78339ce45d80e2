#include "apolar/apolarity.hpp"

#include <stdexcept>

namespace apolar {

DualPair DualPair::make(Field field, std::size_t nvars, const std::string& x, const std::string& y)
{
    return DualPair{Ring::indexed(field, x, nvars), Ring::indexed(field, y, nvars)};
}

Polynomial contract(const Polynomial& g, const Polynomial& f)
{
    if (g.ring()->nvars() != f.ring()->nvars() || g.ring()->field() != f.ring()->field())
        throw std::invalid_argument("contract: operator and form live in incompatible rings");
    const Field& F = f.field();
    Polynomial r(f.ring());
    const std::size_t n = f.ring()->nvars();
    for (const auto& [a, ca] : g.terms()) {
        for (const auto& [b, cb] : f.terms()) {
            if (!a.divides(b)) continue;
            // d^a x^b = b!/(b-a)! x^(b-a)
            mpz_class falling = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (Exponent k = 0; k < a[i]; ++k) falling *= static_cast<unsigned long>(b[i] - k);
            r.add_term(b / a, F.mul(F.mul(ca, cb), F.from(Scalar(falling))));
        }
    }
    return r;
}

Vector coordinates(const Polynomial& p, unsigned d)
{
    const MonomialBasis& B = monomial_basis(p.ring()->nvars(), d);
    Vector v(B.monomials.size(), Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = B.index.find(m);
        if (it == B.index.end())
            throw std::invalid_argument("coordinates: term of wrong degree in " + p.str());
        v[it->second] = c;
    }
    return v;
}

Polynomial from_coordinates(const RingPtr& ring, unsigned d, const Vector& v)
{
    const MonomialBasis& B = monomial_basis(ring->nvars(), d);
    if (v.size() != B.monomials.size()) throw std::invalid_argument("from_coordinates: wrong length");
    Polynomial p(ring);
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(B.monomials[i], ring->field().from(v[i]));
    return p;
}

ScalarMatrix catalecticant(const Polynomial& f, unsigned a)
{
    int d = f.degree();
    if (!f.is_homogeneous()) throw std::invalid_argument("catalecticant: form is not homogeneous");
    if (d < 0) d = static_cast<int>(a);
    if (static_cast<int>(a) > d) throw std::invalid_argument("catalecticant: a exceeds the degree");
    const std::size_t n = f.ring()->nvars();
    const MonomialBasis& cols = monomial_basis(n, a);
    const MonomialBasis& rows = monomial_basis(n, static_cast<unsigned>(d) - a);
    const Field& F = f.field();
    ScalarMatrix m(F, rows.monomials.size(), cols.monomials.size());
    for (std::size_t j = 0; j < cols.monomials.size(); ++j) {
        const Monomial& y = cols.monomials[j];
        for (const auto& [b, cb] : f.terms()) {
            if (!y.divides(b)) continue;
            mpz_class falling = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (Exponent k = 0; k < y[i]; ++k) falling *= static_cast<unsigned long>(b[i] - k);
            std::size_t row = rows.index.at(b / y);
            m(row, j) = F.add(m(row, j), F.mul(cb, F.from(Scalar(falling))));
        }
    }
    return m;
}

std::vector<Polynomial> apolar_graded(const Polynomial& f, const RingPtr& T, unsigned d)
{
    std::vector<Polynomial> out;
    if (f.degree() >= 0 && static_cast<int>(d) > f.degree()) {
        for (const auto& m : monomial_basis(T->nvars(), d).monomials) out.push_back(Polynomial::term(T, m, 1));
        return out;
    }
    for (const auto& k : rref_kernel(catalecticant(f, d)).kernel) out.push_back(from_coordinates(T, d, k));
    return out;
}

// ---------------------------------------------------------------------------

GradedIdealView::GradedIdealView(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators))
{
    for (const auto& g : gens_)
        if (!g.is_homogeneous() || !same_ring(g.ring(), ring_))
            throw std::invalid_argument("GradedIdealView: generators must be homogeneous forms in the ring");
}

std::vector<Vector> GradedIdealView::recompute(unsigned d) const
{
    const std::size_t n = ring_->nvars();
    std::vector<Vector> rows;
    for (const auto& g : gens_) {
        if (g.is_zero() || static_cast<unsigned>(g.degree()) > d) continue;
        unsigned e = d - static_cast<unsigned>(g.degree());
        for (const auto& m : monomial_basis(n, e).monomials) rows.push_back(coordinates(g.times_monomial(m), d));
    }
    return row_basis(ring_->field(), graded_dimension(n, d), rows);
}

std::vector<Vector> GradedIdealView::piece(unsigned d) const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
    }
    std::vector<Vector> basis = recompute(d);
    std::lock_guard<std::mutex> lock(mu_);
    // First writer wins; a concurrent duplicate computation yields the same basis.
    return cache_.emplace(d, std::move(basis)).first->second;
}

std::vector<Polynomial> GradedIdealView::piece_polys(unsigned d) const
{
    std::vector<Polynomial> out;
    for (const auto& v : piece(d)) out.push_back(from_coordinates(ring_, d, v));
    return out;
}

std::size_t GradedIdealView::hilbert(unsigned d) const
{
    return graded_dimension(ring_->nvars(), d) - dim(d);
}

std::vector<std::size_t> GradedIdealView::hilbert_function(unsigned d_max) const
{
    std::vector<std::size_t> h;
    for (unsigned d = 0; d <= d_max; ++d) h.push_back(hilbert(d));
    return h;
}

std::vector<std::size_t> hilbert_function(const GradedIdealView& ideal, unsigned d_max)
{
    return ideal.hilbert_function(d_max);
}

std::size_t graded_dimension(std::size_t nvars, unsigned d)
{
    if (nvars == 0) return d == 0 ? 1 : 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), nvars - 1 + d, d);
    return b.get_ui();
}

std::vector<Vector> vanishing_at_points(const RingPtr& ring, unsigned d, const std::vector<Vector>& points)
{
    const auto& mons = monomial_basis(ring->nvars(), d).monomials;
    const Field& F = ring->field();
    ScalarMatrix ev(F, points.size(), mons.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
            ev(i, j) = Polynomial::term(ring, mons[j], 1).evaluate(points[i]);
    auto kr = rref_kernel(ev);
    return row_basis(F, mons.size(), kr.kernel);
}

unsigned long cactus_bound(unsigned n, unsigned r)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n + r, n);
    return b.get_ui();
}

unsigned long ah_rank(unsigned n, unsigned r)
{
    // Alexander-Hirschowitz: generic rank of forms of degree 2r in n+1
    // variables, with the quartic exceptions in 3, 4 and 5 variables.
    if (r == 2) {
        if (n == 2) return 6;
        if (n == 3) return 10;
        if (n == 4) return 15;
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n + 2 * r, n);
    mpz_class q;
    mpz_cdiv_q_ui(q.get_mpz_t(), b.get_mpz_t(), n + 1);
    return q.get_ui();
}

Polynomial inverse_quadric(const Polynomial& q, const RingPtr& T)
{
    if (!q.is_homogeneous(2)) throw std::invalid_argument("inverse_quadric: input is not a quadratic form");
    const std::size_t n = q.ring()->nvars();
    const Field& F = q.field();
    ScalarMatrix aug(F, n, 2 * n);
    const Scalar half = F.inv(F.from_int(2));
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (Exponent k = 0; k < m[i]; ++k) idx.push_back(i);
        if (idx[0] == idx[1]) {
            aug(idx[0], idx[0]) = c;
        } else {
            aug(idx[0], idx[1]) = F.mul(c, half);
            aug(idx[1], idx[0]) = F.mul(c, half);
        }
    }
    for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = 1;
    auto kr = rref_kernel(aug);
    if (kr.rank < n || kr.pivots[n - 1] != n - 1) throw std::domain_error("inverse_quadric: degenerate quadric");
    const Scalar quarter = F.inv(F.from_int(4));
    Polynomial r(T);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& b = kr.rref[i][n + j];
            if (b == 0) continue;
            Monomial m(n);
            m[i] += 1;
            m[j] += 1;
            r.add_term(m, F.mul(b, quarter));
        }
    return r;
}

Polynomial polar_form(const Polynomial& f, const Polynomial& l, const RingPtr& T)
{
    int d = f.degree();
    if (d < 0 || d % 2 != 0) throw std::invalid_argument("polar_form: form of even degree expected");
    unsigned k = static_cast<unsigned>(d) / 2;
    auto sol = solve(catalecticant(f, k), coordinates(l.pow(k), k));
    if (!sol || !sol->unique) throw std::domain_error("polar_form: middle catalecticant is singular");
    return from_coordinates(T, k, sol->x);
}

PolarityData conjugate_form(const Polynomial& f, const RingPtr& T)
{
    const std::size_t n = f.ring()->nvars();
    const Field& F = f.field();
    ScalarMatrix omega = catalecticant(f, 2);
    const std::size_t N = omega.rows();
    if (omega.cols() != N) throw std::invalid_argument("conjugate_form: quartic expected");
    ScalarMatrix aug(F, N, 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) aug(i, j) = omega(i, j);
        aug(i, N + i) = 1;
    }
    auto kr = rref_kernel(aug);
    if (kr.rank < N || kr.pivots[N - 1] != N - 1) throw std::domain_error("conjugate_form: Omega_f is singular");
    ScalarMatrix winv(F, N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) winv(i, j) = kr.rref[i][N + j];

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i));
    RingPtr yz = Ring::make(F, names);

    const auto& mons = monomial_basis(n, 2).monomials;
    auto lift = [&](const Monomial& m, std::size_t offset) {
        Monomial r(2 * n);
        for (std::size_t i = 0; i < n; ++i) r[offset + i] = m[i];
        return r;
    };
    // Coefficient of x^b in (sum y_i x_i)^2 is (2/b!) y^b; y^a applied to
    // (sum z_i x_i)^2 gives 2 z^a.
    std::vector<Polynomial> lsq(N, Polynomial(yz));
    for (std::size_t b = 0; b < N; ++b) {
        bool square = false;
        for (std::size_t i = 0; i < n; ++i) square = square || mons[b][i] == 2;
        lsq[b] = Polynomial::term(yz, lift(mons[b], 0), square ? 1 : 2);
    }
    Polynomial qf(yz);
    for (std::size_t a = 0; a < N; ++a) {
        Polynomial g(yz);
        for (std::size_t b = 0; b < N; ++b)
            if (winv(a, b) != 0) g += lsq[b].scaled(winv(a, b));
        qf += g * Polynomial::term(yz, lift(mons[a], n), 2);
    }
    std::vector<Polynomial> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(Polynomial::variable(T, i));
    for (std::size_t i = 0; i < n; ++i) diag.push_back(Polynomial::variable(T, i));
    Polynomial finv = qf.substitute(diag);
    return PolarityData{f, omega, winv, yz, qf, finv};
}

EmptinessCertificate empty_in_projective_space(const GradedIdealView& ideal, unsigned d_max)
{
    const std::size_t n = ideal.ring()->nvars();
    for (unsigned d = 0; d <= d_max; ++d)
        if (ideal.dim(d) == graded_dimension(n, d)) return {true, d};
    return {false, d_max};
}

std::optional<Scalar> proportional(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const Field& F = a.field();
    Scalar c = F.div(b.leading_coeff(), a.leading_coeff());
    if (a.scaled(c) == b) return c;
    return std::nullopt;
}

bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, unsigned d)
{
    const RingPtr& R = !a.empty() ? a.front().ring() : b.front().ring();
    std::vector<Vector> va, vb;
    for (const auto& p : a) va.push_back(coordinates(p, d));
    for (const auto& p : b) vb.push_back(coordinates(p, d));
    return span_equal(R->field(), graded_dimension(R->nvars(), d), va, vb);
}

PolyMatrix jacobian(const std::vector<Polynomial>& ps)
{
    const RingPtr& R = ps.front().ring();
    PolyMatrix J(R, ps.size(), R->nvars());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < R->nvars(); ++j) J(i, j) = ps[i].differentiate(j);
    return J;
}

} // namespace apolar
