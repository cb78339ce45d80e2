#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "apolar/fixtures.hpp"
#include "apolar/unfolding.hpp"

namespace apolar {

UnfoldCase UnfoldCase::ternary()
{
    UnfoldCase c{UnfoldTag::ternary_cubic, DualPair::make(Field::rationals(), 3), Polynomial()};
    c.q = parse_polynomial(c.pair.S, "x0^2 + x1*x2");
    c.r = 3;
    c.gen_degree = 4;
    c.dist_var = 2;
    c.kept = 5;
    c.extension = 4;
    c.n_a = 20;
    c.n_b = 20;
    return c;
}

UnfoldCase UnfoldCase::quaternary()
{
    UnfoldCase c{UnfoldTag::quaternary_square, DualPair::make(Field::rationals(), 4), Polynomial()};
    c.q = parse_polynomial(c.pair.S, "x0^2 - x1^2 + x2*x3");
    c.r = 2;
    c.gen_degree = 3;
    c.dist_var = 3;
    c.kept = 10;
    c.extension = 5;
    c.n_a = 50;
    c.n_b = 150;
    return c;
}

std::string UnfoldCase::name() const
{
    return tag == UnfoldTag::ternary_cubic ? "ternary" : "quaternary";
}

std::vector<Polynomial> UnfoldCase::generators() const
{
    return load_poly_list(pair.T, fixture("J.txt"));
}

// ---------------------------------------------------------------------------

namespace {

// Degree-d forms G with G(y_dist = 1) annihilating f0.
std::vector<Polynomial> dehomogenized_annihilators(const Polynomial& f0, const RingPtr& T, std::size_t dist,
                                                   unsigned d)
{
    const auto& mons = monomial_basis(T->nvars(), d).monomials;
    std::map<Monomial, std::size_t, GrevlexGreater> row_of;
    std::vector<Polynomial> images;
    for (const auto& m : mons) {
        Monomial mm = m;
        mm[dist] = 0;
        images.push_back(contract(Polynomial::term(T, mm, 1), f0));
        for (const auto& t : images.back().terms()) row_of.try_emplace(t.first, row_of.size());
    }
    ScalarMatrix A(T->field(), row_of.size(), mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j)
        for (const auto& [m, c] : images[j].terms()) A(row_of.at(m), j) = c;
    std::vector<Polynomial> out;
    for (const auto& k : rref_kernel(A).kernel) out.push_back(from_coordinates(T, d, k));
    return out;
}

} // namespace

std::vector<Polynomial> tautological_generators(const UnfoldCase& c)
{
    Polynomial f0 = twist(c.form().dehomogenize(c.dist_var), c.dist_var, 2 * c.r);
    return dehomogenized_annihilators(f0, c.pair.T, c.dist_var, c.gen_degree);
}

GradedIdealView tautological_ideal(const UnfoldCase& c)
{
    return GradedIdealView(c.pair.T, tautological_generators(c));
}

std::vector<std::vector<Polynomial>> linear_syzygies(const std::vector<Polynomial>& gens)
{
    if (gens.empty()) return {};
    const RingPtr& R = gens.front().ring();
    const std::size_t n = R->nvars();
    int d = gens.front().degree();
    for (const auto& g : gens)
        if (!g.is_homogeneous(static_cast<unsigned>(d)))
            throw std::invalid_argument("linear_syzygies: generators of one degree expected");
    const unsigned e = static_cast<unsigned>(d) + 1;
    const std::size_t k = gens.size();
    ScalarMatrix A(R->field(), graded_dimension(n, e), k * n);
    const auto& index = monomial_basis(n, e).index;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t v = 0; v < n; ++v) {
            Polynomial p = gens[i] * Polynomial::variable(R, v);
            for (const auto& [m, c] : p.terms()) A(index.at(m), i * n + v) = c;
        }
    std::vector<std::vector<Polynomial>> out;
    for (const auto& kv : rref_kernel(A).kernel) {
        std::vector<Polynomial> s(k, Polynomial(R));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t v = 0; v < n; ++v)
                if (kv[i * n + v] != 0) s[i] += Polynomial::variable(R, v).scaled(kv[i * n + v]);
        out.push_back(std::move(s));
    }
    return out;
}

bool is_syzygy(const std::vector<Polynomial>& s, const std::vector<Polynomial>& gens)
{
    if (s.size() != gens.size() || gens.empty()) return false;
    Polynomial acc(gens.front().ring());
    for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * gens[i];
    return acc.is_zero();
}

// ---------------------------------------------------------------------------

std::size_t affine_dimension(std::size_t nvars, unsigned max_deg)
{
    std::size_t total = 0;
    for (unsigned d = 0; d <= max_deg; ++d) total += graded_dimension(nvars, d);
    return total;
}

Vector affine_coordinates(const Polynomial& p, unsigned max_deg)
{
    const std::size_t n = p.ring()->nvars();
    std::vector<std::size_t> offset(max_deg + 1);
    std::size_t pos = 0;
    for (int d = static_cast<int>(max_deg); d >= 0; --d) {
        offset[d] = pos;
        pos += graded_dimension(n, static_cast<unsigned>(d));
    }
    Vector v(pos, Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        unsigned d = m.degree();
        if (d > max_deg) throw std::invalid_argument("affine_coordinates: degree too high in " + p.str());
        v[offset[d] + monomial_basis(n, d).index.at(m)] = c;
    }
    return v;
}

namespace {

Polynomial from_affine(const RingPtr& R, unsigned max_deg, const Vector& v)
{
    Polynomial p(R);
    std::size_t pos = 0;
    for (int d = static_cast<int>(max_deg); d >= 0; --d) {
        const auto& mons = monomial_basis(R->nvars(), static_cast<unsigned>(d)).monomials;
        for (const auto& m : mons) {
            if (v[pos] != 0) p.add_term(m, v[pos]);
            ++pos;
        }
    }
    return p;
}

int max_degree(const std::vector<Polynomial>& ps)
{
    int d = 0;
    for (const auto& p : ps) d = std::max(d, p.degree());
    return d;
}

// Reduced echelon basis of the span, as polynomials.
std::vector<Polynomial> echelon(const RingPtr& R, const std::vector<Polynomial>& ps, unsigned D)
{
    std::vector<Vector> vs;
    for (const auto& p : ps)
        if (!p.is_zero()) vs.push_back(affine_coordinates(p, D));
    std::vector<Polynomial> out;
    for (const auto& row : row_basis(R->field(), affine_dimension(R->nvars(), D), vs))
        out.push_back(from_affine(R, D, row));
    return out;
}

} // namespace

bool same_affine_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, unsigned max_deg)
{
    const RingPtr& R = !a.empty() ? a.front().ring() : b.front().ring();
    std::vector<Vector> va, vb;
    for (const auto& p : a) va.push_back(affine_coordinates(p, max_deg));
    for (const auto& p : b) vb.push_back(affine_coordinates(p, max_deg));
    return span_equal(R->field(), affine_dimension(R->nvars(), max_deg), va, vb);
}

GeneratorCounts minimalize(const RingPtr& R, const std::vector<Polynomial>& equations)
{
    GeneratorCounts gc;
    std::vector<Polynomial> eqs;
    for (const auto& e : equations)
        if (!e.is_zero()) eqs.push_back(e);
    gc.raw_equations = eqs.size();
    if (eqs.empty()) return gc;
    const unsigned D = static_cast<unsigned>(std::max(1, max_degree(eqs)));

    std::vector<Polynomial> W = echelon(R, eqs, D);
    gc.raw_span = W.size();
    for (const auto& w : W)
        if (w.degree() <= 1) ++gc.raw_linear;

    // Solve the linear part, substitute, and repeat while new linear
    // elements show up.
    std::vector<Polynomial> L;
    for (const auto& w : W)
        if (w.degree() <= 1) L.push_back(w);
    std::vector<Polynomial> rest = W;
    for (;;) {
        L = echelon(R, L, 1);
        gc.solved.clear();
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
        for (const auto& l : L) {
            if (l.degree() == 0) throw std::domain_error("minimalize: the equations are inconsistent");
            const Monomial& lm = l.leading_monomial();
            std::size_t v = 0;
            while (lm[v] == 0) ++v;
            Polynomial expr = -(l - Polynomial::variable(R, v)); // echelon rows are monic
            gc.solved.emplace(v, expr);
            images[v] = expr;
        }
        std::vector<Polynomial> sub;
        for (const auto& w : rest) sub.push_back(w.substitute(images));
        rest = echelon(R, sub, D);
        std::vector<Polynomial> fresh;
        for (const auto& w : rest)
            if (w.degree() <= 1) fresh.push_back(w);
        if (fresh.empty()) break;
        L.insert(L.end(), fresh.begin(), fresh.end());
    }
    gc.linear_forms = L;
    gc.linear = L.size();
    gc.residual = rest;
    for (const auto& w : rest) {
        if (w.degree() == 2) ++gc.quadratic;
        else if (w.degree() > 2) ++gc.higher;
    }
    return gc;
}

std::vector<Polynomial> low_degree_part(const std::vector<Polynomial>& gens, unsigned keep, unsigned bound)
{
    if (gens.empty()) return {};
    const RingPtr& R = gens.front().ring();
    std::vector<Vector> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const int room = static_cast<int>(bound) - g.degree();
        for (int e = 0; e <= room; ++e)
            for (const auto& m : monomial_basis(R->nvars(), static_cast<unsigned>(e)).monomials)
                rows.push_back(affine_coordinates(g.times_monomial(m), bound));
    }
    // Coordinates run from degree `bound` down to 0, so a reduced row whose
    // pivot sits in the low block has no terms of higher degree.
    const std::size_t low_start = affine_dimension(R->nvars(), bound) - affine_dimension(R->nvars(), keep);
    std::vector<Polynomial> out;
    for (const auto& row : row_basis(R->field(), affine_dimension(R->nvars(), bound), rows)) {
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        if (piv >= low_start) out.push_back(from_affine(R, bound, row));
    }
    return out;
}

std::vector<std::vector<Scalar>> rational_box_points(std::size_t dim, long bound)
{
    std::vector<std::vector<Scalar>> out;
    std::vector<long> cur(dim, -bound);
    for (;;) {
        std::vector<Scalar> p;
        for (long c : cur) p.emplace_back(c);
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < dim && cur[i] == bound) cur[i++] = -bound;
        if (i == dim) break;
        ++cur[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination shared by both cases.

namespace {

struct TriangularOutcome {
    std::map<std::size_t, Polynomial> value; // b index (in big ring) -> polynomial in a
    std::vector<bool> used;
    std::size_t unit_coefficients = 0;
};

bool is_b(const std::vector<bool>& bmask, const Monomial& m, std::size_t* which, unsigned* bdeg)
{
    unsigned deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (bmask[i] && m[i]) {
            deg += m[i];
            *which = i;
        }
    *bdeg = deg;
    return deg > 0;
}

TriangularOutcome solve_triangular(const RingPtr& R, const std::vector<Polynomial>& eqs, const std::vector<bool>& bmask)
{
    TriangularOutcome out;
    out.used.assign(eqs.size(), false);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t e = 0; e < eqs.size(); ++e) {
            if (out.used[e]) continue;
            Polynomial eq = eqs[e];
            bool touches_known = false;
            for (const auto& [m, c] : eq.terms())
                for (const auto& kv : out.value)
                    if (m[kv.first]) touches_known = true;
            if (touches_known) eq = eq.substitute(images);

            std::size_t target = 0;
            std::size_t nb = 0;
            bool pure = true;
            Scalar coeff;
            std::map<std::size_t, int> seen;
            for (const auto& [m, c] : eq.terms()) {
                std::size_t w = 0;
                unsigned bdeg = 0;
                if (!is_b(bmask, m, &w, &bdeg)) continue;
                if (bdeg != 1 || m.degree() != 1) {
                    pure = false;
                    break;
                }
                if (seen.emplace(w, 1).second) ++nb;
                target = w;
                coeff = c;
            }
            if (!pure || nb != 1) continue;
            Polynomial rest = eq - Polynomial::variable(R, target).scaled(coeff);
            Polynomial val = -rest.scaled(R->field().inv(coeff));
            if (out.value.count(target)) continue;
            out.value.emplace(target, val);
            images[target] = val;
            out.used[e] = true;
            if (coeff == 1 || coeff == -1) ++out.unit_coefficients;
            progress = true;
        }
    }
    return out;
}

} // namespace

// Shared driver: P_i = sum_j H(i, j) J_j must vanish identically.
UnfoldResult eliminate_system(RingPtr big, RingPtr params, std::vector<Polynomial> J, const PolyMatrix& H,
                              const std::vector<std::size_t>& y_vars, const std::vector<std::size_t>& b_vars)
{
    UnfoldResult res;
    res.big = big;
    res.params = params;
    res.J_a = J;
    Report& rep = res.report;

    std::vector<bool> ymask(big->nvars(), false), bmask(big->nvars(), false);
    for (auto v : y_vars) ymask[v] = true;
    for (auto v : b_vars) bmask[v] = true;

    std::vector<Polynomial> products;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        Polynomial s(big);
        for (std::size_t j = 0; j < H.cols(); ++j)
            if (!H(i, j).is_zero()) s += H(i, j) * J[j];
        products.push_back(std::move(s));
    }
    std::vector<Polynomial> eqs;
    for (const auto& p : products)
        for (auto& [m, c] : p.coefficients_in(ymask)) eqs.push_back(c);

    TriangularOutcome tri = solve_triangular(big, eqs, bmask);
    std::size_t solved = tri.value.size();
    rep.add("b-triangular", solved == b_vars.size(),
            std::to_string(solved) + " of " + std::to_string(b_vars.size()) + " b variables isolated; " +
                std::to_string(tri.unit_coefficients) + " with coefficient +-1");
    if (solved != b_vars.size())
        throw std::runtime_error("build_and_eliminate: b-system is not triangular (" + std::to_string(solved) +
                                 " of " + std::to_string(b_vars.size()) + " solved)");

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < big->nvars(); ++i) images.push_back(Polynomial::variable(big, i));
    for (const auto& [v, val] : tri.value) images[v] = val;
    for (const auto& [v, val] : tri.value) {
        res.b_names.push_back(big->name(v));
        res.b_solution.emplace(big->name(v), val.in_ring(params));
    }

    for (std::size_t e = 0; e < eqs.size(); ++e) {
        if (tri.used[e]) continue;
        Polynomial r = eqs[e].substitute(images);
        if (!r.is_zero()) res.equations.push_back(r.in_ring(params));
    }
    res.counts = minimalize(params, res.equations);
    return res;
}

UnfoldResult build_ternary(const UnfoldCase& c);
UnfoldResult build_quaternary(const UnfoldCase& c);

UnfoldResult build_and_eliminate(const UnfoldCase& c)
{
    return c.tag == UnfoldTag::ternary_cubic ? build_ternary(c) : build_quaternary(c);
}

Report verify_ternary_components(const UnfoldCase& c, const UnfoldResult& res);
Report verify_quaternary_components(const UnfoldCase& c, const UnfoldResult& res);

Report verify_components(const UnfoldCase& c, const UnfoldResult& res)
{
    return c.tag == UnfoldTag::ternary_cubic ? verify_ternary_components(c, res)
                                             : verify_quaternary_components(c, res);
}

std::vector<Polynomial> linear_substitution(const RingPtr& R, const std::vector<Polynomial>& forms)
{
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
    for (const auto& l : echelon(R, forms, 1)) {
        if (l.degree() == 0) throw std::domain_error("linear_substitution: inconsistent linear forms");
        const Monomial& lm = l.leading_monomial();
        std::size_t v = 0;
        while (lm[v] == 0) ++v;
        images[v] = -(l - Polynomial::variable(R, v));
    }
    return images;
}

std::vector<Polynomial> specialize(const UnfoldCase& c, const UnfoldResult& res, const std::vector<Scalar>& a)
{
    const RingPtr& T = c.pair.T;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < res.big->nvars(); ++i) {
        long y = T->index_of(res.big->name(i));
        long p = res.params->index_of(res.big->name(i));
        if (y >= 0) images.push_back(Polynomial::variable(T, static_cast<std::size_t>(y)));
        else if (p >= 0) images.push_back(Polynomial::constant(T, a.at(static_cast<std::size_t>(p))));
        else images.push_back(Polynomial(T));
    }
    std::vector<Polynomial> out;
    for (const auto& g : res.J_a) out.push_back(g.substitute(images));
    return out;
}

namespace {

const std::vector<std::size_t>& tautological_hilbert(const UnfoldCase& c)
{
    static std::mutex mu;
    static std::map<UnfoldTag, std::vector<std::size_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c.tag);
    if (it == cache.end()) it = cache.emplace(c.tag, tautological_ideal(c).hilbert_function(7)).first;
    return it->second;
}

std::string show(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

Report sample_point_checks(const UnfoldCase& c, const UnfoldResult& res, const std::vector<Scalar>& a)
{
    Report rep;
    std::size_t bad = 0;
    for (const auto& e : res.equations)
        if (e.evaluate(a) != 0) ++bad;
    rep.add("on-locus", bad == 0, std::to_string(bad) + " residual equations nonzero");

    std::vector<Polynomial> J = specialize(c, res, a);
    Polynomial f = c.form();
    bool apolar = true;
    for (const auto& g : J) apolar = apolar && contract(g, f).is_zero();
    rep.add("apolar", apolar);

    const std::size_t want = c.tag == UnfoldTag::ternary_cubic ? 4 : 15;
    std::size_t syz = linear_syzygies(J).size();
    rep.add("linear-syzygies", syz == want, std::to_string(syz) + " (expected " + std::to_string(want) + ")");

    auto h = GradedIdealView(c.pair.T, J).hilbert_function(7);
    rep.add("hilbert", h == tautological_hilbert(c), show(h));
    return rep;
}

} // namespace apolar
