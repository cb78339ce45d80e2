#include "property_suites.hpp"

#include <functional>
#include <random>

#include "apolar/apolarity.hpp"
#include "apolar/chow.hpp"

namespace apolar::props {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Scalar random_scalar(Rng& rng, const Field& F, long bound = 9)
{
    Scalar v(uniform(rng, -bound, bound), uniform(rng, 1, 4));
    v.canonicalize();
    return F.from(v);
}

Polynomial random_polynomial(Rng& rng, const RingPtr& R, unsigned max_deg, std::size_t terms)
{
    Polynomial p(R);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(R->nvars());
        unsigned d = static_cast<unsigned>(uniform(rng, 0, max_deg));
        for (unsigned i = 0; i < d; ++i) ++m[static_cast<std::size_t>(uniform(rng, 0, R->nvars() - 1))];
        p += Polynomial::term(R, m, random_scalar(rng, R->field()));
    }
    return p;
}

Polynomial random_form(Rng& rng, const RingPtr& R, unsigned d, long bound)
{
    Polynomial p(R);
    for (const auto& m : monomials_of_degree(R->nvars(), d))
        p += Polynomial::term(R, m, R->field().from_int(uniform(rng, -bound, bound)));
    return p;
}

// Runs `cases` instances of `body`, which returns an empty string on success.
SuiteResult run_suite(std::string name, std::size_t cases, const std::function<std::string(std::size_t)>& body)
{
    SuiteResult r{std::move(name), cases, 0, {}};
    for (std::size_t i = 0; i < cases; ++i) {
        std::string why;
        try {
            why = body(i);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) continue;
        if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + why;
    }
    return r;
}

} // namespace

SuiteResult ring_axioms(std::uint64_t seed, std::size_t cases)
{
    Rng rng(seed);
    const std::vector<Field> fields{Field::rationals(), Field::prime(101)};
    return run_suite("polynomial ring axioms", cases, [&](std::size_t i) -> std::string {
        const Field& F = fields[i % 2];
        auto R = Ring::indexed(F, "x", static_cast<std::size_t>(uniform(rng, 1, 4)));
        auto a = random_polynomial(rng, R, 4, 5), b = random_polynomial(rng, R, 4, 5), c = random_polynomial(rng, R, 3, 4);
        Polynomial zero(R), one = Polynomial::constant(R, F.one());
        if (a + b != b + a) return "addition not commutative";
        if ((a + b) + c != a + (b + c)) return "addition not associative";
        if (a * b != b * a) return "multiplication not commutative";
        if ((a * b) * c != a * (b * c)) return "multiplication not associative";
        if (a * (b + c) != a * b + a * c) return "not distributive";
        if (a + zero != a || a * one != a || a - a != zero) return "identities";
        if ((a + b) - b != a) return "subtraction";
        if (a.pow(3) != a * a * a) return "pow";
        std::size_t v = static_cast<std::size_t>(uniform(rng, 0, R->nvars() - 1));
        if ((a * b).differentiate(v) != a.differentiate(v) * b + a * b.differentiate(v)) return "Leibniz rule";
        std::vector<Scalar> pt;
        for (std::size_t k = 0; k < R->nvars(); ++k) pt.push_back(random_scalar(rng, F));
        if ((a * b).evaluate(pt) != F.mul(a.evaluate(pt), b.evaluate(pt))) return "evaluation not multiplicative";
        if (!a.is_zero() && !b.is_zero() && (a * b).degree() != a.degree() + b.degree()) return "degree of product";
        return {};
    });
}

SuiteResult pairing_perfectness(std::uint64_t seed, std::size_t cases)
{
    Rng rng(seed);
    return run_suite("apolarity pairing perfectness", cases, [&](std::size_t i) -> std::string {
        const Field F = i % 3 == 2 ? Field::prime(101) : Field::rationals();
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        unsigned d = static_cast<unsigned>(uniform(rng, 1, n >= 4 ? 5 : 6));
        DualPair P = DualPair::make(F, n);
        // The full pairing T_d x S_d is the catalecticant Cat_{d,0} of f read
        // as a bilinear form; on monomials it is diagonal with entries alpha!.
        auto f = random_form(rng, P.S, d, 50);
        auto mons = monomials_of_degree(n, d);
        const auto& m = mons[static_cast<std::size_t>(uniform(rng, 0, mons.size() - 1))];
        Polynomial y = Polynomial::term(P.T, m, F.one()), x = Polynomial::term(P.S, m, F.one());
        Scalar fact = F.one();
        for (std::size_t k = 0; k < n; ++k)
            for (unsigned e = 1; e <= m[k]; ++e) fact = F.mul(fact, F.from_int(e));
        if (contract(y, x) != Polynomial::constant(P.S, fact)) return "monomial pairing is not alpha!";
        for (const auto& other : mons)
            if (other != m && !contract(y, Polynomial::term(P.S, other, F.one())).is_zero()) return "monomial pairing not diagonal";
        // A general form has catalecticants of maximal rank.  Over Z/101 a
        // random form is not general often enough to test this.
        if (F.is_prime()) return {};
        unsigned a = static_cast<unsigned>(uniform(rng, 0, d));
        std::size_t want = std::min(graded_dimension(n, a), graded_dimension(n, d - a));
        std::size_t got = rank(catalecticant(f, a));
        if (got != want) return "Cat_" + std::to_string(a) + " rank " + std::to_string(got) + " of " + std::to_string(want);
        return {};
    });
}

SuiteResult rref_postconditions(std::uint64_t seed, std::size_t cases)
{
    Rng rng(seed);
    return run_suite("rref and kernel postconditions", cases, [&](std::size_t i) -> std::string {
        const Field F = i % 2 ? Field::prime(101) : Field::rationals();
        std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 7)), cols = static_cast<std::size_t>(uniform(rng, 1, 7));
        std::size_t target = static_cast<std::size_t>(uniform(rng, 0, std::min(rows, cols)));
        // Product of random rows x target and target x cols matrices, so low
        // rank occurs often.
        ScalarMatrix A(F, rows, target), B(F, target, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < target; ++c) A(r, c) = random_scalar(rng, F, 5);
        for (std::size_t r = 0; r < target; ++r)
            for (std::size_t c = 0; c < cols; ++c) B(r, c) = random_scalar(rng, F, 5);
        ScalarMatrix M = target ? A * B : ScalarMatrix(F, rows, cols);
        auto k = rref_kernel(M);
        if (k.rank + k.kernel.size() != cols) return "rank-nullity";
        if (k.rank != rank(M.transpose())) return "row rank differs from column rank";
        if (k.rank > target) return "rank exceeds the factorization bound";
        for (const auto& v : k.kernel)
            for (const auto& e : M * v)
                if (e != 0) return "kernel vector not annihilated";
        for (std::size_t r = 0; r < k.rref.size(); ++r) {
            if (k.rref[r][k.pivots[r]] != 1) return "pivot not 1";
            for (std::size_t s = 0; s < k.rref.size(); ++s)
                if (s != r && k.rref[s][k.pivots[r]] != 0) return "pivot column not cleared";
            for (std::size_t c = 0; c < k.pivots[r]; ++c)
                if (k.rref[r][c] != 0) return "entry left of pivot";
            if (r > 0 && k.pivots[r] <= k.pivots[r - 1]) return "pivots not increasing";
        }
        if (!span_equal(F, cols, k.rref, [&] {
                std::vector<Vector> rs;
                for (std::size_t r = 0; r < rows; ++r) rs.push_back(M.row(r));
                return rs;
            }()))
            return "rref changes the row space";
        return {};
    });
}

SuiteResult chow_confluence(std::uint64_t seed, std::size_t cases)
{
    Rng rng(seed);
    static const GrassmannBundle bundles[] = {
        GrassmannBundle(bundle_E6(), 3),
        GrassmannBundle(bundle_E_dual(), 3),
        GrassmannBundle(BundleClass::trivial(5), 2, false),
        GrassmannBundle(bundle_V3(), 1),
    };
    return run_suite("Chow ring normal-form confluence", cases, [&](std::size_t i) -> std::string {
        const auto& G = bundles[i % 4];
        const auto& R = G.ring();
        auto a = random_polynomial(rng, R, 4, 4), b = random_polynomial(rng, R, 3, 3);
        auto na = G.normal_form(a), nb = G.normal_form(b);
        if (G.normal_form(na) != na) return "normal form not idempotent";
        if (G.normal_form(a + b) != na + nb) return "normal form not additive";
        if (G.normal_form(a * b) != G.normal_form(na * nb)) return "products depend on representatives";
        const auto& rels = G.relations();
        if (!rels.empty()) {
            const auto& rel = rels[static_cast<std::size_t>(uniform(rng, 0, rels.size() - 1))];
            auto shifted = a + rel * random_polynomial(rng, R, 2, 2);
            if (G.normal_form(shifted) != na) return "relation multiple changes the normal form";
        }
        if (G.normal_form(G.h1() * G.h1()) != Polynomial(R)) return "h1^2 survives";
        return {};
    });
}

SuiteResult whitney_formula(std::uint64_t seed, std::size_t cases)
{
    Rng rng(seed);
    auto random_split = [&rng](unsigned rank) {
        std::vector<BaseClass> roots;
        for (unsigned i = 0; i < rank; ++i) roots.push_back(BaseClass::divisor(uniform(rng, -4, 4), uniform(rng, -4, 4)));
        return BundleClass::split(roots);
    };
    return run_suite("Whitney formula and twisting", cases, [&](std::size_t) -> std::string {
        auto E = random_split(static_cast<unsigned>(uniform(rng, 1, 4)));
        auto F = random_split(static_cast<unsigned>(uniform(rng, 1, 4)));
        auto loose = [](const BundleClass& b) { return BundleClass::from_chern(b.rank(), b.chern()); };
        if ((E + F).chern() != E.chern() * F.chern()) return "c(E + F) != c(E) c(F)";
        if ((loose(E) + loose(F)).chern() != (E + F).chern()) return "sum of unsplit classes";
        Scalar a = uniform(rng, -3, 3), b = uniform(rng, -3, 3);
        if (loose(E).twist(a, b).chern() != E.twist(a, b).chern()) return "twist formula differs from the roots";
        if (loose(E).dual().chern() != E.dual().chern()) return "dual formula differs from the roots";
        if (E.dual().dual().chern() != E.chern()) return "double dual";
        unsigned r = E.rank();
        if (E.sym(2).rank() != r * (r + 1) / 2 || E.wedge2().rank() != r * (r - 1) / 2) return "ranks of Sym^2, wedge^2";
        // c1(Sym^2 E) = (r + 1) c1(E) and c1(wedge^2 E) = (r - 1) c1(E).
        if (E.sym(2).c(1) != E.c(1).scaled(r + 1) || E.wedge2().c(1) != E.c(1).scaled(Scalar(r) - 1))
            return "first Chern class of Sym^2 or wedge^2";
        return {};
    });
}

std::vector<SuiteResult> run_all()
{
    return {
        ring_axioms(0x1001, 400),
        pairing_perfectness(0x2002, 250),
        rref_postconditions(0x3003, 300),
        chow_confluence(0x4004, 200),
        whitney_formula(0x5005, 200),
    };
}

} // namespace apolar::props
