#include "apolar/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "apolar/linalg.hpp"

namespace apolar {

// ---- BaseClass -------------------------------------------------------------

BaseClass BaseClass::operator+(const BaseClass& o) const
{
    return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

BaseClass BaseClass::operator-(const BaseClass& o) const { return *this + (-o); }

BaseClass BaseClass::operator-() const { return scaled(-1); }

BaseClass BaseClass::operator*(const BaseClass& o) const
{
    return {c_[0] * o.c_[0], c_[0] * o.c_[1] + c_[1] * o.c_[0], c_[0] * o.c_[2] + c_[2] * o.c_[0],
            c_[0] * o.c_[3] + c_[3] * o.c_[0] + c_[1] * o.c_[2] + c_[2] * o.c_[1]};
}

BaseClass BaseClass::scaled(const Scalar& s) const { return {s * c_[0], s * c_[1], s * c_[2], s * c_[3]}; }

BaseClass BaseClass::pow(unsigned e) const
{
    BaseClass r = one();
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

BaseClass BaseClass::part(unsigned d) const
{
    switch (d) {
    case 0: return {c_[0], 0, 0, 0};
    case 1: return {0, c_[1], c_[2], 0};
    case 2: return {0, 0, 0, c_[3]};
    default: return {};
    }
}

std::string BaseClass::str() const
{
    static const char* names[] = {"", "h1", "h2", "h1h2"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        std::string coeff = to_string(c_[i]);
        if (!out.empty()) {
            if (coeff[0] == '-') {
                out += " - ";
                coeff.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) out += coeff;
        else out += (coeff == "1" ? "" : coeff == "-1" ? "-" : coeff) + names[i];
    }
    return out.empty() ? "0" : out;
}

// ---- BundleClass -----------------------------------------------------------

BundleClass BundleClass::line(const Scalar& a, const Scalar& b)
{
    return split({BaseClass::divisor(a, b)});
}

BundleClass BundleClass::trivial(unsigned rank) { return split(std::vector<BaseClass>(rank)); }

BundleClass BundleClass::split(const std::vector<BaseClass>& roots)
{
    BundleClass v;
    v.rank_ = static_cast<unsigned>(roots.size());
    for (const auto& r : roots) v.c_ = v.c_ * (BaseClass::one() + r);
    v.roots_ = roots;
    return v;
}

BundleClass BundleClass::from_chern(unsigned rank, const BaseClass& total)
{
    if (total[0] != 1) throw std::invalid_argument("total Chern class must start with 1");
    BundleClass v;
    v.rank_ = rank;
    v.c_ = total;
    return v;
}

const std::vector<BaseClass>& BundleClass::roots() const
{
    if (!roots_) throw std::logic_error("bundle is not given as a sum of line bundles");
    return *roots_;
}

BundleClass BundleClass::operator+(const BundleClass& o) const
{
    if (roots_ && o.roots_) {
        auto r = *roots_;
        r.insert(r.end(), o.roots_->begin(), o.roots_->end());
        return split(r);
    }
    return from_chern(rank_ + o.rank_, c_ * o.c_);
}

BundleClass BundleClass::dual() const
{
    if (roots_) {
        std::vector<BaseClass> r;
        for (const auto& x : *roots_) r.push_back(-x);
        return split(r);
    }
    return from_chern(rank_, c(0) - c(1) + c(2));
}

BundleClass BundleClass::twist(const Scalar& a, const Scalar& b) const
{
    BaseClass l = BaseClass::divisor(a, b);
    if (roots_) {
        std::vector<BaseClass> r;
        for (const auto& x : *roots_) r.push_back(x + l);
        return split(r);
    }
    // c(V (x) L) = sum_i c_i (1 + l)^(r - i), truncated at degree 2.
    BaseClass total;
    for (unsigned i = 0; i <= std::min(rank_, 2u); ++i)
        total = total + c(i) * (BaseClass::one() + l).pow(rank_ - i);
    return from_chern(rank_, total);
}

BundleClass BundleClass::sym(unsigned k) const
{
    const auto& r = roots();
    std::vector<BaseClass> out;
    // Multisets of size k from the roots, as non-decreasing index sequences.
    std::vector<std::size_t> idx(k, 0);
    if (r.empty()) return trivial(k == 0 ? 1 : 0);
    while (true) {
        BaseClass s;
        for (auto i : idx) s = s + r[i];
        out.push_back(s);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == r.size() - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
    }
    return split(out);
}

BundleClass BundleClass::wedge2() const
{
    const auto& r = roots();
    std::vector<BaseClass> out;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) out.push_back(r[i] + r[j]);
    return split(out);
}

std::string BundleClass::summands() const
{
    std::map<std::pair<Scalar, Scalar>, unsigned> count;
    for (const auto& x : roots()) ++count[{x[1], x[2]}];
    std::string out;
    for (const auto& [ab, m] : count) {
        if (!out.empty()) out += " + ";
        if (m > 1) out += std::to_string(m);
        out += "O(" + to_string(ab.first) + "," + to_string(ab.second) + ")";
    }
    return out;
}

BundleClass cotangent() { return BundleClass::line(-2, 0) + BundleClass::line(0, -2); }

// Sym^k Omega(3,3) means (Sym^k Omega) (x) O(3,3).
BundleClass bundle_E_dual() { return cotangent().sym(3).twist(3, 3) + cotangent().sym(2).twist(3, 3); }

BundleClass bundle_E6()
{
    return BundleClass::line(-2, 3) + BundleClass::trivial(4) + BundleClass::line(2, -3);
}

BundleClass bundle_V3() { return BundleClass::line(-2, 3) + BundleClass::line(0, -2) + BundleClass::line(0, -2); }

BaseClass osculating_divisor()
{
    return cotangent().sym(2).twist(3, 3).c(1) + cotangent().twist(3, 3).c(1) + BundleClass::line(3, 3).c(1);
}

// ---- Chern class identities in a ring --------------------------------------

namespace {

Scalar binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(b);
}

} // namespace

std::vector<Polynomial> twist_chern(const std::vector<Polynomial>& c, const Polynomial& l)
{
    const unsigned r = static_cast<unsigned>(c.size());
    const RingPtr& R = l.ring();
    auto ci = [&](unsigned i) { return i == 0 ? Polynomial::constant(R, 1) : c[i - 1]; };
    std::vector<Polynomial> out;
    for (unsigned m = 1; m <= r; ++m) {
        Polynomial acc(R);
        for (unsigned i = 0; i <= m; ++i) acc += binomial(r - i, m - i) * (ci(i) * l.pow(m - i));
        out.push_back(acc);
    }
    return out;
}

std::array<Polynomial, 3> wedge2_rank3(const std::array<Polynomial, 3>& c)
{
    const Scalar two(2);
    return {two * c[0], c[0] * c[0] + c[1], c[0] * c[1] - c[2]};
}

// ---- GrassmannBundle ---------------------------------------------------------

namespace {

RingPtr grassmann_ring(unsigned k)
{
    std::vector<std::string> names{"h1", "h2"};
    for (unsigned i = 1; i <= k; ++i) names.push_back("u" + std::to_string(i));
    return Ring::make(Field::rationals(), names);
}

} // namespace

GrassmannBundle::GrassmannBundle(const BundleClass& E, unsigned k, bool over_base)
    : k_(k), n_(E.rank()), over_base_(over_base), ring_(grassmann_ring(k)), cE_(E.chern())
{
    if (k == 0 || k >= n_) throw std::invalid_argument("need 0 < k < rank E");
    dim_ = k_ * (n_ - k_) + (over_base_ ? 2 : 0);

    // Segre classes of U: s_0 = 1, s_d = -(u1 s_{d-1} + ... + uk s_{d-k}).
    s_.push_back(Polynomial::constant(ring_, 1));
    for (unsigned d = 1; d <= dim_; ++d) {
        Polynomial acc(ring_);
        for (unsigned i = 1; i <= std::min(d, k_); ++i) acc -= u(i) * s_[d - i];
        s_.push_back(acc);
    }
    for (unsigned j = n_ - k_ + 1; j <= dim_; ++j) relations_.push_back(quotient_chern(j));

    for (unsigned d = 0; d <= dim_; ++d) {
        Piece piece;
        piece.monomials = monomials_of_weight(d);
        for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], i);
        std::vector<Vector> rows;
        for (const auto& rel : relations_) {
            unsigned w = static_cast<unsigned>(weighted_degree(rel));
            if (w > d) continue;
            for (const auto& m : monomials_of_weight(d - w)) {
                Polynomial p = truncate(rel.times_monomial(m));
                if (p.is_zero()) continue;
                Vector v(piece.monomials.size());
                for (const auto& [mm, c] : p.terms()) v[piece.index.at(mm)] = c;
                rows.push_back(std::move(v));
            }
        }
        if (!rows.empty()) {
            auto kr = rref_kernel(ScalarMatrix(Field::rationals(), piece.monomials.size(), rows));
            piece.rows = kr.rref;
            piece.pivots = kr.pivots;
        }
        pieces_.push_back(std::move(piece));
    }
    if (standard_monomials(dim_).size() != 1)
        throw std::logic_error("top degree of the Grassmann bundle is not one-dimensional");

    Polynomial pt = quotient_chern(n_ - k_).pow(k_);
    if (over_base_) pt = pt * h1() * h2();
    auto v = reduce(truncate(pt), dim_);
    for (const auto& c : v)
        if (c != 0) point_ = c;
    if (point_ == 0) throw std::logic_error("point class reduces to zero");
}

Polynomial GrassmannBundle::h1() const { return Polynomial::variable(ring_, 0); }
Polynomial GrassmannBundle::h2() const { return Polynomial::variable(ring_, 1); }
Polynomial GrassmannBundle::u(unsigned i) const { return Polynomial::variable(ring_, 1 + i); }
Polynomial GrassmannBundle::xi() const { return -u(1); }

Polynomial GrassmannBundle::lift(const BaseClass& b) const
{
    Polynomial p = Polynomial::constant(ring_, b[0]) + b[1] * h1() + b[2] * h2() + b[3] * (h1() * h2());
    return truncate(p);
}

std::array<Polynomial, 3> GrassmannBundle::dual_chern() const
{
    if (k_ != 3) throw std::logic_error("dual_chern is written for rank 3");
    return {-u(1), u(2), -u(3)};
}

unsigned GrassmannBundle::weight(const Monomial& m) const
{
    unsigned w = m[0] + m[1];
    for (unsigned i = 1; i <= k_; ++i) w += i * m[1 + i];
    return w;
}

int GrassmannBundle::weighted_degree(const Polynomial& p) const
{
    int best = -1;
    for (const auto& [m, c] : p.terms()) best = std::max(best, static_cast<int>(weight(m)));
    return best;
}

bool GrassmannBundle::is_weighted_homogeneous(const Polynomial& p) const
{
    int w = -1;
    for (const auto& [m, c] : p.terms()) {
        int x = static_cast<int>(weight(m));
        if (w >= 0 && x != w) return false;
        w = x;
    }
    return true;
}

Polynomial GrassmannBundle::truncate(const Polynomial& p) const
{
    Polynomial out(ring_);
    const unsigned cap = over_base_ ? 1 : 0;
    for (const auto& [m, c] : p.terms())
        if (m[0] <= cap && m[1] <= cap) out.add_term(m, c);
    return out;
}

Polynomial GrassmannBundle::quotient_chern(unsigned j) const
{
    if (j >= s_.size()) return Polynomial(ring_);
    Polynomial acc = s_[j];
    if (j >= 1) acc += lift(cE_.part(1)) * s_[j - 1];
    if (j >= 2) acc += lift(cE_.part(2)) * s_[j - 2];
    return truncate(acc);
}

std::vector<Monomial> GrassmannBundle::monomials_of_weight(unsigned d) const
{
    std::vector<Monomial> out;
    const unsigned cap = over_base_ ? 1 : 0;
    // Recursive fill of u_k, ..., u_1 exponents for the weight left after the h's.
    std::vector<Exponent> e(2 + k_, 0);
    auto fill = [&](auto&& self, unsigned var, unsigned left) -> void {
        if (var == 1) {
            e[2] = static_cast<Exponent>(left);
            out.emplace_back(e);
            return;
        }
        for (unsigned x = 0; x * var <= left; ++x) {
            e[1 + var] = static_cast<Exponent>(x);
            self(self, var - 1, left - x * var);
        }
        e[1 + var] = 0;
    };
    for (unsigned a = 0; a <= cap; ++a)
        for (unsigned b = 0; b <= cap; ++b) {
            if (a + b > d) continue;
            e[0] = static_cast<Exponent>(a);
            e[1] = static_cast<Exponent>(b);
            fill(fill, k_, d - a - b);
        }
    // Powers of u1 first, so that they are the ones eliminated.
    std::sort(out.begin(), out.end(), [this](const Monomial& x, const Monomial& y) {
        for (unsigned i = 1; i <= k_; ++i)
            if (x[1 + i] != y[1 + i]) return x[1 + i] > y[1 + i];
        if (x[0] != y[0]) return x[0] > y[0];
        return x[1] > y[1];
    });
    return out;
}

std::vector<Scalar> GrassmannBundle::reduce(const Polynomial& homogeneous, unsigned d) const
{
    const Piece& piece = pieces_.at(d);
    std::vector<Scalar> v(piece.monomials.size());
    for (const auto& [m, c] : homogeneous.terms()) v[piece.index.at(m)] += c;
    for (std::size_t r = 0; r < piece.rows.size(); ++r) {
        Scalar f = v[piece.pivots[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (piece.rows[r][j] != 0) v[j] -= f * piece.rows[r][j];
    }
    return v;
}

std::vector<Monomial> GrassmannBundle::standard_monomials(unsigned d) const
{
    if (d > dim_) return {};
    const Piece& piece = pieces_.at(d);
    std::vector<bool> pivot(piece.monomials.size(), false);
    for (auto p : piece.pivots) pivot[p] = true;
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < piece.monomials.size(); ++i)
        if (!pivot[i]) out.push_back(piece.monomials[i]);
    return out;
}

Polynomial GrassmannBundle::normal_form(const Polynomial& p) const
{
    Polynomial t = truncate(p.in_ring(ring_));
    std::map<unsigned, Polynomial> parts;
    for (const auto& [m, c] : t.terms()) {
        unsigned w = weight(m);
        if (w > dim_) continue; // beyond the dimension every class vanishes
        auto it = parts.try_emplace(w, ring_).first;
        it->second.add_term(m, c);
    }
    Polynomial out(ring_);
    for (const auto& [w, part] : parts) {
        auto v = reduce(part, w);
        const auto& mons = pieces_.at(w).monomials;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) out.add_term(mons[i], v[i]);
    }
    return out;
}

GrassmannBundle::Integral GrassmannBundle::integrate(const Polynomial& p) const
{
    Polynomial top(ring_);
    const Polynomial t = truncate(p.in_ring(ring_));
    for (const auto& [m, c] : t.terms())
        if (weight(m) == dim_) top.add_term(m, c);
    if (top.is_zero()) return {Scalar(0), false};
    auto v = reduce(top, dim_);
    Scalar s = 0;
    for (const auto& c : v) s += c;
    return {Scalar(s / point_), true};
}

Scalar GrassmannBundle::degree(const Polynomial& p) const
{
    Polynomial t = truncate(p.in_ring(ring_));
    if (t.is_zero()) return 0;
    if (!is_weighted_homogeneous(t) || weighted_degree(t) != static_cast<int>(dim_))
        throw std::invalid_argument("integrand has codimension " + std::to_string(weighted_degree(t)) +
                                    ", expected " + std::to_string(dim_));
    return integrate(t).value;
}

// ---- degree computations -----------------------------------------------------

namespace {

std::array<Polynomial, 3> wedge2_dual_universal(const GrassmannBundle& G)
{
    return wedge2_rank3(G.dual_chern());
}

Polynomial c3_twisted(const GrassmannBundle& G, const Polynomial& l)
{
    auto w = wedge2_dual_universal(G);
    return twist_chern({w[0], w[1], w[2]}, l)[2];
}

DegreeResult evaluate(const GrassmannBundle& G, const Polynomial& integrand)
{
    Polynomial t = G.truncate(integrand);
    return {G.degree(t), G.normal_form(t).str()};
}

const GrassmannBundle& main_bundle()
{
    static const GrassmannBundle G(bundle_E_dual().dual(), 3);
    return G;
}

const GrassmannBundle& special_bundle()
{
    static const GrassmannBundle G(bundle_E6(), 3);
    return G;
}

Polynomial main_divisor_power(const GrassmannBundle& G)
{
    return G.truncate((G.xi() + Scalar(10) * G.h1() + Scalar(10) * G.h2()).pow(5));
}

Polynomial degeneracy(const GrassmannBundle& G, const Polynomial& c1, const Polynomial& c2, const Polynomial& c3)
{
    return G.truncate(c2 * c1 - Scalar(2) * c3);
}

} // namespace

DegreeResult degree_main()
{
    const auto& G = main_bundle();
    Polynomial c9 = G.truncate(c3_twisted(G, Polynomial(G.ring())) * c3_twisted(G, Scalar(-2) * G.h1()));
    c9 = G.truncate(c9 * c3_twisted(G, Scalar(-2) * G.h2()));
    return evaluate(G, c9 * main_divisor_power(G));
}

DegreeResult degree_main_untwisted()
{
    const auto& G = main_bundle();
    Polynomial w3 = wedge2_dual_universal(G)[2];
    return evaluate(G, w3.pow(3) * main_divisor_power(G));
}

SpecialDegrees degree_special()
{
    const auto& G = special_bundle();
    SpecialDegrees out;
    Polynomial LG = wedge2_dual_universal(G)[2];
    Polynomial D = Scalar(7) * G.h1() + Scalar(3) * G.h2() + G.xi();
    Polynomial D4 = G.truncate(D.pow(4)), D5 = G.truncate(D.pow(5));
    Polynomial fU = degeneracy(G, G.u(1), G.u(2), G.u(3));
    BundleClass V3 = bundle_V3();
    Polynomial fV = degeneracy(G, G.lift(V3.c(1)), G.lift(V3.c(2)), Polynomial(G.ring()));

    out.total = evaluate(G, LG * D5 * fU);
    out.v3_term = evaluate(G, LG * D5 * fV);
    out.ruling_h1 = evaluate(G, LG * D4 * G.h1() * fU);
    out.ruling_h2 = evaluate(G, LG * D4 * G.h2() * fU);

    const Polynomial& x = G.xi();
    Polynomial expected = x.pow(5) + Scalar(35) * (G.h1() * x.pow(4)) + Scalar(420) * (x.pow(3) * G.h1() * G.h2()) +
                          Scalar(15) * (x.pow(4) * G.h2());
    out.expansion_ok = D5 == G.truncate(expected);
    return out;
}

Polynomial third_degeneracy_class()
{
    const auto& G = special_bundle();
    Polynomial c1 = G.u(1), c2 = G.u(2), c3 = G.u(3);
    Polynomial zero(G.ring()); // c4 and c5 of a rank-3 bundle
    Polynomial cls = c1 * c2 * c3 - Scalar(2) * (c1 * c1 * zero) + Scalar(2) * (c2 * zero) +
                     Scalar(2) * (c1 * zero) - Scalar(2) * (c3 * c3);
    return G.normal_form(cls);
}

} // namespace apolar
