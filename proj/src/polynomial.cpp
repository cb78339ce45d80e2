#include "apolar/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace apolar {

unsigned Monomial::degree() const
{
    return std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b)
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

namespace {

void fill_monomials(std::size_t nvars, unsigned d, std::size_t pos, Monomial& cur,
                    std::vector<Monomial>& out)
{
    if (pos + 1 == nvars) {
        cur[pos] = static_cast<Exponent>(d);
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (unsigned k = d + 1; k-- > 0;) {
        cur[pos] = static_cast<Exponent>(k);
        fill_monomials(nvars, d - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d)
{
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    Monomial cur(nvars);
    fill_monomials(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrevlexGreater());
    return out;
}

const MonomialBasis& monomial_basis(std::size_t nvars, unsigned d)
{
    static std::mutex mu;
    static std::map<std::pair<std::size_t, unsigned>, MonomialBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MonomialBasis b;
    b.monomials = monomials_of_degree(nvars, d);
    for (std::size_t i = 0; i < b.monomials.size(); ++i) b.index.emplace(b.monomials[i], i);
    return cache.emplace(key, std::move(b)).first->second;
}

// ---------------------------------------------------------------------------

Ring::Ring(Field field, std::vector<std::string> names)
    : field_(field), names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("Ring: duplicate variable name " + names_[i]);
    }
}

RingPtr Ring::make(Field field, std::vector<std::string> names)
{
    return std::make_shared<const Ring>(field, std::move(names));
}

RingPtr Ring::indexed(Field field, const std::string& prefix, std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return make(field, std::move(names));
}

long Ring::index_of(const std::string& name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const Polynomial& a, const Polynomial& b, const char* what)
{
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

} // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c)
{
    Polynomial p(ring);
    p.add_term(Monomial(ring->nvars()), ring->field().from(c));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i)
{
    if (i >= ring->nvars()) throw std::out_of_range("Polynomial::variable: index out of range");
    Monomial m(ring->nvars());
    m[i] = 1;
    Polynomial p(ring);
    p.add_term(m, Scalar(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c)
{
    Polynomial p(ring);
    p.add_term(m, ring->field().from(c));
    return p;
}

int Polynomial::degree() const
{
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty()) return true;
    return is_homogeneous(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous(unsigned d) const
{
    // Terms are sorted by degree first, so checking the extremes suffices.
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == d && terms_.rbegin()->first.degree() == d;
}

Scalar Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty()) throw std::domain_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

Scalar Polynomial::leading_coeff() const
{
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field().add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.terms_.empty()) return *this;
    if (!ring_) ring_ = o.ring_;
    require_same(*this, o, "add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.terms_.empty()) return *this;
    if (!ring_) ring_ = o.ring_;
    require_same(*this, o, "sub");
    const Field& F = field();
    for (const auto& [m, c] : o.terms_) add_term(m, F.neg(c));
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(ring_);
    if (!ring_) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field().neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    require_same(*this, o, "multiply");
    Polynomial r(ring_);
    const Field& F = field();
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, F.mul(ca, cb));
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    Polynomial r(ring_);
    if (!ring_) return r;
    Scalar cf = field().from(c);
    if (cf == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field().mul(v, cf));
    return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p)
{
    return p.scaled(c);
}

Polynomial Polynomial::times_monomial(const Monomial& mono) const
{
    Polynomial r(ring_);
    // Multiplying by a monomial preserves grevlex order.
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(ring_, Scalar(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::differentiate(std::size_t var) const
{
    if (!ring_ || var >= ring_->nvars())
        throw std::out_of_range("differentiate: variable index out of range");
    Polynomial r(ring_);
    const Field& F = field();
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, F.mul(c, F.from_int(m[var])));
    }
    return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const
{
    if (!ring_) return Scalar(0);
    if (point.size() != ring_->nvars())
        throw std::invalid_argument("evaluate: point has wrong length");
    const Field& F = field();
    std::vector<Scalar> pt;
    pt.reserve(point.size());
    for (const auto& v : point) pt.push_back(F.from(v));
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (std::size_t i = 0; i < m.size() && v != 0; ++i)
            for (Exponent k = 0; k < m[i]; ++k) v = F.mul(v, pt[i]);
        total = F.add(total, v);
    }
    return total;
}

Polynomial Polynomial::homogenize(std::size_t var, unsigned target_degree) const
{
    if (!ring_) return *this;
    if (var >= ring_->nvars()) throw std::out_of_range("homogenize: variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        unsigned d = m.degree();
        if (d > target_degree)
            throw std::invalid_argument("homogenize: term of degree " + std::to_string(d) +
                                        " exceeds target " + std::to_string(target_degree));
        Monomial h = m;
        h[var] += static_cast<Exponent>(target_degree - d);
        r.add_term(h, c);
    }
    return r;
}

Polynomial Polynomial::dehomogenize(std::size_t var) const
{
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d[var] = 0;
        r.add_term(d, c);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (!ring_ || images.size() != ring_->nvars())
        throw std::invalid_argument("substitute: need one image per variable");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    Polynomial r(target);
    // Cache powers of each image; exponents are small throughout.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, Exponent k) -> const Polynomial& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Polynomial::constant(target, Scalar(1)));
        while (pw.size() <= k) pw.push_back(pw.back() * images[i]);
        return pw[k];
    };
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * power(i, m[i]);
        r += t;
    }
    return r;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const
{
    if (!ring_) return Polynomial(target);
    std::vector<std::size_t> where(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        long j = target->index_of(ring_->name(i));
        if (j < 0) {
            bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [&](const auto& t) { return t.first[i] != 0; });
            if (used) throw std::invalid_argument("in_ring: variable " + ring_->name(i) + " missing");
            j = 0;
        }
        where[i] = static_cast<std::size_t>(j);
    }
    Polynomial r(target);
    const Field& F = target->field();
    for (const auto& [m, c] : terms_) {
        Monomial t(target->nvars());
        for (std::size_t i = 0; i < m.size(); ++i) t[where[i]] += m[i];
        r.add_term(t, F.from(c));
    }
    return r;
}

Polynomial Polynomial::part(unsigned d) const
{
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Polynomial Polynomial::divide_monomial(const Monomial& mono) const
{
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (!mono.divides(m)) throw std::domain_error("divide_monomial: term not divisible");
        r.terms_.emplace_hint(r.terms_.end(), m / mono, c);
    }
    return r;
}

std::map<Monomial, Polynomial, GrevlexGreater>
Polynomial::coefficients_in(const std::vector<bool>& mask) const
{
    std::map<Monomial, Polynomial, GrevlexGreater> out;
    for (const auto& [m, c] : terms_) {
        Monomial key(m.size()), rest(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) (mask[i] ? key : rest)[i] = m[i];
        auto it = out.try_emplace(key, Polynomial(ring_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty()) return *this;
    return scaled(field().inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (terms_.empty() && o.terms_.empty()) return true;
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string to_string(const Scalar& s)
{
    return s.get_str();
}

std::string Polynomial::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c0] : terms_) {
        Scalar c = field().symmetric(c0);
        bool negative = c < 0;
        Scalar a = negative ? Scalar(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? "-" : "+");
        }
        first = false;
        bool constant = m.degree() == 0;
        bool wrote = false;
        if (a != 1 || constant) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (wrote) os << "*";
            os << ring_->name(i);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Polynomial twist(const Polynomial& f, std::size_t distinguished_var, unsigned total_degree)
{
    Polynomial r(f.ring());
    const Field& F = f.field();
    for (const auto& [m, c] : f.terms()) {
        if (m[distinguished_var] != 0)
            throw std::invalid_argument("twist: input still involves the distinguished variable");
        unsigned d = m.degree();
        if (d > total_degree)
            throw std::invalid_argument("twist: term degree exceeds the total degree");
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), total_degree - d);
        r.add_term(m, F.mul(c, F.from(Scalar(fact))));
    }
    return r;
}

} // namespace apolar
