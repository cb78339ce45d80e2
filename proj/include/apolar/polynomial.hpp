#ifndef APOLAR_POLYNOMIAL_HPP
#define APOLAR_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

using Exponent = std::uint16_t;

// Dense exponent vector.  The rings used here have at most a few hundred
// variables (the quaternary unfolding carries 4 + 50 + 150), so a plain vector
// is both simple and fast enough.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    unsigned degree() const;
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const; // requires divides

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<Exponent> e_;
};

// Graded reverse lexicographic order: higher degree first; on ties the
// monomial with the smaller exponent in the last differing variable is larger.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

// All monomials of total degree d in n variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

// Cached version of monomials_of_degree plus the reverse lookup.  References
// stay valid for the lifetime of the program.
struct MonomialBasis {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t, GrevlexGreater> index;
};
const MonomialBasis& monomial_basis(std::size_t nvars, unsigned d);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    Ring(Field field, std::vector<std::string> names);

    static RingPtr make(Field field, std::vector<std::string> names);
    // Variables prefix0 .. prefix{n-1}.
    static RingPtr indexed(Field field, const std::string& prefix, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    // -1 when absent.
    long index_of(const std::string& name) const;

    bool operator==(const Ring& o) const { return field_ == o.field_ && names_ == o.names_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    Field field_;
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_homogeneous(unsigned d) const;
    Scalar coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const; // grevlex; throws on zero
    Scalar leading_coeff() const;

    // Adds c*m in place (c is assumed to be a field element already).
    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    Polynomial differentiate(std::size_t var) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Pads every term with powers of `var` up to `target_degree`.
    Polynomial homogenize(std::size_t var, unsigned target_degree) const;
    // Sets `var` to 1.
    Polynomial dehomogenize(std::size_t var) const;

    // Replaces variable i by images[i]; all images share one target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Re-embeds into `target` by variable name (every variable must exist there).
    Polynomial in_ring(const RingPtr& target) const;

    // Homogeneous component of degree d.
    Polynomial part(unsigned d) const;
    // Divides exactly by a monomial; throws if some term is not divisible.
    Polynomial divide_monomial(const Monomial& m) const;

    // Collects coefficients with respect to the variables flagged in `mask`.
    // Keys are monomials in the full ring that only involve the masked
    // variables; values are polynomials in the remaining ones.
    std::map<Monomial, Polynomial, GrevlexGreater> coefficients_in(const std::vector<bool>& mask) const;

    // Divides out the content so that the leading coefficient is 1.
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

// Inverse twist: multiplies the coefficient of each monomial of degree e by
// (total_degree - e)!, where the missing degree is the implicit exponent of the
// distinguished variable that was set to 1.
Polynomial twist(const Polynomial& f, std::size_t distinguished_var, unsigned total_degree);

// Parses the text format used by the fixtures: integers and fractions,
// variable names from the ring (braces and underscores in names are ignored,
// so a_{12} reads as a12), ^ for powers, optional *, parentheses.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);
// One polynomial per comma- or newline-separated item; '#' starts a comment.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text);

std::string to_string(const Scalar& s);

} // namespace apolar

#endif
