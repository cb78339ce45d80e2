#ifndef APOLAR_CHOW_HPP
#define APOLAR_CHOW_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

// Chow ring of P1 x P1 with rational coefficients: basis 1, h1, h2, h1h2 and
// h1^2 = h2^2 = 0.
class BaseClass {
public:
    BaseClass() = default;
    BaseClass(const Scalar& c0, const Scalar& c1, const Scalar& c2, const Scalar& c12) : c_{c0, c1, c2, c12} {}

    static BaseClass one() { return {1, 0, 0, 0}; }
    static BaseClass divisor(const Scalar& a, const Scalar& b) { return {0, a, b, 0}; }
    static BaseClass point() { return {0, 0, 0, 1}; }

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    BaseClass operator+(const BaseClass& o) const;
    BaseClass operator-(const BaseClass& o) const;
    BaseClass operator-() const;
    BaseClass operator*(const BaseClass& o) const;
    BaseClass scaled(const Scalar& s) const;
    BaseClass pow(unsigned e) const;
    bool operator==(const BaseClass& o) const { return c_ == o.c_; }
    bool operator!=(const BaseClass& o) const { return !(*this == o); }

    // Homogeneous part of degree d (0, 1 or 2).
    BaseClass part(unsigned d) const;
    Scalar integrate() const { return c_[3]; }
    std::string str() const;

private:
    std::array<Scalar, 4> c_{};
};

// A vector bundle on P1 x P1 remembered through its rank and total Chern
// class.  Bundles built from line bundles also keep their Chern roots, which
// Sym^k and wedge^2 need.
class BundleClass {
public:
    static BundleClass line(const Scalar& a, const Scalar& b);
    static BundleClass trivial(unsigned rank);
    static BundleClass split(const std::vector<BaseClass>& roots);
    static BundleClass from_chern(unsigned rank, const BaseClass& total);

    unsigned rank() const { return rank_; }
    const BaseClass& chern() const { return c_; }
    BaseClass c(unsigned i) const { return c_.part(i); }
    bool is_split() const { return roots_.has_value(); }
    const std::vector<BaseClass>& roots() const; // throws unless split

    BundleClass operator+(const BundleClass& o) const; // direct sum
    BundleClass dual() const;
    BundleClass twist(const Scalar& a, const Scalar& b) const; // tensor with O(a, b)
    BundleClass sym(unsigned k) const;                          // split only
    BundleClass wedge2() const;                                 // split only

    // "2O(0,0) + O(-2,3)" for split bundles.
    std::string summands() const;

private:
    unsigned rank_ = 0;
    BaseClass c_ = BaseClass::one();
    std::optional<std::vector<BaseClass>> roots_;
};

// Named bundles on the inverse quadric.
BundleClass cotangent();               // O(-2,0) + O(0,-2)
BundleClass bundle_E_dual();           // Sym^3 Omega(3,3) + Sym^2 Omega(3,3)
BundleClass bundle_E6();               // O(-2,3) + 4 O + O(2,-3)
BundleClass bundle_V3();               // O(-2,3) + 2 O(0,-2)
BaseClass osculating_divisor();        // c1 of the second principal parts of O(3,3)

// Chern classes c_1..c_r of V (x) L for a rank-r bundle with classes `c`
// (c[0] = c_1, ...) and c_1(L) = l.  Everything lives in one ring.
std::vector<Polynomial> twist_chern(const std::vector<Polynomial>& c, const Polynomial& l);
// Chern classes of wedge^2 of a rank-3 bundle with classes c_1, c_2, c_3.
std::array<Polynomial, 3> wedge2_rank3(const std::array<Polynomial, 3>& c);

// Chow ring of the Grassmann bundle G(k, E) over P1 x P1 (or over a point),
// presented as Q[h1, h2, u1..uk] modulo h_i^2 and the relations
// c_j(E) s(U) = 0 in degrees j > rank E - k, where u_i = c_i(U) for the
// universal subbundle U.  Normal forms are canonical: in each degree the
// relation space is kept in reduced echelon form.
class GrassmannBundle {
public:
    GrassmannBundle(const BundleClass& E, unsigned k, bool over_base = true);

    const RingPtr& ring() const { return ring_; }
    unsigned k() const { return k_; }
    unsigned n() const { return n_; }
    unsigned dimension() const { return dim_; }

    Polynomial h1() const;
    Polynomial h2() const;
    Polynomial u(unsigned i) const; // 1 <= i <= k
    Polynomial xi() const;          // -u1
    Polynomial lift(const BaseClass& b) const;
    // c_1..c_k of U* as elements of the ring.
    std::array<Polynomial, 3> dual_chern() const;

    unsigned weight(const Monomial& m) const;
    // -1 for zero, otherwise the largest weighted degree.
    int weighted_degree(const Polynomial& p) const;
    bool is_weighted_homogeneous(const Polynomial& p) const;

    // Applies h_i^2 = 0 (and h_i = 0 over a point).
    Polynomial truncate(const Polynomial& p) const;
    Polynomial normal_form(const Polynomial& p) const;
    bool is_zero_class(const Polynomial& p) const { return normal_form(p).is_zero(); }
    // c_j(Q) for the universal quotient, j >= 0.
    Polynomial quotient_chern(unsigned j) const;
    const std::vector<Polynomial>& relations() const { return relations_; }
    // Standard monomials of weighted degree d.
    std::vector<Monomial> standard_monomials(unsigned d) const;

    // Degree of a class.  Classes without a top-degree part integrate to 0;
    // `top` reports whether a top-degree part was present.
    struct Integral {
        Scalar value;
        bool top = false;
    };
    Integral integrate(const Polynomial& p) const;
    // Integrates a class that must be of pure top degree (throws otherwise).
    Scalar degree(const Polynomial& p) const;

private:
    struct Piece {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t, GrevlexGreater> index;
        std::vector<std::vector<Scalar>> rows; // reduced echelon rows
        std::vector<std::size_t> pivots;
    };
    std::vector<Monomial> monomials_of_weight(unsigned d) const;
    std::vector<Scalar> reduce(const Polynomial& homogeneous, unsigned d) const;

    unsigned k_, n_, dim_;
    bool over_base_;
    RingPtr ring_;
    BaseClass cE_;
    std::vector<Polynomial> s_;  // Segre classes of U, by degree
    std::vector<Polynomial> relations_;
    std::vector<Piece> pieces_;  // by weighted degree, 0..dim
    Scalar point_;               // reduced coefficient of the point class
};

// The degree computations, with the integrand's normal form for audit.
struct DegreeResult {
    Scalar value;
    std::string integrand;
};

// Main component: c_9(wedge^2 U* (x) R*) (xi + 10h1 + 10h2)^5 on G(3, E).
DegreeResult degree_main();
// Control: c_3(wedge^2 U*)^3 in place of c_9, same pipeline.
DegreeResult degree_main_untwisted();

struct SpecialDegrees {
    DegreeResult total, v3_term, ruling_h1, ruling_h2;
    bool expansion_ok = false; // (7h1 + 3h2 + xi)^5 identity
};
SpecialDegrees degree_special();

// (c1c2c3 - 2c1^2c4 + 2c2c4 + 2c1c5 - 2c3^2)(U) on G(3, E6), with c4 = c5 = 0.
Polynomial third_degeneracy_class();

} // namespace apolar

#endif
