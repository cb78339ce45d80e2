#ifndef APOLAR_APOLARITY_HPP
#define APOLAR_APOLARITY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/report.hpp"

namespace apolar {

// S carries the forms (x0..xn), T the operators (y0..yn).  y_i acts as the
// partial derivative d/dx_i, with no factorial normalization.
struct DualPair {
    RingPtr S;
    RingPtr T;

    static DualPair make(Field field, std::size_t nvars, const std::string& x = "x", const std::string& y = "y");
};

Polynomial contract(const Polynomial& g, const Polynomial& f);

// Coordinates of a form in the grevlex monomial basis of its degree.
Vector coordinates(const Polynomial& p, unsigned d);
Polynomial from_coordinates(const RingPtr& ring, unsigned d, const Vector& v);

// Matrix of T_a -> S_{d-a}, g -> g(f); columns follow monomials_of_degree(n, a),
// rows follow monomials_of_degree(n, d - a).
ScalarMatrix catalecticant(const Polynomial& f, unsigned a);

// Basis of (f^perp)_d inside T_d.
std::vector<Polynomial> apolar_graded(const Polynomial& f, const RingPtr& T, unsigned d);

// A homogeneous ideal given by generators, with graded pieces computed on
// demand.  Each degree is computed at most once; the cache is guarded so the
// view can be shared between threads.
class GradedIdealView {
public:
    GradedIdealView(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Row-reduced basis of I_d in coordinates.
    std::vector<Vector> piece(unsigned d) const;
    std::vector<Polynomial> piece_polys(unsigned d) const;
    std::size_t dim(unsigned d) const { return piece(d).size(); }
    std::size_t hilbert(unsigned d) const;
    std::vector<std::size_t> hilbert_function(unsigned d_max) const;

    // Same computation, bypassing the cache.
    std::vector<Vector> recompute(unsigned d) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mu_;
    mutable std::map<unsigned, std::vector<Vector>> cache_;
};

std::vector<std::size_t> hilbert_function(const GradedIdealView& ideal, unsigned d_max);

// dim T_d as a binomial coefficient.
std::size_t graded_dimension(std::size_t nvars, unsigned d);

// Forms of degree d vanishing at the given points.
std::vector<Vector> vanishing_at_points(const RingPtr& ring, unsigned d, const std::vector<Vector>& points);

unsigned long cactus_bound(unsigned n, unsigned r);
unsigned long ah_rank(unsigned n, unsigned r);

// q^{-1}(y) = 1/4 y^t G^{-1} y where G is the Gram matrix of q (diagonal a_ii,
// off-diagonal a_ij/2).
Polynomial inverse_quadric(const Polynomial& q, const RingPtr& T);

// The literal solution g in T_k of g(f) = l^k, where deg f = 2k.  Throws if
// Cat_{k,k}(f) is singular.
Polynomial polar_form(const Polynomial& f, const Polynomial& l, const RingPtr& T);

struct PolarityData {
    Polynomial f;
    ScalarMatrix omega;
    ScalarMatrix omega_inverse;
    RingPtr yz;       // y0..yn, z0..zn
    Polynomial q_f;   // bihomogeneous of bidegree (2,2) in (y, z)
    Polynomial f_inv; // q_f(l, l) as a quartic in T
};

PolarityData conjugate_form(const Polynomial& f, const RingPtr& T);

struct EmptinessCertificate {
    bool empty = false;
    unsigned degree = 0;
};

// Linear-algebra Nullstellensatz: V(I) is empty iff I_d = T_d for some d.
EmptinessCertificate empty_in_projective_space(const GradedIdealView& ideal, unsigned d_max = 10);

// If b = c * a for a nonzero scalar c, returns c.
std::optional<Scalar> proportional(const Polynomial& a, const Polynomial& b);

// Equality of the spans of two lists of forms of degree d.
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, unsigned d);

// Jacobian matrix of a list of polynomials (rows: polynomials, columns: variables).
PolyMatrix jacobian(const std::vector<Polynomial>& ps);

enum class Rank11Case { ternary, quaternary };

struct Rank11Result {
    Report report;
    std::vector<Polynomial> polar_forms;   // computed q_{l_i}
    std::vector<Scalar> display_scalars;   // display = scalar * computed
    std::vector<std::size_t> ci_hilbert;   // H(0..5) of the complete intersection
    unsigned smooth_degree = 0;
    std::vector<std::size_t> union_hilbert; // at the checked degrees
};

// Rebuilds the smooth length-11 apolar scheme from the fixture data and
// checks every invariant.  `replace_last_form`, when given, substitutes the
// last linear form (used as a negative control).
Rank11Result rank_eleven_certificate(Rank11Case which, const std::optional<std::string>& replace_last_form = std::nullopt);

} // namespace apolar

#endif
