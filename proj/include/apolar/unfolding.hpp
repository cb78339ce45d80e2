#ifndef APOLAR_UNFOLDING_HPP
#define APOLAR_UNFOLDING_HPP

#include <map>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/linalg.hpp"
#include "apolar/report.hpp"

namespace apolar {

enum class UnfoldTag { ternary_cubic, quaternary_square };

// The two deformation problems.  Ternary: q = x0^2 + x1x2, f = q^3, quartic
// generators, distinguished variable y2.  Quaternary: q = x0^2 - x1^2 + x2x3,
// f = q^2, cubic generators, distinguished variable y3.
struct UnfoldCase {
    UnfoldTag tag;
    DualPair pair;
    Polynomial q;
    unsigned r = 0;           // f = q^r
    unsigned gen_degree = 0;  // degree of the apolar generators used
    std::size_t dist_var = 0; // distinguished variable (index in T)
    std::size_t kept = 0;     // generators of the tautological ideal
    std::size_t extension = 0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;

    static UnfoldCase ternary();
    static UnfoldCase quaternary();

    std::string name() const;
    Polynomial form() const { return q.pow(r); }
    std::string fixture(const std::string& file) const { return name() + "/" + file; }
    // The apolar generators in the fixture order (kept ones first).
    std::vector<Polynomial> generators() const;
};

// Apolar ideal of the twisted dehomogenization of q^r, homogenized again.
// Generated in degree gen_degree (computed, not read from fixtures).
std::vector<Polynomial> tautological_generators(const UnfoldCase& c);
GradedIdealView tautological_ideal(const UnfoldCase& c);

// Basis of {(l_1..l_k) in T_1^k : sum l_i g_i = 0} for forms of one degree.
// Each syzygy is returned as a vector of linear forms.
std::vector<std::vector<Polynomial>> linear_syzygies(const std::vector<Polynomial>& gens);

// Checks that sum_i s_i g_i vanishes.
bool is_syzygy(const std::vector<Polynomial>& s, const std::vector<Polynomial>& gens);

// Counts after removing redundancy from a list of polynomials of degree <= 2:
// `linear` spans every affine-linear element obtainable from the span of the
// input plus multiples of linear elements by variables; `quadratic` counts the
// independent remaining generators once the linear ones have been solved.
struct GeneratorCounts {
    std::size_t raw_equations = 0; // nonzero coefficient equations
    std::size_t raw_span = 0;      // dimension of their span
    std::size_t raw_linear = 0;    // affine-linear elements in that span
    std::size_t linear = 0;
    std::size_t quadratic = 0;
    std::size_t higher = 0;
    // Chart cases only: quadrics needed in the affine chart, and the degree
    // bound at which the low-degree part of the closure stabilized.
    std::size_t affine_quadratic = 0;
    unsigned closure_bound = 0;
    std::vector<Polynomial> linear_forms;   // reduced echelon basis
    std::vector<Polynomial> residual;       // after solving the linear forms
    std::map<std::size_t, Polynomial> solved; // pivot variable -> expression
};

GeneratorCounts minimalize(const RingPtr& ring, const std::vector<Polynomial>& equations);

// Elements of degree <= keep in the ideal generated by `gens`, as far as they
// are visible from products of degree <= bound (reduced echelon basis).
std::vector<Polynomial> low_degree_part(const std::vector<Polynomial>& gens, unsigned keep, unsigned bound);

// Coordinates of a polynomial of degree <= max_deg in the monomials of degree
// max_deg, max_deg - 1, ..., 0 (grevlex descending within each degree).
Vector affine_coordinates(const Polynomial& p, unsigned max_deg);
std::size_t affine_dimension(std::size_t nvars, unsigned max_deg);
bool same_affine_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, unsigned max_deg);

struct UnfoldResult {
    RingPtr big;        // y, a and b variables
    RingPtr params;     // a variables only
    std::vector<Polynomial> J_a;          // generators J(a), in `big`
    std::vector<std::string> b_names;
    std::map<std::string, Polynomial> b_solution; // b -> polynomial in params
    PolyMatrix correction; // the solved b-matrix (U(a) resp. the ternary B(a)), over params
    std::vector<Polynomial> equations;   // b-free residual, in params
    GeneratorCounts counts;
    Report report;
};

// Forms H(b) J(a), collects coefficients, solves the b-linear equations by
// triangular substitution and returns the residual ideal in the a-variables.
// The ternary case works in the chart a0 = 1.
UnfoldResult build_and_eliminate(const UnfoldCase& c);

Report verify_components(const UnfoldCase& c, const UnfoldResult& res);
Report ternary_geometry_checks();
Report isotropy_checks();
Report equivariance_checks();

// Helpers shared by the case files.
std::vector<std::vector<Scalar>> rational_box_points(std::size_t dim, long bound);

// Images of the ring variables after solving the linear forms for their
// pivot variables (reduced echelon form, grevlex leading variable).
std::vector<Polynomial> linear_substitution(const RingPtr& ring, const std::vector<Polynomial>& forms);

// J(a) at a parameter point (values in the order of res.params), in T.
std::vector<Polynomial> specialize(const UnfoldCase& c, const UnfoldResult& res, const std::vector<Scalar>& a);

// Residual equations vanish at `a`, J(a) is apolar to f, has the generic
// number of linear syzygies, and its Hilbert function agrees with the
// tautological ideal's up to degree 7.
Report sample_point_checks(const UnfoldCase& c, const UnfoldResult& res, const std::vector<Scalar>& a);

} // namespace apolar

#endif
