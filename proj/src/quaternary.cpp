#include <stdexcept>

#include "apolar/fixtures.hpp"
#include "apolar/unfolding.hpp"

namespace apolar {

UnfoldResult eliminate_system(RingPtr big, RingPtr params, std::vector<Polynomial> J, const PolyMatrix& H,
                              const std::vector<std::size_t>& y_vars, const std::vector<std::size_t>& b_vars);

namespace {

std::string a_name(std::size_t i, std::size_t j) { return "a" + std::to_string(i) + std::to_string(j); }

RingPtr quaternary_params()
{
    static const RingPtr R = [] {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 10; ++j) names.push_back(a_name(i, j));
        return Ring::make(Field::rationals(), names);
    }();
    return R;
}

// Coordinates left after the 42 linear equations of the radical.
RingPtr reduced_coordinates()
{
    static const RingPtr R =
        Ring::make(Field::rationals(), {"a12", "a13", "a20", "a21", "a22", "a23", "a42", "a43"});
    return R;
}

// a_ij = A5(j, i), as images of the 50 parameters in the reduced coordinates.
std::vector<Polynomial> pullback()
{
    RingPtr R = reduced_coordinates();
    PolyMatrix A5 = load_poly_matrix(R, "quaternary/A5.txt");
    if (A5.rows() != 10 || A5.cols() != 5) throw std::runtime_error("A5 fixture must be 10x5");
    std::vector<Polynomial> img;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 10; ++j) img.push_back(A5(j, i));
    return img;
}

struct Component {
    std::string name;
    std::vector<Polynomial> linear;
    std::vector<Polynomial> quadrics;
    std::size_t expected_dimension = 3;
};

Component load_component(const std::string& name, const std::string& file)
{
    Component c{name, {}, {}};
    for (const auto& g : load_poly_list(reduced_coordinates(), "quaternary/" + file)) {
        if (g.degree() == 1 && g.is_homogeneous()) c.linear.push_back(g);
        else if (g.degree() == 2 && g.is_homogeneous()) c.quadrics.push_back(g);
        else throw std::runtime_error(file + ": unexpected generator " + g.str());
    }
    return c;
}

std::vector<Vector> coords(const std::vector<Polynomial>& ps, unsigned d)
{
    std::vector<Vector> out;
    for (const auto& p : ps) out.push_back(coordinates(p, d));
    return out;
}

// Number of generators g (already pulled back) not in the ideal of the
// component, checked one homogeneous part at a time.
std::size_t outside_count(const std::vector<Polynomial>& pulled, const std::vector<Polynomial>& linear,
                          const std::vector<Polynomial>& quadrics)
{
    RingPtr R = reduced_coordinates();
    const std::size_t n = R->nvars();
    std::vector<Polynomial> k2 = quadrics;
    for (const auto& l : linear)
        for (std::size_t v = 0; v < n; ++v) k2.push_back(l * Polynomial::variable(R, v));
    auto K1 = coords(linear, 1), K2 = coords(k2, 2);
    std::size_t outside = 0;
    for (const auto& g : pulled) {
        if (g.degree() > 2 || !g.part(0).is_zero()) {
            ++outside;
            continue;
        }
        Polynomial g1 = g.part(1), g2 = g.part(2);
        if (!g1.is_zero() && !span_contains(R->field(), n, K1, {coordinates(g1, 1)})) ++outside;
        else if (!g2.is_zero() && !span_contains(R->field(), graded_dimension(n, 2), K2, {coordinates(g2, 2)}))
            ++outside;
    }
    return outside;
}

} // namespace

UnfoldResult build_quaternary(const UnfoldCase& c)
{
    const RingPtr& T = c.pair.T;
    RingPtr A = quaternary_params();
    std::vector<std::string> names = T->names();
    for (const auto& n : A->names()) names.push_back(n);
    for (std::size_t k = 0; k < c.n_b; ++k) names.push_back("b" + std::to_string(k));
    RingPtr big = Ring::make(T->field(), names);
    auto var = [&](const std::string& n) { return Polynomial::variable(big, static_cast<std::size_t>(big->index_of(n))); };

    std::vector<Polynomial> gens;
    for (const auto& g : c.generators()) gens.push_back(g.in_ring(big));
    if (gens.size() != 16) throw std::runtime_error("quaternary: expected 16 generators");

    std::vector<Polynomial> J;
    for (std::size_t j = 0; j < c.kept; ++j) {
        Polynomial g = gens[j];
        for (std::size_t i = 0; i < c.extension; ++i) g += var(a_name(i, j)) * gens[c.kept + i];
        J.push_back(g);
    }

    PolyMatrix H0T = load_poly_matrix(T, "quaternary/H0.txt");
    PolyMatrix H = H0T.in_ring(big);
    Polynomial y3 = Polynomial::variable(big, c.dist_var);
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t k = 0; k < H.cols(); ++k) H(r, k) += y3 * var("b" + std::to_string(r * H.cols() + k));

    std::vector<std::size_t> yv{0, 1, 2, 3}, bv;
    for (std::size_t k = 0; k < c.n_b; ++k) bv.push_back(static_cast<std::size_t>(big->index_of("b" + std::to_string(k))));

    UnfoldResult res = eliminate_system(big, A, J, H, yv, bv);
    Report& rep = res.report;

    std::vector<Polynomial> J0 = c.generators();
    J0.resize(c.kept);
    bool h0 = true;
    for (std::size_t r = 0; r < H0T.rows(); ++r) {
        std::vector<Polynomial> row;
        for (std::size_t k = 0; k < H0T.cols(); ++k) row.push_back(H0T(r, k));
        h0 = h0 && is_syzygy(row, J0);
    }
    rep.add("H0-syzygies", h0 && linear_syzygies(J0).size() == 15);

    res.correction = PolyMatrix(A, H.rows(), H.cols());
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t k = 0; k < H.cols(); ++k)
            res.correction(r, k) = res.b_solution.at("b" + std::to_string(r * H.cols() + k));

    PolyMatrix U = load_poly_matrix(A, "quaternary/U_a.txt");
    std::size_t differ = 0;
    for (std::size_t r = 0; r < U.rows(); ++r)
        for (std::size_t k = 0; k < U.cols(); ++k)
            if (res.correction(r, k) != U(r, k)) ++differ;
    rep.add("U(a)", differ == 0, std::to_string(differ) + " entries differ from the displayed matrix");
    bool row0 = true;
    for (std::size_t k = 0; k < U.cols(); ++k) row0 = row0 && res.correction(0, k) == U(0, k);
    rep.add("first-row", row0);

    // H(a) J(a) is a multiple of y3^2.
    PolyMatrix Ha = H0T.in_ring(big);
    PolyMatrix Ub = res.correction.in_ring(big);
    bool divisible = true;
    for (std::size_t r = 0; r < Ha.rows(); ++r) {
        Polynomial s(big);
        for (std::size_t k = 0; k < Ha.cols(); ++k) s += (Ha(r, k) + y3 * Ub(r, k)) * J[k];
        for (const auto& t : s.terms()) divisible = divisible && t.first[c.dist_var] >= 2;
    }
    rep.add("y3-squared", divisible);

    const auto& gc = res.counts;
    rep.add("counts", gc.linear == 39 && gc.quadratic == 15 && gc.higher == 0,
            std::to_string(gc.linear) + " linear + " + std::to_string(gc.quadratic) + " quadratic (" +
                std::to_string(gc.raw_equations) + " coefficient equations spanning " + std::to_string(gc.raw_span) +
                ", " + std::to_string(gc.raw_linear) + " linear among them)");
    return res;
}

// ---------------------------------------------------------------------------

Report verify_quaternary_components(const UnfoldCase& c, const UnfoldResult& res)
{
    Report rep;
    RingPtr R = reduced_coordinates();
    const std::size_t n = R->nvars();
    std::vector<Polynomial> phi = pullback();

    std::vector<Polynomial> pulled;
    for (const auto& g : res.equations) pulled.push_back(g.substitute(phi));
    std::size_t lin_nonzero = 0;
    for (const auto& l : res.counts.linear_forms)
        if (!l.substitute(phi).is_zero()) ++lin_nonzero;
    rep.add("linear-part-vanishes", lin_nonzero == 0,
            std::to_string(lin_nonzero) + " of " + std::to_string(res.counts.linear_forms.size()) +
                " linear generators survive the pull-back");

    std::vector<Component> comps{load_component("V0", "V0.txt"), load_component("V1", "V1.txt"),
                                 load_component("V2", "V2.txt")};

    for (const auto& K : comps) {
        const std::string p = K.name + " ";
        std::size_t outside = outside_count(pulled, K.linear, K.quadrics);
        rep.add(p + "contains-unfold", outside == 0, std::to_string(outside) + " generators outside");

        auto K1 = coords(K.linear, 1);
        std::size_t lin_rank = span_rank(R->field(), n, K1);
        std::vector<Polynomial> lin_mult;
        for (const auto& l : K.linear)
            for (std::size_t v = 0; v < n; ++v) lin_mult.push_back(l * Polynomial::variable(R, v));
        auto with_q = coords(lin_mult, 2);
        std::size_t base = span_rank(R->field(), graded_dimension(n, 2), with_q);
        for (const auto& q : K.quadrics) with_q.push_back(coordinates(q, 2));
        std::size_t q_rank = span_rank(R->field(), graded_dimension(n, 2), with_q) - base;
        std::size_t dim = n - lin_rank - q_rank;
        rep.add(p + "dimension", dim == K.expected_dimension,
                std::to_string(lin_rank) + " linear, " + std::to_string(q_rank) + " independent quadrics, dimension " +
                    std::to_string(dim));
    }

    // The printed V2 differs from the re-derived one in a single form, and that
    // form is what keeps it off the locus.
    {
        auto shown = load_poly_list(R, "quaternary/V2_displayed.txt");
        const auto& fixed = comps[2].linear;
        std::size_t changed = 0;
        for (std::size_t i = 0; i < shown.size() && i < fixed.size(); ++i)
            if (shown[i] != fixed[i]) ++changed;
        std::size_t outside = outside_count(pulled, shown, {});
        rep.add("V2 display audit", shown.size() == fixed.size() && changed == 1 && outside > 0,
                std::to_string(changed) + " printed form differs; printed space misses " + std::to_string(outside) +
                    " generators");
    }

    auto to_params = [&](const std::vector<Scalar>& x) {
        std::vector<Scalar> a;
        for (const auto& e : phi) a.push_back(e.evaluate(x));
        return a;
    };

    // Linear components: free coordinates take a few values, the pivots follow.
    const long free_values[3][3] = {{1, 0, 0}, {0, 1, 1}, {2, -1, 3}};
    for (std::size_t k = 1; k < comps.size(); ++k) {
        auto images = linear_substitution(R, comps[k].linear);
        std::vector<std::size_t> free;
        for (std::size_t v = 0; v < n; ++v)
            if (images[v] == Polynomial::variable(R, v)) free.push_back(v);
        for (const auto& fv : free_values) {
            std::vector<Scalar> x(n, Scalar(0));
            for (std::size_t i = 0; i < free.size() && i < 3; ++i) x[free[i]] = fv[i];
            for (std::size_t v = 0; v < n; ++v) x[v] = images[v].evaluate(x);
            std::string label = comps[k].name + " sample (" + std::to_string(fv[0]) + "," + std::to_string(fv[1]) +
                                "," + std::to_string(fv[2]) + "): ";
            rep.merge(sample_point_checks(c, res, to_params(x)), label);
        }
    }

    // Component 0: rational points of the cone over C0 in a small box.
    PolyMatrix C0 = load_poly_matrix(R, "quaternary/C0_matrix.txt");
    auto m2 = minors(C0, 2);
    std::vector<std::vector<Scalar>> found;
    for (const auto& box : rational_box_points(6, 2)) {
        std::vector<Scalar> x(box);
        x.push_back(Scalar(0));
        x.push_back(Scalar(0));
        bool zero = true, on = true;
        for (const auto& v : box) zero = zero && v == 0;
        if (zero) continue;
        for (const auto& m : m2)
            if (m.evaluate(x) != 0) {
                on = false;
                break;
            }
        if (on) found.push_back(x);
    }
    std::size_t off_v0 = 0;
    for (const auto& x : found)
        for (const auto& q : comps[0].quadrics)
            if (q.evaluate(x) != 0) {
                ++off_v0;
                break;
            }
    rep.add("C0 points", !found.empty() && off_v0 == 0,
            std::to_string(found.size()) + " box points on the 2-minor locus, " + std::to_string(off_v0) +
                " off the V0 quadrics");

    auto proportional_to = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::size_t i = 0;
        while (i < a.size() && a[i] == 0) ++i;
        if (i == a.size() || b[i] == 0) return false;
        Scalar r = b[i] / a[i];
        for (std::size_t k = 0; k < a.size(); ++k)
            if (b[k] != r * a[k]) return false;
        return true;
    };
    std::vector<std::vector<Scalar>> picked;
    for (const auto& x : found) {
        bool fresh = true;
        for (const auto& y : picked) fresh = fresh && !proportional_to(y, x);
        if (fresh) picked.push_back(x);
        if (picked.size() == 3) break;
    }
    for (const auto& x : picked) {
        std::string label = "V0 sample (";
        for (std::size_t i = 0; i < 6; ++i) label += (i ? "," : "") + to_string(x[i]);
        rep.merge(sample_point_checks(c, res, to_params(x)), label + "): ");
    }
    return rep;
}

} // namespace apolar
