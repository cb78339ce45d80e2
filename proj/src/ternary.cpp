#include <stdexcept>

#include "apolar/fixtures.hpp"
#include "apolar/unfolding.hpp"

namespace apolar {

UnfoldResult eliminate_system(RingPtr big, RingPtr params, std::vector<Polynomial> J, const PolyMatrix& H,
                              const std::vector<std::size_t>& y_vars, const std::vector<std::size_t>& b_vars);

namespace {

// Chart a0 = 1.  D(a) has row i equal to e_i followed by
// (a_i, a_{i+5}, a_{i+10}, a_{i+15}) in the columns of J6..J9.
RingPtr ternary_params()
{
    static const RingPtr R = [] {
        std::vector<std::string> names;
        for (int i = 1; i <= 20; ++i) names.push_back("a" + std::to_string(i));
        return Ring::make(Field::rationals(), names);
    }();
    return R;
}

// The same coordinates with a0 restored, for the projective statements.
RingPtr ternary_projective()
{
    static const RingPtr R = Ring::indexed(Field::rationals(), "a", 21);
    return R;
}

std::vector<Polynomial> listed_linear(const RingPtr& R) { return load_poly_list(R, "ternary/linear12.txt"); }
std::vector<Polynomial> listed_quadrics(const RingPtr& R) { return load_poly_list(R, "ternary/quadrics15.txt"); }

// Points of the projective coordinates given the nine surviving ones; the
// others follow from the twelve linear forms.
std::vector<Polynomial> complete_point(const std::vector<Polynomial>& surviving_images)
{
    RingPtr P = ternary_projective();
    std::vector<Polynomial> solved = linear_substitution(P, listed_linear(P));
    std::vector<Polynomial> out;
    for (const auto& s : solved) out.push_back(s.substitute(surviving_images));
    return out;
}

Polynomial dehomogenize_a0(const Polynomial& p)
{
    return p.dehomogenize(0).in_ring(ternary_params());
}

} // namespace

UnfoldResult build_ternary(const UnfoldCase& c)
{
    const RingPtr& T = c.pair.T;
    std::vector<std::string> names = T->names();
    for (int i = 1; i <= 20; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 20; ++i) names.push_back("b" + std::to_string(i));
    RingPtr big = Ring::make(T->field(), names);
    auto var = [&](const std::string& n) { return Polynomial::variable(big, static_cast<std::size_t>(big->index_of(n))); };

    std::vector<Polynomial> gens;
    for (const auto& g : c.generators()) gens.push_back(g.in_ring(big));
    if (gens.size() != c.kept + c.extension) throw std::runtime_error("ternary: expected 9 generators");

    std::vector<Polynomial> J;
    for (std::size_t i = 0; i < c.kept; ++i) {
        Polynomial g = gens[i];
        for (std::size_t k = 0; k < c.extension; ++k)
            g += var("a" + std::to_string(i + 1 + 5 * k)) * gens[c.kept + k];
        J.push_back(g);
    }

    PolyMatrix H0 = load_poly_matrix(T, "ternary/H0.txt").in_ring(big);
    PolyMatrix H = H0;
    Polynomial y2 = Polynomial::variable(big, c.dist_var);
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j) H(i, j) += y2 * var("b" + std::to_string(i * H.cols() + j + 1));

    std::vector<std::size_t> yv{0, 1, 2}, bv;
    for (int i = 1; i <= 20; ++i) bv.push_back(static_cast<std::size_t>(big->index_of("b" + std::to_string(i))));

    UnfoldResult res = eliminate_system(big, ternary_params(), J, H.transpose(), yv, bv);

    // H(0) really is the syzygy matrix of J(0).
    std::vector<Polynomial> J0 = c.generators();
    J0.resize(c.kept);
    PolyMatrix H0T = load_poly_matrix(T, "ternary/H0.txt");
    bool h0 = true;
    for (std::size_t j = 0; j < H0T.cols(); ++j) {
        std::vector<Polynomial> col;
        for (std::size_t i = 0; i < H0T.rows(); ++i) col.push_back(H0T(i, j));
        h0 = h0 && is_syzygy(col, J0);
    }
    res.report.add("H0-syzygies", h0 && linear_syzygies(J0).size() == 4);

    res.correction = PolyMatrix(res.params, 5, 4);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 4; ++j) res.correction(i, j) = res.b_solution.at("b" + std::to_string(i * 4 + j + 1));

    // The chart ideal needs fewer quadrics than its closure in P^20.  The
    // quadrics of the closure are the elements of degree <= 2 of the chart
    // ideal, homogenized with a0; the degree bound grows until they settle.
    GeneratorCounts& gc = res.counts;
    RingPtr A = res.params;
    std::vector<Polynomial> solved = linear_substitution(A, gc.linear_forms);
    std::vector<std::string> chart_names, closure_names{"a0"};
    for (std::size_t v = 0; v < A->nvars(); ++v)
        if (solved[v] == Polynomial::variable(A, v)) {
            chart_names.push_back(A->name(v));
            closure_names.push_back(A->name(v));
        }
    RingPtr chart = Ring::make(A->field(), chart_names);
    RingPtr closure = Ring::make(A->field(), closure_names);
    std::vector<Polynomial> chart_gens;
    for (const auto& r : gc.residual) chart_gens.push_back(r.in_ring(chart));

    std::vector<Polynomial> low;
    std::size_t previous = 0;
    for (unsigned bound = 2; bound <= 6; ++bound) {
        low = low_degree_part(chart_gens, 2, bound);
        gc.closure_bound = bound;
        if (bound > 2 && low.size() == previous) break;
        previous = low.size();
    }
    std::vector<Polynomial> closure_quadrics;
    std::size_t stray = 0;
    for (const auto& q : low) {
        if (q.degree() < 2) ++stray;
        closure_quadrics.push_back(q.in_ring(closure).homogenize(0, 2));
    }
    gc.affine_quadratic = gc.quadratic;
    gc.quadratic = closure_quadrics.size() - stray;

    res.report.add("counts", gc.linear == 12 && gc.quadratic == 15 && gc.higher == 0 && stray == 0,
                   std::to_string(gc.linear) + " linear + " + std::to_string(gc.quadratic) +
                       " quadratic in P^20 (affine chart: " + std::to_string(gc.affine_quadratic) + " quadrics; " +
                       std::to_string(gc.raw_equations) + " coefficient equations spanning " +
                       std::to_string(gc.raw_span) + ", " + std::to_string(gc.raw_linear) +
                       " linear among them; closure settled at degree " + std::to_string(gc.closure_bound) + ")");

    // Compare with the displayed generators.
    std::vector<Polynomial> lin;
    for (const auto& l : listed_linear(ternary_projective())) lin.push_back(dehomogenize_a0(l));
    res.report.add("linear-span", same_affine_span(gc.linear_forms, lin, 1));
    std::vector<Polynomial> quad;
    for (const auto& q : listed_quadrics(ternary_projective())) quad.push_back(q.in_ring(closure));
    res.report.add("quadric-span", same_span(closure_quadrics, quad, 2),
                   "closure quadrics vs the 15 displayed quadrics");
    return res;
}

// ---------------------------------------------------------------------------

namespace {

// C(t) in the projective coordinates a0..a20, over the ring `R` whose
// variable `tv` plays t.
std::vector<Polynomial> curve_images(const RingPtr& R, std::size_t tv)
{
    RingPtr P = ternary_projective();
    RingPtr Rt = Ring::make(Field::rationals(), {"t"});
    auto param = load_poly_list(Rt, "ternary/C_param.txt");
    const int order[9] = {0, 20, 19, 18, 17, 16, 11, 6, 1};
    std::vector<Polynomial> to_r{Polynomial::variable(R, tv)};
    std::vector<Polynomial> sv(P->nvars(), Polynomial(R));
    for (int k = 0; k < 9; ++k) sv[order[k]] = param[k].substitute(to_r);
    return complete_point(sv);
}

std::vector<Scalar> chart_values(const std::vector<Polynomial>& images, const std::vector<Scalar>& at)
{
    // images are over a ring whose point is `at`; drop a0 after normalizing it to 1
    Scalar a0 = images[0].evaluate(at);
    if (a0 == 0) throw std::domain_error("point outside the chart a0 = 1");
    std::vector<Scalar> out;
    for (std::size_t i = 1; i < images.size(); ++i) out.push_back(images[i].evaluate(at) / a0);
    return out;
}

} // namespace

Report verify_ternary_components(const UnfoldCase& c, const UnfoldResult& res)
{
    Report rep;
    // The eliminated ideal equals the displayed one: same linear part and the
    // same quadrics in the closure.
    const SubCheck* lin = res.report.find("linear-span");
    const SubCheck* quad = res.report.find("quadric-span");
    rep.add("ideal-equal", lin && quad && lin->ok && quad->ok);

    // Sample points: C(t), tangent points C(t) + u C'(t), and the line L0.
    RingPtr Ru = Ring::make(Field::rationals(), {"t", "u"});
    std::vector<Polynomial> C = curve_images(Ru, 0);
    std::vector<Polynomial> tangent;
    Polynomial u = Polynomial::variable(Ru, 1);
    for (const auto& p : C) tangent.push_back(p + u * p.differentiate(0));

    struct Sample {
        std::string label;
        std::vector<Scalar> a;
    };
    std::vector<Sample> samples;
    for (long t : {1L, 2L, -3L}) samples.push_back({"C(" + std::to_string(t) + ")", chart_values(C, {Scalar(t), Scalar(0)})});
    samples.push_back({"tangent(1,1)", chart_values(tangent, {Scalar(1), Scalar(1)})});
    samples.push_back({"tangent(2,-1/2)", chart_values(tangent, {Scalar(2), Scalar(-1, 2)})});
    for (long s : {1L, -2L}) {
        std::vector<Scalar> a(20, Scalar(0));
        a[19] = s; // a20
        samples.push_back({"L0(" + std::to_string(s) + ")", a});
    }
    for (const auto& s : samples) rep.merge(sample_point_checks(c, res, s.a), "sample " + s.label + ": ");
    return rep;
}

// ---------------------------------------------------------------------------

Report ternary_geometry_checks()
{
    Report rep;
    RingPtr P = ternary_projective();
    RingPtr Rt = Ring::make(Field::rationals(), {"t"});
    std::vector<Polynomial> C = curve_images(Rt, 0);

    // (1) C satisfies the 2-minors and the quadrics.
    PolyMatrix Cm = load_poly_matrix(P, "ternary/C_matrix.txt");
    bool minors_ok = true;
    for (const auto& m : minors(Cm, 2)) minors_ok = minors_ok && m.substitute(C).is_zero();
    bool quads_ok = true;
    for (const auto& q : listed_quadrics(P)) quads_ok = quads_ok && q.substitute(C).is_zero();
    bool lin_ok = true;
    for (const auto& l : listed_linear(P)) lin_ok = lin_ok && l.substitute(C).is_zero();
    rep.add("C-on-minors", minors_ok);
    rep.add("C-on-quadrics", quads_ok && lin_ok);
    Scalar a1 = C[1].evaluate({Scalar(1)});
    rep.add("C-at-1", a1 == Scalar("7/5120000000"), "a1 = " + to_string(a1));

    // (2) L0 = <e_a0, e_a20> lies on the quadrics and is tangent to C at C(0).
    RingPtr Ruv = Ring::make(Field::rationals(), {"u", "v"});
    std::vector<Polynomial> L0(P->nvars(), Polynomial(Ruv));
    L0[0] = Polynomial::variable(Ruv, 0);
    L0[20] = Polynomial::variable(Ruv, 1);
    bool on = true;
    for (const auto& q : listed_quadrics(P)) on = on && q.substitute(L0).is_zero();
    for (const auto& l : listed_linear(P)) on = on && l.substitute(L0).is_zero();
    rep.add("L0-on-surface", on);
    bool tangent = true;
    for (std::size_t i = 0; i < C.size(); ++i) {
        Scalar v0 = C[i].evaluate({Scalar(0)});
        Scalar d0 = C[i].differentiate(0).evaluate({Scalar(0)});
        tangent = tangent && v0 == (i == 0 ? 1 : 0) && d0 == (i == 20 ? 1 : 0);
    }
    rep.add("L0-tangent", tangent);

    // (3) D(t) and its maximal minors.
    PolyMatrix Dt = load_poly_matrix(Rt, "ternary/D_t.txt");
    bool d_ok = Dt.rows() == 5 && Dt.cols() == 9;
    for (std::size_t i = 0; d_ok && i < 5; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            Polynomial want = j < 5 ? Polynomial::constant(Rt, i == j ? 1 : 0) : C[i + 1 + 5 * (j - 5)];
            if (Dt(i, j) != want) d_ok = false;
        }
    rep.add("D(t)-along-C", d_ok);
    auto ms = minors(Dt, 5);
    int top = -1;
    std::vector<Vector> coeffs;
    for (const auto& m : ms) {
        top = std::max(top, m.degree());
        Vector v(21, Scalar(0));
        for (const auto& [mono, cf] : m.terms())
            if (mono[0] <= 20) v[mono[0]] = cf;
        coeffs.push_back(v);
    }
    std::size_t rk = span_rank(Field::rationals(), 21, coeffs);
    rep.add("rnc-degree-20", ms.size() == 126 && top == 20 && rk == 21,
            std::to_string(ms.size()) + " minors, max degree " + std::to_string(top) + ", coefficient rank " +
                std::to_string(rk));

    // (4) The schemes on the tangent line.
    DualPair pair = DualPair::make(Field::rationals(), 3);
    RingPtr Rst = Ring::make(Field::rationals(), {"s", "t", "y0", "y1", "y2"});
    auto g_st = load_poly_list(Rst, "ternary/gamma_st.txt");
    auto g_1 = load_poly_list(Rst, "ternary/gamma_1.txt");
    auto g_9 = load_poly_list(Rst, "ternary/gamma_9.txt");
    Polynomial f = parse_polynomial(pair.S, "(x0^2 + x1*x2)^3");
    const long pts[4][2] = {{1, 1}, {2, 1}, {1, -3}, {3, 2}};
    for (const auto& st : pts) {
        std::vector<Polynomial> img{Polynomial::constant(pair.T, st[0]), Polynomial::constant(pair.T, st[1]),
                                    Polynomial::variable(pair.T, 0), Polynomial::variable(pair.T, 1),
                                    Polynomial::variable(pair.T, 2)};
        auto spec = [&](const std::vector<Polynomial>& gs) {
            std::vector<Polynomial> out;
            for (const auto& g : gs) out.push_back(g.substitute(img));
            return out;
        };
        GradedIdealView Ist(pair.T, spec(g_st)), I1(pair.T, spec(g_1)), I9(pair.T, spec(g_9));
        const std::string tag = "[" + std::to_string(st[0]) + ":" + std::to_string(st[1]) + "] ";
        bool inter = true;
        for (unsigned d = 4; d <= 7; ++d) {
            auto cap = span_intersection(pair.T->field(), graded_dimension(3, d), I1.piece(d), I9.piece(d));
            inter = inter && span_equal(pair.T->field(), graded_dimension(3, d), cap, Ist.piece(d));
        }
        rep.add(tag + "union", inter);
        bool h9 = true;
        for (unsigned d = 4; d <= 7; ++d) h9 = h9 && I9.hilbert(d) == 9;
        rep.add(tag + "gamma9-length", h9);
        std::vector<Scalar> pt{Scalar(st[0]), Scalar(0), Scalar(-st[1])};
        bool point = true;
        for (const auto& g : spec(g_st)) point = point && g.evaluate(pt) == 0;
        for (const auto& g : spec(g_1)) point = point && g.evaluate(pt) == 0;
        rep.add(tag + "reduced-point", point);
        bool apolar = true;
        for (const auto& g : spec(g_st)) apolar = apolar && contract(g, f).is_zero();
        rep.add(tag + "apolar", apolar && Ist.hilbert(7) == 10);
    }
    return rep;
}

} // namespace apolar
