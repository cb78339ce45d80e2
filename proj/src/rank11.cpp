#include <sstream>

#include "apolar/apolarity.hpp"
#include "apolar/fixtures.hpp"

namespace apolar {

namespace {

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Vector point_of(const Polynomial& l)
{
    Vector v(l.ring()->nvars(), Scalar(0));
    for (const auto& [m, c] : l.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) v[i] = c;
    return v;
}

} // namespace

Rank11Result rank_eleven_certificate(Rank11Case which, const std::optional<std::string>& replace_last_form)
{
    const bool quaternary = which == Rank11Case::quaternary;
    const Field F = quaternary ? Field::prime(101) : Field::rationals();
    const std::size_t n = quaternary ? 4 : 3;
    const unsigned r = quaternary ? 2 : 3;
    const std::string tag = quaternary ? "quaternary" : "ternary";
    DualPair dp = DualPair::make(F, n);
    Polynomial q = parse_polynomial(dp.S, quaternary ? "x0x1+x2x3" : "x0^2+x1x2");
    Polynomial f = q.pow(r);

    std::vector<Polynomial> ls = load_poly_list(dp.S, "rank11/" + tag + "_l.txt");
    std::vector<Polynomial> shown = load_poly_list(dp.T, "rank11/" + tag + "_ql.txt");
    if (replace_last_form) ls.back() = parse_polynomial(dp.S, *replace_last_form);

    Rank11Result res;
    Report& rep = res.report;

    for (std::size_t i = 0; i < ls.size(); ++i) {
        Polynomial ql = polar_form(f, ls[i], dp.T);
        res.polar_forms.push_back(ql);
        auto c = proportional(ql, shown[i]);
        res.display_scalars.push_back(c ? *c : Scalar(0));
        rep.add("polar-form-" + std::to_string(i + 1), c.has_value(),
                c ? "display = " + F.symmetric(*c).get_str() + " * computed" : "not proportional: " + ql.str());
    }

    // Each new point lies on all previously chosen polar forms.
    std::vector<Vector> pts;
    for (const auto& l : ls) pts.push_back(point_of(l));
    for (std::size_t j = 1; j < ls.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Scalar v = res.polar_forms[i].evaluate(pts[j]);
            rep.add("membership-q" + std::to_string(i + 1) + "-p" + std::to_string(j + 1), v == 0,
                    "value " + F.symmetric(v).get_str());
        }

    // The complete intersection of the polar forms.
    std::vector<Polynomial> ci_gens(res.polar_forms.begin(), res.polar_forms.end());
    GradedIdealView ci(dp.T, ci_gens);
    res.ci_hilbert = ci.hilbert_function(5);
    const std::size_t ci_len = quaternary ? 8 : 9;
    std::vector<std::size_t> expect_ci = quaternary ? std::vector<std::size_t>{1, 4, 7, 8, 8, 8}
                                                    : std::vector<std::size_t>{1, 3, 6, 8, 9, 9};
    rep.add("ci-hilbert", res.ci_hilbert == expect_ci, join(res.ci_hilbert) + " expected " + join(expect_ci));

    // Smoothness: the forms together with the maximal minors of their Jacobian
    // have no common zero.
    std::vector<Polynomial> sing = ci_gens;
    for (auto& m : minors(jacobian(ci_gens), ci_gens.size())) sing.push_back(m);
    GradedIdealView sing_ideal(dp.T, sing);
    auto cert = empty_in_projective_space(sing_ideal, quaternary ? 8 : 10);
    res.smooth_degree = cert.degree;
    rep.add("smooth", cert.empty,
            cert.empty ? "singular locus ideal is full in degree " + std::to_string(cert.degree)
                       : "no fullness certificate up to degree " + std::to_string(cert.degree));

    // Union with the reduced points: length 11 and apolar to q^r.
    const unsigned lo = quaternary ? 3 : 4, hi = quaternary ? 6 : 7;
    bool length_ok = true, apolar_ok = true;
    std::ostringstream detail;
    for (unsigned d = lo; d <= hi; ++d) {
        const std::size_t N = graded_dimension(n, d);
        auto I = span_intersection(F, N, ci.piece(d), vanishing_at_points(dp.T, d, pts));
        std::size_t h = N - I.size();
        res.union_hilbert.push_back(h);
        if (h != ci_len + ls.size()) length_ok = false;
        for (const auto& v : I)
            if (!contract(from_coordinates(dp.T, d, v), f).is_zero()) {
                apolar_ok = false;
                detail << "degree " << d << " element not apolar; ";
                break;
            }
    }
    rep.add("union-length-11", length_ok, "H = " + join(res.union_hilbert));
    rep.add("union-apolar", apolar_ok, detail.str());
    return res;
}

} // namespace apolar
