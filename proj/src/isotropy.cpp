#include <stdexcept>

#include "apolar/fixtures.hpp"
#include "apolar/unfolding.hpp"

// Checks in the coordinates where q = x0x1 + x2x3 and p = (0:0:1:0).

namespace apolar {

namespace {

const DualPair& pair4()
{
    static const DualPair P = DualPair::make(Field::rationals(), 4);
    return P;
}

RingPtr family_ring()
{
    static const RingPtr R = Ring::make(Field::rationals(), {"a22", "a23", "a42", "b"});
    return R;
}

RingPtr pencil_ring()
{
    static const RingPtr R = Ring::make(Field::rationals(), {"a", "b", "c", "d"});
    return R;
}

std::vector<Polynomial> cubics(const std::string& file) { return load_poly_list(pair4().T, "isotropy/" + file); }

std::vector<Vector> coords3(const std::vector<Polynomial>& ps)
{
    std::vector<Vector> out;
    for (const auto& p : ps) out.push_back(coordinates(p, 3));
    return out;
}

const std::size_t kDim3 = 20; // dim T_3 in four variables

// Coordinates of the cubic c in `basis` modulo `modulo`; nullopt when c is not
// in their span.
std::optional<Vector> express(const Polynomial& c, const std::vector<Polynomial>& basis,
                              const std::vector<Polynomial>& modulo)
{
    std::vector<Vector> cols = coords3(basis);
    for (const auto& v : coords3(modulo)) cols.push_back(v);
    ScalarMatrix m(Field::rationals(), kDim3, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < kDim3; ++i) m(i, j) = cols[j][i];
    auto s = solve(m, coordinates(c, 3));
    if (!s) return std::nullopt;
    Vector out(s->x.begin(), s->x.begin() + static_cast<long>(basis.size()));
    return out;
}

Polynomial combination(const PolyMatrix& rows, std::size_t r, const std::vector<Polynomial>& basis,
                       const RingPtr& target)
{
    Polynomial acc(target);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!rows(r, k).is_zero()) acc += rows(r, k).in_ring(target) * basis[k].in_ring(target);
    return acc;
}

// Plücker coordinates (p01, p02, p03, p12, p13, p23) of a 2x4 matrix.
std::vector<Polynomial> pluecker(const PolyMatrix& m)
{
    std::vector<Polynomial> p;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p.push_back(m(0, i) * m(1, j) - m(0, j) * m(1, i));
    return p;
}

} // namespace

Report isotropy_checks()
{
    Report rep;
    const DualPair& P = pair4();
    const RingPtr& T = P.T;
    const Field& F = T->field();

    // The 16 apolar cubics, and their relation to the coordinates used for
    // the unfolding.
    auto perp3 = cubics("perp3.txt");
    Polynomial q2 = parse_polynomial(P.S, "(x0*x1 + x2*x3)^2");
    rep.add("perp3-span", perp3.size() == 16 && same_span(perp3, apolar_graded(q2, T, 3), 3));
    {
        std::vector<Polynomial> img{parse_polynomial(T, "y1 + y0"), parse_polynomial(T, "y1 - y0"),
                                    Polynomial::variable(T, 3), Polynomial::variable(T, 2)};
        std::vector<Polynomial> moved;
        for (const auto& g : UnfoldCase::quaternary().generators()) moved.push_back(g.substitute(img));
        rep.add("perp3-change-of-coordinates", same_span(moved, perp3, 3));
    }

    // a M = M a^t = 0.
    auto A = cubics("A.txt");
    auto B = cubics("B.txt");
    PolyMatrix M7 = load_poly_matrix(T, "isotropy/M7.txt");
    bool aM = true, Ma = true, skew = true;
    for (std::size_t j = 0; j < 7; ++j) {
        Polynomial left(T), right(T);
        for (std::size_t i = 0; i < 7; ++i) {
            left += A[i] * M7(i, j);
            right += M7(j, i) * A[i];
            skew = skew && M7(i, j) == -M7(j, i);
        }
        aM = aM && left.is_zero();
        Ma = Ma && right.is_zero();
    }
    rep.add("a.M", aM && skew);
    rep.add("M.a^t", Ma);
    {
        Polynomial first(T);
        for (std::size_t i = 0; i < 7; ++i) first += M7(0, i) * A[i];
        rep.add("M.a^t-entry-1", first.is_zero(), first.str());
    }
    bool contained = true;
    for (const auto& g : A) contained = contained && contract(g, q2).is_zero();
    for (const auto& g : B) contained = contained && contract(g, q2).is_zero();
    rep.add("A-B-apolar", contained);

    // A y3 lies in the ideal of B, degree 4.
    {
        std::vector<Vector> Bd4;
        for (const auto& g : B)
            for (std::size_t v = 0; v < 4; ++v) Bd4.push_back(coordinates(g * Polynomial::variable(T, v), 4));
        std::vector<Vector> Ay3;
        for (const auto& g : A) Ay3.push_back(coordinates(g * Polynomial::variable(T, 3), 4));
        rep.add("A.y3-in-(B)", span_contains(F, graded_dimension(4, 4), Bd4, Ay3));
    }

    // The 12x12 form and the 6-spaces U1.
    RingPtr R = family_ring();
    PolyMatrix M12 = load_poly_matrix(R, "isotropy/M12.txt");
    PolyMatrix U1 = load_poly_matrix(R, "isotropy/U1.txt");
    PolyMatrix prod = U1 * M12 * U1.transpose();
    rep.add("U1.M.U1^t", prod.is_zero());
    {
        std::vector<Polynomial> at{Polynomial::constant(R, 1), Polynomial::constant(R, 0), Polynomial::constant(R, 0),
                                   Polynomial::constant(R, 1)};
        rep.add("U1.M.U1^t-at-(1,0,0,1)", prod.substitute(at).is_zero());
    }
    rep.add("M12-skew", (M12 + M12.transpose()).is_zero());

    auto K_L = cubics("K_L.txt");
    auto E_L = cubics("E_L.txt");
    auto W_Lp = cubics("W_Lp.txt");
    auto U_Lp_q = cubics("U_Lp_quotient.txt");
    {
        std::vector<Polynomial> all = K_L;
        all.insert(all.end(), E_L.begin(), E_L.end());
        rep.add("E_L-complements-K_L", same_span(all, perp3, 3) && span_rank(F, kDim3, coords3(all)) == 16);
        std::vector<Polynomial> w = K_L;
        w.insert(w.end(), E_L.begin(), E_L.begin() + 3);
        rep.add("W_Lp=K_L+U1-top", same_span(w, W_Lp, 3));
    }

    // The M-orthogonal of W_{L,p}/K_L is U_{L,p}/K_L.
    {
        // M12 is constant; read it as a scalar matrix.
        ScalarMatrix Ms(F, 12, 12);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j)
                Ms(i, j) = M12(i, j).is_zero() ? Scalar(0) : M12(i, j).leading_coeff();
        ScalarMatrix Wm(F, 3, 12);
        for (std::size_t i = 0; i < 3; ++i) Wm(i, i) = 1;
        auto perp = rref_kernel(Wm * Ms).kernel;
        std::vector<Vector> u;
        for (std::size_t i = 0; i < 3; ++i) {
            Vector e(12, Scalar(0));
            e[i] = 1;
            u.push_back(e);
        }
        bool expressible = true;
        for (const auto& c : U_Lp_q) {
            auto v = express(c, E_L, K_L);
            if (!v) expressible = false;
            else u.push_back(*v);
        }
        rep.add("orthogonal-of-W_Lp", expressible && perp.size() == 9 && span_equal(F, 12, perp, u),
                std::to_string(perp.size()) + "-dimensional orthogonal");
    }

    // U1 rows 4..6 are the rows of P36, up to sign, modulo K_L.
    PolyMatrix P36 = load_poly_matrix(R, "isotropy/P36.txt");
    {
        std::vector<std::string> names = T->names();
        for (const auto& n : R->names()) names.push_back(n);
        RingPtr TR = Ring::make(F, names);
        std::vector<bool> pmask(TR->nvars(), false);
        for (std::size_t i = 4; i < TR->nvars(); ++i) pmask[i] = true;
        // The family parameters are scalars here: the coefficient of every
        // parameter monomial must be a cubic in K_L.
        auto residue_free = [&](const Polynomial& diff) {
            for (const auto& [m, cubic] : diff.coefficients_in(pmask)) {
                Polynomial c3 = cubic.in_ring(T);
                if (!span_contains(F, kDim3, coords3(K_L), {coordinates(c3, 3)})) return false;
            }
            return true;
        };
        std::string signs;
        bool rows_ok = true;
        for (std::size_t r = 0; r < 3; ++r) {
            Polynomial u = combination(U1, r + 3, E_L, TR);
            Polynomial p = combination(P36, r, U_Lp_q, TR);
            if (residue_free(u - p)) signs += "+";
            else if (residue_free(u + p)) signs += "-";
            else {
                signs += "?";
                rows_ok = false;
            }
        }
        rep.add("U1-rows-match-P36", rows_ok, "signs " + signs);
    }

    // Minors of P36.
    {
        auto ms = minors(P36, 3);
        auto shown = load_poly_list(R, "isotropy/p_minors.txt");
        const std::vector<std::vector<std::size_t>> labels{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
                                                           {1, 3, 5}, {1, 3, 6}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}};
        auto subs = subsets(6, 3);
        std::map<std::vector<std::size_t>, Polynomial> by_label;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            std::vector<std::size_t> l;
            for (auto s : subs[i]) l.push_back(s + 1);
            by_label.emplace(l, ms[i]);
        }
        std::string differing;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (by_label.at(labels[i]) != shown.at(i)) {
                if (!differing.empty()) differing += ",";
                differing += "p" + std::to_string(labels[i][0]) + std::to_string(labels[i][1]) +
                             std::to_string(labels[i][2]);
            }
        std::size_t nonzero_other = 0;
        for (const auto& [l, m] : by_label) {
            bool listed = false;
            for (const auto& x : labels) listed = listed || x == l;
            if (!listed && !m.is_zero()) ++nonzero_other;
        }
        rep.add("p-minors", differing.empty() && nonzero_other == 0,
                "differing from display: " + (differing.empty() ? std::string("none") : differing) + "; " +
                    std::to_string(nonzero_other) + " unlisted minors nonzero");
        rep.add("p236", by_label.at({2, 3, 6}) == parse_polynomial(R, "-3*b^3"));

        Polynomial three = Polynomial::constant(R, 3), two = Polynomial::constant(R, 2),
                   four = Polynomial::constant(R, 4);
        // Linear relations and the symmetric rank-one matrix, for a table of
        // minors indexed like `labels`.  `c135` is the weight of p135 on the
        // diagonal; `mixed` is the relation tying p136 to the others.
        auto veronese = [&](const std::vector<Polynomial>& v, const Polynomial& c135, bool displayed_form) {
            auto p = [&](std::size_t a, std::size_t b, std::size_t c) {
                for (std::size_t i = 0; i < labels.size(); ++i)
                    if (labels[i] == std::vector<std::size_t>{a, b, c}) return v[i];
                throw std::logic_error("unlisted minor");
            };
            bool linear = p(1, 2, 5) == three * p(1, 3, 4) && two * p(1, 2, 6) == three * p(2, 3, 4);
            if (displayed_form) linear = linear && three * p(2, 3, 4) == two * p(1, 3, 6);
            else linear = linear && two * p(1, 3, 6) == p(2, 3, 5);
            PolyMatrix S(R, 3, 3);
            S(0, 0) = three * p(1, 2, 4);
            S(0, 1) = S(1, 0) = two * p(1, 2, 5);
            S(0, 2) = S(2, 0) = two * p(1, 2, 6);
            S(1, 1) = c135 * p(1, 3, 5);
            S(1, 2) = S(2, 1) = two * p(2, 3, 5);
            S(2, 2) = two * p(2, 3, 6);
            bool rank_one = true;
            for (const auto& m : minors(S, 2)) rank_one = rank_one && m.is_zero();
            return std::pair{linear, rank_one};
        };
        std::vector<Polynomial> computed;
        for (const auto& l : labels) computed.push_back(by_label.at(l));

        // The relations as printed, on the actual minors of P36.
        auto [lin_c, rank_c] = veronese(computed, two, true);
        rep.add("veronese-linear-relations", lin_c, "printed relations on the minors of P36");
        rep.add("veronese-rank-one", rank_c, "printed matrix on the minors of P36");
        // The printed relations are consistent with the printed minor values.
        auto [lin_d, rank_d] = veronese(shown, two, true);
        rep.add("veronese-relations-on-displayed-minors", lin_d && rank_d);
        // Corrected coefficients (p235 = 2 p136 and weight 4 on p135) hold on
        // the actual minors; the Veronese cone statement itself survives.
        auto [lin_f, rank_f] = veronese(computed, four, false);
        rep.add("veronese-corrected-relations", lin_f && rank_f, "p235 = 2p136, diagonal entry 4p135");
    }

    // Plücker relation p03 - 3 p12 = 0 on the pencils in U_L/W_L.
    {
        RingPtr Pr = pencil_ring();
        auto relation = [](const std::vector<Polynomial>& pl) { return pl[2] - Polynomial::constant(pl[2].ring(), 3) * pl[3]; };

        PolyMatrix vertex = load_poly_matrix(Pr, "isotropy/pencil_vertex.txt");
        auto pv = pluecker(vertex);
        auto shown = parse_polynomial_list(Pr, "1, 2*a, 3*a^2, a^2, 2*a^3, a^4");
        bool prop = true;
        Polynomial a = Polynomial::variable(Pr, 0);
        for (std::size_t i = 0; i < 6; ++i) prop = prop && pv[i] == a * shown[i];
        rep.add("vertex-pluecker", prop && relation(pv).is_zero(), "computed = a * displayed vector");

        auto pp = pluecker(load_poly_matrix(Pr, "isotropy/pencil_p.txt"));
        rep.add("pencil-at-p-pluecker", pp[0].is_zero() && pp[5].is_zero() && relation(pp).is_zero());

        auto pu = pluecker(load_poly_matrix(Pr, "isotropy/pencil_unsaturated.txt"));
        Polynomial rel = relation(pu);
        rep.add("unsaturated-pluecker", rel.is_zero(), "p03 - 3p12 = " + rel.str());
        // The residual is a multiple of (ab - 1): with b = 1/a, the scaling
        // carried by the moving transformation, the pencils do lie on the hyperplane.
        Polynomial ab1 = Polynomial::variable(Pr, 0) * Polynomial::variable(Pr, 1) - Polynomial::constant(Pr, 1);
        rep.add("unsaturated-pluecker-residual", rel == ab1 * parse_polynomial(Pr, "48*a*c*d"),
                "expected 48acd(ab - 1)");
    }
    return rep;
}

} // namespace apolar
