#include "apolar/linalg.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace apolar {

ScalarMatrix::ScalarMatrix(Field field, std::size_t cols, const std::vector<Vector>& rows)
    : field_(field), rows_(rows.size()), cols_(cols), a_(rows.size() * cols)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ScalarMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = field.from(rows[i][j]);
    }
}

ScalarMatrix ScalarMatrix::identity(Field field, std::size_t n)
{
    ScalarMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector ScalarMatrix::row(std::size_t i) const
{
    return Vector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector ScalarMatrix::operator*(const Vector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) s = field_.add(s, field_.mul((*this)(i, j), v[j]));
        out[i] = s;
    }
    return out;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    ScalarMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
        }
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const
{
    ScalarMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ScalarMatrix::is_zero() const
{
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const
{
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

// ---------------------------------------------------------------------------

namespace {

KernelResult finish(std::size_t cols, std::vector<Vector> rref, std::vector<std::size_t> pivots,
                    const Field& F)
{
    KernelResult res;
    res.rank = pivots.size();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector k(cols, Scalar(0));
        k[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rref[r][free] != 0) k[pivots[r]] = F.neg(rref[r][free]);
        res.kernel.push_back(std::move(k));
    }
    res.rref = std::move(rref);
    res.pivots = std::move(pivots);
    return res;
}

KernelResult rref_prime(const ScalarMatrix& m)
{
    const std::uint64_t p = m.field().characteristic();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<std::uint64_t>> a(R, std::vector<std::uint64_t>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num().get_ui();

    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && a[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[r]);
        std::uint64_t s = inv(a[r][c]);
        for (std::size_t j = c; j < C; ++j) a[r][j] = a[r][j] * s % p;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t f = a[i][c];
            for (std::size_t j = c; j < C; ++j)
                if (a[r][j]) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Vector> rref(r, Vector(C));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) rref[i][j] = Scalar(static_cast<unsigned long>(a[i][j]));
    return finish(C, std::move(rref), std::move(pivots), m.field());
}

KernelResult rref_rational(const ScalarMatrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    // Clear denominators row by row.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j)
            if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j)
            if (m(i, j) != 0) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    // Bareiss forward elimination to echelon form.  The entries below the
    // current pivot row are minors of the input, so the division by the
    // previous pivot is exact.
    std::vector<std::size_t> pivots;
    mpz_class prev = 1, t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && a[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[r]);
        const mpz_class& pv = a[r][c];
        for (std::size_t i = r + 1; i < R; ++i) {
            mpz_class f = a[i][c];
            for (std::size_t j = c + 1; j < C; ++j) {
                if (a[i][j] == 0 && (f == 0 || a[r][j] == 0)) continue;
                t = pv * a[i][j];
                if (f != 0 && a[r][j] != 0) t -= f * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = pv;
        pivots.push_back(c);
        ++r;
    }

    // Back substitution in Q to reach the reduced form.
    std::vector<Vector> rref(r, Vector(C));
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class g = 0;
        for (std::size_t j = pivots[i]; j < C; ++j)
            if (a[i][j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i][j].get_mpz_t());
        for (std::size_t j = pivots[i]; j < C; ++j)
            if (a[i][j] != 0) rref[i][j] = Scalar(a[i][j] / g);
        Scalar s = Scalar(1) / rref[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < C; ++j)
            if (rref[i][j] != 0) rref[i][j] *= s;
    }
    for (std::size_t i = r; i-- > 0;) {
        std::size_t pc = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            if (rref[k][pc] == 0) continue;
            Scalar f = rref[k][pc];
            for (std::size_t j = pc; j < C; ++j)
                if (rref[i][j] != 0) rref[k][j] -= f * rref[i][j];
        }
    }
    return finish(C, std::move(rref), std::move(pivots), m.field());
}

} // namespace

KernelResult rref_kernel(const ScalarMatrix& m)
{
    return m.field().is_prime() ? rref_prime(m) : rref_rational(m);
}

std::size_t rank(const ScalarMatrix& m)
{
    return rref_kernel(m).rank;
}

std::optional<Solution> solve(const ScalarMatrix& m, const Vector& rhs)
{
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs has wrong length");
    const Field& F = m.field();
    ScalarMatrix aug(F, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = F.from(rhs[i]);
    }
    KernelResult kr = rref_kernel(aug);
    if (!kr.pivots.empty() && kr.pivots.back() == m.cols()) return std::nullopt;
    Solution s;
    s.x.assign(m.cols(), Scalar(0));
    for (std::size_t r = 0; r < kr.rank; ++r) s.x[kr.pivots[r]] = kr.rref[r][m.cols()];
    s.unique = kr.rank == m.cols();
    return s;
}

std::vector<Vector> row_basis(const Field& field, std::size_t dim, const std::vector<Vector>& vs)
{
    if (vs.empty()) return {};
    return rref_kernel(ScalarMatrix(field, dim, vs)).rref;
}

std::size_t span_rank(const Field& field, std::size_t dim, const std::vector<Vector>& vs)
{
    if (vs.empty()) return 0;
    return rref_kernel(ScalarMatrix(field, dim, vs)).rank;
}

bool span_contains(const Field& field, std::size_t dim, const std::vector<Vector>& big,
                   const std::vector<Vector>& small)
{
    std::vector<Vector> both = big;
    both.insert(both.end(), small.begin(), small.end());
    return span_rank(field, dim, both) == span_rank(field, dim, big);
}

bool span_equal(const Field& field, std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b)
{
    return row_basis(field, dim, a) == row_basis(field, dim, b);
}

std::vector<Vector> span_intersection(const Field& field, std::size_t dim, const std::vector<Vector>& a,
                                      const std::vector<Vector>& b)
{
    std::vector<Vector> A = row_basis(field, dim, a), B = row_basis(field, dim, b);
    if (A.empty() || B.empty()) return {};
    // Solve sum x_i A_i = sum y_j B_j via the kernel of [A^t | -B^t].
    ScalarMatrix m(field, dim, A.size() + B.size());
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < A.size(); ++i) m(k, i) = A[i][k];
        for (std::size_t j = 0; j < B.size(); ++j) m(k, A.size() + j) = field.neg(B[j][k]);
    }
    std::vector<Vector> out;
    for (const auto& kv : rref_kernel(m).kernel) {
        Vector v(dim, Scalar(0));
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (kv[i] == 0) continue;
            for (std::size_t k = 0; k < dim; ++k)
                if (A[i][k] != 0) v[k] = field.add(v[k], field.mul(kv[i], A[i][k]));
        }
        out.push_back(std::move(v));
    }
    return row_basis(field, dim, out);
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Polynomial(ring))
{
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix product: dimension mismatch");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Polynomial s(ring_);
            for (std::size_t k = 0; k < cols_; ++k)
                if (!(*this)(i, k).is_zero() && !o(k, j).is_zero()) s += (*this)(i, k) * o(k, j);
            r(i, j) = std::move(s);
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix sum: dimension mismatch");
    PolyMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::substitute(const std::vector<Polynomial>& images) const
{
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].substitute(images);
    return r;
}

PolyMatrix PolyMatrix::in_ring(const RingPtr& target) const
{
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].in_ring(target);
    return r;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

// Cofactor expansion along the first remaining row, memoized on the set of
// remaining columns.  Rows are consumed in order, so the column mask alone
// identifies a subproblem once the row list is fixed.
class MinorEngine {
public:
    MinorEngine(const PolyMatrix& m, std::vector<std::size_t> rows) : m_(m), rows_(std::move(rows)) {}

    Polynomial det(const std::vector<std::size_t>& cols)
    {
        std::uint64_t mask = 0;
        for (auto c : cols) mask |= std::uint64_t(1) << c;
        return rec(mask, 0);
    }

private:
    Polynomial rec(std::uint64_t mask, std::size_t depth)
    {
        if (depth == rows_.size()) return Polynomial::constant(m_.ring(), Scalar(1));
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Polynomial acc(m_.ring());
        bool negative = false;
        for (std::size_t c = 0; c < 64; ++c) {
            if (!(mask & (std::uint64_t(1) << c))) continue;
            const Polynomial& e = m_(rows_[depth], c);
            if (!e.is_zero()) {
                Polynomial sub = e * rec(mask & ~(std::uint64_t(1) << c), depth + 1);
                if (negative) acc -= sub;
                else acc += sub;
            }
            negative = !negative;
        }
        memo_.emplace(mask, acc);
        return acc;
    }

    const PolyMatrix& m_;
    std::vector<std::size_t> rows_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

} // namespace

Polynomial PolyMatrix::determinant() const
{
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix is not square");
    if (rows_ > 64) throw std::invalid_argument("determinant: matrix too large");
    std::vector<std::size_t> idx(rows_);
    for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
    return MinorEngine(*this, idx).det(idx);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k,
                               const std::optional<std::vector<std::size_t>>& row_set,
                               const std::optional<std::vector<std::size_t>>& col_set)
{
    std::vector<std::size_t> rows, cols;
    if (row_set) rows = *row_set;
    else for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(i);
    if (col_set) cols = *col_set;
    else for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
    for (auto r : rows)
        if (r >= m.rows()) throw std::out_of_range("minors: row index out of range");
    for (auto c : cols)
        if (c >= m.cols()) throw std::out_of_range("minors: column index out of range");
    if (k > rows.size() || k > cols.size()) throw std::invalid_argument("minors: k too large");
    if (m.cols() > 64) throw std::invalid_argument("minors: too many columns");

    std::vector<Polynomial> out;
    for (const auto& rs : subsets(rows.size(), k)) {
        std::vector<std::size_t> rsel;
        for (auto i : rs) rsel.push_back(rows[i]);
        MinorEngine eng(m, rsel);
        for (const auto& cs : subsets(cols.size(), k)) {
            std::vector<std::size_t> csel;
            for (auto j : cs) csel.push_back(cols[j]);
            out.push_back(eng.det(csel));
        }
    }
    return out;
}

} // namespace apolar
