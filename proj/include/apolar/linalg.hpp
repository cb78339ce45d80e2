#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <optional>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

using Vector = std::vector<Scalar>;

class ScalarMatrix {
public:
    ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols) {}
    ScalarMatrix(Field field, std::size_t cols, const std::vector<Vector>& rows);

    static ScalarMatrix identity(Field field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector operator*(const Vector& v) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const ScalarMatrix& o) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct KernelResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    // Reduced row echelon form, nonzero rows only, pivot entries equal to 1.
    std::vector<Vector> rref;
    // One vector per free column, with a 1 in that column and zeros in the
    // other free columns.
    std::vector<Vector> kernel;
};

// Over Q the forward pass is fraction free (integer Bareiss elimination after
// clearing row denominators); over Z/p it is ordinary Gauss-Jordan on machine
// words.
KernelResult rref_kernel(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);

struct Solution {
    Vector x;
    bool unique = false;
};

std::optional<Solution> solve(const ScalarMatrix& m, const Vector& rhs);

// Row-space helpers on lists of coordinate vectors of a common length.
std::vector<Vector> row_basis(const Field& field, std::size_t dim, const std::vector<Vector>& vs);
std::size_t span_rank(const Field& field, std::size_t dim, const std::vector<Vector>& vs);
bool span_contains(const Field& field, std::size_t dim, const std::vector<Vector>& big,
                   const std::vector<Vector>& small);
bool span_equal(const Field& field, std::size_t dim, const std::vector<Vector>& a,
                const std::vector<Vector>& b);
// Basis of span(a) ∩ span(b).
std::vector<Vector> span_intersection(const Field& field, std::size_t dim, const std::vector<Vector>& a,
                                      const std::vector<Vector>& b);

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    PolyMatrix substitute(const std::vector<Polynomial>& images) const;
    PolyMatrix in_ring(const RingPtr& target) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;

    Polynomial determinant() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

// All k x k minors, ordered lexicographically by (row tuple, column tuple).
// Optional row/column sets restrict the choice.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k,
                               const std::optional<std::vector<std::size_t>>& row_set = std::nullopt,
                               const std::optional<std::vector<std::size_t>>& col_set = std::nullopt);

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

} // namespace apolar

#endif
