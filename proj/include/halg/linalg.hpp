#pragma once

#include "halg/errors.hpp"
#include "halg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace halg {

using Vec = std::vector<Scalar>;

Vec zeros(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
// Kronecker product, first factor is the slow index.
Vec kron(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);

    Vec apply(const Vec& v) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// A subspace kept in reduced echelon form. Pivots are chosen along `order`,
// a permutation of the coordinates; the default order is 0,1,2,...
class Subspace {
public:
    explicit Subspace(std::size_t ambient, std::vector<std::size_t> order = {});
    static Subspace span(std::size_t ambient, const std::vector<Vec>& gens, std::vector<std::size_t> order = {});
    static Subspace whole(std::size_t ambient);

    // Adds a vector; returns false if it was already contained.
    bool add(const Vec& v);
    void add_sparse(const std::vector<std::pair<std::size_t, Scalar>>& v);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    // Canonical representative of v modulo the subspace: zero on every pivot column.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    // Reduced echelon basis in original coordinates, sorted by pivot position.
    std::vector<Vec> basis() const;
    std::vector<std::size_t> pivots() const;
    const std::vector<std::size_t>& order() const { return order_; }

private:
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;  // positions are ranks in order_
    void insert_work(std::vector<Scalar>& work, std::size_t first);
    void reduce_in_place(std::vector<Scalar>& work) const;

    std::size_t ambient_;
    std::vector<std::size_t> order_;  // rank -> column
    std::vector<std::size_t> rank_;   // column -> rank
    std::vector<Sparse> rows_;        // each row has leading 1 at its pivot rank
    std::vector<long> pivot_row_;     // rank -> row index or -1
};

// Quotient of the ambient space by a subspace. Coordinates are the non-pivot
// columns in increasing column order.
class QuotientSpace {
public:
    explicit QuotientSpace(Subspace relations);

    std::size_t ambient() const { return rel_.ambient(); }
    std::size_t dim() const { return free_.size(); }
    const Subspace& relations() const { return rel_; }
    const std::vector<std::size_t>& free_columns() const { return free_; }

    Vec reduce(const Vec& v) const { return rel_.reduce(v); }
    Vec project(const Vec& v) const;
    Vec section(const Vec& coords) const;
    bool equal(const Vec& a, const Vec& b) const { return rel_.contains(a - b); }
    bool is_zero(const Vec& v) const { return rel_.contains(v); }

private:
    Subspace rel_;
    std::vector<std::size_t> free_;
};

// Gauss-Jordan factorization of a fixed matrix, reused for many right-hand sides.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& a);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    // A solution with all free variables zero, or nullopt.
    std::optional<Vec> solve(const Vec& b) const;
    Vec solve_or_throw(const Vec& b) const;
    // Kernel basis read off the reduced echelon form: one vector per free column.
    std::vector<Vec> kernel() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t rows_, cols_;
    Matrix r_;  // reduced echelon form of A
    Matrix e_;  // transformation with e_ * A = r_
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& a);
Subspace kernel(const Matrix& a);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);
QuotientSpace quotient_by(const Subspace& relations);

// Finitely generated projective module over the ground field presented as the image of an idempotent.
struct DualBasis {
    std::vector<Vec> generators;    // e_i, columns in the free module
    std::vector<Vec> cogenerators;  // e^i, row functionals on the free module
};
DualBasis dual_basis(const Matrix& idempotent);

}  // namespace halg
