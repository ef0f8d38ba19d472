#include "halg/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace halg {

Vec zeros(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Scalar(1);
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (y.size() != x.size()) throw DimensionMismatch("axpy: sizes differ");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    axpy(r, Scalar(1), b);
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    axpy(r, Scalar(-1), b);
    return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = c * v[i];
    return r;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ')';
    return os.str();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("from_rows: row length");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column: length");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: matrix has " + std::to_string(cols_) + " columns, vector has " + std::to_string(v.size()));
    Vec r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) r[i].add_mul(at(i, j), v[j]);
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j).add_mul(a, o.at(k, j));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Subspace::Subspace(std::size_t ambient, std::vector<std::size_t> order)
    : ambient_(ambient), order_(std::move(order)), rank_(ambient), pivot_row_(ambient, -1) {
    if (order_.empty()) {
        order_.resize(ambient);
        std::iota(order_.begin(), order_.end(), 0);
    }
    if (order_.size() != ambient) throw DimensionMismatch("subspace order is not a permutation");
    for (std::size_t r = 0; r < ambient; ++r) rank_[order_[r]] = r;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& gens, std::vector<std::size_t> order) {
    Subspace s(ambient, std::move(order));
    for (const Vec& g : gens) s.add(g);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.add(basis_vec(ambient, i));
    return s;
}

void Subspace::reduce_in_place(std::vector<Scalar>& work) const {
    for (std::size_t r = 0; r < ambient_; ++r) {
        if (work[r].is_zero() || pivot_row_[r] < 0) continue;
        Scalar c = -work[r];
        for (const auto& [pos, val] : rows_[pivot_row_[r]]) work[pos].add_mul(c, val);
    }
}

void Subspace::insert_work(std::vector<Scalar>& work, std::size_t first) {
    Scalar inv = work[first].inverse();
    Sparse row;
    for (std::size_t r = first; r < ambient_; ++r)
        if (!work[r].is_zero()) row.emplace_back(r, work[r] * inv);
    pivot_row_[first] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
}

bool Subspace::add(const Vec& v) {
    if (v.size() != ambient_) throw DimensionMismatch("subspace add: length");
    std::vector<Scalar> work(ambient_);
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!v[c].is_zero()) work[rank_[c]] = v[c];
    reduce_in_place(work);
    for (std::size_t r = 0; r < ambient_; ++r)
        if (!work[r].is_zero()) {
            insert_work(work, r);
            return true;
        }
    return false;
}

void Subspace::add_sparse(const std::vector<std::pair<std::size_t, Scalar>>& v) {
    std::vector<Scalar> work(ambient_);
    for (const auto& [c, val] : v) work[rank_.at(c)] += val;
    reduce_in_place(work);
    for (std::size_t r = 0; r < ambient_; ++r)
        if (!work[r].is_zero()) {
            insert_work(work, r);
            return;
        }
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector length " + std::to_string(v.size()) + " vs ambient " + std::to_string(ambient_));
    std::vector<Scalar> work(ambient_);
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!v[c].is_zero()) work[rank_[c]] = v[c];
    reduce_in_place(work);
    Vec out(ambient_);
    for (std::size_t r = 0; r < ambient_; ++r)
        if (!work[r].is_zero()) out[order_[r]] = work[r];
    return out;
}

bool Subspace::contains(const Vec& v) const { return halg::is_zero(reduce(v)); }

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t r = 0; r < ambient_; ++r)
        if (pivot_row_[r] >= 0) p.push_back(order_[r]);
    return p;
}

std::vector<Vec> Subspace::basis() const {
    // rows are kept in echelon form only; back-substitute here
    std::vector<std::vector<Scalar>> dense;
    std::vector<std::size_t> lead;
    for (std::size_t r = 0; r < ambient_; ++r) {
        if (pivot_row_[r] < 0) continue;
        std::vector<Scalar> d(ambient_);
        for (const auto& [p, val] : rows_[pivot_row_[r]]) d[p] = val;
        dense.push_back(std::move(d));
        lead.push_back(r);
    }
    for (std::size_t k = dense.size(); k-- > 0;)
        for (std::size_t i = 0; i < k; ++i) {
            if (dense[i][lead[k]].is_zero()) continue;
            Scalar c = -dense[i][lead[k]];
            for (std::size_t p = lead[k]; p < ambient_; ++p)
                if (!dense[k][p].is_zero()) dense[i][p].add_mul(c, dense[k][p]);
        }
    std::vector<Vec> out;
    for (const auto& d : dense) {
        Vec v(ambient_);
        for (std::size_t p = 0; p < ambient_; ++p) v[order_[p]] = d[p];
        out.push_back(std::move(v));
    }
    return out;
}

QuotientSpace::QuotientSpace(Subspace relations) : rel_(std::move(relations)) {
    std::vector<bool> piv(rel_.ambient(), false);
    for (std::size_t p : rel_.pivots()) piv[p] = true;
    for (std::size_t c = 0; c < rel_.ambient(); ++c)
        if (!piv[c]) free_.push_back(c);
}

Vec QuotientSpace::project(const Vec& v) const {
    Vec r = rel_.reduce(v);
    Vec out(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) out[i] = r[free_[i]];
    return out;
}

Vec QuotientSpace::section(const Vec& coords) const {
    if (coords.size() != free_.size()) throw DimensionMismatch("section: coordinate length");
    Vec out(rel_.ambient());
    for (std::size_t i = 0; i < free_.size(); ++i) out[free_[i]] = coords[i];
    return out;
}

LinearSolver::LinearSolver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()), r_(a), e_(Matrix::identity(a.rows())) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && r_.at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(r_.at(p, j), r_.at(row, j));
            for (std::size_t j = 0; j < rows_; ++j) std::swap(e_.at(p, j), e_.at(row, j));
        }
        Scalar inv = r_.at(row, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j) r_.at(row, j) *= inv;
        for (std::size_t j = 0; j < rows_; ++j) e_.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || r_.at(i, col).is_zero()) continue;
            Scalar c = -r_.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                if (!r_.at(row, j).is_zero()) r_.at(i, j).add_mul(c, r_.at(row, j));
            for (std::size_t j = 0; j < rows_; ++j)
                if (!e_.at(row, j).is_zero()) e_.at(i, j).add_mul(c, e_.at(row, j));
        }
        pivots_.push_back(col);
        ++row;
    }
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
    if (b.size() != rows_) throw DimensionMismatch("solve: right-hand side length");
    Vec c = e_.apply(b);
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!c[i].is_zero()) return std::nullopt;
    Vec x(cols_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = c[k];
    return x;
}

Vec LinearSolver::solve_or_throw(const Vec& b) const {
    auto x = solve(b);
    if (!x) throw NoSolution();
    return *x;
}

std::vector<Vec> LinearSolver::kernel() const {
    std::vector<bool> piv(cols_, false);
    for (std::size_t p : pivots_) piv[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (piv[f]) continue;
        Vec v(cols_);
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < pivots_.size(); ++k) v[pivots_[k]] = -r_.at(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const Matrix& a) { return LinearSolver(a).rank(); }

Subspace kernel(const Matrix& a) { return Subspace::span(a.cols(), LinearSolver(a).kernel()); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) { return LinearSolver(a).solve(b); }

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    LinearSolver s(a);
    if (s.rank() != a.rows()) return std::nullopt;
    Matrix inv(a.rows(), a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) inv.set_column(j, *s.solve(basis_vec(a.rows(), j)));
    return inv;
}

QuotientSpace quotient_by(const Subspace& relations) { return QuotientSpace(relations); }

DualBasis dual_basis(const Matrix& e) {
    if (e.rows() != e.cols()) throw DimensionMismatch("dual_basis: idempotent must be square");
    if (e * e != e) throw IdempotentNotIdempotent();
    std::size_t n = e.rows();
    LinearSolver s(e);
    DualBasis db;
    for (std::size_t p : s.pivots()) db.generators.push_back(e.column(p));
    Matrix g = Matrix::from_columns(n, db.generators);
    LinearSolver gs(g);
    Matrix f(db.generators.size(), n);
    for (std::size_t j = 0; j < n; ++j) f.set_column(j, gs.solve_or_throw(e.column(j)));
    for (std::size_t i = 0; i < db.generators.size(); ++i) db.cogenerators.push_back(f.row(i));
    return db;
}

}  // namespace halg
