#include "halg/algebra.hpp"

#include <sstream>

namespace halg {

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> names, Vec unit, std::vector<Vec> table)
    : names_(std::move(names)), unit_(std::move(unit)), table_(std::move(table)) {
    std::size_t n = names_.size();
    if (unit_.size() != n) throw DimensionMismatch("algebra unit has wrong length");
    if (table_.size() != n * n) throw DimensionMismatch("algebra table must have dim^2 entries");
    for (auto& v : table_)
        if (v.size() != n) throw DimensionMismatch("algebra product has wrong length");
}

FiniteAlgebra FiniteAlgebra::ground_field() { return FiniteAlgebra({"1"}, Vec{Scalar(1)}, {Vec{Scalar(1)}}); }

std::size_t FiniteAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw Error("unknown basis element '" + name + "'");
}

void FiniteAlgebra::set_filtration(std::vector<int> degree, int cap) {
    if (degree.size() != dim()) throw DimensionMismatch("degree list length");
    degree_ = std::move(degree);
    cap_ = cap;
}

int FiniteAlgebra::degree_of(const Vec& v) const {
    int d = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) d = std::max(d, degree(i));
    return d;
}

const Vec& FiniteAlgebra::product(std::size_t i, std::size_t j) const {
    if (!admissible(i, j))
        throw DegreeCapExceeded("product " + names_[i] + "*" + names_[j] + " exceeds degree cap " + std::to_string(cap_));
    return table_[i * dim() + j];
}

void FiniteAlgebra::set_product(std::size_t i, std::size_t j, Vec v) {
    if (v.size() != dim()) throw DimensionMismatch("product length");
    table_.at(i * dim() + j) = std::move(v);
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("algebra mul: operand length");
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            axpy(r, c, product(i, j));
        }
    }
    return r;
}

Matrix FiniteAlgebra::left_mult(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(x, basis(j)));
    return m;
}

Matrix FiniteAlgebra::right_mult(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(basis(j), x));
    return m;
}

std::string FiniteAlgebra::format(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].str();
        if (!first) os << (c[0] == '-' ? " - " : " + ");
        else if (c[0] == '-') os << "-";
        if (c[0] == '-') c.erase(0, 1);
        if (c != "1") os << c << " ";
        os << names_[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FiniteAlgebra opposite(const FiniteAlgebra& a) {
    std::size_t n = a.dim();
    std::vector<Vec> t(n * n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.admissible(j, i)) t[i * n + j] = a.product(j, i);
    FiniteAlgebra op(a.names(), a.unit(), t);
    if (a.filtered()) op.set_filtration(a.degrees(), a.cap());
    return op;
}

FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.filtered() || b.filtered()) throw Error("tensor_algebra: filtered factors are not supported");
    std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) names.push_back(a.name(i) + "|" + b.name(j));
    std::vector<Vec> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i * n + j] = kron(a.product(i / nb, j / nb), b.product(i % nb, j % nb));
    return FiniteAlgebra(names, kron(a.unit(), b.unit()), t);
}

FiniteAlgebra enveloping(const FiniteAlgebra& a) { return tensor_algebra(a, opposite(a)); }

Report check_algebra_axioms(const FiniteAlgebra& a, const std::string& prefix) {
    std::size_t n = a.dim();
    Tally assoc(prefix + "_ASSOC"), unit(prefix + "_UNIT");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (a.filtered() && a.degree(i) + a.degree(j) + a.degree(k) > a.cap()) continue;
                assoc.guard([&] {
                    Vec l = a.mul(a.product(i, j), a.basis(k));
                    Vec r = a.mul(a.basis(i), a.product(j, k));
                    assoc.expect(l == r, [&] { return "(" + a.name(i) + "*" + a.name(j) + ")*" + a.name(k) + " = " + a.format(l) + " but " + a.name(i) + "*(" + a.name(j) + "*" + a.name(k) + ") = " + a.format(r); });
                });
            }
    for (std::size_t i = 0; i < n; ++i)
        unit.guard([&] {
            Vec b = a.basis(i);
            unit.expect(a.mul(a.unit(), b) == b && a.mul(b, a.unit()) == b, [&] { return "unit fails on " + a.name(i); });
        });
    Report r;
    r.add(assoc);
    r.add(unit);
    return r;
}

Report check_algebra_map(const AlgebraMap& f, const std::string& id, bool anti) {
    const FiniteAlgebra& s = *f.source;
    const FiniteAlgebra& t = *f.target;
    Tally tally(id);
    tally.guard([&] {
        tally.expect(f(s.unit()) == t.unit(), [&] { return std::string("not unital"); });
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j) {
                if (!s.admissible(i, j)) continue;
                Vec lhs = f(s.product(i, j));
                Vec fi = f(s.basis(i)), fj = f(s.basis(j));
                Vec rhs = anti ? t.mul(fj, fi) : t.mul(fi, fj);
                tally.expect(lhs == rhs, [&] { return "on (" + s.name(i) + ", " + s.name(j) + "): " + t.format(lhs) + " vs " + t.format(rhs); });
            }
    });
    Report r;
    r.add(tally);
    return r;
}

bool is_bijective(const AlgebraMap& f) {
    return f.linear.rows() == f.linear.cols() && rank(f.linear) == f.linear.rows();
}

Report check_bimodule(const FiniteAlgebra& a, const Bimodule& m, const std::string& prefix) {
    Tally left(prefix + "_LEFT"), right(prefix + "_RIGHT"), comm(prefix + "_COMMUTE");
    auto op = [&](const std::vector<Matrix>& acts, const Vec& x) {
        Matrix r(m.dim, m.dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) {
                Matrix s = acts[i];
                for (std::size_t p = 0; p < m.dim; ++p)
                    for (std::size_t q = 0; q < m.dim; ++q) r.at(p, q) += x[i] * s.at(p, q);
            }
        return r;
    };
    Matrix id = Matrix::identity(m.dim);
    left.expect(op(m.left, a.unit()) == id, [] { return std::string("left action not unital"); });
    right.expect(op(m.right, a.unit()) == id, [] { return std::string("right action not unital"); });
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            left.expect(op(m.left, a.product(i, j)) == m.left[i] * m.left[j], [&] { return "left action on " + a.name(i) + "," + a.name(j); });
            right.expect(op(m.right, a.product(i, j)) == m.right[j] * m.right[i], [&] { return "right action on " + a.name(i) + "," + a.name(j); });
            comm.expect(m.left[i] * m.right[j] == m.right[j] * m.left[i], [&] { return "actions of " + a.name(i) + "," + a.name(j) + " do not commute"; });
        }
    Report r;
    r.add(left);
    r.add(right);
    r.add(comm);
    return r;
}

Bimodule regular_bimodule(const FiniteAlgebra& a) {
    Bimodule m;
    m.dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m.left.push_back(a.left_mult(a.basis(i)));
        m.right.push_back(a.right_mult(a.basis(i)));
    }
    return m;
}

}  // namespace halg
