#include "halg/linalg.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace halg;

namespace {

Matrix mat(std::vector<std::vector<int>> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(rows[i][j]);
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-2, 2);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(d(rng) * d(rng));
    return m;
}

std::vector<oracle::Row> to_oracle(const Matrix& m) {
    std::vector<oracle::Row> out(m.rows(), oracle::Row(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = oracle::Q(m.at(i, j).value().get_num().get_si(), m.at(i, j).value().get_den().get_si());
    return out;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    CHECK(Scalar::parse("3/6") == Scalar(mpq_class(1, 2)));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    FieldScope f(5);
    CHECK(Scalar(7) == Scalar(2));
    CHECK(Scalar(-1) == Scalar(4));
    CHECK(Scalar(2).inverse() == Scalar(3));
    CHECK(Scalar::parse("1/2") == Scalar(3));
    CHECK_THROWS(Scalar::parse("1/5"));
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix(3, 3)).dim() == 3);
    CHECK(kernel(Matrix::identity(3)).dim() == 0);
    Subspace k = kernel(mat({{1, 1}, {2, 2}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(Vec{Scalar(1), Scalar(-1)}));
    CHECK(!k.contains(Vec{Scalar(1), Scalar(1)}));
}

TEST_CASE("solve examples") {
    Vec t{Scalar(3), Scalar(-2)};
    CHECK(*solve(Matrix::identity(2), t) == t);
    CHECK(!solve(mat({{1, 0}, {0, 0}}), Vec{Scalar(0), Scalar(1)}));
    CHECK(*solve(mat({{2}}), Vec{Scalar(1)}) == Vec{Scalar(mpq_class(1, 2))});
    // free variables are zero
    CHECK(*solve(mat({{1, 1}}), Vec{Scalar(5)}) == Vec{Scalar(5), Scalar(0)});
}

TEST_CASE("quotient examples") {
    QuotientSpace q0 = quotient_by(Subspace(4));
    CHECK(q0.dim() == 4);
    Vec v{Scalar(1), Scalar(2), Scalar(3), Scalar(4)};
    CHECK(q0.section(q0.project(v)) == v);
    CHECK(quotient_by(Subspace::whole(4)).dim() == 0);
    QuotientSpace q = quotient_by(Subspace::span(4, {Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(-1)}}));
    CHECK(q.dim() == 3);
    CHECK(q.equal(basis_vec(4, 0), basis_vec(4, 3)));
    for (std::size_t i = 0; i < q.dim(); ++i) CHECK(q.project(q.section(basis_vec(3, i))) == basis_vec(3, i));
}

TEST_CASE("pivot order changes representatives, not classes") {
    std::vector<Vec> gens{Vec{Scalar(1), Scalar(-1), Scalar(0)}};
    Subspace natural = Subspace::span(3, gens);
    Subspace reversed = Subspace::span(3, gens, {2, 1, 0});
    Vec v = basis_vec(3, 0);
    CHECK(natural.reduce(v) == basis_vec(3, 1));
    CHECK(reversed.reduce(v) == basis_vec(3, 0));
    CHECK(reversed.reduce(basis_vec(3, 1)) == basis_vec(3, 0));
}

TEST_CASE("rank-nullity and kernel membership against a reference eliminator") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
        Matrix m = random_matrix(rng, r, c);
        LinearSolver s(m);
        CHECK(s.rank() == oracle::rank(to_oracle(m)));
        auto ker = s.kernel();
        CHECK(ker.size() + s.rank() == c);
        for (const Vec& k : ker) CHECK(is_zero(m.apply(k)));
        Vec x(c);
        for (auto& e : x) e = Scalar(static_cast<int>(rng() % 5) - 2);
        Vec b = m.apply(x);
        auto y = s.solve(b);
        REQUIRE(y);
        CHECK(m.apply(*y) == b);
    }
}

TEST_CASE("echelon basis is reduced and spans the same space") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng() % 6;
        std::vector<Vec> gens;
        for (int g = 0; g < 4; ++g) {
            Vec v(n);
            for (auto& e : v) e = Scalar(static_cast<int>(rng() % 5) - 2);
            gens.push_back(v);
        }
        Subspace s = Subspace::span(n, gens);
        auto b = s.basis();
        auto piv = s.pivots();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) CHECK(b[i][piv[j]] == Scalar(i == j ? 1 : 0));
        for (const Vec& g : gens) CHECK(s.contains(g));
        CHECK(s.dim() == oracle::rank(to_oracle(Matrix::from_rows(n, gens))));
    }
}

TEST_CASE("inverse") {
    Matrix m = mat({{2, 1}, {1, 1}});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Matrix::identity(2));
    CHECK(!inverse(mat({{1, 2}, {2, 4}})));
}

TEST_CASE("dual basis of idempotent presentations") {
    auto check = [](const Matrix& e) {
        DualBasis db = dual_basis(e);
        for (std::size_t j = 0; j < e.cols(); ++j) {
            Vec m = e.column(j);
            Vec rebuilt(e.rows());
            for (std::size_t i = 0; i < db.generators.size(); ++i) {
                Scalar c;
                for (std::size_t k = 0; k < m.size(); ++k) c += db.cogenerators[i][k] * m[k];
                axpy(rebuilt, c, db.generators[i]);
            }
            CHECK(rebuilt == m);
        }
        return db.generators.size();
    };
    CHECK(check(Matrix::identity(3)) == 3);
    CHECK(check(mat({{1, 0}, {0, 0}})) == 1);
    CHECK(check(mat({{1, 1}, {0, 0}})) == 1);
    CHECK_THROWS_AS(dual_basis(mat({{2, 0}, {0, 0}})), IdempotentNotIdempotent);
}
