#include "halg/gallery.hpp"

#include <functional>
#include <regex>

namespace halg {

namespace {

using ProductFn = std::function<Vec(std::size_t, std::size_t)>;

FiniteAlgebra algebra_from(const std::vector<std::string>& names, std::size_t unit_index, const ProductFn& f) {
    std::size_t n = names.size();
    std::vector<Vec> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = f(i, j);
    return FiniteAlgebra(names, basis_vec(n, unit_index), t);
}

Matrix columns(std::size_t rows, const std::vector<Vec>& cols) { return Matrix::from_columns(rows, cols); }

Scalar binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(mpq_class(r));
}

// k[x]/(x^2) with basis 1, x.
FiniteAlgebra dual_numbers() {
    return algebra_from({"1", "x"}, 0, [](std::size_t i, std::size_t j) {
        Vec v(2);
        if (i + j <= 1) v[i + j] = Scalar(1);
        return v;
    });
}

}  // namespace

Instance make_hopf_c2() {
    FiniteAlgebra k = FiniteAlgebra::ground_field();
    FiniteAlgebra U = algebra_from({"1", "g"}, 0, [](std::size_t i, std::size_t j) { return basis_vec(2, (i + j) % 2); });
    Matrix st = columns(2, {basis_vec(2, 0)});
    LeftBialgebroid B{AeRing(k, U, st, st, "kC2"), {kron(basis_vec(2, 0), basis_vec(2, 0)), kron(basis_vec(2, 1), basis_vec(2, 1))},
                      Matrix::from_rows(2, {Vec{Scalar(1), Scalar(1)}}), "kC2"};
    return Instance{"EX-HOPF", 0, B, Matrix::identity(2), Matrix::from_rows(2, {Vec{Scalar(1), Scalar(1)}})};
}

Instance make_sweedler() {
    // basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
    FiniteAlgebra k = FiniteAlgebra::ground_field();
    const int table[4][4][2] = {
        // {index, sign}
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
        {{1, 1}, {0, 1}, {3, 1}, {2, 1}},
        {{2, 1}, {3, -1}, {0, 0}, {0, 0}},
        {{3, 1}, {2, -1}, {0, 0}, {0, 0}},
    };
    FiniteAlgebra U = algebra_from({"1", "g", "x", "gx"}, 0, [&](std::size_t i, std::size_t j) {
        Vec v(4);
        v[table[i][j][0]] = Scalar(table[i][j][1]);
        return v;
    });
    auto e = [](std::size_t i) { return basis_vec(4, i); };
    std::vector<Vec> delta{kron(e(0), e(0)), kron(e(1), e(1)), kron(e(2), e(0)) + kron(e(1), e(2)), kron(e(3), e(1)) + kron(e(0), e(3))};
    Matrix eps = Matrix::from_rows(4, {Vec{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}});
    Matrix st = columns(4, {e(0)});
    Matrix S = columns(4, {e(0), e(1), Scalar(-1) * e(3), e(2)});
    return Instance{"EX-SW", 0, LeftBialgebroid{AeRing(k, U, st, st, "H4"), delta, eps, "H4"}, S, eps};
}

Instance make_pair_groupoid() {
    // matrix units e11, e12, e21, e22 over A = k x k (idempotents d1, d2)
    FiniteAlgebra A({"d1", "d2"}, Vec{Scalar(1), Scalar(1)}, {Vec{Scalar(1), Scalar(0)}, Vec(2), Vec(2), Vec{Scalar(0), Scalar(1)}});
    auto idx = [](std::size_t i, std::size_t j) { return 2 * i + j; };
    std::vector<Vec> t(16);
    for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) {
            Vec v(4);
            if (p % 2 == q / 2) v[idx(p / 2, q % 2)] = Scalar(1);
            t[p * 4 + q] = v;
        }
    FiniteAlgebra U({"e11", "e12", "e21", "e22"}, Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}, t);
    Matrix st = columns(4, {basis_vec(4, 0), basis_vec(4, 3)});
    std::vector<Vec> delta;
    Matrix eps(2, 4), S(4, 4), partial(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            delta.push_back(kron(basis_vec(4, idx(i, j)), basis_vec(4, idx(i, j))));
            eps.at(i, idx(i, j)) = Scalar(1);
            partial.at(j, idx(i, j)) = Scalar(1);
            S.at(idx(j, i), idx(i, j)) = Scalar(1);
        }
    return Instance{"EX-GPD", 0, LeftBialgebroid{AeRing(A, U, st, st, "M2"), delta, eps, "M2"}, S, partial};
}

Instance make_enveloping_dual_numbers() {
    FiniteAlgebra A = dual_numbers();
    FiniteAlgebra U = enveloping(A);
    std::size_t n = U.dim();  // index 2*a + b for a|b
    Matrix s(n, 2), t(n, 2), eps(2, n), S(n, n);
    std::vector<Vec> delta;
    for (std::size_t a = 0; a < 2; ++a) {
        s.set_column(a, basis_vec(n, 2 * a));
        t.set_column(a, basis_vec(n, a));
    }
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            delta.push_back(kron(basis_vec(n, 2 * a), basis_vec(n, b)));
            eps.set_column(2 * a + b, A.product(a, b));
            S.at(2 * b + a, 2 * a + b) = Scalar(1);
        }
    return Instance{"EX-AE", 0, LeftBialgebroid{AeRing(A, U, s, t, "Ae"), delta, eps, "Ae"}, S, eps};
}

Instance make_lie_rinehart(int cap, const Anchor& anchor, const std::string& name) {
    FiniteAlgebra A = dual_numbers();
    std::size_t n = static_cast<std::size_t>(2 * (cap + 1));
    std::vector<std::string> names;
    std::vector<int> deg;
    for (int b = 0; b <= cap; ++b)
        for (int a = 0; a <= 1; ++a) {
            std::string d = b == 0 ? "" : (b == 1 ? "D" : "D^" + std::to_string(b));
            names.push_back(a == 0 ? (b == 0 ? "1" : d) : "x" + d);
            deg.push_back(b);
        }
    // elements of A as pairs (f0, f1) meaning f0 + f1 x
    using AElt = std::pair<Scalar, Scalar>;
    auto derive = [&](AElt f) { return AElt{f.second * anchor.c0, f.second * anchor.c1}; };
    auto derive_k = [&](AElt f, int k) {
        for (int i = 0; i < k; ++i) f = derive(f);
        return f;
    };
    auto times_xa = [](int a, AElt f) { return a == 0 ? f : AElt{Scalar(0), f.first}; };
    auto place = [&](Vec& v, const Scalar& c, AElt g, int m) {
        v[lr_index(0, m)] += c * g.first;
        v[lr_index(1, m)] += c * g.second;
    };
    std::vector<Vec> table(n * n, Vec(n));
    for (int b = 0; b <= cap; ++b)
        for (int a = 0; a <= 1; ++a)
            for (int d = 0; d <= cap; ++d)
                for (int c = 0; c <= 1; ++c) {
                    if (b + d > cap) continue;
                    Vec v(n);
                    AElt xc = c == 0 ? AElt{Scalar(1), Scalar(0)} : AElt{Scalar(0), Scalar(1)};
                    for (int k = 0; k <= b; ++k) place(v, binom(b, k), times_xa(a, derive_k(xc, k)), b - k + d);
                    table[lr_index(a, b) * n + lr_index(c, d)] = v;
                }
    FiniteAlgebra U(names, basis_vec(n, 0), table);
    U.set_filtration(deg, cap);
    Matrix st = columns(n, {basis_vec(n, lr_index(0, 0)), basis_vec(n, lr_index(1, 0))});
    std::vector<Vec> delta(n);
    Matrix eps(2, n), partial(2, n), S(n, n);
    for (int b = 0; b <= cap; ++b)
        for (int a = 0; a <= 1; ++a) {
            std::size_t u = lr_index(a, b);
            Vec d(n * n);
            for (int i = 0; i <= b; ++i) axpy(d, binom(b, i), kron(basis_vec(n, lr_index(a, i)), basis_vec(n, lr_index(0, b - i))));
            delta[u] = d;
            if (b == 0) eps.at(a, u) = Scalar(1);
            Scalar sign = (b % 2 == 0) ? Scalar(1) : Scalar(-1);
            // ∂(x^a D^b) = (-D)^b (x^a) in A
            AElt xa = a == 0 ? AElt{Scalar(1), Scalar(0)} : AElt{Scalar(0), Scalar(1)};
            AElt p = derive_k(xa, b);
            partial.at(0, u) = sign * p.first;
            partial.at(1, u) = sign * p.second;
            // S(x^a D^b) = (-D)^b x^a
            Vec sv(n);
            for (int k = 0; k <= b; ++k) place(sv, sign * binom(b, k), derive_k(xa, k), b - k);
            S.set_column(u, sv);
        }
    return Instance{name, characteristic(), LeftBialgebroid{AeRing(A, U, st, st, "V"), delta, eps, "V"}, S, partial};
}

std::vector<std::string> gallery_names() { return {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE", "EX-LR(3)"}; }

unsigned long gallery_characteristic(const std::string& name) { return name.rfind("EX-LR2", 0) == 0 ? 2 : 0; }

Instance build_gallery_instance(const std::string& name) {
    if (name == "EX-HOPF") return make_hopf_c2();
    if (name == "EX-SW") return make_sweedler();
    if (name == "EX-GPD") return make_pair_groupoid();
    if (name == "EX-AE") return make_enveloping_dual_numbers();
    std::smatch m;
    static const std::regex lr(R"(EX-LR(2?)\((\d+)\))");
    if (std::regex_match(name, m, lr)) {
        int cap = std::stoi(m[2]);
        if (cap < 1) throw UnknownInstance("EX-LR needs a cap of at least 1");
        if (m[1] == "2") {
            if (characteristic() != 2) throw UnknownInstance(name + " lives over F_2; open a FieldScope(2) first");
            return make_lie_rinehart(cap, Anchor{Scalar(1), Scalar(0)}, name);
        }
        return make_lie_rinehart(cap, Anchor{Scalar(0), Scalar(1)}, name);
    }
    throw UnknownInstance("unknown gallery instance '" + name + "'");
}

}  // namespace halg
