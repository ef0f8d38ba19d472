#include "halg/comodules.hpp"

#include "halg/errors.hpp"

namespace halg {

namespace {

bool is_right(const Comodule& m) { return m.side == ComoduleSide::Right; }

// Σ a_k action[k]
Matrix act_by(const std::vector<Matrix>& action, const Vec& a, std::size_t dim) {
    Matrix r(dim, dim);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) r.at(i, j) += a[k] * action[k].at(i, j);
    }
    return r;
}

// Calls fn(coefficient, carrier index, U index) for every term of a coaction vector.
template <typename Fn>
void for_terms(const Comodule& m, std::size_t n, const Vec& x, Fn fn) {
    std::size_t d = m.dim();
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        if (is_right(m))
            fn(x[k], k / n, k % n);
        else
            fn(x[k], k % d, k / d);
    }
}

Vec tabulate(const LeftBialgebroid& b, const std::function<Vec(std::size_t)>& value) {
    std::size_t na = b.na();
    Vec f(b.n() * na);
    for (std::size_t u = 0; u < b.n(); ++u) {
        Vec v = value(u);
        for (std::size_t c = 0; c < na; ++c) f[u * na + c] = v[c];
    }
    return f;
}

std::string matrix_difference(const Matrix& x, const Matrix& y) {
    for (std::size_t j = 0; j < x.cols() && j < y.cols(); ++j)
        if (x.column(j) != y.column(j)) return "column " + std::to_string(j) + ": " + to_string(x.column(j)) + " vs " + to_string(y.column(j));
    return "shape";
}

// s_*(a) for U_* (u ↦ ε(u)a), as dual coordinates
Vec dual_source(const LeftBialgebroid& b, const DualBialgebroid& d, std::size_t a) {
    const FiniteAlgebra& A = b.A();
    return d.coords_or_throw(tabulate(b, [&](std::size_t u) { return A.mul(b.epsilon(b.U().basis(u)), A.basis(a)); }));
}

}  // namespace

std::vector<Matrix> induced_action(const LeftBialgebroid& b, const Comodule& m) {
    const FiniteAlgebra& U = b.U();
    std::size_t d = m.dim(), n = b.n();
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < b.na(); ++a) {
        Matrix r(d, d);
        Vec lift = is_right(m) ? b.R.tgt(a) : b.R.src(a);
        for (std::size_t j = 0; j < d; ++j) {
            Vec col(d);
            for_terms(m, n, m.coaction[j], [&](const Scalar& c, std::size_t p, std::size_t u) {
                Vec e = b.epsilon(U.mul(U.basis(u), lift));
                col = col + c * act_by(m.action, e, d).column(p);
            });
            r.set_column(j, col);
        }
        out.push_back(std::move(r));
    }
    return out;
}

CarrierPtr comodule_carrier(const LeftBialgebroid& b, const Comodule& m) {
    auto c = std::make_shared<Carrier>();
    c->name = m.name;
    c->dim = m.dim();
    if (is_right(m)) {
        c->set(Act::Ract, m.action);
        c->set(Act::Lact, induced_action(b, m));
    } else {
        c->set(Act::Lact, m.action);
        c->set(Act::Ract, induced_action(b, m));
    }
    return c;
}

TensorSpacePtr coaction_space(const LeftBialgebroid& b, const Comodule& m) {
    CarrierPtr c = comodule_carrier(b, m);
    if (is_right(m)) return tensor_space({c, b.carrier()}, {{0, Act::Ract, 1, Act::Lact}});
    return tensor_space({b.carrier(), c}, {{0, Act::Ract, 1, Act::Lact}});
}

Report check_comodule(const LeftBialgebroid& b, const Comodule& m) {
    Report rep;
    std::size_t d = m.dim(), n = b.n();
    if (m.coaction.size() != d || m.action.size() != b.na()) throw DimensionMismatch("comodule " + m.name + ": coaction or action count");
    CarrierPtr c = comodule_carrier(b, m);
    bool right = is_right(m);
    TensorSpacePtr T = right ? tensor_space({c, b.carrier()}, {{0, Act::Ract, 1, Act::Lact}})
                             : tensor_space({b.carrier(), c}, {{0, Act::Ract, 1, Act::Lact}});
    std::vector<std::size_t> dims = right ? std::vector<std::size_t>{d, n} : std::vector<std::size_t>{n, d};
    std::size_t cleg = right ? 0 : 1, uleg = 1 - cleg;
    auto coact = [&](const Vec& v) {
        Vec r(d * n);
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero()) r = r + v[k] * m.coaction[k];
        return r;
    };
    auto name = [&](std::size_t j) { return m.names[j]; };

    Tally counit("COMOD_COUNIT"), coassoc("COMOD_COASSOC"), linear("COMOD_LINEAR"), tak("COMOD_TAKEUCHI"), ind("COMOD_INDUCED_LINEAR");
    TensorSpacePtr T3 = right ? tensor_space({c, b.carrier(), b.carrier()}, {{0, Act::Ract, 1, Act::Lact}, {1, Act::Ract, 2, Act::Lact}})
                              : tensor_space({b.carrier(), b.carrier(), c}, {{0, Act::Ract, 1, Act::Lact}, {1, Act::Ract, 2, Act::Lact}});
    for (std::size_t j = 0; j < d; ++j) {
        const Vec& x = m.coaction[j];
        Vec back(d);
        for_terms(m, n, x, [&](const Scalar& co, std::size_t p, std::size_t u) { back = back + co * act_by(m.action, b.epsilon(b.U().basis(u)), d).column(p); });
        counit.expect(back == basis_vec(d, j), [&] { return name(j) + " -> " + to_string(back); });

        coassoc.guard([&] {
            Vec lhs = apply_leg(x, dims, cleg, m.coaction, dims);
            Vec rhs = apply_leg(x, dims, uleg, b.delta, {n, n});
            coassoc.expect(T3->equal(lhs, rhs), [&] { return "on " + name(j); });
        });
        for (std::size_t a = 0; a < b.na(); ++a) {
            std::string an = b.A().name(a);
            // ρ(m·a) = m(0) ⊗ t(a)m(1), λ(a·n) = s(a)n(-1) ⊗ n(0)
            Vec l = coact(m.action[a].column(j));
            Vec r = T->act(x, uleg, right ? Act::Ract : Act::Lact, a);
            linear.expect(T->equal(l, r), [&] { return name(j) + ", " + an; });
            // a·m(0) ⊗ m(1) = m(0) ⊗ m(1)s(a), n(-1)t(a) ⊗ n(0) = n(-1) ⊗ n(0)·a
            Vec p = right ? T->act(x, 0, Act::Lact, a) : T->act(x, 0, Act::BLact, a);
            Vec q = right ? T->act(x, 1, Act::BRact, a) : T->act(x, 1, Act::Ract, a);
            tak.expect(T->equal(p, q), [&] { return name(j) + ", " + an; });
            // ρ(a·m) = m(0) ⊗ m(1)t(a), λ(n·a) = n(-1)s(a) ⊗ n(0)
            Vec il = coact(c->act(right ? Act::Lact : Act::Ract)[a].column(j));
            Vec ir = T->act(x, uleg, right ? Act::BLact : Act::BRact, a);
            ind.expect(T->equal(il, ir), [&] { return name(j) + ", " + an; });
        }
    }
    for (const Tally* t : {&counit, &coassoc, &linear, &tak, &ind}) rep.add(*t);
    return rep;
}

Comodule regular_comodule(const LeftBialgebroid& b, ComoduleSide side) {
    Comodule m;
    m.side = side;
    m.name = b.name;
    m.names = b.U().names();
    m.action = b.carrier()->act(side == ComoduleSide::Right ? Act::Ract : Act::Lact);
    m.coaction = b.delta;
    return m;
}

Comodule unit_comodule(const LeftBialgebroid& b, ComoduleSide side) {
    const FiniteAlgebra& A = b.A();
    Comodule m;
    m.side = side;
    m.name = "A";
    m.names = A.names();
    CarrierPtr c = base_carrier(A);
    m.action = c->act(side == ComoduleSide::Right ? Act::Ract : Act::Lact);
    for (std::size_t a = 0; a < A.dim(); ++a)
        m.coaction.push_back(side == ComoduleSide::Right ? kron(A.unit(), b.R.tgt(a)) : kron(b.R.src(a), A.unit()));
    return m;
}

Comodule functor_F(const LeftBialgebroid& b, const Comodule& m, const TranslationData& ltd) {
    if (!is_right(m) || ltd.kind != Side::Left) throw SideMismatch("F takes a right comodule and left translation data");
    std::size_t d = m.dim(), n = b.n();
    Comodule out;
    out.side = ComoduleSide::Left;
    out.name = "F(" + m.name + ")";
    out.names = m.names;
    out.action = induced_action(b, m);
    for (std::size_t j = 0; j < d; ++j) {
        Vec y(n * d);
        for_terms(m, n, m.coaction[j], [&](const Scalar& c, std::size_t p, std::size_t u) {
            const Vec& x = ltd.table[u];
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k].is_zero()) continue;
                // u- ⊗ m(0)ε(u+)
                Vec v = act_by(m.action, b.epsilon(b.U().basis(k / n)), d).column(p);
                y = y + (c * x[k]) * kron(basis_vec(n, k % n), v);
            }
        });
        out.coaction.push_back(std::move(y));
    }
    return out;
}

Comodule functor_G(const LeftBialgebroid& b, const Comodule& m, const TranslationData& rtd) {
    if (is_right(m) || rtd.kind != Side::Right) throw SideMismatch("G takes a left comodule and right translation data");
    std::size_t d = m.dim(), n = b.n();
    Comodule out;
    out.side = ComoduleSide::Right;
    out.name = "G(" + m.name + ")";
    out.names = m.names;
    out.action = induced_action(b, m);
    for (std::size_t j = 0; j < d; ++j) {
        Vec y(d * n);
        for_terms(m, n, m.coaction[j], [&](const Scalar& c, std::size_t p, std::size_t u) {
            const Vec& x = rtd.table[u];
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k].is_zero()) continue;
                // ε(u[+])n(0) ⊗ u[-]
                Vec v = act_by(m.action, b.epsilon(b.U().basis(k / n)), d).column(p);
                y = y + (c * x[k]) * kron(v, basis_vec(n, k % n));
            }
        });
        out.coaction.push_back(std::move(y));
    }
    return out;
}

Comodule tensor_comodules(const LeftBialgebroid& b, const Comodule& m, const Comodule& m2) {
    if (m.side != m2.side) throw SideMismatch("tensor product of comodules of different sides");
    bool right = is_right(m);
    CarrierPtr c1 = comodule_carrier(b, m), c2 = comodule_carrier(b, m2);
    TensorSpacePtr T = tensor_space({c1, c2}, {{0, Act::Ract, 1, Act::Lact}});
    const FiniteAlgebra& U = b.U();
    std::size_t d1 = m.dim(), d2 = m2.dim(), n = b.n(), D = T->dim();
    Comodule out;
    out.side = m.side;
    out.name = m.name + "(x)" + m2.name;
    for (std::size_t f : T->quotient().free_columns()) out.names.push_back(m.names[f / d2] + "(x)" + m2.names[f % d2]);
    for (std::size_t a = 0; a < b.na(); ++a) {
        Matrix r(D, D);
        for (std::size_t k = 0; k < D; ++k)
            r.set_column(k, T->project(right ? T->act(T->section(basis_vec(D, k)), 1, Act::Ract, a) : T->act(T->section(basis_vec(D, k)), 0, Act::Lact, a)));
        out.action.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < D; ++k) {
        Vec x = T->section(basis_vec(D, k));
        Vec y(D * n);
        for (std::size_t ij = 0; ij < x.size(); ++ij) {
            if (x[ij].is_zero()) continue;
            std::size_t i = ij / d2, j = ij % d2;
            for_terms(m, n, m.coaction[i], [&](const Scalar& c, std::size_t p, std::size_t u) {
                for_terms(m2, n, m2.coaction[j], [&](const Scalar& c2, std::size_t r, std::size_t s) {
                    Vec z = T->project(kron(basis_vec(d1, p), basis_vec(d2, r)));
                    // m'(1)m(1) on the right, n(-1)n'(-1) on the left
                    Vec prod = right ? U.product(s, u) : U.product(u, s);
                    y = y + (x[ij] * c * c2) * (right ? kron(z, prod) : kron(prod, z));
                });
            });
        }
        out.coaction.push_back(std::move(y));
    }
    return out;
}

Report compare_comodules(const LeftBialgebroid& b, const Comodule& x, const Comodule& y, const std::string& id) {
    Report rep;
    Tally t(id);
    if (x.side != y.side || x.dim() != y.dim()) {
        t.fail("side or dimension differs: " + x.name + " vs " + y.name);
        rep.add(t);
        return rep;
    }
    for (std::size_t a = 0; a < b.na(); ++a)
        t.expect(x.action[a] == y.action[a], [&] { return "A-action of " + b.A().name(a) + ": " + matrix_difference(x.action[a], y.action[a]); });
    TensorSpacePtr T = coaction_space(b, x);
    for (std::size_t j = 0; j < x.dim(); ++j)
        t.expect(T->equal(x.coaction[j], y.coaction[j]), [&] { return "coaction on " + x.names[j]; });
    rep.add(t);
    return rep;
}

Report check_monoidality(const LeftBialgebroid& b, const Comodule& m, const Comodule& m2, const TranslationData& td) {
    Report rep;
    bool right = is_right(m);
    std::string f = right ? "F_" : "G_";
    auto functor = [&](const Comodule& x) { return right ? functor_F(b, x, td) : functor_G(b, x, td); };
    Tally tensor(f + "TENSOR");
    tensor.guard([&] {
        Comodule lhs = functor(tensor_comodules(b, m, m2));
        Comodule rhs = tensor_comodules(b, functor(m), functor(m2));
        Report r = compare_comodules(b, lhs, rhs, f + "TENSOR");
        const CheckResult* c = r.find(f + "TENSOR");
        tensor.expect(c && c->status == Status::Pass, [&] { return c ? c->witness : std::string("missing"); });
    });
    rep.add(tensor);
    ComoduleSide from = right ? ComoduleSide::Right : ComoduleSide::Left;
    ComoduleSide to = right ? ComoduleSide::Left : ComoduleSide::Right;
    rep.merge(compare_comodules(b, functor(unit_comodule(b, from)), unit_comodule(b, to), f + "UNIT"));
    return rep;
}

Report check_quasi_inverse(const LeftBialgebroid& b, const Comodule& right, const Comodule& left, const TranslationData& ltd,
                           const TranslationData& rtd) {
    Report rep;
    Comodule fm = functor_F(b, right, ltd);
    rep.merge(compare_comodules(b, functor_G(b, fm, rtd), right, "GF_ID"));
    rep.merge(compare_comodules(b, functor_F(b, functor_G(b, left, rtd), ltd), left, "FG_ID"));
    // F and G keep the A^e-module: the induced action of F(M) is the action of M
    Tally keep("FUNCTOR_ACTIONS");
    std::vector<Matrix> back = induced_action(b, fm);
    for (std::size_t a = 0; a < b.na(); ++a)
        keep.expect(back[a] == right.action[a], [&] { return "F(" + right.name + "), " + b.A().name(a) + ": " + matrix_difference(back[a], right.action[a]); });
    Comodule gn = functor_G(b, left, rtd);
    std::vector<Matrix> back2 = induced_action(b, gn);
    for (std::size_t a = 0; a < b.na(); ++a)
        keep.expect(back2[a] == left.action[a], [&] { return "G(" + left.name + "), " + b.A().name(a) + ": " + matrix_difference(back2[a], left.action[a]); });
    rep.add(keep);
    return rep;
}

Matrix DualModule::act(const Vec& f) const {
    return act_by(action, f, dim());
}

DualModule comodule_to_dual_module(const LeftBialgebroid& b, const Comodule& m, const DualBialgebroid& d) {
    if (is_right(m) != (d.side == DualSide::Left)) throw SideMismatch("right comodules act over U_*, left comodules over U^*");
    std::size_t dim = m.dim(), n = b.n();
    DualModule out;
    out.over = d.side;
    out.names = m.names;
    for (std::size_t f = 0; f < d.dim(); ++f) {
        Matrix r(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec col(dim);
            // m(0)ψ(m(1)) or φ(n(-1))n(0)
            for_terms(m, n, m.coaction[j], [&](const Scalar& c, std::size_t p, std::size_t u) {
                col = col + c * act_by(m.action, d.eval_basis(f, u), dim).column(p);
            });
            r.set_column(j, col);
        }
        out.action.push_back(std::move(r));
    }
    return out;
}

Report check_dual_module(const DualBialgebroid& d, const DualModule& m) {
    Report rep;
    Tally assoc("DMOD_ASSOC"), unit("DMOD_UNIT");
    const FiniteAlgebra& D = d.R.V();
    for (std::size_t i = 0; i < d.dim(); ++i)
        for (std::size_t j = 0; j < d.dim(); ++j) {
            Matrix lhs = m.act(D.product(i, j));
            Matrix rhs = m.action[j] * m.action[i];
            assoc.expect(lhs == rhs, [&] { return "m." + D.name(i) + D.name(j) + ": " + matrix_difference(lhs, rhs); });
        }
    Matrix one = m.act(D.unit());
    unit.expect(one == Matrix::identity(m.dim()), [&] { return matrix_difference(one, Matrix::identity(m.dim())); });
    rep.add(assoc);
    rep.add(unit);
    return rep;
}

Comodule dual_module_to_comodule(const LeftBialgebroid& b, const DualModule& m, const DualBialgebroid& d) {
    if (d.side != DualSide::Left || m.over != DualSide::Left) throw SideMismatch("comodules are recovered from right U_*-modules");
    if (d.generators.size() != d.dim()) throw Error("U_* has no dual basis generators");
    std::size_t dim = m.dim(), n = b.n();
    Comodule out;
    out.side = ComoduleSide::Right;
    out.name = "M";
    out.names = m.names;
    // m·a = m·s_*(a)
    for (std::size_t a = 0; a < b.na(); ++a) out.action.push_back(m.act(dual_source(b, d, a)));
    for (std::size_t j = 0; j < dim; ++j) {
        Vec y(dim * n);
        for (std::size_t i = 0; i < d.dim(); ++i) y = y + kron(m.action[i].column(j), d.generators[i]);
        out.coaction.push_back(std::move(y));
    }
    return out;
}

DualModule derived_ustar_action(const LeftBialgebroid& b, const DualModule& m, const DualBialgebroid& left, const DualBialgebroid& right,
                                const TranslationData& ltd) {
    if (m.over != DualSide::Left || left.side != DualSide::Left || right.side != DualSide::Right || ltd.kind != Side::Left)
        throw SideMismatch("derived action needs a right U_*-module, U_*, U^* and left translation data");
    if (left.generators.size() != left.dim()) throw Error("U_* has no dual basis generators");
    const FiniteAlgebra& U = b.U();
    std::size_t n = b.n(), dim = m.dim();
    std::vector<Matrix> by_a;
    for (std::size_t a = 0; a < b.na(); ++a) by_a.push_back(m.act(dual_source(b, left, a)));
    DualModule out;
    out.over = DualSide::Right;
    out.names = m.names;
    for (std::size_t f = 0; f < right.dim(); ++f) {
        Matrix r(dim, dim);
        for (std::size_t i = 0; i < left.dim(); ++i) {
            // ε(e_i+ s(φ(e_i-)))
            Vec x = ltd(left.generators[i]);
            Vec e(b.na());
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k].is_zero()) continue;
                Vec phi = right.eval_basis(f, k % n);
                axpy(e, x[k], b.epsilon(U.mul(U.basis(k / n), b.R.src(phi))));
            }
            r = r + act_by(by_a, e, dim) * m.action[i];
        }
        out.action.push_back(std::move(r));
    }
    return out;
}

DualModule regular_dual_module(const DualBialgebroid& d) {
    DualModule out;
    out.over = d.side;
    out.names = d.R.V().names();
    for (std::size_t j = 0; j < d.dim(); ++j) out.action.push_back(d.R.V().right_mult(d.R.V().basis(j)));
    return out;
}

DualModule restrict_along(const DualModule& m, const Matrix& f, DualSide over) {
    DualModule out;
    out.over = over;
    out.names = m.names;
    for (std::size_t j = 0; j < f.cols(); ++j) out.action.push_back(m.act(f.column(j)));
    return out;
}

Report compare_dual_modules(const DualModule& x, const DualModule& y, const std::string& id) {
    Report rep;
    Tally t(id);
    if (x.over != y.over || x.dim() != y.dim() || x.action.size() != y.action.size()) {
        t.fail("side, dimension or generator count differs");
    } else {
        for (std::size_t j = 0; j < x.action.size(); ++j)
            t.expect(x.action[j] == y.action[j], [&] { return "generator " + std::to_string(j) + ": " + matrix_difference(x.action[j], y.action[j]); });
    }
    rep.add(t);
    return rep;
}

Report check_equivariance(const DualBialgebroid& left, const DualModule& derived) {
    Report rep;
    Tally t("EQUIVARIANCE");
    const FiniteAlgebra& D = left.R.V();
    if (derived.dim() != left.dim()) throw DimensionMismatch("equivariance is checked on the regular U_*-module");
    for (std::size_t p = 0; p < left.dim(); ++p) {
        Matrix L = D.left_mult(D.basis(p));
        for (std::size_t f = 0; f < derived.action.size(); ++f) {
            Matrix lhs = derived.action[f] * L, rhs = L * derived.action[f];
            t.expect(lhs == rhs, [&] { return D.name(p) + ", functional " + std::to_string(f) + ": " + matrix_difference(lhs, rhs); });
        }
    }
    rep.add(t);
    return rep;
}

}  // namespace halg
