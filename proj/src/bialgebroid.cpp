#include "halg/bialgebroid.hpp"

namespace halg {

TensorSpacePtr LeftBialgebroid::T_A() const {
    return tensor_space({carrier(), carrier()}, {{0, Act::Ract, 1, Act::Lact}});
}

TensorSpacePtr LeftBialgebroid::T_Aop() const {
    return tensor_space({carrier(), carrier()}, {{0, Act::BLact, 1, Act::Ract}});
}

TensorSpacePtr LeftBialgebroid::T_upA() const {
    return tensor_space({carrier(), carrier()}, {{0, Act::BRact, 1, Act::Lact}});
}

Vec LeftBialgebroid::Delta(const Vec& u) const { return apply_leg(u, {n()}, 0, delta, {n(), n()}); }

Vec LeftBialgebroid::base_action(const Vec& u, const Vec& a) const { return epsilon(U().mul(u, R.src(a))); }

Vec LeftBialgebroid::tensor_mul(const Vec& x, const Vec& y) const {
    std::size_t m = n();
    Vec r(m * m);
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < y.size(); ++q) {
            if (y[q].is_zero()) continue;
            Vec l = U().product(p / m, q / m);
            Vec rr = U().product(p % m, q % m);
            axpy(r, x[p] * y[q], kron(l, rr));
        }
    }
    return r;
}

namespace {

std::vector<std::vector<std::string>> names2(const FiniteAlgebra& u) { return {u.names(), u.names()}; }

}  // namespace

Report check_left_bialgebroid(const LeftBialgebroid& b) {
    Report rep = check_aering(b.R);
    const FiniteAlgebra& U = b.U();
    const FiniteAlgebra& A = b.A();
    std::size_t n = b.n(), na = b.na();
    if (b.delta.size() != n || b.eps.rows() != na || b.eps.cols() != n) {
        rep.fail("SHAPE", "coproduct or counit table has the wrong size");
        return rep;
    }
    auto TA = b.T_A();
    auto fmt2 = [&](const Vec& x) { return format_tensor(x, names2(U)); };

    Tally bimod("DELTA_BIMOD");
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t c = 0; c < na; ++c)
            for (std::size_t u = 0; u < n; ++u)
                bimod.guard([&] {
                    Vec su = U.mul(U.mul(b.R.src(a), b.R.tgt(c)), U.basis(u));
                    Vec lhs = b.Delta(su);
                    Vec rhs = apply_leg(apply_leg(b.delta[u], {n, n}, 0, U.left_mult(b.R.src(a))), {n, n}, 1, U.left_mult(b.R.tgt(c)));
                    bimod.expect(TA->equal(lhs, rhs), [&] { return "u=" + U.name(u) + ", a=" + A.name(a) + ", b=" + A.name(c) + ": " + fmt2(lhs) + " vs " + fmt2(rhs); });
                });
    rep.add(bimod);

    Tally coassoc("COASSOC");
    auto T3 = tensor_space({b.carrier(), b.carrier(), b.carrier()}, {{0, Act::Ract, 1, Act::Lact}, {1, Act::Ract, 2, Act::Lact}});
    for (std::size_t u = 0; u < n; ++u)
        coassoc.guard([&] {
            Vec l = apply_leg(b.delta[u], {n, n}, 0, b.delta, {n, n});
            Vec r = apply_leg(b.delta[u], {n, n}, 1, b.delta, {n, n});
            coassoc.expect(T3->equal(l, r), [&] { return "on " + U.name(u) + ": " + format_tensor(l, {U.names(), U.names(), U.names()}) + " vs " + format_tensor(r, {U.names(), U.names(), U.names()}); });
        });
    rep.add(coassoc);

    Tally cl("COUNIT_L"), cr("COUNIT_R");
    for (std::size_t u = 0; u < n; ++u) {
        cl.guard([&] {
            Vec v = contract(b.delta[u], {n, n}, 0, 1, [&](std::size_t i, std::size_t j) -> std::optional<Vec> { return U.mul(b.R.src(b.eps.column(i)), U.basis(j)); }, {n});
            cl.expect(v == U.basis(u), [&] { return "s(eps(u1))u2 = " + U.format(v) + " for u = " + U.name(u); });
        });
        cr.guard([&] {
            Vec v = contract(b.delta[u], {n, n}, 0, 1, [&](std::size_t i, std::size_t j) -> std::optional<Vec> { return U.mul(b.R.tgt(b.eps.column(j)), U.basis(i)); }, {n});
            cr.expect(v == U.basis(u), [&] { return "t(eps(u2))u1 = " + U.format(v) + " for u = " + U.name(u); });
        });
    }
    rep.add(cl);
    rep.add(cr);

    Tally tk("TAKEUCHI");
    for (std::size_t u = 0; u < n; ++u)
        tk.guard([&] {
            std::string w;
            bool ok = satisfies_exchange(*TA, b.delta[u], {{0, Act::BLact, 1, Act::BRact}}, &w);
            tk.expect(ok, [&] { return "Delta(" + U.name(u) + ") not in the Takeuchi product: " + w; });
        });
    rep.add(tk);

    Tally mult("DELTA_MULT");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!b.admissible(i, j)) continue;
            mult.guard([&] {
                Vec lhs = b.Delta(U.product(i, j));
                Vec rhs = b.tensor_mul(b.delta[i], b.delta[j]);
                mult.expect(TA->equal(lhs, rhs), [&] { return "on " + U.name(i) + "*" + U.name(j) + ": " + fmt2(lhs) + " vs " + fmt2(rhs); });
            });
        }
    rep.add(mult);

    Tally dunit("DELTA_UNIT");
    dunit.guard([&] {
        Vec d = b.Delta(U.unit());
        dunit.expect(TA->equal(d, kron(U.unit(), U.unit())), [&] { return "Delta(1) = " + fmt2(d); });
    });
    rep.add(dunit);

    Tally ebimod("EPS_BIMOD");
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t c = 0; c < na; ++c)
            for (std::size_t u = 0; u < n; ++u)
                ebimod.guard([&] {
                    Vec lhs = b.epsilon(U.mul(U.mul(b.R.src(a), b.R.tgt(c)), U.basis(u)));
                    Vec rhs = A.mul(A.mul(A.basis(a), b.eps.column(u)), A.basis(c));
                    ebimod.expect(lhs == rhs, [&] { return "eps(" + A.name(a) + " ▷ " + U.name(u) + " ◁ " + A.name(c) + ") = " + A.format(lhs) + " vs " + A.format(rhs); });
                });
    rep.add(ebimod);

    Tally es("EPS_MULT_S"), et("EPS_MULT_T");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!b.admissible(i, j)) continue;
            es.guard([&] {
                Vec lhs = b.epsilon(U.product(i, j));
                Vec rhs = b.epsilon(U.mul(U.basis(i), b.R.src(b.eps.column(j))));
                es.expect(lhs == rhs, [&] { return "eps(" + U.name(i) + U.name(j) + ") = " + A.format(lhs) + " vs eps(u s(eps u')) = " + A.format(rhs); });
            });
            et.guard([&] {
                Vec lhs = b.epsilon(U.product(i, j));
                Vec rhs = b.epsilon(U.mul(U.basis(i), b.R.tgt(b.eps.column(j))));
                et.expect(lhs == rhs, [&] { return "eps(" + U.name(i) + U.name(j) + ") = " + A.format(lhs) + " vs eps(u t(eps u')) = " + A.format(rhs); });
            });
        }
    rep.add(es);
    rep.add(et);

    Tally eu("EPS_UNIT");
    eu.expect(b.epsilon(U.unit()) == A.unit(), [&] { return "eps(1) = " + A.format(b.epsilon(U.unit())); });
    rep.add(eu);
    return rep;
}

Report check_takeuchi_subalgebra(const LeftBialgebroid& b) {
    auto TA = b.T_A();
    Subspace tk = takeuchi_subspace(*TA, {{0, Act::BLact, 1, Act::BRact}});
    Tally t("TAKEUCHI_SUBALG");
    std::vector<Vec> elems;
    for (const Vec& c : tk.basis()) elems.push_back(TA->section(c));
    t.guard([&] {
        t.expect(tk.contains(TA->project(kron(b.U().unit(), b.U().unit()))), [] { return std::string("1(x)1 is not in the Takeuchi product"); });
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j < elems.size(); ++j) {
                if (b.filtered() && TA->degree_of(elems[i]) + TA->degree_of(elems[j]) > b.U().cap()) continue;
                Vec p = b.tensor_mul(elems[i], elems[j]);
                t.expect(tk.contains(TA->project(p)), [&] { return "product of Takeuchi elements " + std::to_string(i) + "," + std::to_string(j) + " leaves the product"; });
            }
        // well-defined on classes: relations times Takeuchi elements vanish
        if (!b.filtered())
            for (const Vec& rel : TA->quotient().relations().basis())
                for (std::size_t i = 0; i < elems.size(); ++i)
                    t.expect(TA->is_zero(b.tensor_mul(elems[i], rel)) && TA->is_zero(b.tensor_mul(rel, elems[i])),
                             [&] { return "factorwise product is not well defined on element " + std::to_string(i); });
        for (std::size_t j = 0; j < elems.size(); ++j) {
            Vec one = kron(b.U().unit(), b.U().unit());
            t.expect(TA->equal(b.tensor_mul(one, elems[j]), elems[j]), [] { return std::string("1(x)1 is not a unit"); });
        }
    });
    Report r;
    r.add(t);
    return r;
}

Report check_action_on_base(const LeftBialgebroid& b) {
    const FiniteAlgebra& U = b.U();
    const FiniteAlgebra& A = b.A();
    Tally mod("BASE_MODULE"), st("BASE_ACTION_ST");
    for (std::size_t a = 0; a < b.na(); ++a) {
        mod.expect(b.base_action(U.unit(), A.basis(a)) == A.basis(a), [&] { return "1(" + A.name(a) + ") != " + A.name(a); });
        for (std::size_t u = 0; u < b.n(); ++u) {
            st.guard([&] {
                Vec l = b.base_action(U.basis(u), A.basis(a));
                Vec r = b.epsilon(U.mul(U.basis(u), b.R.tgt(a)));
                st.expect(l == r, [&] { return "eps(u s(a)) != eps(u t(a)) at " + U.name(u) + ", " + A.name(a); });
            });
            for (std::size_t v = 0; v < b.n(); ++v) {
                if (!b.admissible(u, v)) continue;
                mod.guard([&] {
                    Vec l = b.base_action(U.product(u, v), A.basis(a));
                    Vec r = b.base_action(U.basis(u), b.base_action(U.basis(v), A.basis(a)));
                    mod.expect(l == r, [&] { return "(uv)(a) != u(v(a)) at " + U.name(u) + ", " + U.name(v) + ", " + A.name(a); });
                });
            }
        }
    }
    Report r;
    r.add(mod);
    r.add(st);
    return r;
}

TensorSpacePtr RightBialgebroid::T_A() const {
    return tensor_space({carrier(), carrier()}, {{0, Act::BRact, 1, Act::BLact}});
}

Vec RightBialgebroid::Delta(const Vec& v) const { return apply_leg(v, {n()}, 0, delta, {n(), n()}); }

LeftBialgebroid mirror_to_left(const RightBialgebroid& v) {
    FiniteAlgebra op = opposite(v.V());
    LeftBialgebroid l{AeRing(v.A(), op, v.R.t(), v.R.s(), v.name + "^op"), v.delta, v.partial, v.name + "^op"};
    return l;
}

RightBialgebroid mirror_to_right(const LeftBialgebroid& u) {
    FiniteAlgebra op = opposite(u.U());
    return RightBialgebroid{AeRing(u.A(), op, u.R.t(), u.R.s(), u.name + "^op"), u.delta, u.eps, u.name + "^op"};
}

Report check_right_bialgebroid(const RightBialgebroid& v) { return check_left_bialgebroid(mirror_to_left(v)); }

RightBialgebroid opposite_bialgebroid(const LeftBialgebroid& b) { return mirror_to_right(b); }

Vec flip2(const Vec& x, std::size_t n1, std::size_t n2) { return permute_legs(x, {n1, n2}, {1, 0}); }

LeftBialgebroid coopposite_bialgebroid(const LeftBialgebroid& b) {
    std::vector<Vec> d;
    for (const Vec& x : b.delta) d.push_back(flip2(x, b.n(), b.n()));
    return LeftBialgebroid{AeRing(opposite(b.A()), b.U(), b.R.t(), b.R.s(), b.name + "_coop"), d, b.eps, b.name + "_coop"};
}

namespace {

Vec pair_eval(const Pairing& p, const Vec& u, const Vec& w) {
    std::size_t na = p.u->na();
    Vec r(na);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) axpy(r, u[i] * w[j], p.form[i][j]);
    }
    return r;
}

}  // namespace

Report check_pairing(const Pairing& p) {
    const LeftBialgebroid& B = *p.u;
    const FiniteAlgebra& A = B.A();
    const Carrier& W = *p.w;
    std::string pre = p.kind == PairingKind::Left ? "PAIR_L" : "PAIR_R";
    std::vector<Tally> t;
    for (int k = 1; k <= 5; ++k) t.emplace_back(pre + std::to_string(k));
    auto U_act = [&](Act a, std::size_t x, const Vec& u) { return B.R.act(a, x, u); };
    auto W_act = [&](Act a, std::size_t x, const Vec& w) { return W.act(a).at(x).apply(w); };
    for (std::size_t a = 0; a < B.na(); ++a)
        for (std::size_t i = 0; i < B.n(); ++i)
            for (std::size_t j = 0; j < W.dim; ++j) {
                Vec u = B.U().basis(i), w = basis_vec(W.dim, j), av = A.basis(a);
                auto expect = [&](int k, const Vec& l, const Vec& r) {
                    t[k - 1].expect(l == r, [&] {
                        return "u=" + B.U().name(i) + ", w=" + std::to_string(j) + ", a=" + A.name(a) + ": " + A.format(l) + " vs " + A.format(r);
                    });
                };
                Vec base = pair_eval(p, u, w);
                if (p.kind == PairingKind::Left) {
                    expect(1, pair_eval(p, u, W_act(Act::Lact, a, w)), pair_eval(p, U_act(Act::Ract, a, u), w));
                    expect(2, pair_eval(p, u, W_act(Act::Ract, a, w)), pair_eval(p, U_act(Act::BLact, a, u), w));
                    expect(3, pair_eval(p, u, W_act(Act::BLact, a, w)), pair_eval(p, U_act(Act::BRact, a, u), w));
                    expect(4, pair_eval(p, u, W_act(Act::BRact, a, w)), A.mul(base, av));
                    expect(5, pair_eval(p, U_act(Act::Lact, a, u), w), A.mul(av, base));
                } else {
                    expect(1, pair_eval(p, u, W_act(Act::Ract, a, w)), pair_eval(p, U_act(Act::Lact, a, u), w));
                    expect(2, pair_eval(p, u, W_act(Act::Lact, a, w)), pair_eval(p, U_act(Act::BRact, a, u), w));
                    expect(3, pair_eval(p, u, W_act(Act::BRact, a, w)), pair_eval(p, U_act(Act::BLact, a, u), w));
                    expect(4, pair_eval(p, u, W_act(Act::BLact, a, w)), A.mul(av, base));
                    expect(5, pair_eval(p, U_act(Act::Ract, a, u), w), A.mul(base, av));
                }
            }
    Report r;
    for (const auto& x : t) r.add(x);
    return r;
}

std::size_t pairing_rank(const Pairing& p) {
    std::size_t n = p.u->n(), na = p.u->na(), m = p.w->dim;
    Matrix w_side(m, n * na);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < na; ++c) w_side.at(j, i * na + c) = p.form[i][j][c];
    return rank(w_side);
}

}  // namespace halg
