#include "halg/duals.hpp"

#include "halg/errors.hpp"

namespace halg {

std::optional<Vec> DualBialgebroid::coords(const Vec& flat) const { return solver->solve(flat); }

Vec DualBialgebroid::coords_or_throw(const Vec& flat) const {
    auto c = coords(flat);
    if (!c) throw Error(std::string("functional is not in the ") + (side == DualSide::Left ? "left" : "right") + " dual");
    return *c;
}

Vec DualBialgebroid::flat(const Vec& c) const {
    Vec r(functionals.empty() ? 0 : functionals[0].size());
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) axpy(r, c[j], functionals[j]);
    return r;
}

Vec eval_flat(const Vec& f, const Vec& u, std::size_t na) {
    Vec r(na);
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].is_zero()) continue;
        for (std::size_t c = 0; c < na; ++c) r[c] += u[k] * f[k * na + c];
    }
    return r;
}

Vec DualBialgebroid::eval(const Vec& c, const Vec& u) const { return eval_flat(flat(c), u, na()); }

Vec DualBialgebroid::eval_basis(std::size_t j, std::size_t u) const {
    std::size_t m = na();
    return Vec(functionals[j].begin() + static_cast<long>(u * m), functionals[j].begin() + static_cast<long>((u + 1) * m));
}

namespace {

// Flat functional from its values on the basis of U.
Vec flat_from(std::size_t n, std::size_t na, const std::function<Vec(std::size_t)>& value) {
    Vec f(n * na);
    for (std::size_t u = 0; u < n; ++u) {
        Vec v = value(u);
        for (std::size_t c = 0; c < na; ++c) f[u * na + c] = v[c];
    }
    return f;
}

Vec pair_flat(const LeftBialgebroid& b, DualSide side, const Vec& f1, const Vec& f2, const Vec& u, const Vec& v) {
    const FiniteAlgebra& U = b.U();
    std::size_t na = b.na();
    if (side == DualSide::Left) return eval_flat(f2, U.mul(u, b.R.src(eval_flat(f1, v, na))), na);
    return eval_flat(f1, U.mul(u, b.R.tgt(eval_flat(f2, v, na))), na);
}

}  // namespace

Vec pair_tensor(const LeftBialgebroid& b, const DualBialgebroid& d, const Vec& x, const Vec& u, const Vec& v) {
    std::size_t m = d.dim();
    Vec r(b.na());
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        axpy(r, x[p], pair_flat(b, d.side, d.functionals[p / m], d.functionals[p % m], u, v));
    }
    return r;
}

DualBialgebroid build_dual(const LeftBialgebroid& b, DualSide side) {
    const FiniteAlgebra& U = b.U();
    const FiniteAlgebra& A = b.A();
    std::size_t n = b.n(), na = b.na(), flat_dim = n * na;
    bool left = side == DualSide::Left;

    // ψ(s(a)u) = aψ(u) resp. φ(t(a)u) = φ(u)a
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t u = 0; u < n; ++u) {
            Vec moved = U.mul(left ? b.R.src(a) : b.R.tgt(a), U.basis(u));
            for (std::size_t c = 0; c < na; ++c) {
                Vec row(flat_dim);
                for (std::size_t k = 0; k < n; ++k)
                    if (!moved[k].is_zero()) row[k * na + c] += moved[k];
                for (std::size_t c2 = 0; c2 < na; ++c2) {
                    const Vec& p = left ? A.product(a, c2) : A.product(c2, a);
                    row[u * na + c2] -= p[c];
                }
                rows.push_back(row);
            }
        }
    Subspace ker = rows.empty() ? Subspace::whole(flat_dim) : kernel(Matrix::from_rows(flat_dim, rows));
    DualBialgebroid d;
    d.side = side;
    d.functionals = ker.basis();
    std::size_t m = d.functionals.size();
    d.solver = std::make_shared<LinearSolver>(Matrix::from_columns(flat_dim, d.functionals));

    auto eps_of = [&](const Vec& u) { return b.epsilon(u); };
    auto val = [&](const Vec& f, const Vec& u) { return eval_flat(f, u, na); };

    // product
    std::vector<Vec> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Vec& f = d.functionals[i];
            const Vec& g = d.functionals[j];
            Vec prod = flat_from(n, na, [&](std::size_t u) {
                Vec r(na);
                const Vec& du = b.delta[u];
                for (std::size_t p = 0; p < du.size(); ++p) {
                    if (du[p].is_zero()) continue;
                    Vec u1 = U.basis(p / n), u2 = U.basis(p % n);
                    // (ψψ')(u) = ψ'(t(ψ(u2))u1), (φφ')(u) = φ'(s(φ(u1))u2)
                    Vec w = left ? val(g, U.mul(b.R.tgt(val(f, u2)), u1)) : val(g, U.mul(b.R.src(val(f, u1)), u2));
                    axpy(r, du[p], w);
                }
                return r;
            });
            table[i * m + j] = d.coords_or_throw(prod);
        }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < m; ++j) names.push_back((left ? "psi" : "phi") + std::to_string(j));
    Vec unit = d.coords_or_throw(flat_from(n, na, [&](std::size_t u) { return eps_of(U.basis(u)); }));
    FiniteAlgebra D(names, unit, table);

    Matrix s(m, na), t(m, na), partial(na, m);
    for (std::size_t a = 0; a < na; ++a) {
        Vec av = A.basis(a);
        Vec sf = flat_from(n, na, [&](std::size_t u) {
            return left ? A.mul(eps_of(U.basis(u)), av) : eps_of(U.mul(U.basis(u), b.R.src(a)));
        });
        Vec tf = flat_from(n, na, [&](std::size_t u) {
            return left ? eps_of(U.mul(U.basis(u), b.R.tgt(a))) : A.mul(av, eps_of(U.basis(u)));
        });
        s.set_column(a, d.coords_or_throw(sf));
        t.set_column(a, d.coords_or_throw(tf));
    }
    for (std::size_t j = 0; j < m; ++j) partial.set_column(j, val(d.functionals[j], U.unit()));
    std::string name = b.name + (left ? "_*" : "^*");
    d.R = RightBialgebroid{AeRing(A, D, s, t, name), {}, partial, name};
    d.degreewise = U.filtered();

    // dual basis: u = Σ s(e^j(u)) e_j resp. Σ t(e^j(u)) e_j
    {
        Matrix M(n * n, m * n);
        Vec rhs(n * n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t j = 0; j < m; ++j) {
                Vec a = d.eval_basis(j, u);
                Vec lift = left ? b.R.src(a) : b.R.tgt(a);
                for (std::size_t g = 0; g < n; ++g) {
                    Vec col = U.mul(lift, U.basis(g));
                    for (std::size_t k = 0; k < n; ++k) M.at(u * n + k, j * n + g) = col[k];
                }
            }
            rhs[u * n + u] = Scalar(1);
        }
        auto sol = solve(M, rhs);
        if (!sol) {
            d.note = std::string(left ? "▷U" : "U◁") + " is not finitely generated projective";
            return d;
        }
        for (std::size_t j = 0; j < m; ++j) d.generators.emplace_back(sol->begin() + static_cast<long>(j * n), sol->begin() + static_cast<long>((j + 1) * n));
    }

    // coproduct by transposing the product of U
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (U.admissible(u, v)) pairs.emplace_back(u, v);
    Matrix M(pairs.size() * na, m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < pairs.size(); ++r) {
                Vec p = pair_flat(b, side, d.functionals[i], d.functionals[j], U.basis(pairs[r].first), U.basis(pairs[r].second));
                for (std::size_t c = 0; c < na; ++c) M.at(r * na + c, i * m + j) = p[c];
            }
    LinearSolver solver(M);
    auto TA = d.R.T_A();
    for (std::size_t k = 0; k < m; ++k) {
        Vec rhs(pairs.size() * na);
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            Vec val_uv = val(d.functionals[k], U.product(pairs[r].first, pairs[r].second));
            for (std::size_t c = 0; c < na; ++c) rhs[r * na + c] = val_uv[c];
        }
        auto x = solver.solve(rhs);
        if (!x) {
            d.note = "the product of U does not transpose into the balanced tensor square of the dual";
            d.R.delta.clear();
            return d;
        }
        d.R.delta.push_back(d.degreewise ? *x : TA->reduce(*x));
    }
    d.has_coproduct = true;
    return d;
}

Pairing evaluation_pairing(const LeftBialgebroid& b, const DualBialgebroid& d) {
    Pairing p;
    p.u = &b;
    p.w = d.R.carrier();
    p.kind = d.side == DualSide::Left ? PairingKind::Left : PairingKind::Right;
    p.form.assign(b.n(), std::vector<Vec>(d.dim()));
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = 0; j < d.dim(); ++j) p.form[i][j] = d.eval_basis(j, i);
    return p;
}

Report check_bialgebroid_map(const LeftBialgebroid& b1, const LeftBialgebroid& b2, const Matrix& f, const Matrix& g) {
    const FiniteAlgebra& U1 = b1.U();
    const FiniteAlgebra& U2 = b2.U();
    const FiniteAlgebra& A1 = b1.A();
    Report rep;
    AlgebraMap base{&A1, &b2.A(), g};
    rep.merge(check_algebra_map(base, "MAP_BASE"));

    Tally alg("MAP_ALG");
    alg.expect(f.apply(U1.unit()) == U2.unit(), [] { return std::string("unit not preserved"); });
    for (std::size_t i = 0; i < b1.n(); ++i)
        for (std::size_t j = 0; j < b1.n(); ++j) {
            if (!b1.admissible(i, j)) continue;
            alg.guard([&] {
                Vec l = f.apply(U1.product(i, j));
                Vec r = U2.mul(f.column(i), f.column(j));
                alg.expect(l == r, [&] { return "on " + U1.name(i) + "*" + U1.name(j) + ": " + U2.format(l) + " vs " + U2.format(r); });
            });
        }
    rep.add(alg);

    Tally src("MAP_SOURCE"), tgt("MAP_TARGET");
    for (std::size_t a = 0; a < b1.na(); ++a) {
        Vec l = f.apply(b1.R.src(a)), r = b2.R.src(g.column(a));
        src.expect(l == r, [&] { return "a=" + A1.name(a) + ": " + U2.format(l) + " vs " + U2.format(r); });
        Vec l2 = f.apply(b1.R.tgt(a)), r2 = b2.R.tgt(g.column(a));
        tgt.expect(l2 == r2, [&] { return "a=" + A1.name(a) + ": " + U2.format(l2) + " vs " + U2.format(r2); });
    }
    rep.add(src);
    rep.add(tgt);

    Tally co("MAP_COPROD"), cu("MAP_COUNIT");
    auto TA2 = b2.T_A();
    std::size_t n1 = b1.n(), n2 = b2.n();
    for (std::size_t u = 0; u < n1; ++u) {
        co.guard([&] {
            Vec l = apply_leg(apply_leg(b1.delta[u], {n1, n1}, 0, f), {n2, n1}, 1, f);
            Vec r = b2.Delta(f.column(u));
            co.expect(TA2->equal(l, r), [&] {
                return "on " + U1.name(u) + ": " + format_tensor(l, {U2.names(), U2.names()}) + " vs " + format_tensor(r, {U2.names(), U2.names()});
            });
        });
        Vec l = b2.epsilon(f.column(u)), r = g.apply(b1.epsilon(U1.basis(u)));
        cu.expect(l == r, [&] { return "on " + U1.name(u) + ": " + b2.A().format(l) + " vs " + b2.A().format(r); });
    }
    rep.add(co);
    rep.add(cu);
    return rep;
}

Report check_double_dual(const LeftBialgebroid& b, const DualBialgebroid& d) {
    Report rep;
    Tally t("DOUBLE_DUAL");
    t.guard([&] {
        LeftBialgebroid L = mirror_to_left(d.R);
        DualBialgebroid dd = build_dual(L, d.side == DualSide::Left ? DualSide::Right : DualSide::Left);
        if (!dd.has_coproduct) {
            t.fail("dual of the dual has no coproduct: " + dd.note);
            return;
        }
        std::size_t m = d.dim(), na = b.na(), n = b.n();
        Matrix ev(dd.dim(), n);
        for (std::size_t u = 0; u < n; ++u) {
            Vec flat(m * na);
            for (std::size_t j = 0; j < m; ++j) {
                Vec v = d.eval_basis(j, u);
                for (std::size_t c = 0; c < na; ++c) flat[j * na + c] = v[c];
            }
            auto c = dd.coords(flat);
            if (!c) {
                t.fail("evaluation at " + b.U().name(u) + " is not in the dual of the dual");
                return;
            }
            ev.set_column(u, *c);
        }
        t.expect(ev.rows() == n && rank(ev) == n, [] { return std::string("evaluation map is not bijective"); });
        Report r = check_bialgebroid_map(b, mirror_to_left(dd.R), ev, Matrix::identity(na));
        for (const auto& c : r.items()) {
            rep.add(CheckResult{"DD_" + c.id, c.status, c.witness, c.cases});
            t.expect(c.status != Status::Fail, [&] { return c.id + ": " + c.witness; });
        }
    });
    rep.add(t);
    return rep;
}

Report check_dual(const LeftBialgebroid& b, const DualBialgebroid& d) {
    Report rep = check_pairing(evaluation_pairing(b, d));
    const FiniteAlgebra& U = b.U();
    Tally nd("NONDEGENERATE");
    nd.expect(pairing_rank(evaluation_pairing(b, d)) == d.dim(), [] { return std::string("evaluation pairing is degenerate"); });
    rep.add(nd);

    Tally aug("AUGMENTATION");
    aug.expect(d.R.partial.apply(d.R.V().unit()) == b.A().unit(), [] { return std::string("augmentation of the unit is not 1"); });
    for (std::size_t j = 0; j < d.dim(); ++j)
        aug.expect(d.R.partial.column(j) == eval_flat(d.functionals[j], U.unit(), b.na()),
                   [&] { return "augmentation is not evaluation at 1 on " + d.R.V().name(j); });
    rep.add(aug);

    if (!d.has_coproduct) {
        rep.skip("COPROD_TRANSPOSE", d.note);
        rep.skip("DOUBLE_DUAL", d.note);
        rep.merge(check_aering(d.R.R), "RIGHT_");
        return rep;
    }
    Tally tr("COPROD_TRANSPOSE");
    for (std::size_t k = 0; k < d.dim(); ++k)
        for (std::size_t u = 0; u < b.n(); ++u)
            for (std::size_t v = 0; v < b.n(); ++v) {
                if (!b.admissible(u, v)) continue;
                tr.guard([&] {
                    Vec l = pair_tensor(b, d, d.R.delta[k], U.basis(u), U.basis(v));
                    Vec r = eval_flat(d.functionals[k], U.product(u, v), b.na());
                    tr.expect(l == r, [&] { return d.R.V().name(k) + " on " + U.name(u) + "*" + U.name(v); });
                });
            }
    rep.add(tr);
    if (d.degreewise) {
        rep.merge(check_aering(d.R.R), "RIGHT_");
        rep.skip("DOUBLE_DUAL", "coproduct of a truncation is only defined degree-wise");
    } else {
        rep.merge(check_right_bialgebroid(d.R), "RIGHT_");
        rep.merge(check_double_dual(b, d));
    }
    return rep;
}

}  // namespace halg
