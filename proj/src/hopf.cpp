#include "halg/hopf.hpp"

#include "halg/errors.hpp"

namespace halg {

Vec TranslationData::operator()(const Vec& u) const {
    std::size_t n = table.size();
    Vec r(n * n);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) axpy(r, u[i], table[i]);
    return space ? space->reduce(r) : r;
}

namespace {

ContractTable product_table(const FiniteAlgebra& U) {
    return [&U](std::size_t i, std::size_t j) -> std::optional<Vec> {
        if (!U.admissible(i, j)) return std::nullopt;
        return U.product(i, j);
    };
}

std::vector<std::vector<std::string>> names(const FiniteAlgebra& U, std::size_t legs) { return std::vector<std::vector<std::string>>(legs, U.names()); }

// (p ⊗ m)(p' ⊗ m') = pp' ⊗ m'm
Vec twisted_mul(const FiniteAlgebra& U, const Vec& x, const Vec& y) {
    std::size_t n = U.dim();
    Vec r(n * n);
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < y.size(); ++b) {
            if (y[b].is_zero()) continue;
            Vec l = U.mul(U.basis(a / n), U.basis(b / n));
            Vec r2 = U.mul(U.basis(b % n), U.basis(a % n));
            axpy(r, x[a] * y[b], kron(l, r2));
        }
    }
    return r;
}

}  // namespace

Vec galois_left(const LeftBialgebroid& b, const Vec& x) {
    std::size_t n = b.n();
    Vec y = apply_leg(x, {n, n}, 0, b.delta, {n, n});
    return contract(y, {n, n, n}, 1, 2, product_table(b.U()), {n});
}

Vec galois_right(const LeftBialgebroid& b, const Vec& x) {
    std::size_t n = b.n();
    Vec y = apply_leg(x, {n, n}, 0, b.delta, {n, n});
    return contract(y, {n, n, n}, 0, 2, product_table(b.U()), {n});
}

TranslationData invert_galois(const LeftBialgebroid& b, Side kind) {
    const FiniteAlgebra& U = b.U();
    std::size_t n = b.n();
    TensorSpacePtr dom = kind == Side::Left ? b.T_Aop() : b.T_upA();
    TensorSpacePtr cod = b.T_A();
    std::vector<std::size_t> plain;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!U.filtered() || U.degree(i) + U.degree(j) <= U.cap()) plain.push_back(i * n + j);

    Matrix M(cod->dim(), plain.size()), D(dom->dim(), plain.size()), C(cod->dim(), plain.size());
    for (std::size_t k = 0; k < plain.size(); ++k) {
        Vec e = basis_vec(n * n, plain[k]);
        Vec img = kind == Side::Left ? galois_left(b, e) : galois_right(b, e);
        M.set_column(k, cod->project(img));
        D.set_column(k, dom->project(e));
        C.set_column(k, cod->project(e));
    }
    LinearSolver solver(M);
    std::size_t r = solver.rank(), rd = rank(D), rc = rank(C);
    const char* which = kind == Side::Left ? "left Hopf-Galois map" : "right Hopf-Galois map";
    if (r < rc) throw NotInvertible(std::string(which) + " is not surjective", rc - r);
    if (r != rd) throw NotInvertible(std::string(which) + " is not injective", rd > r ? rd - r : r - rd);

    TranslationData td{kind, {}, dom};
    for (std::size_t u = 0; u < n; ++u) {
        Vec target = kind == Side::Left ? kron(U.basis(u), U.unit()) : kron(U.unit(), U.basis(u));
        auto y = solver.solve(cod->project(target));
        if (!y) throw NotInvertible(std::string(which) + " misses " + U.name(u), 1);
        Vec x(n * n);
        for (std::size_t k = 0; k < plain.size(); ++k)
            if (!(*y)[k].is_zero()) x[plain[k]] += (*y)[k];
        td.table.push_back(dom->reduce(x));
    }
    return td;
}

Report check_translation_roundtrip(const LeftBialgebroid& b, const TranslationData& td) {
    const FiniteAlgebra& U = b.U();
    auto TA = b.T_A();
    bool left = td.kind == Side::Left;
    Tally t(left ? "GALOIS_L" : "GALOIS_R");
    for (std::size_t u = 0; u < b.n(); ++u)
        t.guard([&] {
            Vec img = left ? galois_left(b, td.table[u]) : galois_right(b, td.table[u]);
            Vec want = left ? kron(U.basis(u), U.unit()) : kron(U.unit(), U.basis(u));
            t.expect(TA->equal(img, want), [&] { return "on " + U.name(u) + ": " + format_tensor(img, names(U, 2)); });
        });
    Report r;
    r.add(t);
    return r;
}

Report verify_translation_identities(const LeftBialgebroid& b, const TranslationData* left, const TranslationData* right) {
    const FiniteAlgebra& U = b.U();
    const FiniteAlgebra& A = b.A();
    std::size_t n = b.n(), na = b.na();
    std::vector<std::size_t> d2{n, n}, d3{n, n, n};
    CarrierPtr c = b.carrier();
    auto TA = b.T_A(), Top = b.T_Aop(), Tup = b.T_upA();
    auto space3 = [&](Balancing x, Balancing y) { return tensor_space({c, c, c}, {x, y}); };
    auto f2 = [&](const Vec& x) { return format_tensor(x, names(U, 2)); };
    auto f3 = [&](const Vec& x) { return format_tensor(x, names(U, 3)); };
    auto L = [&](const Vec& x, const std::vector<std::size_t>& d, std::size_t leg) { return apply_leg(x, d, leg, left->table, d2); };
    auto R = [&](const Vec& x, const std::vector<std::size_t>& d, std::size_t leg) { return apply_leg(x, d, leg, right->table, d2); };
    auto Dl = [&](const Vec& x, const std::vector<std::size_t>& d, std::size_t leg) { return apply_leg(x, d, leg, b.delta, d2); };
    auto prod2 = [&](const Vec& x) { return contract(x, d2, 0, 1, product_table(U), {n}); };

    Report rep;
    // Per-basis identity comparing two elements of one space.
    auto per_basis = [&](const std::string& id, const TensorSpace& sp, const std::function<Vec(std::size_t)>& lhs,
                         const std::function<Vec(std::size_t)>& rhs, const std::function<std::string(const Vec&)>& fmt) {
        Tally t(id);
        for (std::size_t u = 0; u < n; ++u)
            t.guard([&] {
                Vec l = lhs(u), r = rhs(u);
                t.expect(sp.equal(l, r), [&] { return "on " + U.name(u) + ": " + fmt(l) + " vs " + fmt(r); });
            });
        rep.add(t);
    };
    auto per_basis_U = [&](const std::string& id, const std::function<Vec(std::size_t)>& lhs, const std::function<Vec(std::size_t)>& rhs) {
        Tally t(id);
        for (std::size_t u = 0; u < n; ++u)
            t.guard([&] {
                Vec l = lhs(u), r = rhs(u);
                t.expect(l == r, [&] { return "on " + U.name(u) + ": " + U.format(l) + " vs " + U.format(r); });
            });
        rep.add(t);
    };
    auto e = [&](std::size_t u) { return U.basis(u); };

    if (left) {
        const auto& Lt = left->table;
        Tally t1("SCH1");
        for (std::size_t u = 0; u < n; ++u)
            t1.guard([&] {
                std::string w;
                bool ok = satisfies_exchange(*Top, Lt[u], {{0, Act::Ract, 1, Act::BLact}}, &w);
                t1.expect(ok, [&] { return "on " + U.name(u) + ": " + w; });
            });
        rep.add(t1);
        per_basis("SCH2", *TA, [&](std::size_t u) { return galois_left(b, Lt[u]); }, [&](std::size_t u) { return kron(e(u), U.unit()); }, f2);
        per_basis("SCH3", *Top,
                  [&](std::size_t u) { return contract(L(b.delta[u], d2, 0), d3, 1, 2, product_table(U), {n}); },
                  [&](std::size_t u) { return kron(e(u), U.unit()); }, f2);
        auto s4 = space3({0, Act::Ract, 1, Act::Lact}, {1, Act::BLact, 2, Act::Ract});
        per_basis("SCH4", *s4, [&](std::size_t u) { return Dl(Lt[u], d2, 0); }, [&](std::size_t u) { return L(b.delta[u], d2, 1); }, f3);
        auto s5 = space3({0, Act::BLact, 2, Act::Ract}, {1, Act::Ract, 2, Act::Lact});
        per_basis("SCH5", *s5, [&](std::size_t u) { return Dl(Lt[u], d2, 1); },
                  [&](std::size_t u) { return permute_legs(L(Lt[u], d2, 0), d3, {0, 2, 1}); }, f3);
        Tally t6("SCH6");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!b.admissible(i, j)) continue;
                t6.guard([&] {
                    Vec l = (*left)(U.product(i, j));
                    Vec r = twisted_mul(U, Lt[i], Lt[j]);
                    t6.expect(Top->equal(l, r), [&] { return "on " + U.name(i) + "*" + U.name(j) + ": " + f2(l) + " vs " + f2(r); });
                });
            }
        rep.add(t6);
        per_basis_U("SCH7", [&](std::size_t u) { return prod2(Lt[u]); }, [&](std::size_t u) { return b.R.src(b.eps.column(u)); });
        per_basis_U("SCH8",
                    [&](std::size_t u) {
                        return contract(Lt[u], d2, 0, 1, [&](std::size_t p, std::size_t m) -> std::optional<Vec> { return U.mul(e(p), b.R.tgt(b.eps.column(m))); }, {n});
                    },
                    e);
        Tally t9("SCH9");
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t c2 = 0; c2 < na; ++c2)
                t9.guard([&] {
                    Vec l = (*left)(U.mul(b.R.src(a), b.R.tgt(c2)));
                    Vec r = kron(b.R.src(a), b.R.src(c2));
                    t9.expect(Top->equal(l, r), [&] { return "a=" + A.name(a) + ", b=" + A.name(c2) + ": " + f2(l) + " vs " + f2(r); });
                });
        rep.add(t9);
    } else {
        for (int k = 1; k <= 9; ++k) rep.skip("SCH" + std::to_string(k), "no left translation data");
    }

    if (right) {
        const auto& Rt = right->table;
        Tally t1("TCH1");
        for (std::size_t u = 0; u < n; ++u)
            t1.guard([&] {
                std::string w;
                bool ok = satisfies_exchange(*Tup, Rt[u], {{0, Act::Lact, 1, Act::BRact}}, &w);
                t1.expect(ok, [&] { return "on " + U.name(u) + ": " + w; });
            });
        rep.add(t1);
        per_basis("TCH2", *TA, [&](std::size_t u) { return galois_right(b, Rt[u]); }, [&](std::size_t u) { return kron(U.unit(), e(u)); }, f2);
        // the [+] factor sits on the right here, so ⊗^A pairs ◀ on leg 1 with ▷ on leg 0
        auto t3 = tensor_space({c, c}, {{0, Act::Lact, 1, Act::BRact}});
        per_basis("TCH3", *t3,
                  [&](std::size_t u) { return contract(R(b.delta[u], d2, 1), d3, 2, 0, product_table(U), {n}); },
                  [&](std::size_t u) { return kron(U.unit(), e(u)); }, f2);
        auto s4 = space3({0, Act::BRact, 1, Act::Lact}, {0, Act::Ract, 2, Act::Lact});
        per_basis("TCH4", *s4, [&](std::size_t u) { return permute_legs(Dl(Rt[u], d2, 0), d3, {0, 2, 1}); },
                  [&](std::size_t u) { return R(b.delta[u], d2, 0); }, f3);
        auto s5 = space3({0, Act::BRact, 1, Act::Lact}, {1, Act::Ract, 2, Act::Lact});
        per_basis("TCH5", *s5, [&](std::size_t u) { return R(Rt[u], d2, 0); }, [&](std::size_t u) { return Dl(Rt[u], d2, 1); }, f3);
        Tally t6("TCH6");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!b.admissible(i, j)) continue;
                t6.guard([&] {
                    Vec l = (*right)(U.product(i, j));
                    Vec r = twisted_mul(U, Rt[i], Rt[j]);
                    t6.expect(Tup->equal(l, r), [&] { return "on " + U.name(i) + "*" + U.name(j) + ": " + f2(l) + " vs " + f2(r); });
                });
            }
        rep.add(t6);
        per_basis_U("TCH7", [&](std::size_t u) { return prod2(Rt[u]); }, [&](std::size_t u) { return b.R.tgt(b.eps.column(u)); });
        per_basis_U("TCH8",
                    [&](std::size_t u) {
                        return contract(Rt[u], d2, 0, 1, [&](std::size_t p, std::size_t m) -> std::optional<Vec> { return U.mul(e(p), b.R.src(b.eps.column(m))); }, {n});
                    },
                    e);
        Tally t9("TCH9");
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t c2 = 0; c2 < na; ++c2)
                t9.guard([&] {
                    Vec l = (*right)(U.mul(b.R.src(a), b.R.tgt(c2)));
                    Vec r = kron(b.R.tgt(c2), b.R.tgt(a));
                    t9.expect(Tup->equal(l, r), [&] { return "a=" + A.name(a) + ", b=" + A.name(c2) + ": " + f2(l) + " vs " + f2(r); });
                });
        rep.add(t9);
    } else {
        for (int k = 1; k <= 9; ++k) rep.skip("TCH" + std::to_string(k), "no right translation data");
    }

    if (left && right) {
        const auto& Lt = left->table;
        const auto& Rt = right->table;
        auto m1 = space3({0, Act::BLact, 1, Act::Ract}, {0, Act::BRact, 2, Act::Lact});
        per_basis("MIX1", *m1, [&](std::size_t u) { return permute_legs(R(Lt[u], d2, 0), d3, {0, 2, 1}); },
                  [&](std::size_t u) { return L(Rt[u], d2, 0); }, f3);
        auto m2 = space3({0, Act::BLact, 1, Act::Ract}, {1, Act::BRact, 2, Act::Lact});
        per_basis("MIX2", *m2, [&](std::size_t u) { return R(Lt[u], d2, 1); }, [&](std::size_t u) { return L(b.delta[u], d2, 0); }, f3);
        auto m3 = space3({0, Act::BRact, 1, Act::Lact}, {1, Act::BLact, 2, Act::Ract});
        per_basis("MIX3", *m3, [&](std::size_t u) { return L(Rt[u], d2, 1); },
                  [&](std::size_t u) { return permute_legs(R(b.delta[u], d2, 1), d3, {1, 2, 0}); }, f3);
    } else {
        for (int k = 1; k <= 3; ++k) rep.skip("MIX" + std::to_string(k), "needs both translation maps");
    }
    return rep;
}

FullHopfAlgebroid make_full_hopf(const LeftBialgebroid& b, const Matrix& S, const Matrix& partial) {
    std::size_t n = b.n(), na = b.na();
    if (S.rows() != n || S.cols() != n) throw DimensionMismatch("antipode must be " + std::to_string(n) + "x" + std::to_string(n));
    if (partial.rows() != na || partial.cols() != n) throw DimensionMismatch("right counit must be " + std::to_string(na) + "x" + std::to_string(n));
    auto Sinv = inverse(S);
    if (!Sinv) throw AntipodeNotInvertible();
    Matrix nu = partial * b.R.s();
    auto nu_inv = inverse(nu);
    if (!nu_inv) throw NotIso("nu = partial o s is not bijective");
    Matrix sr = S * b.R.s() * *nu_inv;
    Matrix tr = S * b.R.t() * *nu_inv;
    // Δ_r(h) = S(g(2)) ⊗ S(g(1)) with g = S^{-1} h
    std::vector<Vec> dr;
    for (std::size_t h = 0; h < n; ++h) {
        Vec g = Sinv->column(h);
        Vec d = b.Delta(g);
        d = apply_leg(apply_leg(d, {n, n}, 0, S), {n, n}, 1, S);
        dr.push_back(flip2(d, n, n));
    }
    RightBialgebroid right{AeRing(b.A(), b.U(), sr, tr, b.name + "^r"), dr, partial, b.name + "^r"};
    Matrix mu = b.eps * sr;
    return FullHopfAlgebroid{b, right, S, *Sinv, partial, nu, mu};
}

std::pair<AlgebraMap, AlgebraMap> nu_mu_isomorphisms(const FullHopfAlgebroid& h) {
    const FiniteAlgebra* A = &h.left.A();
    AlgebraMap nu{A, A, h.nu}, mu{A, A, h.mu};
    for (auto [f, id] : {std::pair{&nu, "NU"}, std::pair{&mu, "MU"}}) {
        Report r = check_algebra_map(*f, std::string(id), true);
        if (!r.ok()) throw NotIso(std::string(id == std::string("NU") ? "nu" : "mu") + " is not an anti-homomorphism: " + r.items().front().witness);
        if (!is_bijective(*f)) throw NotIso(std::string(id == std::string("NU") ? "nu" : "mu") + " is not bijective");
    }
    return {nu, mu};
}

Report check_full_hopf(const FullHopfAlgebroid& h) {
    Report rep;
    rep.merge(check_right_bialgebroid(h.right), "RIGHT_");
    const LeftBialgebroid& b = h.left;
    const FiniteAlgebra& U = b.U();
    const FiniteAlgebra& A = b.A();
    std::size_t n = b.n();

    Tally anti("S_ANTIMULT");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!b.admissible(i, j)) continue;
            anti.guard([&] {
                Vec l = h.S.apply(U.product(i, j));
                Vec r = U.mul(h.S.column(j), h.S.column(i));
                anti.expect(l == r, [&] { return "S(" + U.name(i) + U.name(j) + ") = " + U.format(l) + " vs " + U.format(r); });
            });
        }
    rep.add(anti);

    // Δ_ℓ(S h) = S(h^(2)) ⊗ S(h^(1))
    Tally coalg("S_COALG");
    auto TA = b.T_A();
    for (std::size_t u = 0; u < n; ++u)
        coalg.guard([&] {
            Vec l = b.Delta(h.S.column(u));
            Vec r = flip2(apply_leg(apply_leg(h.right.delta[u], {n, n}, 0, h.S), {n, n}, 1, h.S), n, n);
            coalg.expect(TA->equal(l, r), [&] { return "on " + U.name(u) + ": " + format_tensor(l, {U.names(), U.names()}) + " vs " + format_tensor(r, {U.names(), U.names()}); });
        });
    rep.add(coalg);

    Tally ps("PARTIAL_S"), es("EPS_S");
    for (std::size_t u = 0; u < n; ++u) {
        Vec l = h.partial.apply(h.S.column(u)), r = h.nu.apply(b.eps.column(u));
        ps.expect(l == r, [&] { return "partial(S " + U.name(u) + ") = " + A.format(l) + " vs nu(eps) = " + A.format(r); });
        Vec l2 = b.eps.apply(h.S.column(u)), r2 = h.mu.apply(h.partial.column(u));
        es.expect(l2 == r2, [&] { return "eps(S " + U.name(u) + ") = " + A.format(l2) + " vs mu(partial) = " + A.format(r2); });
    }
    rep.add(ps);
    rep.add(es);

    const FiniteAlgebra* Ap = &A;
    for (auto [m, id] : {std::pair{&h.nu, std::string("NU_ISO")}, std::pair{&h.mu, std::string("MU_ISO")}}) {
        AlgebraMap f{Ap, Ap, *m};
        Report r = check_algebra_map(f, id, true);
        Tally t(id);
        t.expect(r.ok(), [&] { return r.items().empty() ? std::string() : r.failures().front(); });
        t.expect(is_bijective(f), [] { return std::string("not bijective"); });
        rep.add(t);
    }
    return rep;
}

std::pair<TranslationData, TranslationData> translation_from_antipode(const FullHopfAlgebroid& h) {
    const LeftBialgebroid& b = h.left;
    std::size_t n = b.n();
    TranslationData l{Side::Left, {}, b.T_Aop()}, r{Side::Right, {}, b.T_upA()};
    for (std::size_t u = 0; u < n; ++u) {
        const Vec& d = h.right.delta[u];
        l.table.push_back(l.space->reduce(apply_leg(d, {n, n}, 1, h.S)));
        r.table.push_back(r.space->reduce(apply_leg(flip2(d, n, n), {n, n}, 1, h.S_inv)));
    }
    return {l, r};
}

Report compare_translation(const LeftBialgebroid& b, const TranslationData& x, const TranslationData& y, const std::string& id) {
    const FiniteAlgebra& U = b.U();
    Tally t(id);
    if (x.kind != y.kind || x.table.size() != y.table.size()) {
        t.fail("translation data of different kinds");
    } else {
        const TensorSpace& sp = *(x.space ? x.space : (x.kind == Side::Left ? b.T_Aop() : b.T_upA()));
        for (std::size_t u = 0; u < x.table.size(); ++u)
            t.expect(sp.equal(x.table[u], y.table[u]), [&] {
                return "on " + U.name(u) + ": " + format_tensor(x.table[u], {U.names(), U.names()}) + " vs " + format_tensor(y.table[u], {U.names(), U.names()});
            });
    }
    Report r;
    r.add(t);
    return r;
}

}  // namespace halg
