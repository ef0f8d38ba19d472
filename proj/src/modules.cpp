#include "halg/modules.hpp"

#include "halg/errors.hpp"

namespace halg {

namespace {

Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

bool is_left(const UModule& m) { return m.side == ModuleSide::Left; }
bool first_series(ExoticKind k) { return k == ExoticKind::GIAND1 || k == ExoticKind::LING1 || k == ExoticKind::SUP1; }

std::string matrix_difference(const Matrix& x, const Matrix& y) {
    for (std::size_t j = 0; j < x.cols() && j < y.cols(); ++j)
        if (x.column(j) != y.column(j)) return "column " + std::to_string(j) + ": " + to_string(x.column(j)) + " vs " + to_string(y.column(j));
    return "shape " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) + "x" + std::to_string(y.cols());
}

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

}  // namespace

Matrix UModule::act(const Vec& u) const {
    Matrix r(dim(), dim());
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].is_zero()) continue;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) r.at(i, j) += u[k] * action[k].at(i, j);
    }
    return r;
}

Report check_umodule(const LeftBialgebroid& b, const UModule& m) {
    Report rep;
    const FiniteAlgebra& U = b.U();
    if (m.action.size() != b.n()) throw DimensionMismatch("module " + m.name + ": one action matrix per basis element of U");
    Tally assoc("UMOD_ASSOC"), unit("UMOD_UNIT");
    for (std::size_t u = 0; u < b.n(); ++u)
        for (std::size_t v = 0; v < b.n(); ++v) {
            if (!b.admissible(u, v)) continue;
            Matrix lhs = m.act(U.product(u, v));
            Matrix rhs = is_left(m) ? m.action[u] * m.action[v] : m.action[v] * m.action[u];
            assoc.expect(lhs == rhs, [&] { return U.name(u) + "*" + U.name(v) + ": " + matrix_difference(lhs, rhs); });
        }
    Matrix one = m.act(U.unit());
    unit.expect(one == Matrix::identity(m.dim()), [&] { return matrix_difference(one, Matrix::identity(m.dim())); });
    rep.add(assoc);
    rep.add(unit);
    return rep;
}

CarrierPtr module_carrier(const LeftBialgebroid& b, const UModule& m) {
    auto c = std::make_shared<Carrier>();
    c->name = m.name;
    c->dim = m.dim();
    std::vector<Matrix> by_s, by_t;
    for (std::size_t a = 0; a < b.na(); ++a) {
        by_s.push_back(m.act(b.R.src(a)));
        by_t.push_back(m.act(b.R.tgt(a)));
    }
    if (is_left(m)) {
        c->set(Act::Lact, by_s);
        c->set(Act::Ract, by_t);
    } else {
        c->set(Act::BLact, by_t);
        c->set(Act::BRact, by_s);
    }
    return c;
}

UModule regular_module(const LeftBialgebroid& b, ModuleSide side) {
    const FiniteAlgebra& U = b.U();
    UModule m;
    m.side = side;
    m.name = b.name;
    m.names = U.names();
    for (std::size_t u = 0; u < b.n(); ++u) m.action.push_back(side == ModuleSide::Left ? U.left_mult(U.basis(u)) : U.right_mult(U.basis(u)));
    return m;
}

UModule base_module(const LeftBialgebroid& b) {
    UModule m;
    m.side = ModuleSide::Left;
    m.name = "A";
    m.names = b.A().names();
    for (std::size_t u = 0; u < b.n(); ++u) {
        Matrix r(b.na(), b.na());
        for (std::size_t a = 0; a < b.na(); ++a) r.set_column(a, b.base_action(b.U().basis(u), b.A().basis(a)));
        m.action.push_back(std::move(r));
    }
    return m;
}

UModule counit_module(const FullHopfAlgebroid& h) {
    const LeftBialgebroid& b = h.left;
    UModule m;
    m.side = ModuleSide::Right;
    m.name = "A_d";
    m.names = b.A().names();
    for (std::size_t u = 0; u < b.n(); ++u) {
        Matrix r(b.na(), b.na());
        for (std::size_t a = 0; a < b.na(); ++a) r.set_column(a, h.partial.apply(b.U().mul(h.right.R.tgt(a), b.U().basis(u))));
        m.action.push_back(std::move(r));
    }
    return m;
}

const char* exotic_name(ExoticKind k) {
    switch (k) {
        case ExoticKind::GIAND1: return "GIAND1";
        case ExoticKind::LING1: return "LING1";
        case ExoticKind::SUP1: return "SUP1";
        case ExoticKind::GIAND2: return "GIAND2";
        case ExoticKind::LING2: return "LING2";
        case ExoticKind::SUP2: return "SUP2";
    }
    return "?";
}

ExoticKind exotic_kind(const std::string& name) {
    for (ExoticKind k : {ExoticKind::GIAND1, ExoticKind::LING1, ExoticKind::SUP1, ExoticKind::GIAND2, ExoticKind::LING2, ExoticKind::SUP2})
        if (name == exotic_name(k)) return k;
    throw Error("unknown module structure '" + name + "'");
}

std::optional<Vec> ExoticModule::coords(const Vec& flat) const {
    if (!solver) return std::nullopt;
    return solver->solve(flat);
}

std::vector<Vec> hom_space(std::size_t dx, std::size_t dy, const std::vector<std::pair<Matrix, Matrix>>& conditions) {
    // F x_a = y_a F, one block of dy*dx equations per condition
    Matrix eq(dy * dx * conditions.size(), dy * dx);
    std::size_t row = 0;
    for (const auto& [x, y] : conditions)
        for (std::size_t r = 0; r < dy; ++r)
            for (std::size_t c = 0; c < dx; ++c, ++row) {
                for (std::size_t k = 0; k < dx; ++k) eq.at(row, r * dx + k) += x.at(k, c);
                for (std::size_t k = 0; k < dy; ++k) eq.at(row, k * dx + c) -= y.at(r, k);
            }
    if (conditions.empty()) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < dy * dx; ++i) all.push_back(basis_vec(dy * dx, i));
        return all;
    }
    return kernel(eq).basis();
}

ExoticModule exotic_structure(const LeftBialgebroid& b, ExoticKind kind, const UModule& x, const UModule& y, const TranslationData* td) {
    Side need = first_series(kind) ? Side::Left : Side::Right;
    if (!td || td->kind != need)
        throw MissingTranslationData(std::string(exotic_name(kind)) + " needs " + (need == Side::Left ? "left" : "right") + " translation data");
    bool giand = kind == ExoticKind::GIAND1 || kind == ExoticKind::GIAND2;
    bool ling = kind == ExoticKind::LING1 || kind == ExoticKind::LING2;
    if (giand && (!is_left(x) || !is_left(y))) throw SideMismatch(std::string(exotic_name(kind)) + " takes two left modules");
    if (ling && (is_left(x) || is_left(y))) throw SideMismatch(std::string(exotic_name(kind)) + " takes two right modules");
    if (!giand && !ling && (is_left(x) || !is_left(y))) throw SideMismatch(std::string(exotic_name(kind)) + " takes a right and a left module");

    std::size_t n = b.n(), dx = x.dim(), dy = y.dim();
    ExoticModule out;
    out.kind = kind;
    out.module.name = std::string(exotic_name(kind)) + "(" + x.name + "," + y.name + ")";
    if (giand || ling) {
        // GIAND1: Hom_{A^op} (◁), GIAND2: Hom_A (▷), LING1: Hom_A (▶), LING2: Hom_{A^op} (◀)
        bool by_t = kind == ExoticKind::GIAND1 || kind == ExoticKind::LING1;
        std::vector<std::pair<Matrix, Matrix>> cond;
        for (std::size_t a = 0; a < b.na(); ++a) {
            Vec l = by_t ? b.R.tgt(a) : b.R.src(a);
            cond.emplace_back(x.act(l), y.act(l));
        }
        out.basis = hom_space(dx, dy, cond);
        out.solver = std::make_shared<LinearSolver>(Matrix::from_columns(dx * dy, out.basis));
        out.module.side = ModuleSide::Left;
        out.module.names = numbered("f", out.basis.size());
        for (std::size_t u = 0; u < n; ++u) {
            const Vec& t = td->table[u];
            Matrix r(out.basis.size(), out.basis.size());
            for (std::size_t k = 0; k < out.basis.size(); ++k) {
                Matrix f = unflatten(out.basis[k], dy, dx);
                Matrix g(dy, dx);
                for (std::size_t pq = 0; pq < t.size(); ++pq) {
                    if (t[pq].is_zero()) continue;
                    std::size_t p = pq / n, q = pq % n;
                    // u+ f(u- m) or f(n u+)u-
                    Matrix term = giand ? y.action[p] * f * x.action[q] : y.action[q] * f * x.action[p];
                    for (std::size_t i = 0; i < dy; ++i)
                        for (std::size_t j = 0; j < dx; ++j) g.at(i, j) += t[pq] * term.at(i, j);
                }
                auto c = out.solver->solve(flatten(g));
                if (!c) throw Error(out.module.name + ": " + b.U().name(u) + " moves f" + std::to_string(k) + " out of the Hom space");
                r.set_column(k, *c);
            }
            out.module.action.push_back(std::move(r));
        }
        return out;
    }
    CarrierPtr cx = module_carrier(b, x), cy = module_carrier(b, y);
    out.space = kind == ExoticKind::SUP1 ? tensor_space({cx, cy}, {{0, Act::BLact, 1, Act::Ract}}) : tensor_space({cx, cy}, {{0, Act::BRact, 1, Act::Lact}});
    const TensorSpace& T = *out.space;
    out.module.side = ModuleSide::Right;
    for (std::size_t f : T.quotient().free_columns()) out.module.names.push_back(x.names[f / dy] + "(x)" + y.names[f % dy]);
    std::size_t D = T.dim();
    for (std::size_t u = 0; u < n; ++u) {
        const Vec& t = td->table[u];
        Matrix r(D, D);
        for (std::size_t k = 0; k < D; ++k) {
            Vec v = T.section(basis_vec(D, k));
            Vec img(T.ambient());
            for (std::size_t pq = 0; pq < t.size(); ++pq) {
                if (t[pq].is_zero()) continue;
                // n u+ ⊗ u- m
                Vec w = apply_leg(apply_leg(v, T.dims(), 0, x.action[pq / n]), T.dims(), 1, y.action[pq % n]);
                axpy(img, t[pq], w);
            }
            r.set_column(k, T.project(img));
        }
        out.module.action.push_back(std::move(r));
    }
    return out;
}

Report check_dualising_module(const LeftBialgebroid& b, const UModule& p, const TranslationData& ltd, const TranslationData& rtd,
                              const std::vector<UModule>& left_samples, const std::vector<UModule>& right_samples) {
    if (is_left(p)) throw SideMismatch("a dualising module is a right module");
    Report rep;
    const FiniteAlgebra& A = b.A();
    std::size_t na = b.na(), dp = p.dim();

    // P◀ is f.g. projective: id is in the image of P ⊗ Hom_{A^op}(P, A)
    std::vector<std::pair<Matrix, Matrix>> cond;
    for (std::size_t a = 0; a < na; ++a) cond.emplace_back(p.act(b.R.src(a)), A.right_mult(A.basis(a)));
    std::vector<Vec> functionals = hom_space(dp, na, cond);
    std::vector<Vec> spans;
    for (std::size_t i = 0; i < dp; ++i)
        for (const Vec& fv : functionals) {
            Matrix f = unflatten(fv, na, dp);
            Matrix m(dp, dp);
            for (std::size_t q = 0; q < dp; ++q) m.set_column(q, p.act(b.R.src(f.column(q))).column(i));
            spans.push_back(flatten(m));
        }
    if (spans.empty() || !solve(Matrix::from_columns(dp * dp, spans), flatten(Matrix::identity(dp))))
        throw HypothesisFailed("projective", p.name + " has no dual basis over A^op");
    rep.pass("PROJECTIVE");

    // (i) a ↦ (p ↦ a▶p)
    ExoticModule endo = exotic_structure(b, ExoticKind::LING2, p, p, &rtd);
    Matrix iota(endo.basis.size(), na);
    for (std::size_t a = 0; a < na; ++a) {
        auto c = endo.coords(flatten(p.act(b.R.tgt(a))));
        if (!c) throw HypothesisFailed("i", "p ↦ " + A.name(a) + "▶p is not A^op-linear");
        iota.set_column(a, *c);
    }
    if (endo.basis.size() != na || rank(iota) != na)
        throw HypothesisFailed("i", "dim Hom_{A^op}(P,P) = " + std::to_string(endo.basis.size()) + ", rank of A -> Hom = " + std::to_string(rank(iota)) +
                                        ", dim A = " + std::to_string(na));
    rep.pass("HYP_I");

    std::vector<UModule> rights = right_samples, lefts = left_samples;
    rights.push_back(regular_module(b, ModuleSide::Right));
    rights.push_back(p);
    lefts.push_back(regular_module(b, ModuleSide::Left));
    lefts.push_back(base_module(b));

    // (ii) P▶ ⊗_{A^op} Hom_{A^op}(P, N)◁ → N
    for (const UModule& nm : rights) {
        ExoticModule h = exotic_structure(b, ExoticKind::LING2, p, nm, &rtd);
        ExoticModule src = exotic_structure(b, ExoticKind::SUP1, p, h.module, &ltd);
        const TensorSpace& T = *src.space;
        std::size_t dh = h.basis.size(), dn = nm.dim();
        auto eval_plain = [&](const Vec& x) {
            Vec r(dn);
            for (std::size_t k = 0; k < x.size(); ++k)
                if (!x[k].is_zero()) axpy(r, x[k], unflatten(h.basis[k % dh], dn, dp).column(k / dh));
            return r;
        };
        for (const Vec& rel : T.quotient().relations().basis())
            if (!is_zero(eval_plain(rel))) throw HypothesisFailed("ii", "evaluation on " + nm.name + " is not balanced");
        Matrix E(dn, T.dim());
        for (std::size_t k = 0; k < T.dim(); ++k) E.set_column(k, eval_plain(T.section(basis_vec(T.dim(), k))));
        if (T.dim() != dn || rank(E) != dn)
            throw HypothesisFailed("ii", "evaluation onto " + nm.name + ": source dim " + std::to_string(T.dim()) + ", rank " + std::to_string(rank(E)) +
                                             ", target dim " + std::to_string(dn));
        rep.pass("HYP_II_" + nm.name);
        Tally lin("EVAL_ULINEAR_" + nm.name);
        for (std::size_t u = 0; u < b.n(); ++u) {
            Matrix l = E * src.module.action[u], r = nm.action[u] * E;
            lin.expect(l == r, [&] { return b.U().name(u) + ": " + matrix_difference(l, r); });
        }
        rep.add(lin);
    }

    // M → Hom_{A^op}(P, P▶ ⊗_{A^op} M◁), m ↦ (p ↦ p ⊗ m)
    for (const UModule& mm : lefts) {
        ExoticModule t = exotic_structure(b, ExoticKind::SUP1, p, mm, &ltd);
        ExoticModule h = exotic_structure(b, ExoticKind::LING2, p, t.module, &rtd);
        std::size_t dm = mm.dim(), dt = t.space->dim();
        Matrix eta(h.basis.size(), dm);
        Tally iso("UNIT_ISO_" + mm.name);
        for (std::size_t m = 0; m < dm; ++m) {
            Matrix f(dt, dp);
            for (std::size_t q = 0; q < dp; ++q) f.set_column(q, t.space->project(kron(basis_vec(dp, q), basis_vec(dm, m))));
            auto c = h.coords(flatten(f));
            iso.expect(c.has_value(), [&] { return "p ↦ p⊗" + mm.names[m] + " is not A^op-linear"; });
            if (c) eta.set_column(m, *c);
        }
        iso.expect(h.basis.size() == dm && rank(eta) == dm, [&] {
            return "dim Hom = " + std::to_string(h.basis.size()) + ", rank " + std::to_string(rank(eta)) + ", dim " + mm.name + " = " + std::to_string(dm);
        });
        rep.add(iso);
        Tally lin("UNIT_ULINEAR_" + mm.name);
        for (std::size_t u = 0; u < b.n(); ++u) {
            Matrix l = eta * mm.action[u], r = h.module.action[u] * eta;
            lin.expect(l == r, [&] { return b.U().name(u) + ": " + matrix_difference(l, r); });
        }
        rep.add(lin);
    }
    return rep;
}

}  // namespace halg
