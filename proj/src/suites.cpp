#include "halg/suites.hpp"

#include "halg/errors.hpp"
#include "halg/sstar.hpp"

#include <algorithm>
#include <filesystem>

namespace halg {

namespace {

// Runs fn; an escaped library error becomes a failure of `id`.
void step(Report& rep, const std::string& id, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        rep.fail(id, e.what());
    }
}

struct Translations {
    std::optional<TranslationData> left, right;
    std::string left_why, right_why;
};

Translations translations(const LeftBialgebroid& b) {
    Translations t;
    try {
        t.left = invert_galois(b, Side::Left);
    } catch (const NotInvertible& e) {
        t.left_why = e.what();
    }
    try {
        t.right = invert_galois(b, Side::Right);
    } catch (const NotInvertible& e) {
        t.right_why = e.what();
    }
    return t;
}

bool full_hopf_data(const Instance& I) { return I.antipode && I.partial; }

// The left bialgebroid a dual file was computed from.
LoadedFile dual_source(const InstanceFile& f, const std::string& base_dir) {
    std::filesystem::path src = std::filesystem::path(base_dir) / f.dual_of->source;
    LoadedFile source = load_file(src.string());
    if (source.file.right_kind) throw Error(src.string() + ": the source of a dual must be a left bialgebroid");
    if (source.file.characteristic != f.characteristic) throw Error(src.string() + ": source is over another field");
    return source;
}

Report bialgebroid_suite(const InstanceFile& f, const std::string& base_dir) {
    Report rep;
    if (f.right_kind) {
        if (f.dual_of && dual_source(f, base_dir).file.instance.B.filtered()) {
            rep.skip("RIGHT_BIALGEBROID", "dual of a truncated ring: the coproduct is only defined degree-wise (duals suite)");
            return rep;
        }
        rep.merge(check_right_bialgebroid(*f.right));
        return rep;
    }
    const LeftBialgebroid& b = f.instance.B;
    rep.merge(check_left_bialgebroid(b));
    step(rep, "TAKEUCHI_SUBALG", [&] { rep.merge(check_takeuchi_subalgebra(b)); });
    step(rep, "BASE_MODULE", [&] { rep.merge(check_action_on_base(b)); });
    return rep;
}

Report hopf_suite(const InstanceFile& f) {
    Report rep;
    const Instance& I = f.instance;
    const LeftBialgebroid& b = I.B;
    Translations t = translations(b);
    if (t.left)
        rep.merge(check_translation_roundtrip(b, *t.left));
    else
        rep.skip("GALOIS_L", t.left_why);
    if (t.right)
        rep.merge(check_translation_roundtrip(b, *t.right));
    else
        rep.skip("GALOIS_R", t.right_why);
    rep.merge(verify_translation_identities(b, t.left ? &*t.left : nullptr, t.right ? &*t.right : nullptr));
    if (!full_hopf_data(I)) {
        rep.skip("FULL_HOPF", "no antipode and right counit declared");
        return rep;
    }
    step(rep, "FULL_HOPF", [&] {
        FullHopfAlgebroid h = make_full_hopf(b, *I.antipode, *I.partial);
        rep.merge(check_full_hopf(h));
        auto [l, r] = translation_from_antipode(h);
        if (t.left) rep.merge(compare_translation(b, l, *t.left, "ANTIPODE_TRANSLATION_L"));
        if (t.right) rep.merge(compare_translation(b, r, *t.right, "ANTIPODE_TRANSLATION_R"));
    });
    return rep;
}

Report duals_suite(const InstanceFile& f, const std::string& base_dir) {
    Report rep;
    if (f.right_kind) {
        if (!f.dual_of) {
            rep.skip("DECLARED_DUAL", "not a dual file");
            return rep;
        }
        LoadedFile source = dual_source(f, base_dir);
        const LeftBialgebroid& b = source.file.instance.B;
        for (const Vec& fl : f.dual_of->functionals)
            if (fl.size() != b.n() * b.na()) throw Error("functionals do not match the source dimensions");
        DualBialgebroid d = declared_dual(*f.right, *f.dual_of, b.filtered());
        step(rep, "DECLARED_DUAL", [&] { rep.merge(check_dual(b, d)); });
        return rep;
    }
    const LeftBialgebroid& b = f.instance.B;
    for (DualSide side : {DualSide::Left, DualSide::Right}) {
        std::string prefix = side == DualSide::Left ? "LEFT_DUAL." : "RIGHT_DUAL.";
        step(rep, prefix + "BUILD", [&] { rep.merge(check_dual(b, build_dual(b, side)), prefix); });
    }
    return rep;
}

std::vector<std::size_t> degree_one(const LeftBialgebroid& b) {
    std::vector<std::size_t> xs;
    for (std::size_t i = 0; i < b.n(); ++i)
        if (b.degree(i) == 1) xs.push_back(i);
    return xs;
}

Report sstar_suite(const InstanceFile& f) {
    Report rep;
    const Instance& I = f.instance;
    const LeftBialgebroid& b = I.B;
    Translations t = translations(b);
    DualBialgebroid up = build_dual(b, DualSide::Right), down = build_dual(b, DualSide::Left);
    std::optional<LinkingMorphism> s, sd;
    if (t.left) {
        s = compute_sstar(b, *t.left, up, down);
        rep.merge(check_sstar_routes(b, *t.left, up, down, *s));
        rep.merge(check_theorem_morphism(b, *t.left, up, down, *s), "UP_");
    } else {
        rep.skip("SSTAR", t.left_why);
    }
    if (t.right) {
        sd = compute_sstardown(b, *t.right, down, up);
        rep.merge(check_sstar_routes(b, *t.right, down, up, *sd));
        rep.merge(check_theorem_morphism(b, *t.right, down, up, *sd), "DOWN_");
    } else {
        rep.skip("SSTARDOWN", t.right_why);
    }
    if (s && sd)
        rep.merge(check_theorem_inverse(*s, *sd));
    else
        rep.skip("INV", "needs both translation maps");
    if (s && I.antipode && b.na() == 1) rep.merge(check_sstar_transpose(b, *I.antipode, *s, up, down));
    if (full_hopf_data(I)) {
        step(rep, "SQUARE", [&] {
            FullHopfAlgebroid h = make_full_hopf(b, *I.antipode, *I.partial);
            rep.merge(transpose_antipode_square(h));
            if (!b.filtered()) return;
            DifferenceWitness w;
            rep.merge(antipode_vs_sstar_difference(h, degree_one(b), &w));
            if (w.found)
                rep.add(CheckResult{"SSTAR_TS_WITNESS", Status::Pass, "phi=" + w.functional + " X=" + w.element + " value=" + to_string(w.value), 1});
        });
        if (!b.filtered()) rep.skip("SSTAR_TS_DIFFERENCE", "not a truncated envelope");
    } else {
        rep.skip("SQUARE", "no antipode and right counit declared");
    }
    if (s && sd) {
        try {
            rep.merge(check_cocommutative_full_hopf(b, up, down, *s, *sd));
        } catch (const NotCocommutative& e) {
            rep.skip("COCOMM", e.what());
        }
        if (!b.filtered() && up.has_coproduct && down.has_coproduct) {
            step(rep, "ENTW", [&] { rep.merge(check_entwining(down, up, mixed_distributive_law(down, up, *s))); });
        }
    }
    return rep;
}

Report comodule_suite(const InstanceFile& f) {
    Report rep;
    const LeftBialgebroid& b = f.instance.B;
    for (ComoduleSide side : {ComoduleSide::Right, ComoduleSide::Left}) {
        std::string p = side == ComoduleSide::Right ? "RIGHT_" : "LEFT_";
        rep.merge(check_comodule(b, regular_comodule(b, side)), p + "REGULAR.");
        rep.merge(check_comodule(b, unit_comodule(b, side)), p + "UNIT.");
    }
    Translations t = translations(b);
    Comodule rr = regular_comodule(b, ComoduleSide::Right), rl = regular_comodule(b, ComoduleSide::Left);
    Comodule ur = unit_comodule(b, ComoduleSide::Right), ul = unit_comodule(b, ComoduleSide::Left);
    if (t.left && t.right) {
        rep.merge(check_quasi_inverse(b, rr, rl, *t.left, *t.right), "REGULAR.");
        rep.merge(check_quasi_inverse(b, ur, ul, *t.left, *t.right), "UNIT.");
    } else {
        rep.skip("QUASI_INVERSE", "needs both translation maps");
    }
    if (t.left) {
        rep.merge(check_monoidality(b, ur, ur, *t.left), "AA.");
        if (!b.filtered()) rep.merge(check_monoidality(b, rr, rr, *t.left), "UU.");
    }
    if (t.right) {
        rep.merge(check_monoidality(b, ul, ul, *t.right), "AA.");
        if (!b.filtered()) rep.merge(check_monoidality(b, rl, rl, *t.right), "UU.");
    }
    DualBialgebroid down = build_dual(b, DualSide::Left), up = build_dual(b, DualSide::Right);
    DualModule sale = comodule_to_dual_module(b, rr, down);
    rep.merge(check_dual_module(down, sale), "SALE.");
    rep.merge(check_dual_module(up, comodule_to_dual_module(b, rl, up)), "PEPE.");
    rep.merge(compare_comodules(b, dual_module_to_comodule(b, sale, down), rr, "FERRA_SALE"));
    DualModule reg = regular_dual_module(down);
    rep.merge(compare_dual_modules(comodule_to_dual_module(b, dual_module_to_comodule(b, reg, down), down), reg, "SALE_FERRA"));
    if (t.left) {
        LinkingMorphism s = compute_sstar(b, *t.left, up, down);
        DualModule derived = derived_ustar_action(b, reg, down, up, *t.left);
        rep.merge(compare_dual_modules(derived, restrict_along(reg, s.linear, DualSide::Right), "DIEDA_SSTAR"));
        rep.merge(check_dual_module(up, derived), "DIEDA.");
        rep.merge(check_equivariance(down, derived));
        rep.merge(compare_dual_modules(comodule_to_dual_module(b, functor_F(b, rr, *t.left), up), derived_ustar_action(b, sale, down, up, *t.left),
                                       "EASTPAK"));
    }
    for (const Comodule& m : f.comodules) {
        std::string p = "DECLARED_" + m.name + ".";
        rep.merge(check_comodule(b, m), p);
        step(rep, p + "ROUNDTRIP", [&] {
            if (m.side == ComoduleSide::Right && t.left && t.right)
                rep.merge(compare_comodules(b, functor_G(b, functor_F(b, m, *t.left), *t.right), m, "GF_ID"), p);
            else if (m.side == ComoduleSide::Left && t.left && t.right)
                rep.merge(compare_comodules(b, functor_F(b, functor_G(b, m, *t.right), *t.left), m, "FG_ID"), p);
        });
    }
    return rep;
}

Report modules_suite(const InstanceFile& f) {
    Report rep;
    const Instance& I = f.instance;
    const LeftBialgebroid& b = I.B;
    rep.merge(check_umodule(b, base_module(b)), "BASE.");
    for (const UModule& m : f.modules) rep.merge(check_umodule(b, m), "DECLARED_" + m.name + ".");
    if (b.filtered()) {
        rep.skip("REGULAR", "a truncated ring is not a module over itself");
        return rep;
    }
    rep.merge(check_umodule(b, regular_module(b, ModuleSide::Left)), "REGULAR_LEFT.");
    rep.merge(check_umodule(b, regular_module(b, ModuleSide::Right)), "REGULAR_RIGHT.");
    Translations t = translations(b);
    UModule left = regular_module(b, ModuleSide::Left), right = regular_module(b, ModuleSide::Right), base = base_module(b);
    for (ExoticKind k : {ExoticKind::GIAND1, ExoticKind::LING1, ExoticKind::SUP1, ExoticKind::GIAND2, ExoticKind::LING2, ExoticKind::SUP2}) {
        bool one = k == ExoticKind::GIAND1 || k == ExoticKind::LING1 || k == ExoticKind::SUP1;
        const std::optional<TranslationData>& td = one ? t.left : t.right;
        std::string p = std::string(exotic_name(k)) + ".";
        if (!td) {
            rep.skip(p + "UMOD", one ? t.left_why : t.right_why);
            continue;
        }
        step(rep, p + "BUILD", [&] {
            ExoticModule m = (k == ExoticKind::GIAND1 || k == ExoticKind::GIAND2) ? exotic_structure(b, k, left, base, &*td)
                             : (k == ExoticKind::LING1 || k == ExoticKind::LING2) ? exotic_structure(b, k, right, right, &*td)
                                                                                   : exotic_structure(b, k, right, left, &*td);
            rep.merge(check_umodule(b, m.module), p);
        });
    }
    if (full_hopf_data(I) && t.left && t.right) {
        step(rep, "DUALISING", [&] {
            FullHopfAlgebroid h = make_full_hopf(b, *I.antipode, *I.partial);
            std::vector<UModule> lefts, rights;
            for (const UModule& m : f.modules) (m.side == ModuleSide::Left ? lefts : rights).push_back(m);
            try {
                rep.merge(check_dualising_module(b, counit_module(h), *t.left, *t.right, lefts, rights), "DUALISING.");
            } catch (const HypothesisFailed& e) {
                rep.fail("DUALISING.HYP_" + e.which, e.what());
            }
        });
    }
    return rep;
}

template <class T>
void same(Tally& t, const std::string& what, const T& x, const T& y) {
    t.expect(x == y, [&] { return what + " differs"; });
}

Report gallery_suite(const InstanceFile& f) {
    Report rep;
    const Instance& I = f.instance;
    Tally t("GALLERY_MATCH");
    if (gallery_characteristic(I.name) != f.characteristic) {
        t.fail("gallery instance lives in characteristic " + std::to_string(gallery_characteristic(I.name)));
        rep.add(t);
        return rep;
    }
    Instance g;
    try {
        g = build_gallery_instance(I.name);
    } catch (const UnknownInstance&) {
        rep.skip("GALLERY_MATCH", "'" + I.name + "' is not a gallery instance");
        return rep;
    }
    const LeftBialgebroid &x = I.B, &y = g.B;
    same(t, "basis of A", x.A().names(), y.A().names());
    same(t, "basis of U", x.U().names(), y.U().names());
    if (!t.ok()) {
        rep.add(t);
        return rep;
    }
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j)
            if (x.admissible(i, j)) same(t, "product " + x.U().name(i) + "*" + x.U().name(j), x.U().product(i, j), y.U().product(i, j));
    for (std::size_t i = 0; i < x.na(); ++i)
        for (std::size_t j = 0; j < x.na(); ++j) same(t, "base product", x.A().product(i, j), y.A().product(i, j));
    same(t, "source", x.R.s(), y.R.s());
    same(t, "target", x.R.t(), y.R.t());
    for (std::size_t u = 0; u < x.n(); ++u)
        t.expect(x.T_A()->equal(x.delta[u], y.delta[u]), [&] { return "coproduct of " + x.U().name(u) + " differs"; });
    same(t, "counit", x.eps, y.eps);
    same(t, "degrees", x.U().degrees(), y.U().degrees());
    same(t, "antipode", I.antipode, g.antipode);
    same(t, "right counit", I.partial, g.partial);
    rep.add(t);
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bialgebroid", "hopf", "duals", "sstar", "comodule", "modules", "gallery"};
    return names;
}

Report run_suite(const InstanceFile& f, const std::string& suite, const std::string& base_dir) {
    if (suite == "all") {
        Report rep;
        for (const std::string& s : suite_names()) rep.merge(run_suite(f, s, base_dir), s + ".");
        return rep;
    }
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) throw Error("unknown suite '" + suite + "'");
    if (f.right_kind && suite != "bialgebroid" && suite != "duals") {
        Report rep;
        rep.skip(suite, "right bialgebroid file: only the bialgebroid and duals suites apply");
        return rep;
    }
    if (suite == "bialgebroid") return bialgebroid_suite(f, base_dir);
    if (suite == "hopf") return hopf_suite(f);
    if (suite == "duals") return duals_suite(f, base_dir);
    if (suite == "sstar") return sstar_suite(f);
    if (suite == "comodule") return comodule_suite(f);
    if (suite == "modules") return modules_suite(f);
    return gallery_suite(f);
}

LoadedFile load_file(const std::string& path) {
    LoadedFile out;
    std::string text = read_text_file(path);
    out.scope = std::make_unique<FieldScope>(read_characteristic(text));
    out.file = parse_instance(text);
    out.dir = std::filesystem::path(path).parent_path().string();
    return out;
}

}  // namespace halg
