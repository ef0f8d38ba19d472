#include "halg/errors.hpp"
#include "halg/gallery.hpp"
#include "halg/modules.hpp"

#include <doctest.h>

#include <iostream>

using namespace halg;

namespace {

void print_failures(const Report& r) {
    for (const auto& c : r.items())
        if (c.status == Status::Fail) std::cerr << c.id << ": " << c.witness << "\n";
}

const ExoticKind all_kinds[] = {ExoticKind::GIAND1, ExoticKind::LING1, ExoticKind::SUP1, ExoticKind::GIAND2, ExoticKind::LING2, ExoticKind::SUP2};

ExoticModule build(const LeftBialgebroid& b, ExoticKind k, const TranslationData& l, const TranslationData& r) {
    const TranslationData* td = (k == ExoticKind::GIAND1 || k == ExoticKind::LING1 || k == ExoticKind::SUP1) ? &l : &r;
    if (k == ExoticKind::GIAND1 || k == ExoticKind::GIAND2)
        return exotic_structure(b, k, regular_module(b, ModuleSide::Left), base_module(b), td);
    if (k == ExoticKind::LING1 || k == ExoticKind::LING2)
        return exotic_structure(b, k, regular_module(b, ModuleSide::Right), regular_module(b, ModuleSide::Right), td);
    return exotic_structure(b, k, regular_module(b, ModuleSide::Right), regular_module(b, ModuleSide::Left), td);
}

}  // namespace

TEST_CASE("regular and base modules") {
    for (const char* name : {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE"}) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        for (const UModule& m : {regular_module(I.B, ModuleSide::Left), regular_module(I.B, ModuleSide::Right), base_module(I.B)}) {
            Report r = check_umodule(I.B, m);
            print_failures(r);
            CHECK(r.ok());
        }
    }
}

TEST_CASE("six module structures are associative and unital") {
    for (const char* name : {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE"}) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        TranslationData l = invert_galois(I.B, Side::Left), r = invert_galois(I.B, Side::Right);
        for (ExoticKind k : all_kinds) {
            CAPTURE(exotic_name(k));
            ExoticModule m = build(I.B, k, l, r);
            Report rep = check_umodule(I.B, m.module);
            print_failures(rep);
            CHECK(rep.ok());
            CHECK(m.module.act(I.B.U().unit()) == Matrix::identity(m.module.dim()));
            CHECK(exotic_kind(exotic_name(k)) == k);
        }
    }
}

TEST_CASE("dual of a kC2-module is the contragredient representation") {
    Instance I = make_hopf_c2();
    TranslationData l = invert_galois(I.B, Side::Left);
    UModule m = regular_module(I.B, ModuleSide::Left);
    ExoticModule dual = exotic_structure(I.B, ExoticKind::GIAND1, m, base_module(I.B), &l);
    REQUIRE(dual.module.dim() == 2);
    // (g f)(m) = f(g^{-1} m)
    Matrix ginv = *inverse(m.action[1]);
    for (std::size_t k = 0; k < 2; ++k) {
        Matrix f = Matrix::from_rows(2, {dual.basis[k]});
        Vec want = *dual.coords((f * ginv).row(0));
        CHECK(dual.module.action[1].column(k) == want);
    }
}

TEST_CASE("SUP1 on the pair groupoid") {
    Instance I = make_pair_groupoid();
    TranslationData l = invert_galois(I.B, Side::Left);
    ExoticModule m = exotic_structure(I.B, ExoticKind::SUP1, regular_module(I.B, ModuleSide::Right), regular_module(I.B, ModuleSide::Left), &l);
    // U▶ ⊗_{A^op} ◁U over A = k x k: e_ij ⊗ e_kl survives iff i = k
    CHECK(m.module.dim() == 8);
    Report r = check_umodule(I.B, m.module);
    print_failures(r);
    CHECK(r.passed("UMOD_ASSOC"));
}

TEST_CASE("missing translation data and wrong sides are rejected") {
    Instance I = make_sweedler();
    TranslationData l = invert_galois(I.B, Side::Left);
    UModule left = regular_module(I.B, ModuleSide::Left), right = regular_module(I.B, ModuleSide::Right);
    CHECK_THROWS_AS(exotic_structure(I.B, ExoticKind::GIAND2, left, left, nullptr), MissingTranslationData);
    CHECK_THROWS_AS(exotic_structure(I.B, ExoticKind::GIAND2, left, left, &l), MissingTranslationData);
    CHECK_THROWS_AS(exotic_structure(I.B, ExoticKind::LING1, left, left, &l), SideMismatch);
}

TEST_CASE("perturbed translation data breaks associativity") {
    Instance I = make_sweedler();
    TranslationData l = invert_galois(I.B, Side::Left);
    std::size_t gx = I.B.U().index_of("gx");
    l.table[gx] = Scalar(2) * l.table[gx];
    ExoticModule m = exotic_structure(I.B, ExoticKind::GIAND1, regular_module(I.B, ModuleSide::Left), regular_module(I.B, ModuleSide::Left), &l);
    CHECK(check_umodule(I.B, m.module).failed("UMOD_ASSOC"));
}

TEST_CASE("dualising modules") {
    for (const char* name : {"EX-HOPF", "EX-SW", "EX-GPD"}) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        FullHopfAlgebroid H = make_full_hopf(I.B, *I.antipode, *I.partial);
        TranslationData l = invert_galois(I.B, Side::Left), r = invert_galois(I.B, Side::Right);
        UModule p = counit_module(H);
        REQUIRE(check_umodule(I.B, p).ok());
        Report rep = check_dualising_module(I.B, p, l, r);
        print_failures(rep);
        CHECK(rep.ok());
        CHECK(rep.passed("HYP_I"));
        CHECK(rep.passed("UNIT_ISO_A"));
        CHECK(rep.passed("EVAL_ULINEAR_" + I.B.name));
        // P = U: Hom_{A^op}(U, U) is bigger than A
        try {
            check_dualising_module(I.B, regular_module(I.B, ModuleSide::Right), l, r);
            FAIL("expected HypothesisFailed");
        } catch (const HypothesisFailed& e) {
            CHECK(e.which == "i");
        }
    }
}
