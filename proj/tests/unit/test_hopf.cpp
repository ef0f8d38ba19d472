#include "halg/errors.hpp"
#include "halg/gallery.hpp"
#include "halg/hopf.hpp"

#include <doctest.h>

#include <iostream>

using namespace halg;

namespace {

void print_failures(const Report& r) {
    for (const auto& c : r.items())
        if (c.status == Status::Fail) std::cerr << c.id << ": " << c.witness << "\n";
}

Vec e(std::size_t n, std::size_t i) { return basis_vec(n, i); }

const char* all_instances[] = {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE", "EX-LR(3)"};

}  // namespace

TEST_CASE("group algebra of C2: g+ (x) g- = g (x) g") {
    Instance I = make_hopf_c2();
    TranslationData L = invert_galois(I.B, Side::Left);
    CHECK(L.space->equal(L.table[1], kron(e(2, 1), e(2, 1))));
    CHECK(L.space->equal(L.table[0], kron(e(2, 0), e(2, 0))));
}

TEST_CASE("Sweedler algebra: x+ (x) x- = x (x) 1 - g (x) gx") {
    Instance I = make_sweedler();
    TranslationData L = invert_galois(I.B, Side::Left);
    Vec want = kron(e(4, 2), e(4, 0)) - kron(e(4, 1), e(4, 3));
    CHECK(L.space->equal(L.table[2], want));
    // right: x[+] (x) x[-] = x(2) (x) S^-1(x(1)), S^-1(x) = gx, S^-1(g) = g
    TranslationData R = invert_galois(I.B, Side::Right);
    Vec want_r = kron(e(4, 0), e(4, 3)) + kron(e(4, 2), e(4, 1));
    CHECK(R.space->equal(R.table[2], want_r));
}

TEST_CASE("pair groupoid: arrow g goes to g (x) g^-1") {
    Instance I = make_pair_groupoid();
    TranslationData L = invert_galois(I.B, Side::Left);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(L.space->equal(L.table[2 * i + j], kron(e(4, 2 * i + j), e(4, 2 * j + i))));
}

TEST_CASE("enveloping algebra: (a|b)+ (x) (a|b)- = (a|1) (x) (b|1)") {
    Instance I = make_enveloping_dual_numbers();
    TranslationData L = invert_galois(I.B, Side::Left);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(L.space->equal(L.table[2 * a + b], kron(e(4, 2 * a), e(4, 2 * b))));
}

TEST_CASE("envelope generators") {
    Instance I = build_gallery_instance("EX-LR(3)");
    std::size_t n = I.B.n();
    TranslationData L = invert_galois(I.B, Side::Left);
    auto E = [&](int a, int b) { return e(n, lr_index(a, b)); };
    CHECK(L.space->equal(L.table[lr_index(1, 0)], kron(E(1, 0), E(0, 0))));
    CHECK(L.space->equal(L.table[lr_index(0, 1)], kron(E(0, 1), E(0, 0)) - kron(E(0, 0), E(0, 1))));
    Vec d2 = kron(E(0, 2), E(0, 0)) - Scalar(2) * kron(E(0, 1), E(0, 1)) + kron(E(0, 0), E(0, 2));
    CHECK(L.space->equal(L.table[lr_index(0, 2)], d2));
}

TEST_CASE("all translation identities hold on the gallery") {
    for (const char* name : all_instances) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        TranslationData L = invert_galois(I.B, Side::Left), R = invert_galois(I.B, Side::Right);
        Report rl = check_translation_roundtrip(I.B, L), rr = check_translation_roundtrip(I.B, R);
        CHECK(rl.ok());
        CHECK(rr.ok());
        Report r = verify_translation_identities(I.B, &L, &R);
        print_failures(r);
        CHECK(r.ok());
        for (std::string id : {"SCH1", "SCH5", "SCH9", "TCH1", "TCH5", "TCH9", "MIX1", "MIX2", "MIX3"}) CHECK(r.passed(id));
    }
}

TEST_CASE("missing translation data skips the identities that need it") {
    Instance I = make_hopf_c2();
    TranslationData L = invert_galois(I.B, Side::Left);
    Report r = verify_translation_identities(I.B, &L, nullptr);
    CHECK(r.passed("SCH4"));
    REQUIRE(r.find("TCH4"));
    CHECK(r.find("TCH4")->status == Status::Skipped);
    CHECK(r.find("MIX2")->status == Status::Skipped);
}

TEST_CASE("a corrupted translation table is caught") {
    Instance I = make_sweedler();
    TranslationData L = invert_galois(I.B, Side::Left);
    L.table[2] = kron(e(4, 2), e(4, 0));
    Report r = verify_translation_identities(I.B, &L, nullptr);
    CHECK(r.failed("SCH2"));
    CHECK(r.failed("SCH7"));
}

TEST_CASE("idempotent monoid bialgebra is not Hopf") {
    // k{1, z} with z^2 = z, z group-like
    FiniteAlgebra k = FiniteAlgebra::ground_field();
    FiniteAlgebra U({"1", "z"}, e(2, 0), {e(2, 0), e(2, 1), e(2, 1), e(2, 1)});
    Matrix st = Matrix::from_columns(2, {e(2, 0)});
    LeftBialgebroid B{AeRing(k, U, st, st, "M"), {kron(e(2, 0), e(2, 0)), kron(e(2, 1), e(2, 1))}, Matrix::from_rows(2, {Vec{Scalar(1), Scalar(1)}}), "M"};
    REQUIRE(check_left_bialgebroid(B).ok());
    try {
        invert_galois(B, Side::Left);
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& ex) {
        CHECK(ex.rank_defect == 1);
    }
    CHECK_THROWS_AS(invert_galois(B, Side::Right), NotInvertible);
}

TEST_CASE("full Hopf structures and the antipode formula for translation maps") {
    for (const char* name : all_instances) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        REQUIRE(I.antipode);
        FullHopfAlgebroid H = make_full_hopf(I.B, *I.antipode, *I.partial);
        Report r = check_full_hopf(H);
        print_failures(r);
        CHECK(r.ok());
        auto [l, rt] = translation_from_antipode(H);
        Report cl = compare_translation(I.B, l, invert_galois(I.B, Side::Left), "LEFT_FROM_S");
        Report cr = compare_translation(I.B, rt, invert_galois(I.B, Side::Right), "RIGHT_FROM_S");
        print_failures(cl);
        print_failures(cr);
        CHECK(cl.ok());
        CHECK(cr.ok());
        CHECK_NOTHROW(nu_mu_isomorphisms(H));
    }
}

TEST_CASE("nu on the pair groupoid is the identity") {
    Instance I = make_pair_groupoid();
    FullHopfAlgebroid H = make_full_hopf(I.B, *I.antipode, *I.partial);
    CHECK(H.nu == Matrix::identity(2));
    CHECK(H.mu == Matrix::identity(2));
}

TEST_CASE("faulty antipode data") {
    Instance I = make_pair_groupoid();
    CHECK_THROWS_AS(make_full_hopf(I.B, Matrix(4, 4), *I.partial), AntipodeNotInvertible);
    CHECK_THROWS_AS(make_full_hopf(I.B, *I.antipode, Matrix(2, 4)), NotIso);
    // ∂ with both columns of the diagonal sent to d1: nu is singular
    Matrix p = *I.partial;
    p.at(0, 3) = Scalar(1);
    p.at(1, 3) = Scalar(0);
    CHECK_THROWS_AS(make_full_hopf(I.B, *I.antipode, p), NotIso);
    // S = id on the Sweedler algebra is invertible but not an antipode
    Instance sw = make_sweedler();
    FullHopfAlgebroid H = make_full_hopf(sw.B, Matrix::identity(4), *sw.partial);
    Report r = check_full_hopf(H);
    CHECK(r.failed("S_ANTIMULT"));
    auto [l, rt] = translation_from_antipode(H);
    CHECK(compare_translation(sw.B, l, invert_galois(sw.B, Side::Left), "LEFT_FROM_S").failed("LEFT_FROM_S"));
}
