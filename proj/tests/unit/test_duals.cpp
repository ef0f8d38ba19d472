#include "halg/duals.hpp"
#include "halg/gallery.hpp"

#include <doctest.h>

#include <iostream>

using namespace halg;

namespace {

void print_failures(const Report& r) {
    for (const auto& c : r.items())
        if (c.status == Status::Fail) std::cerr << c.id << ": " << c.witness << "\n";
}

const char* all_instances[] = {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE", "EX-LR(3)"};

}  // namespace

TEST_CASE("dual of the group algebra of C2 is the function algebra") {
    Instance I = make_hopf_c2();
    DualBialgebroid d = build_dual(I.B, DualSide::Left);
    REQUIRE(d.dim() == 2);
    const FiniteAlgebra& D = d.R.V();
    // delta functions at 1 and g are orthogonal idempotents
    CHECK(D.product(0, 0) == basis_vec(2, 0));
    CHECK(D.product(1, 1) == basis_vec(2, 1));
    CHECK(is_zero(D.product(0, 1)));
    CHECK(D.unit() == Vec{Scalar(1), Scalar(1)});
    REQUIRE(d.has_coproduct);
    // Δ(δ_g) = δ_1 ⊗ δ_g + δ_g ⊗ δ_1
    Vec want = kron(basis_vec(2, 0), basis_vec(2, 1)) + kron(basis_vec(2, 1), basis_vec(2, 0));
    CHECK(d.R.T_A()->equal(d.R.delta[1], want));
}

TEST_CASE("duals of the gallery are right bialgebroids") {
    for (const char* name : all_instances) {
        for (DualSide side : {DualSide::Left, DualSide::Right}) {
            CAPTURE(name);
            CAPTURE(side == DualSide::Left);
            Instance I = build_gallery_instance(name);
            DualBialgebroid d = build_dual(I.B, side);
            CHECK(d.has_coproduct);
            CHECK(d.generators.size() == d.dim());
            CHECK(d.dim() % I.B.na() == 0);
            Report r = check_dual(I.B, d);
            print_failures(r);
            CHECK(r.ok());
            CHECK(r.passed("COPROD_TRANSPOSE"));
            if (!I.B.filtered()) CHECK(r.passed("DOUBLE_DUAL"));
        }
    }
}

TEST_CASE("pair groupoid right dual pairing has full rank") {
    Instance I = make_pair_groupoid();
    DualBialgebroid d = build_dual(I.B, DualSide::Right);
    CHECK(d.dim() == 4);
    Pairing p = evaluation_pairing(I.B, d);
    CHECK(p.kind == PairingKind::Right);
    CHECK(pairing_rank(p) == 4);
    CHECK(check_pairing(p).ok());
}

TEST_CASE("generators reproduce every element") {
    Instance I = make_enveloping_dual_numbers();
    for (DualSide side : {DualSide::Left, DualSide::Right}) {
        DualBialgebroid d = build_dual(I.B, side);
        const FiniteAlgebra& U = I.B.U();
        for (std::size_t u = 0; u < I.B.n(); ++u) {
            Vec sum(I.B.n());
            for (std::size_t j = 0; j < d.dim(); ++j) {
                Vec a = d.eval_basis(j, u);
                Vec lift = side == DualSide::Left ? I.B.R.src(a) : I.B.R.tgt(a);
                sum = sum + U.mul(lift, d.generators[j]);
            }
            CHECK(sum == U.basis(u));
        }
    }
}

TEST_CASE("misdeclared pairing kind is caught") {
    Instance I = make_pair_groupoid();
    DualBialgebroid d = build_dual(I.B, DualSide::Left);
    Pairing p = evaluation_pairing(I.B, d);
    REQUIRE(check_pairing(p).ok());
    p.kind = PairingKind::Right;
    CHECK_FALSE(check_pairing(p).ok());
}

TEST_CASE("a wrong bialgebroid map is reported") {
    Instance I = make_sweedler();
    Report ok = check_bialgebroid_map(I.B, I.B, Matrix::identity(4), Matrix::identity(1));
    CHECK(ok.ok());
    // swap g and x: not multiplicative
    Matrix f = Matrix::identity(4);
    f.at(1, 1) = Scalar(0);
    f.at(2, 2) = Scalar(0);
    f.at(1, 2) = Scalar(1);
    f.at(2, 1) = Scalar(1);
    Report bad = check_bialgebroid_map(I.B, I.B, f, Matrix::identity(1));
    CHECK(bad.failed("MAP_ALG"));
    CHECK(bad.failed("MAP_COPROD"));
}
