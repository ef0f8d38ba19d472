#include "halg/gallery.hpp"

#include <doctest.h>

#include <iostream>

using namespace halg;

namespace {

void print_failures(const Report& r) {
    for (const auto& c : r.items())
        if (c.status == Status::Fail) std::cerr << c.id << ": " << c.witness << "\n";
}

}  // namespace

TEST_CASE("gallery instances are left bialgebroids") {
    for (std::string name : {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE", "EX-LR(3)"}) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        Report r = check_left_bialgebroid(I.B);
        print_failures(r);
        CHECK(r.ok());
        Report b = check_action_on_base(I.B);
        print_failures(b);
        CHECK(b.ok());
    }
}

TEST_CASE("characteristic-two envelope with anchor D(x) = 1") {
    FieldScope f2(2);
    Instance I = build_gallery_instance("EX-LR2(3)");
    Report r = check_left_bialgebroid(I.B);
    print_failures(r);
    CHECK(r.ok());
}

TEST_CASE("anchor D(x) = 1 is not a derivation over Q") {
    // the rewrite Dx -> xD + 1 breaks associativity of the truncated envelope
    Instance I = make_lie_rinehart(2, Anchor{Scalar(1), Scalar(0)}, "bad");
    Report r = check_algebra_axioms(I.B.U());
    CHECK(r.failed("ALG_ASSOC"));
}
