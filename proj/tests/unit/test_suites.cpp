#include "halg/errors.hpp"
#include "halg/suites.hpp"

#include <doctest.h>

#include <iostream>

using namespace halg;

TEST_CASE("every suite passes on the exported gallery") {
    for (const std::string& name : gallery_names()) {
        CAPTURE(name);
        InstanceFile f = parse_instance(write_instance(build_gallery_instance(name)));
        Report r = run_suite(f, "all", ".");
        for (const auto& c : r.items())
            if (c.status == Status::Fail) std::cerr << c.id << ": " << c.witness << "\n";
        CHECK(r.ok());
        CHECK(r.passed("hopf.SCH1"));
        CHECK(r.passed("gallery.GALLERY_MATCH"));
    }
}

TEST_CASE("gallery suite notices a changed antipode") {
    Instance I = make_sweedler();
    Matrix S = *I.antipode;
    S.at(2, 2) = S.at(2, 2) + Scalar(1);
    I.antipode = S;
    InstanceFile f = parse_instance(write_instance(I));
    CHECK(run_suite(f, "gallery", ".").failed("GALLERY_MATCH"));
    CHECK_FALSE(run_suite(f, "hopf", ".").ok());
}

TEST_CASE("unknown suites are rejected") {
    InstanceFile f = parse_instance(write_instance(make_hopf_c2()));
    CHECK_THROWS_AS(run_suite(f, "everything", "."), Error);
}

TEST_CASE("instances off the gallery skip the gallery comparison") {
    Instance I = make_hopf_c2();
    I.name = "my-c2";
    InstanceFile f = parse_instance(write_instance(I));
    Report r = run_suite(f, "gallery", ".");
    REQUIRE(r.find("GALLERY_MATCH"));
    CHECK(r.find("GALLERY_MATCH")->status == Status::Skipped);
}
