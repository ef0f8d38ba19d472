#include "halg/errors.hpp"
#include "halg/io.hpp"

#include <doctest.h>

using namespace halg;

namespace {

const char* sweedler_text = R"(halg 1
name H4
# Sweedler's four-dimensional Hopf algebra
[field]
rational
[algebra A]
basis 1
unit 1
1*1 = 1
[ring H4]
basis 1 g x gx
unit 1
1*1 = 1
1*g = g
1*x = x
1*gx = gx
g*1 = g
g*g = 1
g*x = gx
g*gx = x
x*1 = x
x*g = -gx
x*gx = 0
gx*1 = gx
gx*g = -x
[eta]
s 1 = 1
t 1 = 1
[coproduct]
1 = 1(x)1
g = g(x)g
x = x(x)1 + g(x)x
gx = gx(x)g + 1(x)gx
[counit]
1 = 1
g = 1
x = 0
gx = 0
)";

}  // namespace

TEST_CASE("gallery instances survive a write/parse round trip") {
    for (const std::string& name : {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE", "EX-LR(3)"}) {
        CAPTURE(name);
        Instance I = build_gallery_instance(name);
        std::string text = write_instance(I, "hopf");
        CHECK(read_characteristic(text) == 0);
        InstanceFile f = parse_instance(text);
        CHECK(f.suite == "hopf");
        CHECK(f.instance.B.U().dim() == I.B.U().dim());
        CHECK(f.instance.B.delta == I.B.delta);
        CHECK(f.instance.B.eps == I.B.eps);
        CHECK(f.instance.B.R.s() == I.B.R.s());
        CHECK(f.instance.B.U().filtered() == I.B.U().filtered());
        REQUIRE(f.instance.antipode.has_value() == I.antipode.has_value());
        if (I.antipode) CHECK(*f.instance.antipode == *I.antipode);
        CHECK(write_instance(f.instance, "hopf") == text);
    }
}

TEST_CASE("hand-written Sweedler file parses") {
    InstanceFile f = parse_instance(sweedler_text);
    CHECK(f.instance.name == "H4");
    CHECK(f.instance.B.name == "H4");
    CHECK(f.instance.B.U().product(2, 1) == Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(-1)});
    CHECK(check_left_bialgebroid(f.instance.B).ok());
}

TEST_CASE("parse errors carry positions") {
    auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return {e.line, e.column};
        }
        return {0, 0};
    };
    std::string bad = sweedler_text;
    bad.replace(bad.find("g*x = gx"), 8, "g*x = gy");
    CHECK(error_at(bad) == std::pair<std::size_t, std::size_t>{19, 7});
    std::string missing = sweedler_text;
    missing.replace(missing.find("gx = gx(x)g"), 23, "");
    CHECK_THROWS_AS(parse_instance(missing), ParseError);
    CHECK(error_at("halg 2\n") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(error_at("halg 1\n[field]\nprime 4\n") == std::pair<std::size_t, std::size_t>{3, 7});
    std::string noop = sweedler_text;
    noop.replace(noop.find("x(x)1 + g(x)x"), 13, "x(x)1 g(x)x");
    CHECK(error_at(noop).first == 32);
}

TEST_CASE("characteristic must match the active field") {
    std::string text = "halg 1\n[field]\nprime 2\n";
    CHECK(read_characteristic(text) == 2);
    CHECK_THROWS_AS(parse_instance(text), ParseError);
}

TEST_CASE("dual files carry their functionals") {
    Instance I = make_pair_groupoid();
    DualBialgebroid d = build_dual(I.B, DualSide::Left);
    std::string text = write_dual(d, 0, "ex_gpd.halg");
    InstanceFile f = parse_instance(text);
    REQUIRE(f.right_kind);
    REQUIRE(f.dual_of.has_value());
    CHECK(f.dual_of->source == "ex_gpd.halg");
    DualBialgebroid back = declared_dual(*f.right, *f.dual_of, false);
    Report r = check_dual(I.B, back);
    CHECK(r.ok());
    CHECK(r.passed("COPROD_TRANSPOSE"));
}

TEST_CASE("comodule and module blocks") {
    std::string text = std::string(sweedler_text) + R"(
[comodule K right]
basis k
act k 1 = k
coact k = k(x)1
[module T left]
basis t
act t 1 = t
act t g = t
)";
    InstanceFile f = parse_instance(text);
    REQUIRE(f.comodules.size() == 1);
    REQUIRE(f.modules.size() == 1);
    CHECK(check_comodule(f.instance.B, f.comodules[0]).ok());
    CHECK(check_umodule(f.instance.B, f.modules[0]).ok());
}
