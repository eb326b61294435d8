#include "gtsp4/serialize.hpp"
#include "gtsp4/gtbasis.hpp"
#include "gtsp4/highest.hpp"

#include <doctest.h>

using namespace gtsp4;

TEST_CASE("scalars")
{
    CHECK(to_json(Rational(-3, 4)) == "-3/4");
    CHECK(to_json(Rational(6)) == "6");
    CHECK(to_json(HalfInt::from_twice(-3)) == "-3/2");
    CHECK(to_json(HighestWeight::parse("3/2,1/2")) == Json{{"m2", "3/2"}, {"m1", "1/2"}});
}

TEST_CASE("polynomials round-trip")
{
    for (const auto& w : {HighestWeight::ints(1, 1), HighestWeight::parse("3/2,1/2")})
        for (const auto& p : gt_basis(w)) {
            Json j = to_json(p);
            CHECK(j.is_array());
            CHECK(poly_from_json(j) == p);
            CHECK(poly_from_json(Json::parse(j.dump())) == p);
        }
    CHECK(to_json(Poly()).empty());
}

TEST_CASE("diagrams and labels round-trip")
{
    for (const auto& d : enumerate_diagrams(HighestWeight::ints(2, 1))) {
        CAPTURE(d.str());
        CHECK(diagram_from_json(to_json(d)) == d);
        CHECK(parse_diagram(d.str()) == d);
    }
    for (const auto& l : enumerate_labels(HighestWeight::ints(2, 1))) CHECK(label_from_json(to_json(l)) == l);
}

TEST_CASE("diagram text parsing")
{
    GTDiagram d = parse_diagram("(1; 2,1; 2,1; 2,-1)");
    CHECK(d.sigma == 1);
    CHECK(d.k2 == HalfInt::from_int(2));
    CHECK(d.s1 == HalfInt::from_int(-1));
    CHECK(parse_diagram("(0; 3/2,1/2; 3/2,1/2; 3/2,-1/2)").s1 == HalfInt::from_twice(-1));
    CHECK_THROWS_AS(parse_diagram("(0; 1,0; 1,0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("0; 1,0; 1,0; 1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("(0; 1,0; 1,0; 1,x)"), std::invalid_argument);
}

TEST_CASE("generator matrix JSON lists nonzero entries")
{
    GTModule m = GTModule::build(HighestWeight::ints(1, 0));
    Json j = to_json(generator_matrix(m, f_op(1, -2)));
    CHECK(j["generator"] == "f[1,-2]");
    CHECK(j["dim"] == 5);
    CHECK(j["entries"] == Json::parse(R"([[1,0,"1"],[2,1,"2"]])"));
    CHECK_FALSE(j.contains("discrepancies"));
}

TEST_CASE("Gamma-series JSON")
{
    auto l = enumerate_labels(HighestWeight::ints(1, 0))[0];
    Json j = to_json(rebase_h_highest(l));
    CHECK(j.is_object());
    CHECK(j.contains("prefactor"));
}
