#include "gtsp4/labels.hpp"

#include <doctest.h>

using namespace gtsp4;

TEST_CASE("weight parsing and validity")
{
    auto w = HighestWeight::parse("3/2,1/2");
    CHECK(w.m2 == HalfInt::from_twice(3));
    CHECK(w.m1 == HalfInt::from_twice(1));
    CHECK(w.valid());
    CHECK(w.str() == "[3/2,1/2]");
    CHECK_FALSE((HighestWeight{HalfInt::from_int(1), HalfInt::from_twice(1)}).valid());
    CHECK_THROWS(HighestWeight::parse("1,2"));
    CHECK_THROWS(HighestWeight::parse("1"));
}

TEST_CASE("Weyl dimensions")
{
    CHECK(weyl_dim(HighestWeight::ints(0, 0)) == 1);
    CHECK(weyl_dim(HighestWeight::ints(1, 0)) == 5);
    CHECK(weyl_dim(HighestWeight::ints(1, 1)) == 10);
    CHECK(weyl_dim(HighestWeight::ints(2, 0)) == 14);
    CHECK(weyl_dim(HighestWeight::ints(2, 1)) == 35);
    CHECK(weyl_dim(HighestWeight::parse("1/2,1/2")) == 4);
    CHECK(weyl_dim(HighestWeight::parse("3/2,1/2")) == 16);
    CHECK(weyl_dim(HighestWeight::parse("3/2,3/2")) == 20);
}

TEST_CASE("diagram counts match Weyl dimensions")
{
    for (const auto& w : weights_up_to(7)) {
        CAPTURE(w.str());
        CHECK(weyl_dim(w) == enumerate_diagrams(w).size());
    }
    CHECK(weights_up_to(7).size() == 20);
    CHECK(weights_up_to(6).size() == 16);
}

TEST_CASE("[1,0] has five diagrams in canonical order")
{
    auto ds = enumerate_diagrams(HighestWeight::ints(1, 0));
    REQUIRE(ds.size() == 5);
    CHECK(ds[0].str() == "(0; 1,0; 1,0; 1,1)");
    CHECK(ds[1].str() == "(0; 1,0; 1,0; 1,0)");
    CHECK(ds[2].str() == "(0; 1,0; 1,0; 1,-1)");
    CHECK(ds[3].str() == "(0; 1,0; 1,0; 0,0)");
    CHECK(ds[4].str() == "(0; 1,0; 0,0; 0,0)");
    for (const auto& d : ds) CHECK(validate_diagram(d));
}

TEST_CASE("diagram validation")
{
    auto h = [](int x) { return HalfInt::from_int(x); };
    CHECK(validate_diagram({0, h(1), h(0), h(1), h(0), h(1), h(1)}));
    CHECK_FALSE(validate_diagram({0, h(1), h(0), h(1), h(0), h(1), h(2)}));   // |s1| > s2
    CHECK_FALSE(validate_diagram({1, h(1), h(0), h(1), h(0), h(1), h(0)}));   // sigma = 1 needs k1 > 0
    CHECK_FALSE(validate_diagram({0, h(1), h(0), h(2), h(0), h(1), h(0)}));   // k2 > m2
    CHECK_FALSE(validate_diagram({0, h(1), h(0), h(1), HalfInt::from_twice(1), h(1), h(0)}));
}

TEST_CASE("labels by s2")
{
    auto w = HighestWeight::ints(1, 0);
    CHECK(enumerate_labels(w).size() == 3);
    CHECK(enumerate_labels(w, HalfInt::from_int(1)).size() == 1);
    CHECK(enumerate_labels(w, HalfInt::from_int(0)).size() == 2);
}

TEST_CASE("dominance")
{
    CHECK(dominates(HighestWeight::ints(2, 0), HighestWeight::ints(1, 1)));
    CHECK(dominates(HighestWeight::ints(1, 1), HighestWeight::ints(1, 0)));
    CHECK_FALSE(dominates(HighestWeight::ints(1, 0), HighestWeight::ints(1, 1)));
    CHECK(sp4_highest_weight(HighestWeight::ints(1, 0)) == std::pair<long, long>{1, 1});
}
