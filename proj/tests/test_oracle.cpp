#include "gtsp4/oracle.hpp"
#include "gtsp4/ideal.hpp"
#include "gtsp4/operators.hpp"

#include <doctest.h>

using namespace gtsp4;

TEST_CASE("oracle dimensions equal Weyl dimensions")
{
    for (const auto& w : weights_up_to(6)) {
        CAPTURE(w.str());
        CHECK(build_irrep(w).dim() == weyl_dim(w));
    }
}

TEST_CASE("highest vector")
{
    CHECK(highest_vector(HighestWeight::ints(1, 0)) == b2(-2, -1));
    CHECK(highest_vector(HighestWeight::parse("1/2,1/2")) == b1(-2));
    CHECK(highest_vector(HighestWeight::ints(2, 1)) == b2(-2, -1) * b1(-2) * b1(-2));
    for (const auto& f : sp4_raising()) CHECK(apply_operator(f, highest_vector(HighestWeight::ints(2, 1))).is_zero());
}

TEST_CASE("expansion in the oracle basis")
{
    RepSpace r = build_irrep(HighestWeight::ints(1, 0));
    for (std::size_t i = 0; i < r.dim(); ++i) {
        RVector c = r.expand(r.basis[i]);
        for (std::size_t k = 0; k < r.dim(); ++k) CHECK(c[k] == (k == i ? 1 : 0));
    }
    Poly img = apply_operator(f_op(1, -2), r.basis[0]);
    RVector c = r.expand(img);
    Poly back;
    for (std::size_t k = 0; k < r.dim(); ++k) back.add_scaled(r.basis[k], Monomial{}, c[k]);
    CHECK(sp_normal_form(back - img).is_zero());
    CHECK_THROWS_AS(r.expand(Poly(1)), NotInSpan);
    CHECK_THROWS_AS(r.expand(b1(-2) * b1(-2)), NotInSpan);
}

TEST_CASE("branching under h")
{
    RepSpace r = build_irrep(HighestWeight::ints(1, 0));
    CHECK(h_highest_subspace(r, HalfInt::from_int(1)).size() == 1);
    CHECK(h_highest_subspace(r, HalfInt::from_int(0)).size() == 2);
    for (const auto& w : weights_up_to(5)) {
        RepSpace s = build_irrep(w);
        Integer total = 0;
        for (HalfInt x = w.m2; x >= HalfInt::from_int(0); x -= HalfInt::from_int(1)) {
            std::size_t n = h_highest_subspace(s, x).size();
            CHECK(n == enumerate_labels(w, x).size());
            total += Integer(static_cast<unsigned long>(n)) * (x.twice() + 1);
        }
        CHECK(total == weyl_dim(w));
    }
}

TEST_CASE("weight spaces")
{
    RepSpace r = build_irrep(HighestWeight::ints(1, 1));
    std::size_t total = 0;
    for (const auto& [wt, idx] : r.weight_table) total += idx.size();
    CHECK(total == 10);
    CHECK(r.weight_table.at({0, 0}).size() == 2);
    auto parts = split_by_weight(b1(-2) * b1(2) + b1(-2) * b1(-1));
    CHECK(parts.size() == 2);
}
