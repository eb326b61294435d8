#include "gtsp4/gtbasis.hpp"
#include "gtsp4/ideal.hpp"
#include "gtsp4/oracle.hpp"

#include <doctest.h>

using namespace gtsp4;

TEST_CASE("[0,0] basis is the constant 1")
{
    auto b = gt_basis(HighestWeight::ints(0, 0));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Poly(1));
}

TEST_CASE("[1/2,1/2] basis spans the four b[i]")
{
    auto b = gt_basis(HighestWeight::parse("1/2,1/2"));
    REQUIRE(b.size() == 4);
    LinearSpan span;
    for (const auto& p : b) {
        CHECK(p.max_degree() == 1);
        span.insert(p);
    }
    for (int i : kSpIdx) CHECK(span.contains(b1(i)));
}

TEST_CASE("[1,0] basis functions")
{
    auto b = gt_basis(HighestWeight::ints(1, 0));
    REQUIRE(b.size() == 5);
    CHECK(b[0] == b2(-2, -1));
    CHECK(b[1] == Rational(-2) * b2(-1, 1));
    CHECK(b[2] == b2(1, 2));
    CHECK(b[3] == b2(-2, 1));
    CHECK(b[4] == -b2(-1, 2));
}

TEST_CASE("GT basis spans the oracle space")
{
    for (const auto& w : weights_up_to(4)) {
        CAPTURE(w.str());
        auto b = gt_basis(w);
        RepSpace r = build_irrep(w);
        REQUIRE(b.size() == r.dim());
        RMatrix m(b.size(), RVector(b.size()));
        for (std::size_t j = 0; j < b.size(); ++j) {
            RVector c = r.expand(b[j]);
            for (std::size_t i = 0; i < b.size(); ++i) m[i][j] = c[i];
        }
        CHECK(matrix_rank(m) == b.size());
    }
}

TEST_CASE("omega selection rules and GKZ over B_GC")
{
    for (const auto& w : weights_up_to(4))
        for (const auto& d : enumerate_diagrams(w)) {
            CHECK(omega_selection_rules(bgc_omega(d)));
            GammaSeries s = bgc_series(d);
            s.prefactor = Poly(1);
            CHECK(gkz_verify(s).all_pass());
        }
}

TEST_CASE("operator route and Gamma route agree with scalar 1")
{
    for (const auto& w : {HighestWeight::ints(1, 0), HighestWeight::ints(1, 1), HighestWeight::parse("3/2,1/2")})
        for (const auto& d : enumerate_diagrams(w)) {
            CAPTURE(d.str());
            auto c = compare_routes(d);
            CHECK(c.agree);
            CHECK(c.scalar == 1);
        }
}

TEST_CASE("the printed orientation of the third B_GC slot breaks route agreement")
{
    BGCData printed = bgc_data_printed_orientation();
    std::size_t disagree = 0;
    for (const auto& d : enumerate_diagrams(HighestWeight::ints(1, 0)))
        if (!compare_routes(d, printed).agree) ++disagree;
    CHECK(disagree == 1);
}

TEST_CASE("the frozen generators are emitted with their diff")
{
    auto lines = bgc_diff_report();
    CHECK(lines.size() == 9);
    CHECK(lines[0].rfind("v0 =", 0) == 0);
}

TEST_CASE("single diagram functions equal the basis entries")
{
    auto w = HighestWeight::ints(2, 0);
    auto ds = enumerate_diagrams(w);
    auto b = gt_basis(w);
    for (std::size_t i = 0; i < ds.size(); i += 3) CHECK(gt_function(ds[i]) == b[i]);
}
