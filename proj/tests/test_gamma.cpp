#include "gtsp4/gamma.hpp"
#include "gtsp4/gtbasis.hpp"
#include "gtsp4/highest.hpp"

#include <doctest.h>

#include <random>

using namespace gtsp4;

TEST_CASE("support enumeration over B1")
{
    Lattice lat = lattice_b1();
    auto sup = enumerate_support(lat, MultiIndex{1, 1, 1, 0});
    // v = t (1,-1,-1,1) with t in {0, 1}
    REQUIRE(sup.size() == 2);
    CHECK(sup[0] == MultiIndex{0, 0, 0, 0});
    CHECK(sup[1] == MultiIndex{1, -1, -1, 1});
    CHECK(enumerate_support(lat, MultiIndex{-1, 0, 0, 0}).empty());
}

TEST_CASE("unbounded lattices are rejected")
{
    Lattice lat;
    lat.slots = {b1(-2), b1(-1)};
    lat.slot_names = {"x", "y"};
    lat.generators = {MultiIndex{1, 1}};
    CHECK_THROWS_AS(enumerate_support(lat, MultiIndex{0, 0}), UnboundedSupport);
}

TEST_CASE("Euler equation for the complement vector (1,1,0,0) over B1")
{
    GammaSeries s{lattice_b1(), MultiIndex{1, 1, 1, 0}};
    auto comp = orthogonal_complement(lattice_b1().generators, 4);
    CHECK(comp.size() == 3);
    FormalPoly f = expand_formal(s.lattice, s.shift);
    for (const auto& [e, c] : f) {
        (void)c;
        CHECK(e[0] + e[1] == 2);
    }
    GKZReport r = gkz_verify(s);
    CHECK(r.equations.size() == 4);
    CHECK(r.all_pass());
}

TEST_CASE("empty support passes vacuously")
{
    GammaSeries s{lattice_b1(), MultiIndex{-1, -1, 0, 0}};
    CHECK(expand(s).is_zero());
    CHECK(gkz_verify(s).all_pass());
}

TEST_CASE("the [1,1] rebase series over B2 passes all six equations")
{
    HWLabel l{0, HalfInt::from_int(1), HalfInt::from_int(1), HalfInt::from_int(1), HalfInt::from_int(1), HalfInt::from_int(1)};
    GammaSeries s = rebase_h_highest(l);
    s.prefactor = Poly(1);
    GKZReport r = gkz_verify(s);
    CHECK(r.equations.size() == 6);
    CHECK(r.all_pass());
}

TEST_CASE("differentiation commutes with expansion")
{
    std::mt19937_64 rng(4);
    Lattice lat = lattice_b2();
    for (int k = 0; k < 100; ++k) {
        MultiIndex shift(lat.dim());
        for (std::size_t i = 0; i < lat.dim(); ++i) shift[i] = static_cast<long>(rng() % 5) - 1;
        std::size_t i = rng() % lat.dim();
        GammaSeries s{lat, shift};
        GammaSeries d = differentiate(s, i);
        CHECK(expand_formal(lat, d.shift) == formal_derivative(expand_formal(lat, shift), i));
        // Slot 0 is the single variable b[-2,-1].
        CHECK(expand(differentiate(s, 0)) == expand(s).derivative(b2_var(-2, -1).var));
    }
}

TEST_CASE("support enumeration agrees with a naive scan")
{
    std::mt19937_64 rng(8);
    for (const Lattice& lat : {lattice_b1(), lattice_b2(), lattice_seed()}) {
        for (int k = 0; k < 25; ++k) {
            MultiIndex shift(lat.dim());
            long bound = 2;
            for (std::size_t i = 0; i < lat.dim(); ++i) {
                shift[i] = static_cast<long>(rng() % 4) - (rng() % 4 == 0 ? 1 : 0);
                bound = std::max(bound, shift[i] + 2);
            }
            CHECK(enumerate_support(lat, shift) == enumerate_support_naive(lat, shift, bound));
        }
    }
    // B_GC has six generators whose combinations need larger coefficients; keep the shifts small.
    const Lattice lat = bgc_data().lattice();
    for (int k = 0; k < 4; ++k) {
        MultiIndex shift(lat.dim());
        for (std::size_t i = 0; i < lat.dim(); ++i) shift[i] = static_cast<long>(rng() % 2);
        CHECK(enumerate_support(lat, shift) == enumerate_support_naive(lat, shift, 5));
    }
}

TEST_CASE("expansion substitutes signed slots")
{
    // Slot 3 of B2 is -b[1]; shift e_3 gives -b[1].
    GammaSeries s{lattice_b2(), MultiIndex{0, 0, 0, 1, 0, 0}};
    CHECK(expand(s) == -b1(1));
    s.prefactor = b1(2) * Rational(2);
    CHECK(expand(s) == -b1(1) * b1(2) * Rational(2));
    CHECK_THROWS(differentiate(GammaSeries{lattice_b2(), MultiIndex{0, 0, 0, 0, 0, 1}, b1(2)}, 5));
}

TEST_CASE("lattice validation")
{
    Lattice lat = lattice_b2();
    CHECK_NOTHROW(lat.validate());
    lat.generators.push_back(lat.generators[0] * 2);
    CHECK_THROWS(lat.validate());
}
