#include "gtsp4/covering.hpp"
#include "gtsp4/highest.hpp"
#include "gtsp4/ideal.hpp"
#include "gtsp4/oracle.hpp"

#include <doctest.h>

using namespace gtsp4;

namespace {

const std::vector<HighestWeight>& test_weights()
{
    static const std::vector<HighestWeight> ws = weights_up_to(5);
    return ws;
}

} // namespace

TEST_CASE("seed functions are h-highest with h-eigenvalue 2 s2")
{
    for (const auto& w : test_weights())
        for (const auto& l : enumerate_labels(w)) {
            CAPTURE(l.str());
            Poly g = sp_normal_form(expand(sp4_highest_function(l)));
            REQUIRE_FALSE(g.is_zero());
            CHECK(is_h_highest(g));
            auto ev = h_eigenvalue(g);
            REQUIRE(ev);
            CHECK(*ev == 2 * l.s2.value());
        }
}

TEST_CASE("seed weights follow the lemma weight rule")
{
    // o5 weight = ((x+y)/2, (x-y)/2) = (s2, -second component)
    for (const auto& w : test_weights())
        for (const auto& l : enumerate_labels(w)) {
            CAPTURE(l.str());
            Poly g = sp_normal_form(expand(sp4_highest_function(l)));
            auto x = eigenvalue(f_op(-2, -2), g), y = eigenvalue(f_op(-1, -1), g);
            REQUIRE(x);
            REQUIRE(y);
            HWWeightData wd = weight_data(l);
            CHECK((*x + *y) / 2 == wd.h_weight.value());
            CHECK((*x - *y) / 2 == -wd.second_component.value());
        }
}

TEST_CASE("seeds of one (weight, s2) are independent and count the h-highest subspace")
{
    for (const auto& w : test_weights()) {
        RepSpace r = build_irrep(w);
        for (HalfInt s = w.m2; s >= HalfInt::from_int(0); s -= HalfInt::from_int(1)) {
            auto labels = enumerate_labels(w, s);
            CHECK(h_highest_subspace(r, s).size() == labels.size());
            LinearSpan span;
            for (const auto& l : labels) CHECK(span.insert(sp_normal_form(expand(sp4_highest_function(l)))));
        }
    }
}

TEST_CASE("the printed seed formula is not h-highest in general")
{
    std::size_t bad = 0;
    for (const auto& l : enumerate_labels(HighestWeight::ints(2, 1))) {
        Poly g = sp_normal_form(expand(sp4_highest_function_printed(l)));
        if (g.is_zero() || !is_h_highest(g)) ++bad;
    }
    CHECK(bad > 0);
}

TEST_CASE("rebase series at [1,0]")
{
    auto labels = enumerate_labels(HighestWeight::ints(1, 0));
    for (const auto& l : labels) {
        Poly g = sp_normal_form(expand(rebase_h_highest(l)));
        CHECK(is_h_highest(g));
    }
    // the top label gives b[-2,-1]
    CHECK(sp_normal_form(expand(rebase_h_highest(labels[0]))) == b2(-2, -1));
}

TEST_CASE("rebase series stop being h-highest at [2,1]")
{
    std::size_t bad = 0;
    for (const auto& l : enumerate_labels(HighestWeight::ints(2, 1)))
        if (!is_h_highest(sp_normal_form(expand(rebase_h_highest(l))))) ++bad;
    CHECK(bad > 0);
}

TEST_CASE("SO5-side functions match the Sp4 seed through the covering map")
{
    // Both sides are evaluated on group samples; each SO5 function must be a
    // fixed multiple of the Sp4 seed of the same label.
    auto samples = random_samples(12, 6);
    for (const auto& l : enumerate_labels(HighestWeight::ints(1, 0))) {
        Poly a = so5_highest_function(l);
        Poly b = expand(sp4_highest_function(l));
        std::optional<Rational> ratio;
        bool constant = true;
        for (const auto& s : samples) {
            Rational va = eval_assignment(a, s), vb = eval_assignment(b, s);
            if (vb == 0) {
                constant = constant && va == 0;
                continue;
            }
            Rational q = va / vb;
            if (ratio) constant = constant && q == *ratio;
            ratio = q;
        }
        CAPTURE(l.str());
        CHECK(constant);
    }
}
