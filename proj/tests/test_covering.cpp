#include "gtsp4/covering.hpp"

#include <doctest.h>

using namespace gtsp4;

TEST_CASE("random group elements are symplectic and deterministic")
{
    Mat4 a = random_symplectic(7, 10), b = random_symplectic(7, 10);
    CHECK(a == b);
    CHECK(is_symplectic(a));
    CHECK(random_symplectic(8, 10) != a);
    CHECK(random_symplectic(1, 0) == identity4());
    CHECK_THROWS(random_symplectic(1, -1));
}

TEST_CASE("covering map lands in SO5 and is a homomorphism")
{
    auto samples = random_samples(17, 40);
    for (const auto& s : samples) {
        CHECK(preserves_so5_form(s.so5_image));
        CHECK(det5(s.so5_image) == 1);
    }
    for (std::size_t k = 0; k + 1 < samples.size(); k += 2) {
        const auto& a = samples[k].sp4_matrix;
        const auto& b = samples[k + 1].sp4_matrix;
        CHECK(covering_map(mat_mul(a, b)) == mat_mul(covering_map(a), covering_map(b)));
    }
    CHECK(covering_map(identity4()) == identity5());
    Mat4 bad = identity4();
    bad[0][1] = 1;
    bad[1][0] = 1;
    CHECK_THROWS_AS(covering_map(bad), std::invalid_argument);
}

TEST_CASE("the Gram matrix is anti-diagonal (1, 1, -2, 1, 1)")
{
    const Mat5& g = so5_gram();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Rational expect = i + j == 4 ? (i == 2 ? Rational(-2) : Rational(1)) : Rational(0);
            CHECK(g[i][j] == expect);
        }
}

TEST_CASE("transfer tables hold in squared form; six printed signs disagree")
{
    auto checks = check_transfer_tables(random_samples(2, 30));
    REQUIRE(checks.size() == 15);
    int sign_mismatch = 0;
    for (const auto& c : checks) {
        CHECK(c.squared_ok);
        CHECK(c.measured_sign != 0);
        if (c.measured_sign != c.printed_sign) ++sign_mismatch;
    }
    CHECK(sign_mismatch == 6);
}

TEST_CASE("minor values")
{
    GroupSample s = GroupSample::from_matrix(identity4());
    CHECK(eval_assignment(b1(-2), s) == 1);
    CHECK(eval_assignment(b1(-1), s) == 0);
    CHECK(eval_assignment(b2(-2, -1), s) == 1);
    CHECK(eval_assignment(b2(-2, 2) + b2(-1, 1), s) == 0);
    CHECK(eval_assignment(a1(-2), s) == 1);
    CHECK(zero_index_count(a1_var(0)) == 1);
    CHECK(zero_index_count(a1_var(-2)) == 0);
}
