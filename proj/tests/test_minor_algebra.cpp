#include "gtsp4/covering.hpp"
#include "gtsp4/ideal.hpp"
#include "gtsp4/operators.hpp"
#include "gtsp4/verify.hpp"

#include <doctest.h>

#include <random>

using namespace gtsp4;

namespace {

Rational small(std::mt19937_64& rng)
{
    Rational q(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
    q.canonicalize();
    return q;
}

Poly random_poly(std::mt19937_64& rng)
{
    Poly p;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (int k = 0; k < 2; ++k) {
            int v = rng() % 2 ? static_cast<int>(rng() % 4) : var::B2_first + static_cast<int>(rng() % 6);
            m.e[v] += 1;
        }
        p.add_term(m, small(rng) + 7);
    }
    return p;
}

Poly commutator(const OperatorSpec& x, const OperatorSpec& y, const Poly& p)
{
    return apply_operator(x, apply_operator(y, p)) - apply_operator(y, apply_operator(x, p));
}

} // namespace

TEST_CASE("symbol names round-trip")
{
    for (int v = 0; v < kNumVars; ++v) {
        auto back = parse_var_name(var_name(v));
        REQUIRE(back);
        CHECK(*back == v);
    }
    CHECK(var_name(b1_var(-2)) == "b[-2]");
    CHECK(var_name(var::b1pp) == "b1''");
    CHECK(b2(-1, -2) == -b2(-2, -1));
    CHECK(b2(1, 1).is_zero());
}

TEST_CASE("polynomial arithmetic")
{
    Poly x = b1(-2), y = b1(-1);
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.derivative(b1_var(-2)) == x * Rational(2));
    CHECK((x + y).pow(3).size() == 4);
    CHECK(proportional(p * Rational(-3, 2), p));
    CHECK_FALSE(proportional(p + x, p));
    CHECK(Poly(0).is_zero());
}

TEST_CASE("prime specialization")
{
    Poly p1 = Poly::var(var::b1p), p2 = Poly::var(var::b1pp);
    CHECK(specialize_primes(p1 * p2) == b1(1) * b1(1));
    CHECK(specialize_primes(Poly::var(var::b2p) - Poly::var(var::b2pp)).is_zero());
    Poly plain = b1(-2) * b2(-2, -1);
    CHECK(specialize_primes(plain) == plain);
}

TEST_CASE("the Grassmann relation is the expansion of 2x2 minors of a 2x4 matrix")
{
    Poly g = b2(-2, -1) * b2(1, 2) - b2(-2, 1) * b2(-1, 2) + b2(-2, 2) * b2(-1, 1);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        Mat4 rows = identity4();
        for (auto& r : rows)
            for (auto& x : r) x = small(rng);
        CHECK(eval_on_rows(g, rows) == 0);
        for (const auto& r : plucker_relations()) CHECK(eval_on_rows(r.poly(), rows) == 0);
    }
    CHECK(normal_form(g).is_zero());
}

TEST_CASE("Groebner bases")
{
    CHECK(plucker_ideal().groebner_basis().size() == 6);
    CHECK(symplectic_ideal().groebner_basis().size() == 7);
    CHECK(symplectic_ideal().contains(symplectic_relation()));
    CHECK_FALSE(plucker_ideal().contains(symplectic_relation()));
}

TEST_CASE("normal form is idempotent, linear and multiplicative on random products")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        Poly g = random_poly(rng), h = random_poly(rng);
        Poly ng = normal_form(g), nh = normal_form(h);
        CHECK(normal_form(ng) == ng);
        CHECK(normal_form(g + h * Rational(3)) == ng + nh * Rational(3));
        CHECK(normal_form(g * h) == normal_form(ng * nh));
    }
}

TEST_CASE("the ideal vanishes on the group")
{
    auto samples = random_samples(3, 20);
    std::mt19937_64 rng(9);
    for (const auto& s : samples) {
        for (const auto& g : symplectic_ideal().groebner_basis()) CHECK(eval_assignment(g, s) == 0);
        Poly p = random_poly(rng) * random_poly(rng);
        CHECK(eval_assignment(normal_form(p) - p, s) == 0);
        CHECK(eval_assignment(sp_normal_form(p) - p, s) == 0);
    }
}

TEST_CASE("operators act by column substitution")
{
    // f[1,-2] b[-2,-1] = b[1,-1] + b[-2,2]
    CHECK(apply_operator(f_op(1, -2), b2(-2, -1)) == b2(1, -1) + b2(-2, 2));
    CHECK(apply_operator(E_op(1, -2), b1(-2)) == b1(1));
    CHECK(apply_operator(E_op(1, -2), b1(-1)).is_zero());
    // f[1,-2] = E[1,-2] + E[2,-1]
    Poly p = b1(-2) * b1(-1) * b2(-2, -1);
    CHECK(apply_operator(f_op(1, -2), p) == apply_operator(E_op(1, -2), p) + apply_operator(E_op(2, -1), p));
    // f[i,-i] = 2 E[i,-i]
    CHECK(apply_operator(f_op(1, -1), p) == apply_operator(E_op(1, -1), p) * Rational(2));
    CHECK(apply_operator(f_op(-2, -2), b1(-2)) == b1(-2));
    CHECK(apply_operator(f_op(-2, -2), b1(2)) == -b1(2));
    CHECK(OperatorSpec::parse("f[1,-2]") == f_op(1, -2));
    CHECK(f_op(-2, 1).name() == "f[-2,1]");
}

TEST_CASE("the ten generators close under brackets, on matrices and on polynomials")
{
    const auto& basis = sp4_basis();
    REQUIRE(basis.size() == 10);
    std::mt19937_64 rng(21);
    Poly p = random_poly(rng) * b1(-1) + b2(-2, -1) * b1(2);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            auto c = bracket_in_basis(basis[a], basis[b]);
            Mat4 lhs = mat_sub(mat_mul(defining_matrix(basis[a]), defining_matrix(basis[b])),
                               mat_mul(defining_matrix(basis[b]), defining_matrix(basis[a])));
            Mat4 rhs{};
            Poly prhs;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (c[k] == 0) continue;
                Mat4 m = defining_matrix(basis[k]);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) rhs[i][j] += c[k] * m[i][j];
                prhs += apply_operator(basis[k], p) * c[k];
            }
            CHECK(lhs == rhs);
            CHECK(sp_normal_form(commutator(basis[a], basis[b], p) - prhs).is_zero());
        }
}

TEST_CASE("weights of monomials")
{
    CHECK(sp4_weight(Monomial::var(b1_var(-2))) == std::pair{1, 0});
    CHECK(sp4_weight(Monomial::var(b1_var(1))) == std::pair{0, -1});
    auto m = b2(-2, -1).leading_monomial();
    CHECK(sp4_weight(m) == std::pair{1, 1});
}
