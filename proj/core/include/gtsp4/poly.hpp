#pragma once

#include "gtsp4/exact.hpp"
#include "gtsp4/symbols.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>

namespace gtsp4 {

// Exponent vector over the fixed variable list.
struct Monomial {
    std::array<std::uint8_t, kNumVars> e{};

    static Monomial var(int v, int power = 1);
    int degree() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    // Requires divides(); returns other / this.
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& o) const;
    bool is_one() const;
    bool uses_alphabet(Alphabet a) const;
    bool operator==(const Monomial&) const = default;
};

// Degree, then lexicographic with variable 0 largest.
bool deglex_less(const Monomial& a, const Monomial& b);

struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return deglex_less(a, b); }
};

// Sparse polynomial with exact rational coefficients; no zero terms are stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, DegLexLess>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(int c) : Poly(Rational(c)) {}
    static Poly var(int v);
    static Poly term(const Monomial& m, const Rational& c);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly mul_term(const Monomial& m, const Rational& c) const;
    // this += c * m * p
    void add_scaled(const Poly& p, const Monomial& m, const Rational& c);
    Poly pow(int n) const;

    Poly derivative(int v) const;
    // Substitute var v by polynomial q everywhere.
    Poly substitute(int v, const Poly& q) const;
    // Apply a ring map given by images of every variable (missing entries keep the variable).
    Poly map_vars(const std::function<Poly(int)>& image) const;
    bool uses_alphabet(Alphabet a) const;
    int max_degree() const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    std::string str() const;

private:
    Terms t_;
};

Poly operator*(const Rational& c, const Poly& p);

Poly b1(int i);
Poly b2(int i, int j);
Poly a1(int i);
Poly a2(int i, int j);

// Replace b1', b1'' by b1 and b2', b2'' by b2.
Poly specialize_primes(const Poly& p);

// If q = c * p for a nonzero rational c, return c.
bool proportional(const Poly& q, const Poly& p, Rational* ratio = nullptr);

} // namespace gtsp4
