#include "gtsp4/highest.hpp"

#include "gtsp4/ideal.hpp"

#include <stdexcept>

namespace gtsp4 {

namespace {

long as_long(HalfInt h) { return h.as_int(); }

Poly power(const Poly& p, long e)
{
    if (e < 0) throw std::invalid_argument("negative prefactor exponent");
    return p.pow(static_cast<int>(e));
}

void require_valid(const HWLabel& l)
{
    if (!l.valid()) throw std::invalid_argument("invalid label " + l.str());
}

Lattice b2_with(const Poly& s3, const Poly& s5)
{
    Lattice lat;
    lat.slots = {b2(-2, -1), b2(-2, 1), b1(-1), -s3, b1(-2), s5};
    lat.slot_names = {"b[-2,-1]", "b[-2,1]", "b[-1]", "-" + s3.str(), "b[-2]", s5.str()};
    lat.generators = {MultiIndex{1, -1, -1, 1, 0, 0}, MultiIndex{0, 0, 1, 1, -1, -1}};
    return lat;
}

} // namespace

Lattice lattice_b1()
{
    Lattice lat;
    lat.slots = {a1(-2), a1(-1), a2(-2, 1), a2(-1, 1)};
    lat.slot_names = {"a[-2]", "a[-1]", "a[-2,1]", "a[-1,1]"};
    lat.generators = {MultiIndex{1, -1, -1, 1}};
    return lat;
}

Lattice lattice_b2() { return b2_with(b1(1), b1(2)); }

Lattice lattice_seed()
{
    Lattice lat;
    lat.slots = {b2(-2, -1), b2(-2, 1), b1(-1) * b1(-1), b1(-1) * b1(1), -(b1(-2) * b1(2))};
    lat.slot_names = {"b[-2,-1]", "b[-2,1]", "b[-1]^2", "b[-1]*b[1]", "-b[-2]*b[2]"};
    lat.generators = {MultiIndex{1, -1, -1, 1, 0}, MultiIndex{0, 0, 0, -1, 1}};
    return lat;
}

GammaSeries so5_highest_series(const HWLabel& l)
{
    require_valid(l);
    if (!l.m2.is_integer()) throw std::invalid_argument("SO5-side functions are only built for integer weights");
    GammaSeries g;
    g.lattice = lattice_b1();
    g.shift = MultiIndex{as_long(l.s2 - l.m1), as_long(l.k2 - l.s2), as_long(l.m1 - l.k1), 0};
    g.prefactor = power(a2(-2, 0), l.sigma) * power(a1(1), as_long(l.m2 - l.k2)) *
                  power(a2(-2, -1), as_long(l.k1) - l.sigma);
    return g;
}

Poly so5_highest_function(const HWLabel& l) { return expand(so5_highest_series(l)); }

GammaSeries sp4_highest_function(const HWLabel& l)
{
    require_valid(l);
    GammaSeries g;
    g.lattice = lattice_seed();
    g.shift = MultiIndex{as_long(l.s2 - l.m1), as_long(l.k2 - l.s2), as_long(l.m1 - l.k1), 0, 0};
    g.prefactor = power(b1(-2), l.k1.twice() - l.sigma) * power(b1(-1), l.sigma) *
                  power(b2(2, -1), as_long(l.m2 - l.k2));
    return g;
}

GammaSeries sp4_highest_function_printed(const HWLabel& l)
{
    require_valid(l);
    GammaSeries g;
    g.lattice = lattice_b2();
    g.shift = MultiIndex{as_long(l.s2 - l.m1), as_long(l.k2 - l.s2), (l.m1 - l.k1).twice(), 0, 0, 0};
    long q = l.k1.twice() - 2 * l.sigma;
    g.prefactor = power(b1(-2) * b1(-1), l.sigma) * power(b2(-1, 2), as_long(l.m2 - l.k2)) * power(b1(-2), q < 0 ? 0 : q);
    return g;
}

GammaSeries rebase_h_highest(const HWLabel& l, bool use_printed_k2)
{
    require_valid(l);
    GammaSeries g;
    g.lattice = lattice_b2();
    HalfInt k = use_printed_k2 ? l.k2 : l.k1;
    g.shift = MultiIndex{as_long(l.s2 - l.m1), as_long(l.k2 - l.s2), (l.m1 - l.k1).twice() + l.sigma, 0,
                         k.twice() - l.sigma, 0};
    g.prefactor = power(b2(2, -1), as_long(l.m2 - l.k2));
    return g;
}

GammaSeries rebase_h_highest_primed(const HWLabel& l)
{
    GammaSeries g = rebase_h_highest(l);
    Lattice lat = b2_with(Poly::var(var::b1p), Poly::var(var::b2p));
    lat.slot_names[3] = "-b1'";
    lat.slot_names[5] = "b2'";
    g.lattice = lat;
    return g;
}

bool is_h_highest(const Poly& p) { return sp_normal_form(apply_operator(f_op(-2, 1), p)).is_zero(); }

std::optional<Rational> eigenvalue(const OperatorSpec& op, const Poly& p)
{
    Poly base = sp_normal_form(p);
    Poly img = sp_normal_form(apply_operator(op, p));
    if (img.is_zero()) return Rational(0);
    Rational c;
    if (!base.is_zero() && proportional(img, base, &c)) return c;
    return std::nullopt;
}

std::optional<Rational> h_eigenvalue(const Poly& p)
{
    Poly base = sp_normal_form(p);
    Poly img = sp_normal_form(apply_operator(f_op(-2, -2), p) - apply_operator(f_op(1, 1), p));
    if (img.is_zero()) return Rational(0);
    Rational c;
    if (!base.is_zero() && proportional(img, base, &c)) return c;
    return std::nullopt;
}

} // namespace gtsp4
