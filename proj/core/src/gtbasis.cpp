#include "gtsp4/gtbasis.hpp"

#include "gtsp4/ideal.hpp"
#include "gtsp4/linspan.hpp"
#include "gtsp4/operators.hpp"

#include <stdexcept>

namespace gtsp4 {

namespace {

// Slot positions in the B_GC symbol order.
enum Slot { b1pp, b2pp, b1m1, bm22, b12, bm2m1, bm21, bm1, b1p, bm2, b2p, kSlots };

MultiIndex vec(std::initializer_list<std::pair<int, long>> entries)
{
    MultiIndex v(kSlots);
    for (auto [i, x] : entries) v[i] += x;
    return v;
}

BGCData make_bgc(bool printed_orientation)
{
    BGCData d;
    d.symbol_order = {"b1''", "b2''", printed_orientation ? "b[-1,1]" : "b[1,-1]", "b[-2,2]", "b[1,2]", "b[-2,-1]",
                      "b[-2,1]", "b[-1]", "-b1'", "b[-2]", "b2'"};
    d.slots = {Poly::var(var::b1pp), Poly::var(var::b2pp), printed_orientation ? b2(-1, 1) : b2(1, -1), b2(-2, 2),
               b2(1, 2), b2(-2, -1), b2(-2, 1), b1(-1), -Poly::var(var::b1p), b1(-2), Poly::var(var::b2p)};
    d.generator_names = {"v0", "w0", "v1", "v2", "v3", "v4"};
    d.generators = {
        vec({{bm1, 1}, {b1p, 1}, {bm2, -1}, {b2p, -1}}),
        vec({{b1m1, 1}, {bm22, -1}}),
        vec({{bm2m1, 1}, {bm21, -1}, {bm1, -1}, {b1p, 1}}),
        vec({{bm2m1, 1}, {b12, 1}, {b1m1, -1}, {bm22, -1}}),
        vec({{b2pp, 1}, {b1m1, 1}, {bm1, -1}, {b12, -1}}),
        vec({{b1pp, 1}, {bm2m1, 1}, {bm2, -1}, {b1m1, -1}}),
    };
    return d;
}

} // namespace

Lattice BGCData::lattice() const
{
    Lattice lat;
    lat.slots = slots;
    lat.slot_names = symbol_order;
    lat.generators = generators;
    return lat;
}

const BGCData& bgc_data()
{
    static const BGCData d = make_bgc(false);
    return d;
}

BGCData bgc_data_printed_orientation() { return make_bgc(true); }

MultiIndex bgc_omega(const GTDiagram& d)
{
    MultiIndex w(kSlots);
    w[b1m1] = d.depth();
    w[bm2m1] = (d.s1 - d.m1).as_int();
    w[bm21] = (d.k2 - d.s2).as_int();
    w[bm1] = (d.m1 - d.k1).twice() + d.sigma;
    w[bm2] = d.k1.twice() - d.sigma;
    return w;
}

bool omega_selection_rules(const MultiIndex& omega)
{
    if (omega.size() != kSlots) return false;
    for (int i : {b1pp, b2pp, bm22, b12, b1p, b2p})
        if (omega[i] != 0) return false;
    return true;
}

GammaSeries bgc_series(const GTDiagram& d, const BGCData& data)
{
    if (!validate_diagram(d)) throw std::invalid_argument("invalid diagram " + d.str());
    GammaSeries g;
    g.lattice = data.lattice();
    g.shift = bgc_omega(d);
    g.prefactor = b2(2, -1).pow(static_cast<int>((d.m2 - d.k2).as_int()));
    return g;
}

Poly primed_lowering(const Poly& p, long depth)
{
    // E''[1,-2] and E''[2,-1] commute; apply E''[1,-2]^p2 first, then E''[2,-1]^p1.
    Poly total;
    std::vector<Poly> e12{p};
    for (long k = 1; k <= depth; ++k) e12.push_back(apply_E(1, -2, e12.back(), true));
    for (long p2 = 0; p2 <= depth; ++p2) {
        Poly g = e12[p2];
        long p1 = depth - p2;
        for (long k = 0; k < p1 && !g.is_zero(); ++k) g = apply_E(2, -1, g, true);
        total.add_scaled(g, Monomial{}, reciprocal_factorial(p1) * reciprocal_factorial(p2));
    }
    return total;
}

Poly primed_operator_route(const GTDiagram& d)
{
    if (!validate_diagram(d)) throw std::invalid_argument("invalid diagram " + d.str());
    return primed_lowering(expand(rebase_h_highest_primed(d.label())), d.depth());
}

Poly primed_gamma_route(const GTDiagram& d, const BGCData& data) { return expand(bgc_series(d, data)); }

std::vector<Poly> gt_functions_for_label(const HWLabel& l)
{
    std::vector<Poly> out;
    Poly g = sp_normal_form(expand(sp4_highest_function(l)));
    const long top = l.s2.twice();
    out.push_back(g);
    for (long p = 1; p <= top; ++p) {
        g = sp_normal_form(apply_operator(f_op(1, -2), g)) * Rational(1, p);
        out.push_back(g);
    }
    return out;
}

Poly gt_function(const GTDiagram& d)
{
    if (!validate_diagram(d)) throw std::invalid_argument("invalid diagram " + d.str());
    Poly g = sp_normal_form(expand(sp4_highest_function(d.label())));
    for (long p = 1; p <= d.depth(); ++p) g = sp_normal_form(apply_operator(f_op(1, -2), g)) * Rational(1, p);
    return g;
}

std::vector<Poly> gt_basis(const HighestWeight& w)
{
    std::vector<Poly> out;
    LinearSpan span;
    for (const auto& l : enumerate_labels(w)) {
        auto fs = gt_functions_for_label(l);
        // Canonical order lists s1 descending, i.e. p ascending.
        for (const auto& f : fs) {
            if (!span.insert(f)) throw std::logic_error("GT functions are linearly dependent at weight " + w.str());
            out.push_back(f);
        }
    }
    return out;
}

RouteComparison compare_routes(const GTDiagram& d, const BGCData& data)
{
    RouteComparison c;
    c.diagram = d;
    Poly a = primed_operator_route(d);
    Poly b = primed_gamma_route(d, data);
    c.operator_zero = a.is_zero();
    c.gamma_zero = b.is_zero();
    if (a.is_zero() || b.is_zero()) {
        c.agree = false;
        return c;
    }
    Rational r;
    c.agree = proportional(b, a, &r);
    if (c.agree) c.scalar = r;
    return c;
}

std::vector<std::string> bgc_diff_report()
{
    std::vector<std::string> out;
    const auto& d = bgc_data();
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        std::string s = d.generator_names[i] + " =";
        const auto& g = d.generators[i];
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g[k] == 0) continue;
            s += (g[k] > 0 ? " +e[" : " -e[") + d.symbol_order[k] + "]";
        }
        out.push_back(s);
    }
    out.push_back("diff: third symbol printed as b[-1,1]; frozen as b[1,-1] = -b[-1,1] (the orientation produced by f[1,-2] b[-2,-1])");
    out.push_back("diff: v3 printed once with e[2,1]; frozen with e[1,2] (b[2,1] is not in the symbol order)");
    out.push_back("diff: the last generator is printed as both v4 and v5; they are one vector, frozen as v4");
    return out;
}

} // namespace gtsp4
