#pragma once

#include "gtsp4/gamma.hpp"
#include "gtsp4/highest.hpp"
#include "gtsp4/labels.hpp"

#include <string>
#include <vector>

namespace gtsp4 {

struct BGCData {
    std::vector<std::string> symbol_order;
    std::vector<Poly> slots;
    std::vector<std::string> generator_names;  // v0, w0, v1, v2, v3, v4
    std::vector<MultiIndex> generators;
    Lattice lattice() const;
};

// Frozen generators (see bgc_diff_report for the differences from the printed ones).
const BGCData& bgc_data();
// The printed third slot b[-1,1] in place of b[1,-1], generators unchanged.
BGCData bgc_data_printed_orientation();

// (0,0,s2-s1,0,0,s1-m1,k2-s2,2(m1-k1)+sigma,0,2k1-sigma,0)
MultiIndex bgc_omega(const GTDiagram& d);
bool omega_selection_rules(const MultiIndex& omega);

// b[2,-1]^(m2-k2) * Gamma_omega over B_GC, primed symbols kept.
GammaSeries bgc_series(const GTDiagram& d, const BGCData& data = bgc_data());

// sum_{p1+p2=p} E''[2,-1]^p1 E''[1,-2]^p2 / (p1! p2!) applied to a polynomial.
Poly primed_lowering(const Poly& p, long depth);

// The two routes, both before specialization: operator route on the primed
// rebase seed, and the Gamma_omega route.
Poly primed_operator_route(const GTDiagram& d);
Poly primed_gamma_route(const GTDiagram& d, const BGCData& data = bgc_data());

// The GT function: f[1,-2]^p / p! applied to the h-highest seed, reduced
// modulo the symplectic ideal.
Poly gt_function(const GTDiagram& d);
// All functions of one label, p = 0 .. 2 s2, in order of increasing p.
std::vector<Poly> gt_functions_for_label(const HWLabel& l);

// Functions for all diagrams in canonical order; throws std::logic_error on dependence.
std::vector<Poly> gt_basis(const HighestWeight& w);

struct RouteComparison {
    GTDiagram diagram;
    bool agree = false;  // equal up to one nonzero rational scalar
    Rational scalar;     // gamma route = scalar * operator route
    bool operator_zero = false;
    bool gamma_zero = false;
};

RouteComparison compare_routes(const GTDiagram& d, const BGCData& data = bgc_data());

// Lines describing frozen generators and their differences from the printed ones.
std::vector<std::string> bgc_diff_report();

} // namespace gtsp4
