#pragma once

#include "gtsp4/gamma.hpp"
#include "gtsp4/labels.hpp"
#include "gtsp4/operators.hpp"

#include <optional>

namespace gtsp4 {

// Slots (a[-2], a[-1], a[-2,1], a[-1,1]) with generator (1,-1,-1,1).
Lattice lattice_b1();
// Slots (b[-2,-1], b[-2,1], b[-1], -b[1], b[-2], b[2]) with generators
// v1 = (1,-1,-1,1,0,0), v0 = (0,0,1,1,-1,-1).
Lattice lattice_b2();
// Slots (b[-2,-1], b[-2,1], b[-1]^2, b[-1]b[1], -b[-2]b[2]) with generators
// (1,-1,-1,1,0), (0,0,0,-1,1).
Lattice lattice_seed();

// a[-2,0]^sigma a[1]^(m2-k2) a[-2,-1]^(k1-sigma) * Gamma over B1. Integer weights only.
Poly so5_highest_function(const HWLabel& l);
GammaSeries so5_highest_series(const HWLabel& l);

// The h-highest function of a label on the Sp4 side:
// b[-2]^(2k1-sigma) b[-1]^sigma b[2,-1]^(m2-k2) * Gamma over lattice_seed()
// with shift (s2-m1, k2-s2, m1-k1, 0, 0).
GammaSeries sp4_highest_function(const HWLabel& l);

// The formula as printed: (b[-2]b[-1])^sigma b[-1,2]^(m2-k2) b[-2]^(2(k1-sigma))
// times Gamma over B2 with shift (s2-m1, k2-s2, 2(m1-k1), 0, 0, 0).
GammaSeries sp4_highest_function_printed(const HWLabel& l);

// b[2,-1]^(m2-k2) * Gamma_omega over B2 with
// omega = (s2-m1, k2-s2, 2(m1-k1)+sigma, 0, 2k1-sigma, 0).
// With use_printed_k2 the fifth entry is 2k2-sigma as printed.
GammaSeries rebase_h_highest(const HWLabel& l, bool use_printed_k2 = false);

// Same series with b[1] -> b1', b[2] -> b2' (input of the primed operator route).
GammaSeries rebase_h_highest_primed(const HWLabel& l);

// Annihilated by f[-2,1] modulo the symplectic ideal.
bool is_h_highest(const Poly& p);
// Eigenvalue of the operator on p modulo the symplectic ideal (nullopt if p is not an eigenvector).
std::optional<Rational> eigenvalue(const OperatorSpec& op, const Poly& p);
// Eigenvalue of the h-Cartan element f[-2,-2] - f[1,1].
std::optional<Rational> h_eigenvalue(const Poly& p);

} // namespace gtsp4
