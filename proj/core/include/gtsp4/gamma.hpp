#pragma once

#include "gtsp4/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtsp4 {

struct UnboundedSupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sublattice of Z^N given by generators, together with the meaning of each
// coordinate: slot k stands for the polynomial slots[k] (usually a signed symbol).
struct Lattice {
    std::vector<Poly> slots;
    std::vector<std::string> slot_names;
    std::vector<MultiIndex> generators;

    std::size_t dim() const { return slots.size(); }
    std::size_t rank() const { return generators.size(); }
    // Throws std::invalid_argument on length mismatch or dependent generators.
    void validate() const;
};

// prefactor * sum over v in lattice of prod slot_k^(shift_k + v_k) / (shift_k + v_k)!
struct GammaSeries {
    Lattice lattice;
    MultiIndex shift;
    Poly prefactor = Poly(1);
};

// Lattice coordinates t with shift + sum t_a g_a >= 0, found by Fourier-Motzkin bounds.
std::vector<MultiIndex> enumerate_coordinates(const std::vector<MultiIndex>& generators, const MultiIndex& shift);
// The lattice vectors v themselves.
std::vector<MultiIndex> enumerate_support(const Lattice& lat, const MultiIndex& shift);
// Reference scan over coordinates in [-bound, bound]^rank.
std::vector<MultiIndex> enumerate_support_naive(const Lattice& lat, const MultiIndex& shift, long bound);

Poly expand(const GammaSeries& s);

// d/d(slot i): lowers the shift by e_i. Requires the prefactor to be free of the slot's variables.
GammaSeries differentiate(const GammaSeries& s, std::size_t i);

// Polynomial in the slot coordinates themselves (no substitution).
using FormalPoly = std::map<std::vector<long>, Rational>;

FormalPoly expand_formal(const Lattice& lat, const MultiIndex& shift);
FormalPoly formal_derivative(const FormalPoly& p, std::size_t i);
// Multiply by z_i.
FormalPoly formal_times(const FormalPoly& p, std::size_t i);
void formal_add(FormalPoly& into, const FormalPoly& p, const Rational& c);

// Integer basis of {u : u . g = 0 for every generator g}.
std::vector<MultiIndex> orthogonal_complement(const std::vector<MultiIndex>& generators, std::size_t dim);

struct GKZEquation {
    std::string kind;  // "euler" or "box"
    MultiIndex vector;
    Rational eigenvalue;  // euler only
    bool pass = false;
};

struct GKZReport {
    std::vector<GKZEquation> equations;
    bool all_pass() const;
};

GKZReport gkz_verify(const GammaSeries& s);

} // namespace gtsp4
