#pragma once

#include "gtsp4/gamma.hpp"
#include "gtsp4/ideal.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtsp4 {

struct LemmaHypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LemmaInconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator v_alpha = e_X1 + e_X2 - e_X3 - e_X4 paired with the three-term relation
// b_X1 b_X2 + b_X3 b_X4 + b_X5 b_X6 = 0; r = e_X5 + e_X6 - e_X1 - e_X2.
struct RShift {
    std::size_t alpha = 0;
    MultiIndex r_vector;
    std::array<std::size_t, 6> slots{};
};

// The series with its slot list extended so that every X5, X6 and the multiplier
// have a coordinate, plus the relation pairing of each generator (if any).
struct LemmaSetup {
    GammaSeries series;  // bare (prefactor 1), extended slots
    std::size_t x_slot = 0;
    std::vector<std::optional<RShift>> pairing;  // one entry per generator
    std::vector<RShift> rshifts() const;
};

// Throws LemmaHypothesisError when a generator is not of the form e+e-e-e.
LemmaSetup lemma_setup(const GammaSeries& s, const Poly& x);

struct PLExpansion {
    MultiIndex base_shift;  // shift + e_X, in extended coordinates
    std::vector<RShift> rshifts;
    std::map<MultiIndex, Rational> terms;  // s -> C_s (nonzero only)
    bool unique = true;                    // the linear system had a unique solution
    std::size_t unknowns = 0;
};

// Solves normal_form(x * F_shift - sum_s C_s F_{shift + e_X + s r}) = 0 for C_s.
// Throws LemmaInconsistent when no solution with s >= 0 exists.
PLExpansion multiply_minor(const GammaSeries& s, const Poly& x, const Ideal& ideal = plucker_ideal());
PLExpansion multiply_minor(const LemmaSetup& setup, const Ideal& ideal = plucker_ideal());

// x * F_shift - sum_s C_s F_{...}, not reduced (for evaluation on group samples).
Poly lemma_residual(const LemmaSetup& setup, const PLExpansion& e);

// Closed-form coefficient evaluated literally; nullopt stands for NotApplicable.
std::optional<Rational> coeff_cs_crosscheck(const MultiIndex& shift, const std::vector<MultiIndex>& generators,
                                            std::size_t x_slot, const std::vector<MultiIndex>& r_vectors,
                                            const MultiIndex& s);

} // namespace gtsp4
