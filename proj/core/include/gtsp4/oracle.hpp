#pragma once

#include "gtsp4/labels.hpp"
#include "gtsp4/linspan.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gtsp4 {

struct NotInSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SpWeight = std::pair<long, long>;  // eigenvalues of f[-2,-2], f[-1,-1]

// The irreducible module generated by the highest vector, as polynomials in
// normal form modulo the symplectic ideal, organized by weight spaces.
class RepSpace {
public:
    HighestWeight weight;
    std::vector<Poly> basis;
    std::map<SpWeight, std::vector<std::size_t>> weight_table;

    std::size_t dim() const { return basis.size(); }
    // Coordinates of p (any polynomial; reduced internally). Throws NotInSpan.
    RVector expand(const Poly& p) const;

private:
    friend RepSpace build_irrep(const HighestWeight& w);
    std::map<SpWeight, LinearSpan> spans_;
};

// b[-2,-1]^(m2-m1) b[-2]^(2m1)
Poly highest_vector(const HighestWeight& w);

RepSpace build_irrep(const HighestWeight& w);

// Kernel of f[-2,1] inside the (f[-2,-2] - f[1,1])-eigenspace of eigenvalue 2s.
std::vector<Poly> h_highest_subspace(const RepSpace& r, HalfInt s);

RVector expand_in_basis(const Poly& p, const RepSpace& r);

// Splits a polynomial by sp4 weight of its monomials.
std::map<SpWeight, Poly> split_by_weight(const Poly& p);

} // namespace gtsp4
