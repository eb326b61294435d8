#pragma once

#include "gtsp4/poly.hpp"

#include <array>
#include <vector>

namespace gtsp4 {

// c1*x1*y1 + c2*x2*y2 + c3*x3*y3 = 0 among B-variables.
struct ThreeTermRelation {
    struct Term {
        Rational coeff;
        int x;
        int y;
    };
    std::array<Term, 3> terms;
    Poly poly() const;
};

// The four flag relations B_{i1}B_{i2,i3} - B_{i2}B_{i1,i3} + B_{i3}B_{i1,i2}
// followed by the Grassmann relation.
const std::vector<ThreeTermRelation>& plucker_relations();

// The linear relation b_{-2,2} + b_{-1,1} satisfied by minors of symplectic matrices.
Poly symplectic_relation();

// An ideal with a reduced Groebner basis for the degree-lexicographic order.
class Ideal {
public:
    explicit Ideal(std::vector<Poly> generators);

    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<Poly>& groebner_basis() const { return gb_; }
    Poly normal_form(const Poly& p) const;
    bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

private:
    std::vector<Poly> gens_;
    std::vector<Poly> gb_;
};

// Relations satisfied by the minor symbols of a generic 2x4 matrix.
const Ideal& plucker_ideal();
// Plucker relations plus the symplectic linear relation.
const Ideal& symplectic_ideal();

Poly normal_form(const Poly& p);     // modulo plucker_ideal()
Poly sp_normal_form(const Poly& p);  // modulo symplectic_ideal()

} // namespace gtsp4
