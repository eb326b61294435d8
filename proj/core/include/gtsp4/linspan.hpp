#pragma once

#include "gtsp4/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gtsp4 {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;  // row-major

std::size_t matrix_rank(RMatrix a);
// Basis of {x : a x = 0}; `cols` is needed when a has no rows.
RMatrix nullspace(const RMatrix& a, std::size_t cols);
std::optional<RMatrix> inverse(const RMatrix& a);
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
RMatrix identity_matrix(std::size_t n);
// Some solution of a x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<RVector> solve_linear(const RMatrix& a, const RVector& b, std::size_t cols, bool* unique = nullptr);

// Span of a growing list of polynomials, kept in reduced row echelon form over
// monomials, with every row remembered as a combination of the inserted elements.
class LinearSpan {
public:
    // Inserts p if it is independent; returns whether it was.
    bool insert(const Poly& p);
    std::size_t size() const { return elements_.size(); }
    const std::vector<Poly>& elements() const { return elements_; }
    bool contains(const Poly& p) const;
    // Coordinates with respect to elements(), or nullopt if p is not in the span.
    std::optional<RVector> coordinates(const Poly& p) const;

private:
    struct Row {
        Poly poly;
        RVector combo;  // in terms of elements_
    };
    // Reduce p against all rows, accumulating the combination used.
    Poly reduce(const Poly& p, RVector& combo) const;

    std::vector<Poly> elements_;
    std::vector<Row> rows_;
    std::map<Monomial, std::size_t, DegLexLess> pivots_;
};

} // namespace gtsp4
