#pragma once

#include "gtsp4/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace gtsp4 {

enum class OpKind { E_pseudo, f_sp4, F_so5, L_left };

struct OperatorSpec {
    OpKind kind = OpKind::f_sp4;
    int i = 0;
    int j = 0;

    std::string name() const;  // e.g. "f[1,-2]"
    static OperatorSpec parse(const std::string& text);
    bool operator==(const OperatorSpec&) const = default;
};

inline OperatorSpec f_op(int i, int j) { return {OpKind::f_sp4, i, j}; }
inline OperatorSpec E_op(int i, int j) { return {OpKind::E_pseudo, i, j}; }

// Apply an operator to a polynomial through the index substitution rules,
// extended by the Leibniz rule. The result is not normal-formed.
Poly apply_operator(const OperatorSpec& op, const Poly& p);

// E_{i,j} on B-symbols; when `to_double_prime` is set, newly produced b_1 / b_2
// are written as b1'' / b2''. Primed symbols are acted on as copies of b_1 / b_2.
Poly apply_E(int i, int j, const Poly& p, bool to_double_prime = false);

// The ten basis elements of sp4: the two Cartan elements f[-2,-2], f[-1,-1],
// the four raising elements f[-2,-1], f[-2,2], f[-2,1], f[-1,1] and
// the four lowering elements f[1,-2], f[-1,-2], f[2,-2], f[1,-1].
const std::vector<OperatorSpec>& sp4_basis();
const std::vector<OperatorSpec>& sp4_raising();
const std::vector<OperatorSpec>& sp4_lowering();

// 4x4 matrices indexed by positions of (-2,-1,1,2).
using Mat4 = std::array<std::array<Rational, 4>, 4>;
Mat4 defining_matrix(const OperatorSpec& f);
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_sub(const Mat4& a, const Mat4& b);

// Coefficients of [x, y] in sp4_basis().
std::vector<Rational> bracket_in_basis(const OperatorSpec& x, const OperatorSpec& y);
// Coefficients of an arbitrary f_{i,j} in sp4_basis().
std::vector<Rational> expand_in_sp4_basis(const OperatorSpec& f);

// sp4 weight (eigenvalues of f[-2,-2], f[-1,-1]) of a B-monomial.
std::pair<int, int> sp4_weight(const Monomial& m);

} // namespace gtsp4
