#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace gtsp4 {

enum class Alphabet : std::uint8_t { A1, A2, B1, B1P, B2 };

// Variables of the polynomial ring, in the order used by the monomial order:
// B1, B1P, B2 first (the Sp4 side), then A1, A2 (the SO5 side).
inline constexpr int kNumVars = 29;

namespace var {
inline constexpr int b_m2 = 0, b_m1 = 1, b_1 = 2, b_2 = 3;
inline constexpr int b1p = 4, b1pp = 5, b2p = 6, b2pp = 7;
inline constexpr int B2_first = 8;   // 6 canonical pairs
inline constexpr int A1_first = 14;  // a_{-2} .. a_2
inline constexpr int A2_first = 19;  // 10 canonical pairs
} // namespace var

// Sp4-side column labels, in canonical order.
inline constexpr std::array<int, 4> kSpIdx{-2, -1, 1, 2};
// SO5-side column labels.
inline constexpr std::array<int, 5> kSoIdx{-2, -1, 0, 1, 2};

struct MinorSymbol {
    Alphabet alphabet;
    int i = 0;
    int j = 0;  // second index for two-index alphabets; for B1P: 1 or 2 with i = 1 (prime) or 2 (double prime)

    bool operator==(const MinorSymbol&) const = default;
};

// A symbol reference with a sign (B2/A2 with swapped indices) resolved to a variable.
struct SignedVar {
    int sign = 0;  // 0 when the symbol vanishes identically (repeated index)
    int var = -1;
};

int sign_of(int i);

int b1_var(int i);              // b_i, i in {-2,-1,1,2}
SignedVar b2_var(int i, int j); // b_{i,j}, any order
int a1_var(int i);              // a_i, i in {-2..2}
SignedVar a2_var(int i, int j); // a_{i,j}, any order

// Which symbol a variable stands for (canonical order, positive sign).
MinorSymbol symbol_of(int var);
Alphabet alphabet_of(int var);
bool is_b_side(int var);
std::pair<int, int> b2_pair(int var);
std::pair<int, int> a2_pair(int var);

std::string var_name(int var);
std::optional<int> parse_var_name(const std::string& name);

// The unprimed B1 variable a primed symbol specializes to.
int unprimed(int var);

} // namespace gtsp4
