#pragma once

#include "gtsp4/operators.hpp"
#include "gtsp4/poly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtsp4 {

using Mat5 = std::array<std::array<Rational, 5>, 5>;

Mat4 identity4();
Mat5 identity5();
Mat5 mat_mul(const Mat5& a, const Mat5& b);

// The symplectic form e_{-2}^e_2 + e_{-1}^e_1 as a matrix J with J(x,y) = x^T J y.
const Mat4& symplectic_form();
bool is_symplectic(const Mat4& m);

// Gram matrix of the invariant scalar product on span{v_-2, ..., v_2} with
// v_0 = e_{-2}^e_2 + e_1^e_{-1} (not divided by sqrt 2): anti-diagonal (1, 1, -2, 1, 1).
const Mat5& so5_gram();
bool preserves_so5_form(const Mat5& n);
Rational det5(const Mat5& n);

// Action of M on span{v_-2 = e_{-2}^e_{-1}, v_-1 = e_{-2}^e_1, v_0, v_1 = e_2^e_{-1}, v_2 = e_1^e_2}.
// Throws std::invalid_argument for non-symplectic input.
Mat5 covering_map(const Mat4& m);

// Product of `steps` factors exp(t f) over root elements f with small random rational t.
Mat4 random_symplectic(std::uint64_t seed, int steps);

struct GroupSample {
    Mat4 sp4_matrix;
    Mat5 so5_image;
    // Values of every variable. SO5 minors involving the index 0 are stored
    // multiplied by sqrt 2, which keeps all values rational.
    std::array<std::optional<Rational>, kNumVars> minor_values;

    static GroupSample from_matrix(const Mat4& m);
};

Rational eval_assignment(const Poly& p, const GroupSample& s);

// One row of the minor-transfer tables: printed claim a = sign * sqrt2^e * q.
struct TransferEntry {
    int a_var;
    Poly q;
    int sqrt2_power;
    int printed_sign;
    std::string table;  // "t1" or "t2"
};

const std::vector<TransferEntry>& transfer_tables();

struct TransferCheck {
    std::string symbol;
    std::string table;
    bool squared_ok = true;       // a^2 matches (sqrt2^e q)^2 on every sample
    int measured_sign = 0;        // +1 / -1 when the linear identity holds with that sign, 0 otherwise
    int printed_sign = 0;
};

std::vector<TransferCheck> check_transfer_tables(const std::vector<GroupSample>& samples);

// Number of index-0 entries of an SO5 minor (0 or 1).
int zero_index_count(int a_var);

std::vector<GroupSample> random_samples(std::uint64_t seed, int count, int steps = 12);

} // namespace gtsp4
