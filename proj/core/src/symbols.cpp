#include "gtsp4/symbols.hpp"

#include <stdexcept>

namespace gtsp4 {

namespace {

int sp_pos(int i)
{
    switch (i) {
    case -2: return 0;
    case -1: return 1;
    case 1: return 2;
    case 2: return 3;
    default: throw std::invalid_argument("Sp4 index out of range: " + std::to_string(i));
    }
}

int so_pos(int i)
{
    if (i < -2 || i > 2) throw std::invalid_argument("SO5 index out of range: " + std::to_string(i));
    return i + 2;
}

// Position of the canonical pair (p < q) among pairs of an n-element index list.
int pair_pos(int p, int q, int n)
{
    int pos = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (a == p && b == q) return pos;
            ++pos;
        }
    throw std::logic_error("pair_pos");
}

std::pair<int, int> pair_at(int pos, int n)
{
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (pos == 0) return {a, b};
            --pos;
        }
    throw std::logic_error("pair_at");
}

} // namespace

int sign_of(int i) { return i > 0 ? 1 : (i < 0 ? -1 : 0); }

int b1_var(int i) { return var::b_m2 + sp_pos(i); }

SignedVar b2_var(int i, int j)
{
    int p = sp_pos(i), q = sp_pos(j);
    if (p == q) return {};
    if (p < q) return {1, var::B2_first + pair_pos(p, q, 4)};
    return {-1, var::B2_first + pair_pos(q, p, 4)};
}

int a1_var(int i) { return var::A1_first + so_pos(i); }

SignedVar a2_var(int i, int j)
{
    int p = so_pos(i), q = so_pos(j);
    if (p == q) return {};
    if (p < q) return {1, var::A2_first + pair_pos(p, q, 5)};
    return {-1, var::A2_first + pair_pos(q, p, 5)};
}

Alphabet alphabet_of(int v)
{
    if (v < 0 || v >= kNumVars) throw std::out_of_range("variable index");
    if (v < var::b1p) return Alphabet::B1;
    if (v < var::B2_first) return Alphabet::B1P;
    if (v < var::A1_first) return Alphabet::B2;
    if (v < var::A2_first) return Alphabet::A1;
    return Alphabet::A2;
}

bool is_b_side(int v) { return v < var::A1_first; }

std::pair<int, int> b2_pair(int v)
{
    auto [p, q] = pair_at(v - var::B2_first, 4);
    return {kSpIdx[p], kSpIdx[q]};
}

std::pair<int, int> a2_pair(int v)
{
    auto [p, q] = pair_at(v - var::A2_first, 5);
    return {kSoIdx[p], kSoIdx[q]};
}

MinorSymbol symbol_of(int v)
{
    switch (alphabet_of(v)) {
    case Alphabet::B1: return {Alphabet::B1, kSpIdx[v - var::b_m2], 0};
    case Alphabet::B1P: {
        int k = v - var::b1p;  // b1', b1'', b2', b2''
        return {Alphabet::B1P, k / 2 + 1, k % 2 + 1};
    }
    case Alphabet::B2: {
        auto [i, j] = b2_pair(v);
        return {Alphabet::B2, i, j};
    }
    case Alphabet::A1: return {Alphabet::A1, kSoIdx[v - var::A1_first], 0};
    case Alphabet::A2: {
        auto [i, j] = a2_pair(v);
        return {Alphabet::A2, i, j};
    }
    }
    throw std::logic_error("symbol_of");
}

std::string var_name(int v)
{
    switch (alphabet_of(v)) {
    case Alphabet::B1: return "b[" + std::to_string(kSpIdx[v - var::b_m2]) + "]";
    case Alphabet::B1P: {
        static const char* names[] = {"b1'", "b1''", "b2'", "b2''"};
        return names[v - var::b1p];
    }
    case Alphabet::B2: {
        auto [i, j] = b2_pair(v);
        return "b[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    case Alphabet::A1: return "a[" + std::to_string(kSoIdx[v - var::A1_first]) + "]";
    case Alphabet::A2: {
        auto [i, j] = a2_pair(v);
        return "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    }
    throw std::logic_error("var_name");
}

std::optional<int> parse_var_name(const std::string& name)
{
    for (int v = 0; v < kNumVars; ++v)
        if (var_name(v) == name) return v;
    return std::nullopt;
}

int unprimed(int v)
{
    if (v == var::b1p || v == var::b1pp) return var::b_1;
    if (v == var::b2p || v == var::b2pp) return var::b_2;
    return v;
}

} // namespace gtsp4
