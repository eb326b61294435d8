#include "gtsp4/covering.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace gtsp4 {

namespace {

int p4(int i)
{
    for (int k = 0; k < 4; ++k)
        if (kSpIdx[k] == i) return k;
    throw std::invalid_argument("index");
}

int p5(int i) { return i + 2; }

using Bivector = std::map<std::pair<int, int>, Rational>;  // canonical pairs of Sp4 labels

void add_wedge(Bivector& out, int a, int b, const Rational& c)
{
    if (a == b || c == 0) return;
    if (p4(a) > p4(b)) {
        std::swap(a, b);
        out[{a, b}] -= c;
    } else {
        out[{a, b}] += c;
    }
}

Bivector basis_vector(int k)
{
    Bivector v;
    switch (k) {
    case -2: add_wedge(v, -2, -1, 1); break;
    case -1: add_wedge(v, -2, 1, 1); break;
    case 0:
        add_wedge(v, -2, 2, 1);
        add_wedge(v, 1, -1, 1);
        break;
    case 1: add_wedge(v, 2, -1, 1); break;
    case 2: add_wedge(v, 1, 2, 1); break;
    }
    return v;
}

Bivector act(const Mat4& m, const Bivector& v)
{
    Bivector out;
    for (const auto& [pq, c] : v) {
        auto [p, q] = pq;
        for (int k : kSpIdx)
            for (int l : kSpIdx) {
                Rational x = m[p4(k)][p4(p)] * m[p4(l)][p4(q)];
                if (x != 0) add_wedge(out, k, l, c * x);
            }
    }
    return out;
}

Rational coeff(const Bivector& v, int a, int b)
{
    auto it = v.find({a, b});
    return it == v.end() ? Rational(0) : it->second;
}

} // namespace

Mat4 identity4()
{
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = i == j ? 1 : 0;
    return m;
}

Mat5 identity5()
{
    Mat5 m;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[i][j] = i == j ? 1 : 0;
    return m;
}

Mat5 mat_mul(const Mat5& a, const Mat5& b)
{
    Mat5 r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Rational s = 0;
            for (int k = 0; k < 5; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

const Mat4& symplectic_form()
{
    static const Mat4 j = [] {
        Mat4 m;
        for (auto& r : m)
            for (auto& x : r) x = 0;
        m[p4(-2)][p4(2)] = 1;
        m[p4(2)][p4(-2)] = -1;
        m[p4(-1)][p4(1)] = 1;
        m[p4(1)][p4(-1)] = -1;
        return m;
    }();
    return j;
}

bool is_symplectic(const Mat4& m)
{
    Mat4 mt;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mt[i][j] = m[j][i];
    return mat_mul(mat_mul(mt, symplectic_form()), m) == symplectic_form();
}

const Mat5& so5_gram()
{
    static const Mat5 g = [] {
        Mat5 m;
        for (auto& r : m)
            for (auto& x : r) x = 0;
        m[0][4] = m[4][0] = 1;
        m[1][3] = m[3][1] = 1;
        m[2][2] = -2;
        return m;
    }();
    return g;
}

bool preserves_so5_form(const Mat5& n)
{
    Mat5 nt;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) nt[i][j] = n[j][i];
    return mat_mul(mat_mul(nt, so5_gram()), n) == so5_gram();
}

Rational det5(const Mat5& n)
{
    Mat5 a = n;
    Rational det = 1;
    for (int c = 0; c < 5; ++c) {
        int piv = -1;
        for (int r = c; r < 5; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < 5; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k < 5; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Mat5 covering_map(const Mat4& m)
{
    if (!is_symplectic(m)) throw std::invalid_argument("covering_map: matrix is not symplectic");
    Mat5 n;
    for (int k = -2; k <= 2; ++k) {
        Bivector w = act(m, basis_vector(k));
        if (coeff(w, -2, 2) + coeff(w, -1, 1) != 0) throw std::logic_error("image left the invariant subspace");
        int c = p5(k);
        n[p5(-2)][c] = coeff(w, -2, -1);
        n[p5(-1)][c] = coeff(w, -2, 1);
        n[p5(0)][c] = (coeff(w, -2, 2) - coeff(w, -1, 1)) / 2;
        n[p5(1)][c] = -coeff(w, -1, 2);
        n[p5(2)][c] = coeff(w, 1, 2);
    }
    return n;
}

Mat4 random_symplectic(std::uint64_t seed, int steps)
{
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<OperatorSpec> roots = sp4_raising();
    for (const auto& f : sp4_lowering()) roots.push_back(f);
    Mat4 m = identity4();
    for (int s = 0; s < steps; ++s) {
        const OperatorSpec& f = roots[rng() % roots.size()];
        long num = static_cast<long>(rng() % 6);
        num = num < 3 ? num - 3 : num - 2;  // -3..-1, 1..3
        long den = static_cast<long>(rng() % 3) + 1;
        Rational t(num, den);
        t.canonicalize();
        Mat4 x = defining_matrix(f);
        for (auto& r : x)
            for (auto& v : r) v *= t;
        // exp of a nilpotent matrix: finite sum.
        Mat4 e = identity4(), power = identity4();
        for (int k = 1; k <= 4; ++k) {
            power = mat_mul(power, x);
            bool zero = true;
            for (auto& r : power)
                for (auto& v : r)
                    if (v != 0) zero = false;
            if (zero) break;
            Rational inv = reciprocal_factorial(k);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) e[i][j] += power[i][j] * inv;
        }
        m = mat_mul(m, e);
    }
    return m;
}

GroupSample GroupSample::from_matrix(const Mat4& m)
{
    GroupSample s;
    s.sp4_matrix = m;
    s.so5_image = covering_map(m);
    auto& val = s.minor_values;
    const int r2 = p4(-2), r1 = p4(-1);
    for (int i : kSpIdx) val[b1_var(i)] = m[r2][p4(i)];
    val[var::b1p] = val[var::b1pp] = m[r2][p4(1)];
    val[var::b2p] = val[var::b2pp] = m[r2][p4(2)];
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            int i = kSpIdx[a], j = kSpIdx[b];
            val[b2_var(i, j).var] = m[r2][p4(i)] * m[r1][p4(j)] - m[r2][p4(j)] * m[r1][p4(i)];
        }
    const Mat5& n = s.so5_image;
    for (int i = -2; i <= 2; ++i) val[a1_var(i)] = n[p5(-2)][p5(i)];
    for (int i = -2; i <= 2; ++i)
        for (int j = i + 1; j <= 2; ++j)
            val[a2_var(i, j).var] = n[p5(-2)][p5(i)] * n[p5(-1)][p5(j)] - n[p5(-2)][p5(j)] * n[p5(-1)][p5(i)];
    return s;
}

Rational eval_assignment(const Poly& p, const GroupSample& s)
{
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int v = 0; v < kNumVars; ++v) {
            if (!m.e[v]) continue;
            if (!s.minor_values[v]) throw std::invalid_argument("no value for symbol " + var_name(v));
            Rational x = *s.minor_values[v];
            for (int k = 0; k < m.e[v]; ++k) t *= x;
        }
        total += t;
    }
    return total;
}

int zero_index_count(int a_var)
{
    MinorSymbol s = symbol_of(a_var);
    if (s.alphabet == Alphabet::A1) return s.i == 0 ? 1 : 0;
    if (s.alphabet == Alphabet::A2) return (s.i == 0 || s.j == 0) ? 1 : 0;
    return 0;
}

const std::vector<TransferEntry>& transfer_tables()
{
    static const std::vector<TransferEntry> t = [] {
        std::vector<TransferEntry> e;
        auto A2 = [](int i, int j) { return a2_var(i, j).var; };
        e.push_back({a1_var(-2), b2(-2, -1), 0, 1, "t1"});
        e.push_back({a1_var(-1), b2(-2, 1), 0, 1, "t1"});
        e.push_back({a1_var(0), b2(1, -1) + b2(-2, 2), -1, 1, "t1"});
        e.push_back({a1_var(1), b2(2, -1), 0, 1, "t1"});
        e.push_back({a1_var(2), b2(1, 2), 0, 1, "t1"});
        e.push_back({A2(-2, -1), b1(-2) * b1(-2), 0, 1, "t2"});
        e.push_back({A2(-2, 0), b1(-2) * b1(-1), 1, 1, "t2"});
        e.push_back({A2(-1, 0), b1(-2) * b1(1), 1, 1, "t2"});
        e.push_back({A2(-2, 2), b1(-2) * b1(2) + b1(-1) * b1(1), 0, 1, "t2"});
        e.push_back({A2(-1, 1), b1(-2) * b1(2) - b1(-1) * b1(1), 0, 1, "t2"});
        e.push_back({A2(0, 1), b1(-1) * b1(2), 1, 1, "t2"});
        e.push_back({A2(0, 2), b1(1) * b1(2), 1, -1, "t2"});
        e.push_back({A2(-2, 1), b1(-1) * b1(-1), 0, 1, "t2"});
        // The printed entry reads a_{2,-1} = -(b_1)^2.
        e.push_back({a2_var(2, -1).var, b1(1) * b1(1) * Rational(a2_var(2, -1).sign), 0, -1, "t2"});
        e.push_back({A2(1, 2), b1(2) * b1(2), 0, 1, "t2"});
        return e;
    }();
    return t;
}

std::vector<TransferCheck> check_transfer_tables(const std::vector<GroupSample>& samples)
{
    std::vector<TransferCheck> out;
    for (const auto& e : transfer_tables()) {
        TransferCheck c;
        c.symbol = var_name(e.a_var);
        c.table = e.table;
        c.printed_sign = e.printed_sign;
        int d0 = zero_index_count(e.a_var);
        int lin = d0 + e.sqrt2_power;  // scaled a = sign * sqrt2^lin * q, lin even
        Rational lin_factor = 1;
        for (int k = 0; k < lin / 2; ++k) lin_factor *= 2;
        if (lin < 0) lin_factor = Rational(1) / Rational(1 << (-lin / 2));
        // scaled a^2 = 2^(d0 + e) q^2
        Rational sq_factor = lin_factor * lin_factor;
        bool plus = true, minus = true;
        for (const auto& s : samples) {
            Rational a = *s.minor_values[e.a_var];
            Rational q = eval_assignment(e.q, s);
            if (a * a != sq_factor * q * q) c.squared_ok = false;
            if (a != lin_factor * q) plus = false;
            if (a != -lin_factor * q) minus = false;
        }
        c.measured_sign = plus ? 1 : (minus ? -1 : 0);
        out.push_back(c);
    }
    return out;
}

std::vector<GroupSample> random_samples(std::uint64_t seed, int count, int steps)
{
    std::vector<GroupSample> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k)
        out.push_back(GroupSample::from_matrix(random_symplectic(seed * 1000003ULL + static_cast<std::uint64_t>(k), steps)));
    return out;
}

} // namespace gtsp4
