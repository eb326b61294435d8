#include "gtsp4/operators.hpp"

#include <regex>
#include <stdexcept>

namespace gtsp4 {

namespace {

int sp_pos(int i)
{
    for (int k = 0; k < 4; ++k)
        if (kSpIdx[k] == i) return k;
    throw std::invalid_argument("sp4 index out of range: " + std::to_string(i));
}

bool valid_sp(int i) { return i == -2 || i == -1 || i == 1 || i == 2; }
bool valid_so(int i) { return i >= -2 && i <= 2; }

// Image of one variable under the column substitution j -> i (B side).
Poly substitute_column_b(int v, int i, int j, bool to_double_prime)
{
    auto single = [&](int col) -> Poly {
        if (to_double_prime && col == 1) return Poly::var(var::b1pp);
        if (to_double_prime && col == 2) return Poly::var(var::b2pp);
        return b1(col);
    };
    switch (alphabet_of(v)) {
    case Alphabet::B1: return symbol_of(v).i == j ? single(i) : Poly();
    case Alphabet::B1P: return unprimed(v) == b1_var(j) ? single(i) : Poly();
    case Alphabet::B2: {
        auto [k, l] = b2_pair(v);
        Poly r;
        if (k == j) r += b2(i, l);
        if (l == j) r += b2(k, i);
        return r;
    }
    default: throw std::invalid_argument("B-side operator applied to an SO5 symbol");
    }
}

// Image of one variable under the column substitution j -> i (A side).
Poly substitute_column_a(int v, int i, int j)
{
    switch (alphabet_of(v)) {
    case Alphabet::A1: return symbol_of(v).i == j ? a1(i) : Poly();
    case Alphabet::A2: {
        auto [k, l] = a2_pair(v);
        Poly r;
        if (k == j) r += a2(i, l);
        if (l == j) r += a2(k, i);
        return r;
    }
    default: throw std::invalid_argument("SO5-side operator applied to a B symbol");
    }
}

template <class Image>
Poly derivation(const Poly& p, Image image)
{
    std::array<Poly, kNumVars> img;
    std::array<bool, kNumVars> done{};
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v < kNumVars; ++v) {
            if (!m.e[v]) continue;
            if (!done[v]) {
                img[v] = image(v);
                done[v] = true;
            }
            if (img[v].is_zero()) continue;
            Monomial rest = m;
            rest.e[v] -= 1;
            r.add_scaled(img[v], rest, c * static_cast<long>(m.e[v]));
        }
    }
    return r;
}

void require_b_side(const Poly& p)
{
    if (p.uses_alphabet(Alphabet::A1) || p.uses_alphabet(Alphabet::A2))
        throw std::invalid_argument("sp4-side operator applied to a polynomial with SO5 symbols");
}

void require_a_side(const Poly& p)
{
    for (auto a : {Alphabet::B1, Alphabet::B1P, Alphabet::B2})
        if (p.uses_alphabet(a)) throw std::invalid_argument("SO5-side operator applied to a polynomial with B symbols");
}

} // namespace

std::string OperatorSpec::name() const
{
    const char* k = "f";
    switch (kind) {
    case OpKind::E_pseudo: k = "E"; break;
    case OpKind::f_sp4: k = "f"; break;
    case OpKind::F_so5: k = "F"; break;
    case OpKind::L_left: k = "L"; break;
    }
    return std::string(k) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

OperatorSpec OperatorSpec::parse(const std::string& text)
{
    static const std::regex re(R"(\s*([EfFL])\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad operator: " + text);
    OperatorSpec op;
    char k = m[1].str()[0];
    op.kind = k == 'E' ? OpKind::E_pseudo : k == 'f' ? OpKind::f_sp4 : k == 'F' ? OpKind::F_so5 : OpKind::L_left;
    op.i = std::stoi(m[2]);
    op.j = std::stoi(m[3]);
    bool sp = op.kind == OpKind::E_pseudo || op.kind == OpKind::f_sp4;
    if (sp ? !(valid_sp(op.i) && valid_sp(op.j)) : !(valid_so(op.i) && valid_so(op.j)))
        throw std::invalid_argument("operator index out of range: " + text);
    return op;
}

Poly apply_E(int i, int j, const Poly& p, bool to_double_prime)
{
    if (!valid_sp(i) || !valid_sp(j)) throw std::invalid_argument("E index out of range");
    require_b_side(p);
    return derivation(p, [&](int v) { return substitute_column_b(v, i, j, to_double_prime); });
}

Poly apply_operator(const OperatorSpec& op, const Poly& p)
{
    switch (op.kind) {
    case OpKind::E_pseudo: return apply_E(op.i, op.j, p);
    case OpKind::f_sp4: {
        Poly r = apply_E(op.i, op.j, p);
        int s = sign_of(op.i) * sign_of(op.j);
        r.add_scaled(apply_E(-op.j, -op.i, p), Monomial{}, Rational(-s));
        return r;
    }
    case OpKind::F_so5: {
        if (!valid_so(op.i) || !valid_so(op.j)) throw std::invalid_argument("F index out of range");
        require_a_side(p);
        Poly r = derivation(p, [&](int v) { return substitute_column_a(v, op.i, op.j); });
        r -= derivation(p, [&](int v) { return substitute_column_a(v, -op.j, -op.i); });
        return r;
    }
    case OpKind::L_left: {
        // Left shifts act on row labels; only the Cartan elements keep the
        // leading-row minors inside the alphabet.
        require_a_side(p);
        if (op.i != op.j || (op.i != -2 && op.i != -1))
            throw std::invalid_argument("left shift " + op.name() + " leaves the minor alphabet");
        return derivation(p, [&](int v) {
            bool two_row = alphabet_of(v) == Alphabet::A2;
            return (op.i == -2 || two_row) ? Poly::var(v) : Poly();
        });
    }
    }
    throw std::logic_error("apply_operator");
}

const std::vector<OperatorSpec>& sp4_raising()
{
    static const std::vector<OperatorSpec> v{f_op(-2, -1), f_op(-2, 2), f_op(-2, 1), f_op(-1, 1)};
    return v;
}

const std::vector<OperatorSpec>& sp4_lowering()
{
    static const std::vector<OperatorSpec> v{f_op(1, -2), f_op(-1, -2), f_op(2, -2), f_op(1, -1)};
    return v;
}

const std::vector<OperatorSpec>& sp4_basis()
{
    static const std::vector<OperatorSpec> v = [] {
        std::vector<OperatorSpec> b{f_op(-2, -2), f_op(-1, -1)};
        for (auto& x : sp4_raising()) b.push_back(x);
        for (auto& x : sp4_lowering()) b.push_back(x);
        return b;
    }();
    return v;
}

Mat4 defining_matrix(const OperatorSpec& f)
{
    if (f.kind != OpKind::f_sp4 && f.kind != OpKind::E_pseudo)
        throw std::invalid_argument("defining_matrix needs an sp4-side operator");
    Mat4 m;
    for (auto& row : m)
        for (auto& x : row) x = 0;
    m[sp_pos(f.i)][sp_pos(f.j)] += 1;
    if (f.kind == OpKind::f_sp4) m[sp_pos(-f.j)][sp_pos(-f.i)] -= sign_of(f.i) * sign_of(f.j);
    return m;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Mat4 mat_sub(const Mat4& a, const Mat4& b)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

namespace {

std::vector<Rational> decompose(const Mat4& target)
{
    // Each basis element has a distinguishing matrix entry: Cartan elements
    // on the diagonal at (-2,-2), (-1,-1); root elements at (i,j).
    const auto& basis = sp4_basis();
    std::vector<Rational> coeffs(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& f = basis[k];
        coeffs[k] = target[sp_pos(f.i)][sp_pos(f.j)];
        if (f.i == -f.j) coeffs[k] /= 2;  // f_{i,-i} = 2 E_{i,-i}
    }
    Mat4 check;
    for (auto& row : check)
        for (auto& x : row) x = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Mat4 m = defining_matrix(basis[k]);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) check[i][j] += coeffs[k] * m[i][j];
    }
    if (check != target) throw std::logic_error("matrix is not in sp4");
    return coeffs;
}

} // namespace

std::vector<Rational> bracket_in_basis(const OperatorSpec& x, const OperatorSpec& y)
{
    Mat4 a = defining_matrix(x), b = defining_matrix(y);
    return decompose(mat_sub(mat_mul(a, b), mat_mul(b, a)));
}

std::vector<Rational> expand_in_sp4_basis(const OperatorSpec& f) { return decompose(defining_matrix(f)); }

std::pair<int, int> sp4_weight(const Monomial& m)
{
    // f[-2,-2] = E_{-2,-2} - E_{2,2}, f[-1,-1] = E_{-1,-1} - E_{1,1}: count column labels.
    int w[5] = {0, 0, 0, 0, 0};
    auto col = [&](int c, int times) { w[c + 2] += times; };
    for (int v = 0; v < kNumVars; ++v) {
        int e = m.e[v];
        if (!e) continue;
        switch (alphabet_of(v)) {
        case Alphabet::B1: col(symbol_of(v).i, e); break;
        case Alphabet::B1P: col(symbol_of(unprimed(v)).i, e); break;
        case Alphabet::B2: {
            auto [k, l] = b2_pair(v);
            col(k, e);
            col(l, e);
            break;
        }
        default: throw std::invalid_argument("sp4_weight of an SO5 monomial");
        }
    }
    return {w[0] - w[4], w[1] - w[3]};
}

} // namespace gtsp4
