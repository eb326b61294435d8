#include "gtsp4/linspan.hpp"

#include <stdexcept>

namespace gtsp4 {

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& a, std::size_t cols)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t best = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (a[i][c] != 0) {
                best = i;
                break;
            }
        if (best == a.size()) continue;
        std::swap(a[r], a[best]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = c; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace

std::size_t matrix_rank(RMatrix a)
{
    if (a.empty()) return 0;
    return rref(a, a[0].size()).size();
}

RMatrix nullspace(const RMatrix& a, std::size_t cols)
{
    RMatrix m = a;
    auto piv = rref(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    RMatrix out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RVector x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

RMatrix identity_matrix(std::size_t n)
{
    RMatrix id(n, RVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

std::optional<RMatrix> inverse(const RMatrix& a)
{
    const std::size_t n = a.size();
    RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
        m[i] = a[i];
        m[i].resize(2 * n, Rational(0));
        m[i][n + i] = 1;
    }
    auto piv = rref(m, n);
    if (piv.size() != n) return std::nullopt;
    RMatrix inv(n, RVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b)
{
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RMatrix r(n, RVector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

std::optional<RVector> solve_linear(const RMatrix& a, const RVector& b, std::size_t cols, bool* unique)
{
    RMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i].resize(cols, Rational(0));
        m[i].push_back(b[i]);
    }
    auto piv = rref(m, cols + 1);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    if (unique) *unique = piv.size() == cols;
    RVector x(cols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
    return x;
}

Poly LinearSpan::reduce(const Poly& p, RVector& combo) const
{
    Poly work = p;
    combo.assign(elements_.size(), Rational(0));
    // Rows are fully reduced: each pivot monomial occurs in exactly one row.
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        auto it = pivots_.find(m);
        if (it == pivots_.end()) continue;
        Rational x = work.coeff(m);
        if (x == 0) continue;
        const Row& row = rows_[it->second];
        work.add_scaled(row.poly, Monomial{}, -x);
        for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += x * row.combo[k];
    }
    // Terms introduced by subtraction may hit further pivots.
    bool again = true;
    while (again) {
        again = false;
        for (const auto& [m, x] : work.terms()) {
            auto it = pivots_.find(m);
            if (it == pivots_.end()) continue;
            Rational c = x;
            const Row& row = rows_[it->second];
            work.add_scaled(row.poly, Monomial{}, -c);
            for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += c * row.combo[k];
            again = true;
            break;
        }
    }
    return work;
}

bool LinearSpan::insert(const Poly& p)
{
    RVector combo;
    Poly r = reduce(p, combo);
    if (r.is_zero()) return false;
    // New row: r = p - sum combo_k e_k.
    std::size_t idx = elements_.size();
    elements_.push_back(p);
    for (auto& row : rows_) row.combo.push_back(Rational(0));
    RVector rc(idx + 1, Rational(0));
    for (std::size_t k = 0; k < idx; ++k) rc[k] = -combo[k];
    rc[idx] = 1;
    Monomial piv = r.leading_monomial();
    Rational inv = 1 / r.leading_coeff();
    r *= inv;
    for (auto& x : rc) x *= inv;
    for (auto& row : rows_) {
        Rational c = row.poly.coeff(piv);
        if (c == 0) continue;
        row.poly.add_scaled(r, Monomial{}, -c);
        for (std::size_t k = 0; k <= idx; ++k) row.combo[k] -= c * rc[k];
    }
    pivots_[piv] = rows_.size();
    rows_.push_back({std::move(r), std::move(rc)});
    return true;
}

bool LinearSpan::contains(const Poly& p) const
{
    RVector combo;
    return reduce(p, combo).is_zero();
}

std::optional<RVector> LinearSpan::coordinates(const Poly& p) const
{
    RVector combo;
    if (!reduce(p, combo).is_zero()) return std::nullopt;
    return combo;
}

} // namespace gtsp4
