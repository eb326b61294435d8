#include "gtsp4/gamma.hpp"

#include "gtsp4/linspan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gtsp4 {

namespace {

// a . t + b >= 0 over the first n lattice coordinates.
struct Constraint {
    std::vector<Integer> a;
    Integer b;
    auto operator<=>(const Constraint& o) const
    {
        if (a != o.a) return a < o.a ? std::strong_ordering::less : std::strong_ordering::greater;
        if (b != o.b) return b < o.b ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const Constraint& o) const = default;
};

void normalize(Constraint& c)
{
    Integer g = 0;
    for (const auto& x : c.a) g = gcd(g, x);
    if (g == 0) return;
    for (auto& x : c.a) x /= g;
    // Integer points only: the constant may be rounded down.
    mpz_fdiv_q(c.b.get_mpz_t(), c.b.get_mpz_t(), g.get_mpz_t());
}

// Eliminate the last coordinate; `ok` becomes false if a constant constraint fails.
std::vector<Constraint> eliminate_last(const std::vector<Constraint>& sys, bool& ok)
{
    std::set<Constraint> out;
    std::vector<const Constraint*> pos, neg;
    for (const auto& c : sys) {
        const Integer& x = c.a.back();
        if (x > 0)
            pos.push_back(&c);
        else if (x < 0)
            neg.push_back(&c);
        else {
            Constraint d{std::vector<Integer>(c.a.begin(), c.a.end() - 1), c.b};
            normalize(d);
            out.insert(d);
        }
    }
    for (auto* p : pos)
        for (auto* n : neg) {
            Integer fp = -n->a.back(), fn = p->a.back();
            Constraint d;
            d.a.resize(p->a.size() - 1);
            for (std::size_t k = 0; k + 1 < p->a.size(); ++k) d.a[k] = fp * p->a[k] + fn * n->a[k];
            d.b = fp * p->b + fn * n->b;
            normalize(d);
            out.insert(d);
        }
    std::vector<Constraint> res;
    for (const auto& c : out) {
        bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Integer& x) { return x == 0; });
        if (zero) {
            if (c.b < 0) ok = false;
            continue;
        }
        res.push_back(c);
    }
    return res;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_lengths(const std::vector<MultiIndex>& gens, const MultiIndex& shift)
{
    for (const auto& g : gens)
        if (g.size() != shift.size()) throw std::invalid_argument("lattice generator length differs from the shift length");
}

} // namespace

void Lattice::validate() const
{
    if (slot_names.size() != slots.size()) throw std::invalid_argument("slot names and slots differ in length");
    RMatrix m;
    for (const auto& g : generators) {
        if (g.size() != dim()) throw std::invalid_argument("lattice generator has wrong length");
        RVector row;
        for (long x : g) row.push_back(Rational(x));
        m.push_back(row);
    }
    if (matrix_rank(m) != generators.size()) throw std::invalid_argument("lattice generators are linearly dependent");
}

std::vector<MultiIndex> enumerate_coordinates(const std::vector<MultiIndex>& generators, const MultiIndex& shift)
{
    check_lengths(generators, shift);
    const std::size_t k = generators.size(), n = shift.size();
    std::vector<MultiIndex> out;
    if (k == 0) {
        if (shift.nonnegative()) out.push_back(MultiIndex());
        return out;
    }
    // levels[j] involves coordinates 0..j.
    std::vector<std::vector<Constraint>> levels(k);
    {
        std::set<Constraint> base;
        for (std::size_t i = 0; i < n; ++i) {
            Constraint c;
            c.a.resize(k);
            for (std::size_t a = 0; a < k; ++a) c.a[a] = generators[a][i];
            c.b = shift[i];
            bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Integer& x) { return x == 0; });
            if (zero) {
                if (c.b < 0) return out;
                continue;
            }
            normalize(c);
            base.insert(c);
        }
        levels[k - 1].assign(base.begin(), base.end());
    }
    bool ok = true;
    for (std::size_t j = k - 1; j > 0; --j) levels[j - 1] = eliminate_last(levels[j], ok);
    if (!ok) return out;

    MultiIndex t(k);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k) {
            MultiIndex v = shift;
            for (std::size_t a = 0; a < k; ++a) v += generators[a] * t[a];
            if (v.nonnegative()) out.push_back(t);
            return;
        }
        bool has_lo = false, has_hi = false;
        Integer lo, hi;
        for (const auto& c : levels[j]) {
            Integer rest = c.b;
            for (std::size_t a = 0; a < j; ++a) rest += c.a[a] * t[a];
            const Integer& x = c.a[j];
            if (x == 0) {
                if (rest < 0) return;
            } else if (x > 0) {
                Integer l = ceil_div(-rest, x);
                if (!has_lo || l > lo) lo = l;
                has_lo = true;
            } else {
                Integer h = floor_div(rest, -x);
                if (!has_hi || h < hi) hi = h;
                has_hi = true;
            }
        }
        if (!has_lo || !has_hi) throw UnboundedSupport("Gamma-series support is unbounded");
        for (Integer v = lo; v <= hi; ++v) {
            t[j] = v.get_si();
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<MultiIndex> enumerate_support(const Lattice& lat, const MultiIndex& shift)
{
    std::vector<MultiIndex> out;
    for (const auto& t : enumerate_coordinates(lat.generators, shift)) {
        MultiIndex v(shift.size());
        for (std::size_t a = 0; a < t.size(); ++a) v += lat.generators[a] * t[a];
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> enumerate_support_naive(const Lattice& lat, const MultiIndex& shift, long bound)
{
    check_lengths(lat.generators, shift);
    const std::size_t k = lat.generators.size();
    std::vector<MultiIndex> out;
    MultiIndex t(k, -bound);
    while (true) {
        MultiIndex v(shift.size());
        for (std::size_t a = 0; a < k; ++a) v += lat.generators[a] * t[a];
        if ((shift + v).nonnegative()) out.push_back(v);
        std::size_t a = 0;
        while (a < k && t[a] == bound) t[a++] = -bound;
        if (a == k) break;
        ++t[a];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poly expand(const GammaSeries& s)
{
    const Lattice& lat = s.lattice;
    if (s.shift.size() != lat.dim()) throw std::invalid_argument("shift length differs from the lattice dimension");
    auto support = enumerate_support(lat, s.shift);
    // Cache slot powers.
    std::vector<std::vector<Poly>> powers(lat.dim(), std::vector<Poly>{Poly(1)});
    auto power = [&](std::size_t i, long e) -> const Poly& {
        auto& p = powers[i];
        while (static_cast<long>(p.size()) <= e) p.push_back(p.back() * lat.slots[i]);
        return p[e];
    };
    Poly sum;
    for (const auto& v : support) {
        MultiIndex e = s.shift + v;
        Rational c = 1;
        for (long x : e) c *= reciprocal_factorial(x);
        Poly term(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        sum += term;
    }
    return sum * s.prefactor;
}

GammaSeries differentiate(const GammaSeries& s, std::size_t i)
{
    if (i >= s.lattice.dim()) throw std::out_of_range("slot index");
    for (const auto& [m, c] : s.lattice.slots[i].terms()) {
        (void)c;
        for (const auto& [pm, pc] : s.prefactor.terms()) {
            (void)pc;
            for (int v = 0; v < kNumVars; ++v)
                if (m.e[v] && pm.e[v]) throw std::invalid_argument("prefactor involves the differentiated slot");
        }
    }
    GammaSeries d = s;
    d.shift[i] -= 1;
    return d;
}

FormalPoly expand_formal(const Lattice& lat, const MultiIndex& shift)
{
    FormalPoly out;
    for (const auto& v : enumerate_support(lat, shift)) {
        MultiIndex e = shift + v;
        Rational c = 1;
        for (long x : e) c *= reciprocal_factorial(x);
        out[e.data()] += c;
    }
    return out;
}

void formal_add(FormalPoly& into, const FormalPoly& p, const Rational& c)
{
    for (const auto& [e, x] : p) {
        auto& slot = into[e];
        slot += c * x;
        if (slot == 0) into.erase(e);
    }
}

FormalPoly formal_derivative(const FormalPoly& p, std::size_t i)
{
    FormalPoly out;
    for (const auto& [e, c] : p) {
        if (e[i] == 0) continue;
        auto f = e;
        f[i] -= 1;
        out[f] += c * e[i];
    }
    return out;
}

FormalPoly formal_times(const FormalPoly& p, std::size_t i)
{
    FormalPoly out;
    for (const auto& [e, c] : p) {
        auto f = e;
        f[i] += 1;
        out[f] = c;
    }
    return out;
}

std::vector<MultiIndex> orthogonal_complement(const std::vector<MultiIndex>& generators, std::size_t dim)
{
    RMatrix m;
    for (const auto& g : generators) {
        RVector row;
        for (long x : g) row.push_back(Rational(x));
        m.push_back(row);
    }
    std::vector<MultiIndex> out;
    for (auto& x : nullspace(m, dim)) {
        Integer l = 1;
        for (auto& q : x) l = lcm(l, Integer(q.get_den()));
        MultiIndex u(dim);
        for (std::size_t i = 0; i < dim; ++i) u[i] = Integer(x[i] * l).get_si();
        out.push_back(u);
    }
    return out;
}

bool GKZReport::all_pass() const
{
    return std::all_of(equations.begin(), equations.end(), [](const GKZEquation& e) { return e.pass; });
}

GKZReport gkz_verify(const GammaSeries& s)
{
    GKZReport rep;
    const Lattice& lat = s.lattice;
    const std::size_t n = lat.dim();
    FormalPoly f = expand_formal(lat, s.shift);
    for (const auto& u : orthogonal_complement(lat.generators, n)) {
        GKZEquation eq;
        eq.kind = "euler";
        eq.vector = u;
        long ev = 0;
        for (std::size_t i = 0; i < n; ++i) ev += u[i] * s.shift[i];
        eq.eigenvalue = ev;
        FormalPoly lhs;
        for (std::size_t i = 0; i < n; ++i)
            if (u[i]) formal_add(lhs, formal_times(formal_derivative(f, i), i), Rational(u[i]));
        formal_add(lhs, f, Rational(-ev));
        eq.pass = lhs.empty();
        rep.equations.push_back(eq);
    }
    for (const auto& v : lat.generators) {
        GKZEquation eq;
        eq.kind = "box";
        eq.vector = v;
        FormalPoly plus = f, minus = f;
        for (std::size_t i = 0; i < n; ++i) {
            for (long k = 0; k < v[i]; ++k) plus = formal_derivative(plus, i);
            for (long k = 0; k < -v[i]; ++k) minus = formal_derivative(minus, i);
        }
        formal_add(plus, minus, Rational(-1));
        eq.pass = plus.empty();
        rep.equations.push_back(eq);
    }
    return rep;
}

} // namespace gtsp4
