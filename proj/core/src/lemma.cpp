#include "gtsp4/lemma.hpp"

#include "gtsp4/linspan.hpp"

#include <functional>
#include <set>

namespace gtsp4 {

namespace {

// slot == sign * q for sign in {+1, -1}; returns the sign or 0.
int signed_match(const Poly& slot, const Poly& q)
{
    Poly a = specialize_primes(slot);
    if (a == q) return 1;
    if (a == -q) return -1;
    return 0;
}

std::string poly_label(const Poly& p)
{
    if (p.size() == 1) {
        const auto& [m, c] = *p.terms().begin();
        std::string body;
        for (int v = 0; v < kNumVars; ++v)
            for (int k = 0; k < m.e[v]; ++k) body += (body.empty() ? "" : "*") + var_name(v);
        if (c == 1) return body;
        if (c == -1) return "-" + body;
    }
    return p.str();
}

std::size_t find_or_append(LemmaSetup& st, const Poly& q, int* sign)
{
    auto& lat = st.series.lattice;
    for (std::size_t i = 0; i < lat.dim(); ++i) {
        int s = signed_match(lat.slots[i], q);
        if (s != 0 && (sign || s == 1)) {
            if (sign) *sign = s;
            return i;
        }
    }
    lat.slots.push_back(q);
    lat.slot_names.push_back(poly_label(q));
    for (auto& g : lat.generators) g = MultiIndex([&] {
        auto d = g.data();
        d.push_back(0);
        return d;
    }());
    auto d = st.series.shift.data();
    d.push_back(0);
    st.series.shift = MultiIndex(d);
    if (sign) *sign = 1;
    return lat.dim() - 1;
}

// Splits a single-term polynomial into (coefficient, monomial).
bool single_term(const Poly& p, Rational& c, Monomial& m)
{
    if (p.size() != 1) return false;
    m = p.terms().begin()->first;
    c = p.terms().begin()->second;
    return true;
}

} // namespace

std::vector<RShift> LemmaSetup::rshifts() const
{
    std::vector<RShift> out;
    for (const auto& p : pairing)
        if (p) out.push_back(*p);
    return out;
}

LemmaSetup lemma_setup(const GammaSeries& s, const Poly& x)
{
    LemmaSetup st;
    st.series = s;
    st.series.prefactor = Poly(1);
    const std::size_t k = s.lattice.rank();

    struct Quad {
        std::size_t x1, x2, x3, x4;
    };
    std::vector<Quad> quads;
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::size_t> plus, minus;
        const auto& g = s.lattice.generators[a];
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] > 2 || g[i] < -2) throw LemmaHypothesisError("generator entry out of range");
            for (long c = 0; c < g[i]; ++c) plus.push_back(i);
            for (long c = 0; c < -g[i]; ++c) minus.push_back(i);
        }
        if (plus.size() != 2 || minus.size() != 2)
            throw LemmaHypothesisError("lattice generator is not of the form e+e-e-e");
        quads.push_back({plus[0], plus[1], minus[0], minus[1]});
    }

    st.pairing.assign(k, std::nullopt);
    for (std::size_t a = 0; a < k; ++a) {
        const auto& lat = st.series.lattice;
        const Quad q = quads[a];
        Poly p12 = specialize_primes(lat.slots[q.x1] * lat.slots[q.x2]);
        Poly p34 = specialize_primes(lat.slots[q.x3] * lat.slots[q.x4]);
        Rational c12, c34;
        Monomial m12, m34;
        if (!single_term(p12, c12, m12) || !single_term(p34, c34, m34)) continue;
        for (const auto& rel : plucker_relations()) {
            int ia = -1, ib = -1;
            for (int t = 0; t < 3; ++t) {
                Monomial mt = Monomial::var(rel.terms[t].x) * Monomial::var(rel.terms[t].y);
                if (mt == m12) ia = t;
                if (mt == m34) ib = t;
            }
            if (ia < 0 || ib < 0 || ia == ib) continue;
            Rational lambda = c12 / rel.terms[ia].coeff;
            if (c34 != lambda * rel.terms[ib].coeff) continue;
            int ic = 3 - ia - ib;
            const auto& tc = rel.terms[ic];
            // b_X5 b_X6 = lambda * c * x * y. Prefer an existing slot for either factor.
            Poly xa = Poly::var(tc.x), xb = Poly::var(tc.y);
            int sgn = 0;
            bool swap = false;
            {
                bool has_a = false, has_b = false;
                for (const auto& sl : lat.slots) {
                    if (signed_match(sl, xa)) has_a = true;
                    if (signed_match(sl, xb)) has_b = true;
                }
                if (!has_a && has_b) swap = true;
            }
            if (swap) std::swap(xa, xb);
            std::size_t x5 = find_or_append(st, xa, &sgn);
            Poly target = xb * (lambda * tc.coeff / Rational(sgn));
            std::size_t x6 = find_or_append(st, target, nullptr);
            RShift r;
            r.alpha = a;
            r.slots = {q.x1, q.x2, q.x3, q.x4, x5, x6};
            r.r_vector = MultiIndex(st.series.lattice.dim());
            st.pairing[a] = r;
            break;
        }
    }
    int xs = 0;
    st.x_slot = find_or_append(st, x, &xs);
    if (xs == -1) {
        // Keep the multiplier equal to x itself.
        auto& lat = st.series.lattice;
        lat.slots.push_back(x);
        lat.slot_names.push_back(poly_label(x));
        for (auto& g : lat.generators) {
            auto d = g.data();
            d.push_back(0);
            g = MultiIndex(d);
        }
        auto d = st.series.shift.data();
        d.push_back(0);
        st.series.shift = MultiIndex(d);
        st.x_slot = lat.dim() - 1;
    }
    // r vectors in the final coordinates.
    const std::size_t n = st.series.lattice.dim();
    for (auto& p : st.pairing) {
        if (!p) continue;
        MultiIndex r(n);
        r[p->slots[4]] += 1;
        r[p->slots[5]] += 1;
        r[p->slots[0]] -= 1;
        r[p->slots[1]] -= 1;
        p->r_vector = r;
    }
    return st;
}

PLExpansion multiply_minor(const GammaSeries& s, const Poly& x, const Ideal& ideal)
{
    return multiply_minor(lemma_setup(s, x), ideal);
}

PLExpansion multiply_minor(const LemmaSetup& st, const Ideal& ideal)
{
    PLExpansion out;
    out.rshifts = st.rshifts();
    const auto& lat = st.series.lattice;
    const std::size_t n = lat.dim();
    out.base_shift = st.series.shift + MultiIndex::unit(n, st.x_slot);
    const std::size_t k = out.rshifts.size();

    long bound = 0;
    for (long v : out.base_shift)
        if (v > 0) bound += v;

    Poly lhs = ideal.normal_form(lat.slots[st.x_slot] * expand(st.series));

    std::vector<MultiIndex> unknowns;
    std::vector<Poly> columns;
    MultiIndex s(k);
    std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
        if (j == k) {
            MultiIndex sh = out.base_shift;
            for (std::size_t a = 0; a < k; ++a) sh += out.rshifts[a].r_vector * s[a];
            GammaSeries g{lat, sh, Poly(1)};
            Poly col = ideal.normal_form(expand(g));
            if (!col.is_zero()) {
                unknowns.push_back(s);
                columns.push_back(col);
            }
            return;
        }
        for (long v = 0; v <= left; ++v) {
            s[j] = v;
            rec(j + 1, left - v);
        }
        s[j] = 0;
    };
    rec(0, bound);
    out.unknowns = unknowns.size();

    std::map<Monomial, std::size_t, DegLexLess> rows;
    auto row_of = [&](const Monomial& m) {
        auto [it, ins] = rows.try_emplace(m, rows.size());
        return it->second;
    };
    for (const auto& [m, c] : lhs.terms()) row_of(m);
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms()) row_of(m);
    RMatrix a(rows.size(), RVector(unknowns.size(), Rational(0)));
    RVector b(rows.size(), Rational(0));
    for (const auto& [m, c] : lhs.terms()) b[rows[m]] = c;
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms()) a[rows[m]][j] = c;
    bool unique = true;
    auto sol = solve_linear(a, b, unknowns.size(), &unique);
    if (!sol) throw LemmaInconsistent("no coefficients C_s with s >= 0 reproduce the product modulo the ideal");
    out.unique = unique;
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if ((*sol)[j] != 0) out.terms[unknowns[j]] = (*sol)[j];
    return out;
}

Poly lemma_residual(const LemmaSetup& st, const PLExpansion& e)
{
    const auto& lat = st.series.lattice;
    Poly r = lat.slots[st.x_slot] * expand(st.series);
    for (const auto& [s, c] : e.terms) {
        MultiIndex sh = e.base_shift;
        for (std::size_t a = 0; a < e.rshifts.size(); ++a) sh += e.rshifts[a].r_vector * s[a];
        r.add_scaled(expand(GammaSeries{lat, sh, Poly(1)}), Monomial{}, -c);
    }
    return r;
}

namespace {

// F^s_gamma(1) = sum_t prod_a (t_a+1)...(t_a+s_a)/s_a! / (gamma + t v)!
std::optional<Rational> aux_sum(const MultiIndex& gamma, const std::vector<MultiIndex>& gens, const MultiIndex& s)
{
    std::vector<MultiIndex> ts;
    try {
        ts = enumerate_coordinates(gens, gamma);
    } catch (const UnboundedSupport&) {
        return std::nullopt;
    }
    Rational total = 0;
    for (const auto& t : ts) {
        Rational c = 1;
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (long i = 1; i <= s[a]; ++i) c *= Rational(t[a] + i);
            c *= reciprocal_factorial(s[a]);
        }
        MultiIndex e = gamma;
        for (std::size_t a = 0; a < gens.size(); ++a) e += gens[a] * t[a];
        for (long x : e) c *= reciprocal_factorial(x);
        total += c;
    }
    return total;
}

std::optional<Rational> cs_with_v(const MultiIndex& shift, const std::vector<MultiIndex>& gens, std::size_t x_slot,
                                  const std::vector<MultiIndex>& rs, const MultiIndex& s, const MultiIndex& v)
{
    const std::size_t n = shift.size(), k = gens.size();
    MultiIndex g = shift + v;
    MultiIndex ex = MultiIndex::unit(n, x_slot);
    MultiIndex sr(n);
    for (std::size_t a = 0; a < rs.size(); ++a) sr += rs[a] * s[a];
    MultiIndex zero(k);
    auto num = aux_sum(g, gens, s);
    auto den = aux_sum(g + ex + sr, gens, s);
    if (!num || !den || *den == 0) return std::nullopt;
    Rational val = *num / *den;
    if (k != 1) return s.sum() == 0 ? std::optional<Rational>(val) : std::nullopt;
    for (long p = 0; p < s[0]; ++p) {
        auto a = aux_sum(g, gens, MultiIndex{p});
        auto b = aux_sum(g + ex + sr, gens, MultiIndex{s[0] - p});
        auto d1 = aux_sum(g + ex + sr, gens, zero);
        auto d2 = aux_sum(g + rs[0] * p + ex, gens, zero);
        if (!a || !b || !d1 || !d2 || *d1 == 0 || *d2 == 0) return std::nullopt;
        val -= *a * *b / (*d1 * *d2);
    }
    return val;
}

} // namespace

std::optional<Rational> coeff_cs_crosscheck(const MultiIndex& shift, const std::vector<MultiIndex>& generators,
                                            std::size_t x_slot, const std::vector<MultiIndex>& r_vectors,
                                            const MultiIndex& s)
{
    if (r_vectors.size() != generators.size() || s.size() != generators.size()) return std::nullopt;
    if (generators.size() > 1 && s.sum() != 0) return std::nullopt;
    // The formula does not say which lattice vector "v" is; accept only readings that agree.
    std::vector<MultiIndex> readings{MultiIndex(shift.size())};
    for (const auto& g : generators) readings.push_back(g);
    std::optional<Rational> common;
    for (const auto& v : readings) {
        auto c = cs_with_v(shift, generators, x_slot, r_vectors, s, v);
        if (!c) return std::nullopt;
        if (common && *common != *c) return std::nullopt;
        common = c;
    }
    return common;
}

} // namespace gtsp4
