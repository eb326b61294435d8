#include "gtsp4/ideal.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace gtsp4 {

Poly ThreeTermRelation::poly() const
{
    Poly p;
    for (const auto& t : terms) p.add_term(Monomial::var(t.x) * Monomial::var(t.y), t.coeff);
    return p;
}

namespace {

ThreeTermRelation make_relation(std::array<std::pair<int, SignedVar>, 3> parts, std::array<int, 3> signs)
{
    ThreeTermRelation r;
    for (int k = 0; k < 3; ++k) {
        auto [x, y] = parts[k];
        r.terms[k] = {Rational(signs[k] * y.sign), x, y.var};
    }
    return r;
}

Poly s_polynomial(const Poly& f, const Poly& g)
{
    const Monomial& lf = f.leading_monomial();
    const Monomial& lg = g.leading_monomial();
    Monomial l = lf.lcm(lg);
    Poly s = f.mul_term(lf.quotient_of(l), Rational(1) / f.leading_coeff());
    s.add_scaled(g, lg.quotient_of(l), Rational(-1) / g.leading_coeff());
    return s;
}

Poly reduce(const Poly& p, const std::vector<Poly>& basis)
{
    Poly work = p, out;
    while (!work.is_zero()) {
        const Monomial m = work.leading_monomial();
        const Rational c = work.leading_coeff();
        const Poly* hit = nullptr;
        for (const auto& g : basis)
            if (g.leading_monomial().divides(m)) {
                hit = &g;
                break;
            }
        if (hit) {
            work.add_scaled(*hit, hit->leading_monomial().quotient_of(m), -c / hit->leading_coeff());
        } else {
            out.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return out;
}

std::vector<Poly> buchberger(std::vector<Poly> gens)
{
    std::vector<Poly> g;
    for (auto& p : gens) {
        Poly r = reduce(p, g);
        if (!r.is_zero()) g.push_back(r * (Rational(1) / r.leading_coeff()));
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& li = g[i].leading_monomial();
        const Monomial& lj = g[j].leading_monomial();
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if (li.lcm(lj) == li * lj) continue;
        Poly r = reduce(s_polynomial(g[i], g[j]), g);
        if (r.is_zero()) continue;
        g.push_back(r * (Rational(1) / r.leading_coeff()));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // Minimal, then reduced.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = g[i].leading_monomial();
            const Monomial& lj = g[j].leading_monomial();
            if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Poly& p = minimal[i];
        Poly head = Poly::term(p.leading_monomial(), p.leading_coeff());
        Poly tail = reduce(p - head, others);
        Poly r = head + tail;
        reduced.push_back(r * (Rational(1) / r.leading_coeff()));
    }
    return reduced;
}

} // namespace

const std::vector<ThreeTermRelation>& plucker_relations()
{
    static const std::vector<ThreeTermRelation> rels = [] {
        std::vector<ThreeTermRelation> out;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (int c = b + 1; c < 4; ++c) {
                    int i1 = kSpIdx[a], i2 = kSpIdx[b], i3 = kSpIdx[c];
                    out.push_back(make_relation({std::pair{b1_var(i1), b2_var(i2, i3)},
                                                 std::pair{b1_var(i2), b2_var(i1, i3)},
                                                 std::pair{b1_var(i3), b2_var(i1, i2)}},
                                                {1, -1, 1}));
                }
        auto bv = [](int i, int j) { return b2_var(i, j); };
        ThreeTermRelation g;
        g.terms[0] = {Rational(1), bv(-2, -1).var, bv(1, 2).var};
        g.terms[1] = {Rational(-1), bv(-2, 1).var, bv(-1, 2).var};
        g.terms[2] = {Rational(1), bv(-2, 2).var, bv(-1, 1).var};
        out.push_back(g);
        return out;
    }();
    return rels;
}

Poly symplectic_relation() { return b2(-2, 2) + b2(-1, 1); }

Ideal::Ideal(std::vector<Poly> generators) : gens_(std::move(generators)), gb_(buchberger(gens_)) {}

Poly Ideal::normal_form(const Poly& p) const { return reduce(p, gb_); }

const Ideal& plucker_ideal()
{
    static const Ideal ideal = [] {
        std::vector<Poly> gens;
        for (const auto& r : plucker_relations()) gens.push_back(r.poly());
        return Ideal(gens);
    }();
    return ideal;
}

const Ideal& symplectic_ideal()
{
    static const Ideal ideal = [] {
        std::vector<Poly> gens;
        for (const auto& r : plucker_relations()) gens.push_back(r.poly());
        gens.push_back(symplectic_relation());
        return Ideal(gens);
    }();
    return ideal;
}

Poly normal_form(const Poly& p) { return plucker_ideal().normal_form(p); }
Poly sp_normal_form(const Poly& p) { return symplectic_ideal().normal_form(p); }

} // namespace gtsp4
