#include "gtsp4/oracle.hpp"

#include "gtsp4/ideal.hpp"
#include "gtsp4/operators.hpp"

namespace gtsp4 {

std::map<SpWeight, Poly> split_by_weight(const Poly& p)
{
    std::map<SpWeight, Poly> out;
    for (const auto& [m, c] : p.terms()) out[sp4_weight(m)].add_term(m, c);
    return out;
}

Poly highest_vector(const HighestWeight& w)
{
    return b2(-2, -1).pow(static_cast<int>((w.m2 - w.m1).as_int())) * b1(-2).pow(static_cast<int>(w.m1.twice()));
}

RepSpace build_irrep(const HighestWeight& w)
{
    if (!w.valid()) throw std::invalid_argument("invalid weight");
    RepSpace r;
    r.weight = w;
    std::vector<std::size_t> frontier;
    auto add = [&](const Poly& p) {
        if (p.is_zero()) return;
        SpWeight wt = sp4_weight(p.leading_monomial());
        auto& span = r.spans_[wt];
        if (!span.insert(p)) return;
        r.weight_table[wt].push_back(r.basis.size());
        frontier.push_back(r.basis.size());
        r.basis.push_back(p);
    };
    add(sp_normal_form(highest_vector(w)));
    const long cap = 4 * (w.m2 + w.m1).twice() / 2 + 8;
    long level = 0;
    while (!frontier.empty()) {
        if (++level > cap + 1) throw std::runtime_error("lowering closure did not terminate for " + w.str());
        std::vector<std::size_t> current;
        current.swap(frontier);
        for (std::size_t idx : current)
            for (const auto& op : sp4_lowering()) add(sp_normal_form(apply_operator(op, r.basis[idx])));
    }
    return r;
}

RVector RepSpace::expand(const Poly& p) const
{
    RVector out(basis.size(), Rational(0));
    for (const auto& [wt, part] : split_by_weight(sp_normal_form(p))) {
        auto it = spans_.find(wt);
        if (it == spans_.end()) throw NotInSpan("weight not present in the representation");
        auto c = it->second.coordinates(part);
        if (!c) throw NotInSpan("polynomial is not in the representation space");
        const auto& idx = weight_table.at(wt);
        for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*c)[k];
    }
    return out;
}

RVector expand_in_basis(const Poly& p, const RepSpace& r) { return r.expand(p); }

std::vector<Poly> h_highest_subspace(const RepSpace& r, HalfInt s)
{
    std::vector<Poly> out;
    const OperatorSpec e = f_op(-2, 1);
    for (const auto& [wt, idx] : r.weight_table) {
        if (HalfInt::from_int(wt.first + wt.second) != s + s) continue;
        // Matrix of e on this weight space (columns = source basis vectors).
        std::vector<RVector> images;
        for (std::size_t i : idx) images.push_back(r.expand(apply_operator(e, r.basis[i])));
        RMatrix m(r.dim(), RVector(idx.size(), Rational(0)));
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t k = 0; k < r.dim(); ++k) m[k][j] = images[j][k];
        for (const auto& x : nullspace(m, idx.size())) {
            Poly p;
            for (std::size_t j = 0; j < idx.size(); ++j) p.add_scaled(r.basis[idx[j]], Monomial{}, x[j]);
            out.push_back(p);
        }
    }
    return out;
}

} // namespace gtsp4
