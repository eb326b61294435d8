#include "gtsp4/action.hpp"

#include "gtsp4/gtbasis.hpp"
#include "gtsp4/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gtsp4 {

namespace {

RMatrix zero_matrix(std::size_t n) { return RMatrix(n, RVector(n, Rational(0))); }

RMatrix add_scaled(RMatrix a, const RMatrix& b, const Rational& c)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += c * b[i][j];
    return a;
}

// (k2, kappa = 2k1 - sigma, s2, s1) in doubled units for k2, s2, s1.
struct DiagramKey {
    long k2, kappa, s2, s1;
    auto operator<=>(const DiagramKey&) const = default;
};

DiagramKey key_of(const GTDiagram& d) { return {d.k2.twice(), d.k1.twice() - d.sigma, d.s2.twice(), d.s1.twice()}; }

struct Shift {
    long k2 = 0, kappa = 0, s2 = 0, s1 = 0;  // k2, s2, s1 in whole units
};

DiagramKey apply_shift(DiagramKey k, const Shift& s, long times = 1)
{
    k.k2 += 2 * s.k2 * times;
    k.kappa += s.kappa * times;
    k.s2 += 2 * s.s2 * times;
    k.s1 += 2 * s.s1 * times;
    return k;
}

// Diagram transformations of the r-shifts and of the summands of f[-1,1], f[-2,2].
const std::vector<Shift>& r_shifts()
{
    static const std::vector<Shift> r{
        {0, 1, 0, 1},    // r1: s1+1, (sigma,k1) step up
        {-1, 0, -2, 0},  // r2: k2-1, s2-2
        {-1, 1, -1, 0},  // r3: k2-1, s2-1, step up
        {0, -1, -1, 0},  // r4: s2-1, step down
    };
    return r;
}

std::vector<Shift> summands(const OperatorSpec& g)
{
    if (g == f_op(-1, 1)) return {{0, 0, 1, 1}, {0, -1, 1, 0}, {0, 0, 1, 1}, {1, 0, 1, -1}};
    if (g == f_op(-2, 2)) return {{0, 2, 1, 1}, {0, 1, 0, -1}, {1, 0, 1, 1}, {0, 0, 2, 2}};
    return {};
}

std::string name_of_pair(const OperatorSpec& x, const OperatorSpec& y) { return "[" + x.name() + "," + y.name() + "]"; }

} // namespace

GTModule GTModule::build(const HighestWeight& w)
{
    GTModule m;
    m.weight = w;
    m.diagrams = enumerate_diagrams(w);
    m.functions = gt_basis(w);
    m.oracle = build_irrep(w);
    const std::size_t n = m.functions.size();
    if (m.oracle.dim() != n) throw std::logic_error("GT basis size differs from the oracle dimension at " + w.str());
    m.to_oracle = zero_matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        RVector c = m.oracle.expand(m.functions[j]);
        for (std::size_t i = 0; i < n; ++i) m.to_oracle[i][j] = c[i];
    }
    auto inv = inverse(m.to_oracle);
    if (!inv) throw std::logic_error("GT basis does not span the oracle space at " + w.str());
    m.from_oracle = *inv;
    return m;
}

RVector GTModule::coordinates(const Poly& p) const
{
    RVector c = oracle.expand(p);
    RVector out(c.size(), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) out[i] += from_oracle[i][k] * c[k];
    return out;
}

std::size_t GTModule::index_of(const GTDiagram& d) const
{
    auto it = std::find(diagrams.begin(), diagrams.end(), d);
    if (it == diagrams.end()) throw std::out_of_range("diagram not in module");
    return static_cast<std::size_t>(it - diagrams.begin());
}

std::set<std::pair<std::size_t, std::size_t>> predicted_support(const GTModule& m, const OperatorSpec& g)
{
    std::set<std::pair<std::size_t, std::size_t>> out;
    auto sums = summands(g);
    if (sums.empty()) return out;
    std::map<DiagramKey, std::size_t> index;
    for (std::size_t i = 0; i < m.diagrams.size(); ++i) index[key_of(m.diagrams[i])] = i;
    const long bound = m.weight.m2.twice() + 2;
    const auto& rs = r_shifts();
    for (std::size_t j = 0; j < m.diagrams.size(); ++j) {
        DiagramKey src = key_of(m.diagrams[j]);
        for (const auto& s : sums) {
            DiagramKey base = apply_shift(src, s);
            std::function<void(std::size_t, DiagramKey)> rec = [&](std::size_t a, DiagramKey k) {
                if (a == rs.size()) {
                    auto it = index.find(k);
                    if (it != index.end()) out.insert({it->second, j});
                    return;
                }
                for (long t = 0; t <= bound; ++t) rec(a + 1, apply_shift(k, rs[a], t));
            };
            rec(0, base);
        }
    }
    return out;
}

GeneratorMatrix generator_matrix(const GTModule& m, const OperatorSpec& g)
{
    GeneratorMatrix out;
    out.generator = g;
    out.weight = m.weight;
    const std::size_t n = m.functions.size();
    out.matrix = zero_matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        RVector c = m.coordinates(apply_operator(g, m.functions[j]));
        for (std::size_t i = 0; i < n; ++i) out.matrix[i][j] = c[i];
    }
    out.predicted_support = predicted_support(m, g);
    if (!summands(g).empty()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (out.matrix[i][j] != 0 && !out.predicted_support.count({i, j}))
                    out.discrepancies.push_back(g.name() + ": " + m.diagrams[j].str() + " -> " + m.diagrams[i].str() +
                                                " coefficient " + to_string(out.matrix[i][j]) + " not predicted");
    }
    return out;
}

std::map<std::string, GeneratorMatrix> all_generator_matrices(const GTModule& m)
{
    std::map<std::string, GeneratorMatrix> out;
    for (const auto& g : sp4_basis()) out.emplace(g.name(), generator_matrix(m, g));
    return out;
}

RMatrix rho(const std::map<std::string, GeneratorMatrix>& mats, const OperatorSpec& f)
{
    auto coeffs = expand_in_sp4_basis(f);
    const auto& basis = sp4_basis();
    std::size_t n = mats.begin()->second.matrix.size();
    RMatrix r = zero_matrix(n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs[k] != 0) r = add_scaled(r, mats.at(basis[k].name()).matrix, coeffs[k]);
    return r;
}

LieReport verify_lie_suite(const GTModule& m)
{
    LieReport rep;
    rep.weight = m.weight;
    auto mats = all_generator_matrices(m);
    const auto& basis = sp4_basis();
    const std::size_t n = m.functions.size();

    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const RMatrix& x = mats.at(basis[a].name()).matrix;
            const RMatrix& y = mats.at(basis[b].name()).matrix;
            RMatrix lhs = add_scaled(mat_mul(x, y), mat_mul(y, x), Rational(-1));
            auto c = bracket_in_basis(basis[a], basis[b]);
            RMatrix rhs = zero_matrix(n);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (c[k] != 0) rhs = add_scaled(rhs, mats.at(basis[k].name()).matrix, c[k]);
            ++rep.pairs_checked;
            if (lhs != rhs) rep.failed_pairs.push_back(name_of_pair(basis[a], basis[b]));
        }

    // Cartan.
    const RMatrix& h22 = mats.at(f_op(-2, -2).name()).matrix;
    const RMatrix& h11 = mats.at(f_op(-1, -1).name()).matrix;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (h22[i][j] != 0 || h11[i][j] != 0)) rep.eigen.diagonal = false;
    std::vector<std::pair<Rational, Rational>> measured, lam;
    for (std::size_t i = 0; i < n; ++i) {
        Rational p1 = (h22[i][i] + h11[i][i]) / 2, p2 = (h22[i][i] - h11[i][i]) / 2;
        rep.eigen.cartan_values.push_back({p1, p2});
        const auto& d = m.diagrams[i];
        Rational l2 = Rational(d.sigma) + 2 * (d.k2 + d.k1).value() - (d.m2 + d.m1).value() - d.s2.value();
        Rational l1 = d.s1.value();
        lam.push_back({l2, l1});
    }
    struct Conv {
        std::string name;
        std::function<std::pair<Rational, Rational>(const std::pair<Rational, Rational>&, const GTDiagram&)> f;
    };
    std::vector<Conv> convs;
    for (int swap = 0; swap < 2; ++swap)
        for (int s2 : {1, -1})
            for (int s1 : {1, -1}) {
                std::string nm = std::string(swap ? "swapped" : "literal") + " naming, " + (s2 > 0 ? "+" : "-") +
                                 "lambda_-2, " + (s1 > 0 ? "+" : "-") + "lambda_-1";
                convs.push_back({nm, [swap, s2, s1](const std::pair<Rational, Rational>& l, const GTDiagram&) {
                                     Rational a = Rational(s2) * l.first, b = Rational(s1) * l.second;
                                     // literal: (F_-2, F_-1) = (first, second measured component)
                                     return swap ? std::pair{b, a} : std::pair{a, b};
                                 }});
            }
    for (int swap = 0; swap < 2; ++swap)
        convs.push_back({std::string(swap ? "swapped" : "literal") + " naming, sigma entering with a minus sign",
                         [swap](const std::pair<Rational, Rational>& l, const GTDiagram& d) {
                             Rational a = l.first - Rational(2 * d.sigma), b = l.second;
                             return swap ? std::pair{b, a} : std::pair{a, b};
                         }});
    for (int sg : {1, -1})
        convs.push_back({std::string("weight rule of the o3-highest lemma, ") + (sg > 0 ? "+" : "-") + "second component",
                         [sg](const std::pair<Rational, Rational>&, const GTDiagram& d) {
                             HWWeightData wd = weight_data(d.label());
                             return std::pair{d.s1.value(), Rational(sg) * wd.second_component.value()};
                         }});
    for (const auto& c : convs) {
        CartanConvention cc;
        cc.name = c.name;
        std::vector<std::pair<Rational, Rational>> pred;
        for (std::size_t i = 0; i < n; ++i) {
            auto p = c.f(lam[i], m.diagrams[i]);
            pred.push_back(p);
            if (p == rep.eigen.cartan_values[i]) ++cc.matches;
        }
        auto a = pred, b = rep.eigen.cartan_values;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        cc.multiset_match = a == b;
        rep.eigen.conventions.push_back(cc);
    }

    // Ladders.
    std::map<DiagramKey, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[key_of(m.diagrams[i])] = i;
    const RMatrix& low = mats.at(f_op(1, -2).name()).matrix;
    const RMatrix& rai = mats.at(f_op(-2, 1).name()).matrix;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& d = m.diagrams[j];
        DiagramKey k = key_of(d);
        DiagramKey down = k, up = k;
        down.s1 -= 2;
        up.s1 += 2;
        Rational lower_expected = (d.s2 - d.s1).value() + 1;
        Rational derived = (d.s2 + d.s1).value() + 1;
        Rational printed = (d.s2 - d.s1).value() + 1;
        for (std::size_t i = 0; i < n; ++i) {
            bool is_down = index.count(down) && index[down] == i;
            bool is_up = index.count(up) && index[up] == i;
            if (is_down) {
                if (low[i][j] != lower_expected) rep.ladder.lowering_ok = false;
            } else if (low[i][j] != 0) {
                rep.ladder.lowering_ok = false;
            }
            if (is_up) {
                rep.ladder.raising_measured.push_back(d.str() + " -> " + to_string(rai[i][j]));
                if (rai[i][j] != derived) rep.ladder.raising_derived_ok = false;
                if (rai[i][j] != printed) rep.ladder.raising_printed_ok = false;
            } else if (rai[i][j] != 0) {
                rep.ladder.raising_derived_ok = rep.ladder.raising_printed_ok = false;
            }
        }
    }

    for (const auto& g : {f_op(-1, 1), f_op(-2, 2)}) {
        const auto& gm = mats.at(g.name());
        std::size_t nz = 0;
        for (const auto& row : gm.matrix)
            for (const auto& x : row)
                if (x != 0) ++nz;
        rep.nonzero_entries[g.name()] = nz;
        rep.predicted_violations[g.name()] = gm.discrepancies.size();
        for (const auto& s : gm.discrepancies) rep.violation_details.push_back(s);
    }
    return rep;
}

Rational casimir_scalar(const GTModule& m)
{
    auto mats = all_generator_matrices(m);
    const std::size_t n = m.functions.size();
    RMatrix c = zero_matrix(n);
    for (int i : kSpIdx)
        for (int j : kSpIdx) c = add_scaled(c, mat_mul(rho(mats, f_op(i, j)), rho(mats, f_op(j, i))), Rational(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i == j && c[i][j] != c[0][0]) || (i != j && c[i][j] != 0))
                throw std::logic_error("Casimir operator is not scalar at " + m.weight.str());
    return c[0][0];
}

Rational casimir_on_highest_vector(const HighestWeight& w)
{
    Poly v = highest_vector(w);
    Poly sum;
    for (int i : kSpIdx)
        for (int j : kSpIdx) sum += apply_operator(f_op(i, j), apply_operator(f_op(j, i), v));
    Poly img = sp_normal_form(sum), base = sp_normal_form(v);
    if (img.is_zero()) return 0;
    Rational c;
    if (!proportional(img, base, &c)) throw std::logic_error("highest vector is not a Casimir eigenvector");
    return c;
}

} // namespace gtsp4
