#include "gtsp4/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace gtsp4 {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    return out;
}

HalfInt half_from_json(const Json& j) { return HalfInt::parse(j.get<std::string>()); }

} // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const HalfInt& h) { return h.str(); }

Json to_json(const MultiIndex& m)
{
    Json a = Json::array();
    for (long x : m) a.push_back(x);
    return a;
}

Json to_json(const Poly& p)
{
    Json a = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json mono = Json::object();
        for (int v = 0; v < kNumVars; ++v)
            if (it->first.e[v]) mono[var_name(v)] = int(it->first.e[v]);
        a.push_back({{"coeff", to_string(it->second)}, {"monomial", mono}});
    }
    return a;
}

Poly poly_from_json(const Json& j)
{
    Poly p;
    for (const auto& t : j) {
        Monomial m;
        for (const auto& [name, e] : t.at("monomial").items()) {
            auto v = parse_var_name(name);
            if (!v) throw std::invalid_argument("unknown symbol " + name);
            m.e[*v] = static_cast<std::uint8_t>(e.get<int>());
        }
        p.add_term(m, parse_rational(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json to_json(const GammaSeries& s)
{
    Json lat = Json::array();
    for (const auto& g : s.lattice.generators) lat.push_back(to_json(g));
    return {{"symbols", s.lattice.slot_names}, {"shift", to_json(s.shift)}, {"lattice", lat}, {"prefactor", to_json(s.prefactor)}};
}

Json to_json(const HighestWeight& w) { return {{"m2", w.m2.str()}, {"m1", w.m1.str()}}; }

Json to_json(const HWLabel& l)
{
    return {{"sigma", l.sigma}, {"m2", l.m2.str()}, {"m1", l.m1.str()},
            {"k2", l.k2.str()}, {"k1", l.k1.str()}, {"s2", l.s2.str()}};
}

Json to_json(const GTDiagram& d)
{
    Json j = to_json(d.label());
    j["s1"] = d.s1.str();
    return j;
}

HWLabel label_from_json(const Json& j)
{
    HWLabel l{j.at("sigma").get<int>(), half_from_json(j.at("m2")), half_from_json(j.at("m1")),
              half_from_json(j.at("k2")), half_from_json(j.at("k1")), half_from_json(j.at("s2"))};
    return l;
}

GTDiagram diagram_from_json(const Json& j)
{
    HWLabel l = label_from_json(j);
    return {l.sigma, l.m2, l.m1, l.k2, l.k1, l.s2, half_from_json(j.at("s1"))};
}

Json to_json(const GeneratorMatrix& m)
{
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.matrix.size(); ++i)
        for (std::size_t j = 0; j < m.matrix[i].size(); ++j)
            if (m.matrix[i][j] != 0) entries.push_back(Json::array({i, j, to_string(m.matrix[i][j])}));
    Json out{{"generator", m.generator.name()}, {"weight", to_json(m.weight)}, {"dim", m.matrix.size()}, {"entries", entries}};
    if (!m.discrepancies.empty()) out["discrepancies"] = m.discrepancies;
    return out;
}

Json to_json(const RepSpace& r)
{
    Json basis = Json::array();
    for (const auto& p : r.basis) basis.push_back(to_json(p));
    return {{"weight", to_json(r.weight)}, {"dim", r.dim()}, {"basis", basis}};
}

Json to_json(const PLExpansion& e)
{
    Json coeffs = Json::array();
    for (const auto& [s, c] : e.terms) coeffs.push_back({{"s", to_json(s)}, {"c", to_string(c)}});
    return {{"base_shift", to_json(e.base_shift)}, {"coeffs", coeffs}};
}

Json to_json(const GKZReport& r)
{
    Json eqs = Json::array();
    for (const auto& e : r.equations) {
        Json j{{"kind", e.kind}, {"vector", to_json(e.vector)}};
        if (e.kind == "euler") j["eigenvalue"] = to_string(e.eigenvalue);
        j["pass"] = e.pass;
        eqs.push_back(j);
    }
    return {{"all_pass", r.all_pass()}, {"equations", eqs}};
}

GTDiagram parse_diagram(const std::string& text)
{
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("diagram must look like (sigma; m2,m1; k2,k1; s2,s1): " + text);
    auto parts = split(t.substr(1, t.size() - 2), ';');
    if (parts.size() != 4) throw std::invalid_argument("diagram needs four ';'-separated groups: " + text);
    auto pair = [&](const std::string& s) {
        auto xs = split(s, ',');
        if (xs.size() != 2) throw std::invalid_argument("expected a pair in " + text);
        return std::pair{HalfInt::parse(xs[0]), HalfInt::parse(xs[1])};
    };
    GTDiagram d;
    d.sigma = std::stoi(parts[0]);
    std::tie(d.m2, d.m1) = pair(parts[1]);
    std::tie(d.k2, d.k1) = pair(parts[2]);
    std::tie(d.s2, d.s1) = pair(parts[3]);
    if (!validate_diagram(d)) throw std::invalid_argument("invalid diagram " + text);
    return d;
}

} // namespace gtsp4
