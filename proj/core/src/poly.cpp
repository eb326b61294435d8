#include "gtsp4/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtsp4 {

Monomial Monomial::var(int v, int power)
{
    if (power < 0 || power > 255) throw std::out_of_range("monomial exponent");
    Monomial m;
    m.e[v] = static_cast<std::uint8_t>(power);
    return m;
}

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::divides(const Monomial& other) const
{
    for (int i = 0; i < kNumVars; ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
        int s = e[i] + o.e[i];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint8_t>(other.e[i] - e[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::max(e[i], o.e[i]);
    return r;
}

bool Monomial::is_one() const
{
    for (auto x : e)
        if (x) return false;
    return true;
}

bool Monomial::uses_alphabet(Alphabet a) const
{
    for (int i = 0; i < kNumVars; ++i)
        if (e[i] && alphabet_of(i) == a) return true;
    return false;
}

bool deglex_less(const Monomial& a, const Monomial& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

Poly::Poly(const Rational& c)
{
    if (c != 0) t_.emplace(Monomial{}, c);
}

Poly Poly::var(int v) { return term(Monomial::var(v), Rational(1)); }

Poly Poly::term(const Monomial& m, const Rational& c)
{
    Poly p;
    p.add_term(m, c);
    return p;
}

const Monomial& Poly::leading_monomial() const
{
    if (t_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return t_.rbegin()->first;
}

const Rational& Poly::leading_coeff() const
{
    if (t_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return t_.rbegin()->second;
}

Rational Poly::coeff(const Monomial& m) const
{
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    for (const auto& [m, c] : o.t_) r.add_scaled(*this, m, c);
    return r;
}

Poly Poly::operator*(const Rational& c) const
{
    Poly r = *this;
    r *= c;
    return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::mul_term(const Monomial& m, const Rational& c) const
{
    Poly r;
    r.add_scaled(*this, m, c);
    return r;
}

void Poly::add_scaled(const Poly& p, const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    for (const auto& [pm, pc] : p.t_) add_term(pm * m, pc * c);
}

Poly Poly::pow(int n) const
{
    if (n < 0) throw std::domain_error("negative power");
    Poly r(1), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Poly Poly::derivative(int v) const
{
    Poly r;
    for (const auto& [m, c] : t_) {
        if (!m.e[v]) continue;
        Monomial d = m;
        d.e[v] -= 1;
        r.add_term(d, c * static_cast<long>(m.e[v]));
    }
    return r;
}

Poly Poly::substitute(int v, const Poly& q) const
{
    return map_vars([&](int w) { return w == v ? q : Poly::var(w); });
}

Poly Poly::map_vars(const std::function<Poly(int)>& image) const
{
    std::array<Poly, kNumVars> img;
    std::array<bool, kNumVars> used{};
    for (const auto& [m, c] : t_)
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i]) used[i] = true;
    for (int i = 0; i < kNumVars; ++i)
        if (used[i]) img[i] = image(i);
    Poly r;
    for (const auto& [m, c] : t_) {
        Poly t(c);
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i]) t = t * img[i].pow(m.e[i]);
        r += t;
    }
    return r;
}

bool Poly::uses_alphabet(Alphabet a) const
{
    for (const auto& [m, c] : t_)
        if (m.uses_alphabet(a)) return true;
    return false;
}

int Poly::max_degree() const
{
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

std::string Poly::str() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = to_string(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool one = m.is_one();
        if (a != 1 || one) os << to_string(a) << (one ? "" : "*");
        bool firstv = true;
        for (int i = 0; i < kNumVars; ++i) {
            if (!m.e[i]) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << var_name(i);
            if (m.e[i] > 1) os << "^" << int(m.e[i]);
        }
    }
    return os.str();
}

Poly b1(int i) { return Poly::var(b1_var(i)); }

Poly b2(int i, int j)
{
    SignedVar s = b2_var(i, j);
    if (s.sign == 0) return Poly();
    return Poly::term(Monomial::var(s.var), Rational(s.sign));
}

Poly a1(int i) { return Poly::var(a1_var(i)); }

Poly a2(int i, int j)
{
    SignedVar s = a2_var(i, j);
    if (s.sign == 0) return Poly();
    return Poly::term(Monomial::var(s.var), Rational(s.sign));
}

Poly specialize_primes(const Poly& p)
{
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial n = m;
        for (int v : {var::b1p, var::b1pp, var::b2p, var::b2pp}) {
            int u = unprimed(v);
            n.e[u] = static_cast<std::uint8_t>(n.e[u] + n.e[v]);
            n.e[v] = 0;
        }
        r.add_term(n, c);
    }
    return r;
}

bool proportional(const Poly& q, const Poly& p, Rational* ratio)
{
    if (p.is_zero() || q.is_zero()) return false;
    if (p.size() != q.size()) return false;
    Rational r = q.leading_coeff() / p.leading_coeff();
    for (const auto& [m, c] : p.terms())
        if (q.coeff(m) != c * r) return false;
    if (ratio) *ratio = r;
    return true;
}

} // namespace gtsp4
