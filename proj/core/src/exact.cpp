#include "gtsp4/exact.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gtsp4 {

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

Integer factorial(long n)
{
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational reciprocal_factorial(long n)
{
    if (n < 0) return Rational(0);
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        Rational next = cache.back() / static_cast<long>(cache.size());
        cache.push_back(next);
    }
    return cache[n];
}

HalfInt HalfInt::parse(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return from_int(v);
        }
        std::size_t pos = 0;
        long long num = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(text);
        std::string den = text.substr(slash + 1);
        if (den == "1") return from_int(num);
        if (den != "2") throw std::invalid_argument(text);
        return from_twice(num);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not an integer or half-integer: " + text);
    }
}

std::int64_t HalfInt::as_int() const
{
    if (!is_integer()) throw std::domain_error("half-integer used where an integer is required: " + str());
    return twice_ / 2;
}

std::string HalfInt::str() const
{
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.str(); }

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
    MultiIndex r = *this;
    r += o;
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const
{
    if (o.size() != size()) throw std::invalid_argument("MultiIndex length mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

MultiIndex MultiIndex::operator*(long k) const
{
    MultiIndex r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o)
{
    if (o.size() != size()) throw std::invalid_argument("MultiIndex length mismatch");
    for (std::size_t i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
}

long MultiIndex::sum() const { return std::accumulate(c_.begin(), c_.end(), 0L); }

long MultiIndex::min() const
{
    if (c_.empty()) return 0;
    return *std::min_element(c_.begin(), c_.end());
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i)
{
    MultiIndex r(n);
    r[i] = 1;
    return r;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m)
{
    os << '(';
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    return os << ')';
}

} // namespace gtsp4
