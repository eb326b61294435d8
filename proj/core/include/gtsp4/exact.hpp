#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gtsp4 {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

Rational reciprocal_factorial(long n);
Integer factorial(long n);

// A number n/2 stored as the integer n.
class HalfInt {
public:
    HalfInt() = default;
    static HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static HalfInt from_int(std::int64_t v) { return from_twice(2 * v); }
    static HalfInt parse(const std::string& text);

    std::int64_t twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    // Only valid when is_integer().
    std::int64_t as_int() const;
    Rational value() const
    {
        Rational q(static_cast<long>(twice_), 2);
        q.canonicalize();
        return q;
    }

    HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    HalfInt operator-() const { return from_twice(-twice_); }
    HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const;

private:
    std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, const HalfInt& h);

// Integer vector with componentwise arithmetic; length fixed by its context.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n, long fill = 0) : c_(n, fill) {}
    MultiIndex(std::initializer_list<long> xs) : c_(xs) {}
    explicit MultiIndex(std::vector<long> xs) : c_(std::move(xs)) {}

    std::size_t size() const { return c_.size(); }
    long& operator[](std::size_t i) { return c_[i]; }
    long operator[](std::size_t i) const { return c_[i]; }
    const std::vector<long>& data() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    MultiIndex operator+(const MultiIndex& o) const;
    MultiIndex operator-(const MultiIndex& o) const;
    MultiIndex operator*(long k) const;
    MultiIndex& operator+=(const MultiIndex& o);

    long sum() const;
    long min() const;
    bool nonnegative() const { return min() >= 0; }
    static MultiIndex unit(std::size_t n, std::size_t i);

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<long> c_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

} // namespace gtsp4
