#include "gtsp4/labels.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gtsp4 {

namespace {

bool same_type(std::initializer_list<HalfInt> xs)
{
    bool first = xs.begin()->is_integer();
    return std::all_of(xs.begin(), xs.end(), [&](HalfInt h) { return h.is_integer() == first; });
}

const HalfInt kZero = HalfInt::from_int(0);

} // namespace

HighestWeight HighestWeight::parse(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("weight must look like \"a,b\": " + text);
    HighestWeight w{HalfInt::parse(text.substr(0, comma)), HalfInt::parse(text.substr(comma + 1))};
    if (!w.valid()) throw std::invalid_argument("not a dominant weight: " + text);
    return w;
}

bool HighestWeight::valid() const { return m2 >= m1 && m1 >= kZero && m2.is_integer() == m1.is_integer(); }

std::string HighestWeight::str() const { return "[" + m2.str() + "," + m1.str() + "]"; }

bool dominates(const HighestWeight& a, const HighestWeight& b)
{
    HalfInt d2 = a.m2 - b.m2, d1 = a.m1 - b.m1;
    if (!d2.is_integer() || !d1.is_integer()) return false;
    return d1 + d2 >= kZero && d2 >= kZero;
}

Integer weyl_dim(const HighestWeight& w)
{
    if (!w.valid()) throw std::invalid_argument("invalid weight");
    Integer a = w.m2.twice(), b = w.m1.twice();
    Integer n = (a - b + 2) * (a + b + 4) * (a + 3) * (b + 1);
    if (n % 24 != 0) throw std::logic_error("Weyl dimension is not an integer");
    return n / 24;
}

std::vector<HighestWeight> weights_up_to(int max_twice)
{
    std::vector<HighestWeight> out;
    for (int parity = 0; parity < 2; ++parity)
        for (int a = parity; a <= max_twice; a += 2)
            for (int b = parity; b <= a; b += 2) out.push_back({HalfInt::from_twice(a), HalfInt::from_twice(b)});
    return out;
}

bool HWLabel::valid() const
{
    if (sigma != 0 && sigma != 1) return false;
    if (!same_type({m2, m1, k2, k1, s2})) return false;
    if (!(m2 >= k2 && k2 >= m1 && m1 >= k1 && k1 >= kZero)) return false;
    if (!(k2 >= s2 && s2 >= k1)) return false;
    if (k1 == kZero && sigma == 1) return false;
    return true;
}

std::string HWLabel::str() const
{
    std::ostringstream os;
    os << "(" << sigma << "; " << m2 << "," << m1 << "; " << k2 << "," << k1 << "; " << s2 << ")";
    return os.str();
}

HWWeightData weight_data(const HWLabel& l)
{
    HWWeightData d;
    d.h_weight = l.s2;
    HalfInt kk = l.k2 + l.k1;
    d.second_component = -(kk + kk) + (l.m2 + l.m1) + l.s2 + HalfInt::from_int(l.sigma);
    return d;
}

std::string GTDiagram::str() const
{
    std::ostringstream os;
    os << "(" << sigma << "; " << m2 << "," << m1 << "; " << k2 << "," << k1 << "; " << s2 << "," << s1 << ")";
    return os.str();
}

bool validate_diagram(const GTDiagram& d)
{
    if (!d.label().valid()) return false;
    if (d.s1.is_integer() != d.s2.is_integer()) return false;
    return d.s2 >= d.s1 && d.s1 >= -d.s2;
}

std::vector<HWLabel> enumerate_labels(const HighestWeight& w)
{
    std::vector<HWLabel> out;
    if (!w.valid()) throw std::invalid_argument("invalid weight");
    const HalfInt one = HalfInt::from_int(1);
    const HalfInt start = w.m2.is_integer() ? kZero : HalfInt::from_twice(1);
    for (HalfInt k2 = w.m2; k2 >= w.m1; k2 -= one)
        for (HalfInt k1 = w.m1; k1 >= start; k1 -= one)
            for (int sigma = 0; sigma < 2; ++sigma)
                for (HalfInt s2 = k2; s2 >= k1; s2 -= one) {
                    HWLabel l{sigma, w.m2, w.m1, k2, k1, s2};
                    if (l.valid()) out.push_back(l);
                }
    return out;
}

std::vector<HWLabel> enumerate_labels(const HighestWeight& w, HalfInt s2)
{
    std::vector<HWLabel> out;
    for (const auto& l : enumerate_labels(w))
        if (l.s2 == s2) out.push_back(l);
    return out;
}

std::vector<GTDiagram> enumerate_diagrams(const HighestWeight& w)
{
    std::vector<GTDiagram> out;
    const HalfInt one = HalfInt::from_int(1);
    for (const auto& l : enumerate_labels(w))
        for (HalfInt s1 = l.s2; s1 >= -l.s2; s1 -= one) out.push_back({l.sigma, l.m2, l.m1, l.k2, l.k1, l.s2, s1});
    return out;
}

std::pair<long, long> sp4_highest_weight(const HighestWeight& w)
{
    return {(w.m2 + w.m1).as_int(), (w.m2 - w.m1).as_int()};
}

} // namespace gtsp4
