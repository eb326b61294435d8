#pragma once

#include "gtsp4/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gtsp4 {

struct HighestWeight {
    HalfInt m2;  // m_{-2}
    HalfInt m1;  // m_{-1}

    static HighestWeight of(HalfInt a, HalfInt b) { return {a, b}; }
    static HighestWeight ints(long a, long b) { return {HalfInt::from_int(a), HalfInt::from_int(b)}; }
    // "a,b" with entries like "1", "3/2".
    static HighestWeight parse(const std::string& text);
    bool valid() const;
    bool integral() const { return m2.is_integer(); }
    std::string str() const;  // "[a,b]"
    auto operator<=>(const HighestWeight&) const = default;
};

// Dominance order on o5 weights: a - b a nonnegative combination of simple roots.
bool dominates(const HighestWeight& a, const HighestWeight& b);

Integer weyl_dim(const HighestWeight& w);

// All dominant weights with m_{-2} <= max_twice/2, both parities.
std::vector<HighestWeight> weights_up_to(int max_twice);

struct HWLabel {
    int sigma = 0;
    HalfInt m2, m1, k2, k1, s2;

    bool valid() const;
    HighestWeight weight() const { return {m2, m1}; }
    std::string str() const;
    auto operator<=>(const HWLabel&) const = default;
};

struct HWWeightData {
    HalfInt h_weight;          // s_{-2}
    HalfInt second_component;  // -2(k_{-2}+k_{-1}) + (m_{-2}+m_{-1}) + s_{-2} + sigma
};

HWWeightData weight_data(const HWLabel& l);

struct GTDiagram {
    int sigma = 0;
    HalfInt m2, m1, k2, k1, s2, s1;

    HWLabel label() const { return {sigma, m2, m1, k2, k1, s2}; }
    HighestWeight weight() const { return {m2, m1}; }
    // Lowering depth s_{-2} - s_{-1}.
    long depth() const { return (s2 - s1).as_int(); }
    std::string str() const;
    bool operator==(const GTDiagram&) const = default;
};

bool validate_diagram(const GTDiagram& d);

// Canonical order: k_{-2} desc, k_{-1} desc, sigma asc, s_{-2} desc, s_{-1} desc.
std::vector<GTDiagram> enumerate_diagrams(const HighestWeight& w);
std::vector<HWLabel> enumerate_labels(const HighestWeight& w);
std::vector<HWLabel> enumerate_labels(const HighestWeight& w, HalfInt s2);

// sp4 weight (f[-2,-2], f[-1,-1] eigenvalues) of the highest vector of w.
std::pair<long, long> sp4_highest_weight(const HighestWeight& w);

} // namespace gtsp4
