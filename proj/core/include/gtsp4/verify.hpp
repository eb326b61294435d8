#pragma once

#include "gtsp4/covering.hpp"
#include "gtsp4/labels.hpp"
#include "gtsp4/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gtsp4 {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int samples = 20;  // random group samples for evaluation checks
};

// Informational checks carry measurements (e.g. printed formulas that are known
// to disagree) and never fail a suite.
struct CheckResult {
    std::string name;
    bool pass = true;
    bool informational = false;
    Json details = Json::object();
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
    Json to_json() const;
};

// gkz, plucker, basis, lie, principal-lemma, covering
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& suite, const HighestWeight& w, const VerifyOptions& opt = {});
// `suite` may be "all".
std::vector<SuiteReport> run_suites(const std::string& suite, const HighestWeight& w, const VerifyOptions& opt = {});
Json report_json(const HighestWeight& w, const std::vector<SuiteReport>& reports);

// Every Gamma-series of a weight, bare (prefactor 1), with a description:
// B1 (integer weights), the B2 rebase series, the h-highest seed series and B_GC.
struct NamedSeries {
    std::string family;  // "B1", "B2", "seed", "B_GC"
    std::string origin;  // label or diagram
    GammaSeries series;
};
std::vector<NamedSeries> series_for_weight(const HighestWeight& w);

// Outcome of the minor-times-series identity for one (series, minor) pair.
struct LemmaPairOutcome {
    std::string series;  // label of the B2 rebase series
    std::string minor;
    std::size_t support = 0;
    bool consistent = false;
    std::size_t terms = 0;
    bool normal_form_ok = false;
    bool evaluation_ok = false;
    std::size_t cs_applicable = 0;
    std::size_t cs_agree = 0;
    std::vector<std::string> cs_disagreements;
    Json expansion;
};
// Pairs (B2 rebase series of each label of w, minor occurring as a slot of the lattice).
std::vector<LemmaPairOutcome> principal_lemma_pairs(const HighestWeight& w, const std::vector<GroupSample>& samples);

// The Cartan convention asserted by the Lie suite: ((f[-2,-2]+f[-1,-1])/2, (f[-2,-2]-f[-1,-1])/2)
// = (s1, 2(k2+k1) - (m2+m1) - s2 - sigma).
std::pair<Rational, Rational> frozen_cartan_values(const GTDiagram& d);

// Values of the leading-row minors of a generic 2x4 matrix (rows -2, -1) as a ring map image.
Rational eval_on_rows(const Poly& p, const Mat4& rows);

} // namespace gtsp4
