// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Exit status is the number of failing criteria.

#include "gtsp4/action.hpp"
#include "gtsp4/gtbasis.hpp"
#include "gtsp4/highest.hpp"
#include "gtsp4/oracle.hpp"
#include "gtsp4/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace gtsp4;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<HighestWeight> weights_m2_at_most_2() { return weights_up_to(4); }

// Every weight with m2 <= 2 except [2,2]: the range from [0,0] through [2,1] and [3/2,1/2].
std::vector<HighestWeight> basis_weights()
{
    std::vector<HighestWeight> out;
    for (const auto& w : weights_up_to(4))
        if (w != HighestWeight::ints(2, 2)) out.push_back(w);
    return out;
}

struct Outcome {
    bool pass = true;
    std::string note;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body)
{
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", seconds_since(t0));
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << title << " [" << buf << "] " << o.note << std::endl;
}

Outcome dimension_coherence()
{
    auto t0 = Clock::now();
    // m2 <= 7/2: the twenty weights, a superset of m2 <= 3
    auto ws = weights_up_to(7);
    std::size_t bad = 0;
    for (const auto& w : ws) {
        Integer d = weyl_dim(w);
        if (enumerate_diagrams(w).size() != d || build_irrep(w).dim() != d) ++bad;
    }
    double t = seconds_since(t0);
    std::ostringstream s;
    s << ws.size() << " weights, " << bad << " mismatches, " << t << "s";
    return {ws.size() == 20 && bad == 0 && t < 120, s.str()};
}

Outcome basis_correctness()
{
    auto t0 = Clock::now();
    std::size_t bad = 0, n = 0;
    for (const auto& w : basis_weights()) {
        ++n;
        GTModule m = GTModule::build(w);  // throws if the change of basis is singular
        if (m.to_oracle.size() != m.oracle.dim() || matrix_rank(m.to_oracle) != m.oracle.dim()) ++bad;
    }
    double t = seconds_since(t0);
    std::ostringstream s;
    s << n << " weights up to [2,1] and [3/2,1/2], " << bad << " singular";
    return {bad == 0 && t < 300, s.str()};
}

Outcome h_structure()
{
    std::size_t p0 = 0, bad_fn = 0, bad_branch = 0;
    for (const auto& w : weights_m2_at_most_2()) {
        for (const auto& d : enumerate_diagrams(w)) {
            if (d.depth() != 0) continue;
            ++p0;
            Poly g = gt_function(d);
            auto ev = h_eigenvalue(g);
            if (!is_h_highest(g) || !ev || *ev != 2 * d.s2.value()) ++bad_fn;
        }
        RepSpace r = build_irrep(w);
        for (HalfInt s = w.m2; s >= HalfInt::from_int(0); s -= HalfInt::from_int(1))
            if (h_highest_subspace(r, s).size() != enumerate_labels(w, s).size()) ++bad_branch;
    }
    std::ostringstream s;
    s << p0 << " p=0 functions (" << bad_fn << " bad), " << bad_branch << " branching mismatches";
    return {bad_fn == 0 && bad_branch == 0, s.str()};
}

Outcome lie_closure()
{
    std::size_t pairs = 0, failed = 0, nondiag = 0;
    for (const auto& w : weights_m2_at_most_2()) {
        LieReport r = verify_lie_suite(GTModule::build(w));
        pairs += r.pairs_checked;
        failed += r.failed_pairs.size();
        nondiag += !r.eigen.diagonal;
    }
    std::ostringstream s;
    s << pairs << " commutator identities, " << failed << " failed, " << nondiag << " non-diagonal Cartan";
    return {failed == 0 && nondiag == 0, s.str()};
}

Outcome ladder_law()
{
    std::size_t low = 0, derived = 0, printed = 0, n = 0;
    for (const auto& w : weights_m2_at_most_2()) {
        ++n;
        LieReport r = verify_lie_suite(GTModule::build(w));
        low += !r.ladder.lowering_ok;
        derived += !r.ladder.raising_derived_ok;
        printed += !r.ladder.raising_printed_ok;
    }
    std::ostringstream s;
    s << n << " weights; lowering s2-s1+1 fails on " << low << ", raising s2+s1+1 fails on " << derived
      << ", printed raising s2-s1+1 fails on " << printed << " (reported)";
    return {low == 0 && derived == 0, s.str()};
}

Outcome gkz()
{
    std::size_t series = 0, bad = 0;
    std::map<std::string, std::size_t> fam;
    for (const auto& w : weights_m2_at_most_2())
        for (const auto& n : series_for_weight(w)) {
            ++series;
            ++fam[n.family];
            if (!gkz_verify(n.series).all_pass()) ++bad;
        }
    std::ostringstream s;
    s << series << " series (";
    for (const auto& [k, v] : fam) s << k << ":" << v << " ";
    s << "), " << bad << " failing";
    return {bad == 0 && fam.size() == 4, s.str()};
}

Outcome principal_lemma()
{
    auto samples = random_samples(kDefaultSeed, 20);
    std::size_t used = 0, nf = 0, ev = 0, applicable = 0, agree = 0, inconsistent = 0, single = 0;
    std::string example;
    for (const auto& w : weights_m2_at_most_2())
        for (const auto& p : principal_lemma_pairs(w, samples)) {
            if (!p.consistent) {
                ++inconsistent;
                continue;
            }
            if (p.support < 2) {
                ++single;
                continue;
            }
            ++used;
            nf += p.normal_form_ok;
            ev += p.evaluation_ok;
            applicable += p.cs_applicable;
            agree += p.cs_agree;
            if (example.empty() && !p.cs_disagreements.empty())
                example = p.series + " x " + p.minor + ": " + p.cs_disagreements.front();
        }
    std::ostringstream s;
    s << used << " pairs with support >= 2; normal form zero " << nf << "/" << used << ", evaluation zero " << ev
      << "/" << used << "; closed-form coefficients agree " << agree << "/" << applicable << "; " << inconsistent
      << " pairs without a solution";
    if (!example.empty()) s << "; e.g. " << example;
    return {used >= 10 && nf == used && ev == used && agree == applicable, s.str()};
}

Outcome covering()
{
    VerifyOptions opt;
    opt.samples = 100;
    SuiteReport r = run_suite("covering", HighestWeight::ints(0, 0), opt);
    std::ostringstream s;
    for (const auto& c : r.checks)
        if (!c.informational) s << c.name << "=" << (c.pass ? "ok" : "FAIL") << " ";
    s << "(100 samples, 50 pairs)";
    return {r.pass(), s.str()};
}

Outcome dual_routes()
{
    std::size_t n = 0, bad = 0;
    for (const auto& w : basis_weights())
        for (const auto& d : enumerate_diagrams(w)) {
            ++n;
            auto c = compare_routes(d);
            if (!c.agree) ++bad;
        }
    auto diff = bgc_diff_report();
    for (const auto& line : diff) std::cout << "    " << line << "\n";
    std::ostringstream s;
    s << n << " diagrams, " << bad << " disagreements; frozen B_GC generators emitted above";
    return {bad == 0 && !diff.empty(), s.str()};
}

Outcome casimir()
{
    std::size_t n = 0, bad = 0;
    std::ostringstream s;
    for (const auto& w : weights_m2_at_most_2()) {
        ++n;
        Rational c = casimir_scalar(GTModule::build(w));  // throws if not scalar
        Rational h = casimir_on_highest_vector(w);
        if (c != h) ++bad;
    }
    s << n << " weights, " << bad << " mismatches";
    return {bad == 0, s.str()};
}

} // namespace

int main()
{
    report(1, "dimension coherence", dimension_coherence);
    report(2, "basis correctness", basis_correctness);
    report(3, "h-structure and branching", h_structure);
    report(4, "Lie closure", lie_closure);
    report(5, "ladder law", ladder_law);
    report(6, "GKZ", gkz);
    report(7, "principal lemma", principal_lemma);
    report(8, "covering fidelity", covering);
    report(9, "dual-route agreement", dual_routes);
    report(10, "Casimir", casimir);
    return failures;
}
