#pragma once

#include "gtsp4/labels.hpp"
#include "gtsp4/linspan.hpp"
#include "gtsp4/operators.hpp"
#include "gtsp4/oracle.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gtsp4 {

// GT basis of one weight together with the oracle space and the change of basis.
struct GTModule {
    HighestWeight weight;
    std::vector<GTDiagram> diagrams;
    std::vector<Poly> functions;
    RepSpace oracle;
    RMatrix to_oracle;    // column j = oracle coordinates of functions[j]
    RMatrix from_oracle;  // inverse

    static GTModule build(const HighestWeight& w);
    RVector coordinates(const Poly& p) const;  // GT coordinates; throws NotInSpan
    std::size_t index_of(const GTDiagram& d) const;
};

struct GeneratorMatrix {
    OperatorSpec generator;
    HighestWeight weight;
    RMatrix matrix;  // matrix[i][j]: coefficient of diagram i in the image of diagram j
    std::set<std::pair<std::size_t, std::size_t>> predicted_support;  // (target, source)
    std::vector<std::string> discrepancies;                          // nonzero entries outside the prediction
};

GeneratorMatrix generator_matrix(const GTModule& m, const OperatorSpec& g);

// Matrix of an arbitrary f[i,j] through its expansion in the ten basis elements.
RMatrix rho(const std::map<std::string, GeneratorMatrix>& mats, const OperatorSpec& f);
std::map<std::string, GeneratorMatrix> all_generator_matrices(const GTModule& m);

// Predicted (target, source) pairs for f[-1,1], f[-2,2]: one summand transformation
// followed by a nonnegative combination of the r-shift transformations.
std::set<std::pair<std::size_t, std::size_t>> predicted_support(const GTModule& m, const OperatorSpec& g);

struct CartanConvention {
    std::string name;
    std::size_t matches = 0;  // diagrams matched one by one
    bool multiset_match = false;
};

struct EigenReport {
    // Per diagram: eigenvalues of (f[-2,-2]+f[-1,-1])/2 and (f[-2,-2]-f[-1,-1])/2.
    std::vector<std::pair<Rational, Rational>> cartan_values;
    bool diagonal = true;
    std::vector<CartanConvention> conventions;
};

struct LadderReport {
    bool lowering_ok = true;           // f[1,-2]: s2-s1+1 at the source, s1 -> s1-1, nothing else
    bool raising_derived_ok = true;    // f[-2,1]: s2+s1+1 at the source
    bool raising_printed_ok = true;    // f[-2,1]: s2-s1+1 at the source (as printed)
    std::vector<std::string> raising_measured;  // "diagram -> value"
};

struct LieReport {
    HighestWeight weight;
    std::size_t pairs_checked = 0;
    std::vector<std::string> failed_pairs;
    EigenReport eigen;
    LadderReport ladder;
    std::map<std::string, std::size_t> predicted_violations;  // generator -> count
    std::map<std::string, std::size_t> nonzero_entries;
    std::vector<std::string> violation_details;
    bool commutators_ok() const { return failed_pairs.empty(); }
};

LieReport verify_lie_suite(const GTModule& m);

// Scalar of sum_{i,j} rho(f[i,j]) rho(f[j,i]); throws std::logic_error if not scalar.
Rational casimir_scalar(const GTModule& m);
// The same operator sum applied to the highest-vector polynomial.
Rational casimir_on_highest_vector(const HighestWeight& w);

} // namespace gtsp4
