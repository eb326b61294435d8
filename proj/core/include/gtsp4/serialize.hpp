#pragma once

#include "gtsp4/action.hpp"
#include "gtsp4/gamma.hpp"
#include "gtsp4/labels.hpp"
#include "gtsp4/lemma.hpp"
#include "gtsp4/oracle.hpp"

#include <json.hpp>

#include <string>

namespace gtsp4 {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const HalfInt& h);
Json to_json(const MultiIndex& m);
Json to_json(const Poly& p);
Json to_json(const GammaSeries& s);
Json to_json(const HighestWeight& w);
Json to_json(const HWLabel& l);
Json to_json(const GTDiagram& d);
Json to_json(const GeneratorMatrix& m);
Json to_json(const RepSpace& r);
Json to_json(const PLExpansion& e);
Json to_json(const GKZReport& r);

Poly poly_from_json(const Json& j);
HWLabel label_from_json(const Json& j);
GTDiagram diagram_from_json(const Json& j);

// Text form of GTDiagram::str(): "(sigma; m2,m1; k2,k1; s2,s1)". Throws std::invalid_argument.
GTDiagram parse_diagram(const std::string& text);

} // namespace gtsp4
