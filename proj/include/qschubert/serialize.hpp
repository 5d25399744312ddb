#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qschubert/detring.hpp"
#include "qschubert/schubert.hpp"

namespace qschubert {

using Json = nlohmann::ordered_json;

/// "2x4"
Shape parse_shape(std::string_view text);

Json to_json(const IndexSet& x);
Json to_json(const IndexPair& p);
IndexSet index_set_from_json(const Json& j);
IndexPair index_pair_from_json(const Json& j);

/// {"shape": [m,n], "terms": [{"word": [[i,j],...], "coeff": "<LaurentQ>"}]}
Json to_json(const NcPoly& p);
NcPoly ncpoly_from_json(const Json& j);

/// {"shape": [m,n], "gamma": [...] | null, "terms": [{"factors": [[...],...], "coeff": ...}]}
Json to_json(const AlgElement& e);
AlgElement alg_element_from_json(const Json& j);

/// {"shape": [m,n], "delta": {"rows","cols"} | null, "terms": [{"factors": [...], "coeff": ...}]}
Json to_json(const DetAlgElement& e);
DetAlgElement det_element_from_json(const Json& j);

/// {"shape": [m,n], "verified": bool, "terms": [{"coeff", "left", "right"}]}
/// with right null for a single minor; products of three or more minors use
/// "factors" instead of left/right.
Json to_json(const MinorRelation& r);
MinorRelation minor_relation_from_json(const Json& j);

/// Parses "[1|1][2|2] - [2|2][1|1] - (q - q^-1)*[1|2][2|1] = 0"; the
/// trailing "= 0" is optional.
MinorRelation parse_minor_relation(std::string_view text, const Shape& s);

Json to_json(const LadderExpression& e);
Json to_json(const BlockGapDecomposition& b);

/// Coefficientwise specialization at q = q0.
AlgElement specialize(const AlgElement& e, const Rational& q0);
DetAlgElement specialize(const DetAlgElement& e, const Rational& q0);
NcPoly specialize(const NcPoly& p, const Rational& q0);

}  // namespace qschubert
