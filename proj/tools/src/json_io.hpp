#pragma once

// JSON encoding of the library's values. Integers inside the 53-bit safe
// range are numbers, larger ones decimal strings; rationals are
// {"num": "...", "den": "..."}.

#include "toric_diamond/diamond.hpp"
#include "toric_diamond/guillemin.hpp"

#include <json.hpp>

namespace toric_diamond::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& n);
Json to_json(const Rational& q);
Json to_json(const lattice::LatVec& v);
Json to_json(const lattice::RatVec& v);
Json to_json(const std::vector<lattice::LatVec>& vs);
Json to_json(const lattice::UnimodularMap& g);
Json to_json(const IntMatrix& m);
Json to_json(const reduction::WeightMatrix& w);
Json to_json(const reduction::IsotropyData& d);
Json to_json(const reduction::CohomologyTable& c);
Json to_json(const reduction::MinorMap& minors);
Json to_json(const diamond::DiamondReport& r);
Json to_json(const guillemin::VolumeCheck& v);
Json to_json(const toric::WpsInvariants& w);

// Decoders throw MalformedInput on shape or type errors.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
std::vector<lattice::LatVec> points_from_json(const Json& j);
reduction::WeightMatrix weights_from_json(const Json& j);
reduction::IsotropyData isotropy_from_json(const Json& j);

// Parses text as JSON, mapping syntax errors to MalformedInput.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace toric_diamond::cli
