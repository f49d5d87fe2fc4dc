#pragma once

#include <string>

#include "json.hpp"
#include "simptree/certify.hpp"
#include "simptree/complex.hpp"
#include "simptree/cycles.hpp"
#include "simptree/enumerate.hpp"
#include "simptree/paths.hpp"

namespace simptree {

using json = nlohmann::json;

// Serializers. Objects render with sorted keys, so output is byte-stable.
json to_json(const Simplex& s);
json to_json(const std::vector<Simplex>& simplices);
json to_json(const PureComplex& k);
json to_json(const AltSequence& seq);
json to_json(const ReducedWitness& w);
json to_json(const Ordering& o);
json to_json(const CycleWitness& w);
json to_json(const UniquePathsReport& r);
json to_json(const CertReport& r);
json to_json(const BoundsReport& r);
json to_json(const ConjectureVerdict& v);
json components_to_json(const std::vector<std::vector<Simplex>>& classes);

/// Structured error object used by the CLI: {"error": {"code", "message"}}.
json error_to_json(const std::string& code, const std::string& message);

// Parsers. Throw ParseError on malformed documents; facet lists are
// canonicalized (sorted) on input.
Simplex simplex_from_json(const json& j);
PureComplex complex_from_json(const json& j);
AltSequence sequence_from_json(const json& j);

PureComplex read_complex_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace simptree
