#pragma once

// JSON encodings shared by the cache, the CLI and the sweep reports.
// Polynomials are objects mapping exponent strings to coefficients,
// e.g. {"-1": 1, "1": 1}; partitions are arrays of parts.

#include <json.hpp>

#include "fockpath/fockspace.hpp"
#include "fockpath/latticepath.hpp"
#include "fockpath/laurent.hpp"
#include "fockpath/partition.hpp"
#include "fockpath/signseq.hpp"

namespace fockpath {

using Json = nlohmann::json;

Json to_json(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const SignSequence& t);
SignSequence sign_sequence_from_json(const Json& j);

Json to_json(const LatticedPath& p);
Json to_json(const WellNestedCollection& w);

/// {"mu":[…], "terms":[{"lambda":[…], "poly":{…}}, …]}
Json canonical_record(const Partition& mu, const FockVector& g);
std::pair<Partition, FockVector> canonical_record_from_json(const Json& j);

}  // namespace fockpath
