#pragma once

// JSON encodings for groups, matrices, complexes, sequences, Stein
// instances and verdicts. Integers outside int64 are written as decimal
// strings; floats are rejected on input.

#include <string>

#include "json.hpp"
#include "sgmtopo/dimension_set.hpp"
#include "sgmtopo/exact_sequence.hpp"
#include "sgmtopo/homology.hpp"
#include "sgmtopo/stein_les.hpp"
#include "sgmtopo/zlinalg.hpp"

namespace sgmtopo::json {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const ChainComplex& c);
ChainComplex chain_complex_from_json(const Json& j);

Json to_json(const GradedGroup& g);
GradedGroup graded_group_from_json(const Json& j);

/// "maps" holds the matrix of A_i -> A_{i+1} under key i; absent maps are zero.
Json to_json(const ExactSequence& seq);
ExactSequence sequence_from_json(const Json& j);

Json to_json(const SteinInstance& inst);
SteinInstance stein_instance_from_json(const Json& j);

Json to_json(const DimensionSetVerdict& v);
DimensionSetVerdict verdict_from_json(const Json& j);

Json to_json(const SnfResult& snf);

/// Parses text; throws InvalidInput on malformed JSON.
Json parse(const std::string& text);
Json read_file(const std::string& path);
std::string dump(const Json& j);

}  // namespace sgmtopo::json
