#pragma once

#include <istream>
#include <string>

#include <nlohmann/json.hpp>

#include "bqokit/block_array.hpp"
#include "bqokit/errors.hpp"
#include "bqokit/family.hpp"
#include "bqokit/pouzet.hpp"
#include "bqokit/reduction.hpp"
#include "bqokit/seq.hpp"

namespace bqokit {

using Json = nlohmann::json;

// Parse a stream / file into JSON; malformed text raises SchemaError.
Json read_json(std::istream& in, const std::string& what);
Json read_json_file(const std::string& path);

// Loaders validate shape strictly and convert construction failures into
// SchemaError, so every bad input surfaces as one exception type.
//
// Wire shapes:
//   FinSeq / FreeSeq      bare array of naturals            [0, 2, 5]
//   Window                {"N": 8, "L": 4}
//   SeqFamily             {"window": W, "members": [seq*]}
//   RelationMatrix        {"n": 2, "bits": [[bool*]*]}
//   SigmaCode             {"window": W, "triples": [{"x","y","s"}*]}
//   ReducedRelation       {"carrier": [{"y","s"}*]}
//   BlockArray            {"family": F, "values": [{"s","q"}*]}
//                         with q a carrier index or a sequence (not mixed)
//   BlockVerdict          {"status": str, "witness": null | {"pair": [s,t]}
//                                                  | {"uncovered": s}}

FinSeq load_fin_seq(const Json& j);
FreeSeq load_free_seq(const Json& j);
Window load_window(const Json& j);
SeqFamily load_family(const Json& j);
RelationMatrix load_matrix(const Json& j);
SigmaCode load_code(const Json& j);
ReducedRelation load_reduced(const Json& j);
BlockArray load_array(const Json& j);

Json dump(const FinSeq& s);
Json dump(const FreeSeq& s);
Json dump(const Window& w);
Json dump(const SeqFamily& c);
Json dump(const RelationMatrix& m);
Json dump(const SigmaCode& code);
Json dump(const ReducedRelation& rel);
Json dump(const BlockArray& arr);
Json dump(const BlockVerdict& v);

std::string block_status_name(BlockStatus s);

}  // namespace bqokit
