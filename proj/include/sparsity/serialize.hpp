#pragma once

// JSON forms of the toolkit's results. Keys come out sorted and arrays keep
// a stable order, so equal values always print identically.

#include <json.hpp>

#include "sparsity/games.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/minors.hpp"
#include "sparsity/orders.hpp"
#include "sparsity/wideness.hpp"

namespace sparsity {

using Json = nlohmann::json;

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j);

/// {"order": [...]}
Json to_json(const VertexOrder& order);
VertexOrder order_from_json(const Json& j);

Json to_json(const WReachTable& table);
Json to_json(const EliminationForest& forest);
EliminationForest forest_from_json(const Json& j);

Json to_json(const MinorModel& model);
MinorModel minor_model_from_json(const Json& j);

Json to_json(const GameTranscript& t);
GameTranscript transcript_from_json(const Json& j);

Json to_json(const UqwCertificate& cert);
UqwCertificate uqw_from_json(const Json& j);

Json to_json(const SeparatorCertificate& cert);
SeparatorCertificate separator_from_json(const Json& j);

Json to_json(const Cover& cover);
Cover cover_from_json(const Json& j);

Json to_json(const PartitionCover& pc);
PartitionCover partition_from_json(const Json& j);

/// Compact canonical text.
std::string emit_json(const Json& j);

}  // namespace sparsity
