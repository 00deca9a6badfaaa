#pragma once

// Named operations with JSON parameters and JSON results: the layer behind
// the C API and the command-line tool.

#include <string>

#include "sparsity/graph.hpp"
#include "sparsity/serialize.hpp"

namespace sparsity {

/// FNV-1a over the vertex count and the sorted edge list, as 16 hex digits.
std::string graph_digest(const Graph& g);

/// Runs `command` on g. Returns {"command", "input", "params", "result",
/// "certificate", "seed", "version", "rng"}; "params" echoes the parameters
/// with defaults filled in. Results that can be absent carry a boolean
/// "present".
Json run_command(const Graph& g, const std::string& command, const Json& params);

/// Re-checks a certificate emitted by run_command against g with the
/// independent validators. Returns {"verified": bool, "violations": [...]}.
Json verify_certificate(const Graph& g, const Json& certificate);

/// Tabulates measurements over generated graph families. Row failures are
/// recorded in the row and do not stop the sweep.
Json run_sweep(const Json& config);

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

}  // namespace sparsity
