#include "sparsity/sparsity.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sparsity/commands.hpp"
#include "sparsity/error.hpp"
#include "sparsity/io.hpp"

struct spx_graph {
  sparsity::Graph g;
};

namespace {

thread_local std::string last_error;

spx_status status_of(sparsity::ErrorCode code) {
  using sparsity::ErrorCode;
  switch (code) {
    case ErrorCode::Input: return SPX_ERR_INPUT;
    case ErrorCode::Parse: return SPX_ERR_PARSE;
    case ErrorCode::Validation: return SPX_ERR_VALIDATION;
    case ErrorCode::Capability: return SPX_ERR_CAPABILITY;
    case ErrorCode::Precondition: return SPX_ERR_PRECONDITION;
    case ErrorCode::StrategyBug: return SPX_ERR_STRATEGY;
    case ErrorCode::AlgorithmStall: return SPX_ERR_STALL;
    case ErrorCode::Internal: return SPX_ERR_INTERNAL;
  }
  return SPX_ERR_INTERNAL;
}

template <class F>
spx_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return SPX_OK;
  } catch (const sparsity::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return SPX_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPX_ERR_INTERNAL;
  }
}

spx_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return SPX_ERR_INPUT;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

sparsity::Json parse_json(const char* text, const char* what) {
  try {
    return sparsity::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw sparsity::Error(sparsity::ErrorCode::Parse, std::string(what) + " is not valid JSON: " + e.what());
  }
}

sparsity::Strictness strictness(int strict) {
  return strict ? sparsity::Strictness::Strict : sparsity::Strictness::Lenient;
}

}  // namespace

extern "C" {

const char* spx_version(void) { return SPARSITY_VERSION; }

const char* spx_status_name(spx_status status) {
  switch (status) {
    case SPX_OK: return "ok";
    case SPX_ERR_INPUT: return "input";
    case SPX_ERR_PARSE: return "parse";
    case SPX_ERR_VALIDATION: return "validation";
    case SPX_ERR_CAPABILITY: return "capability";
    case SPX_ERR_PRECONDITION: return "precondition";
    case SPX_ERR_STRATEGY: return "strategy";
    case SPX_ERR_STALL: return "stall";
    case SPX_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* spx_last_error(void) { return last_error.c_str(); }

spx_status spx_graph_parse_edge_list(const char* text, int strict, spx_graph** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new spx_graph{sparsity::parse_edge_list(text, strictness(strict))}; });
}

spx_status spx_graph_parse_dimacs(const char* text, int strict, spx_graph** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new spx_graph{sparsity::parse_dimacs(text, strictness(strict))}; });
}

spx_status spx_graph_read_file(const char* path, int strict, spx_graph** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new spx_graph{sparsity::read_graph_file(path, strictness(strict))}; });
}

spx_status spx_graph_generate(const char* spec, spx_graph** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new spx_graph{sparsity::generate(sparsity::parse_generator_spec(spec))}; });
}

void spx_graph_free(spx_graph* g) { delete g; }

size_t spx_graph_vertex_count(const spx_graph* g) { return g ? g->g.size() : 0; }

size_t spx_graph_edge_count(const spx_graph* g) { return g ? g->g.edge_count() : 0; }

spx_status spx_graph_write_edge_list(const spx_graph* g, char** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = copy_out(sparsity::write_edge_list(g->g)); });
}

spx_status spx_run(const spx_graph* g, const char* command, const char* params_json, char** out) {
  if (!g) return null_argument("graph");
  if (!command) return null_argument("command");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    sparsity::Json params = params_json ? parse_json(params_json, "params") : sparsity::Json::object();
    *out = copy_out(sparsity::run_command(g->g, command, params).dump());
  });
}

spx_status spx_verify(const spx_graph* g, const char* certificate_json, char** out) {
  if (!g) return null_argument("graph");
  if (!certificate_json) return null_argument("certificate");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    sparsity::Json cert = parse_json(certificate_json, "certificate");
    *out = copy_out(sparsity::verify_certificate(g->g, cert).dump());
  });
}

spx_status spx_sweep(const char* config_json, char** out) {
  if (!config_json) return null_argument("config");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = copy_out(sparsity::run_sweep(parse_json(config_json, "sweep config")).dump()); });
}

void spx_string_free(char* s) { std::free(s); }

}  // extern "C"
