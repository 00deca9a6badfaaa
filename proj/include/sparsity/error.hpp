#pragma once

#include <stdexcept>
#include <string>

namespace sparsity {

enum class ErrorCode {
  Input,          // unknown vertex, malformed argument
  Parse,          // syntax error in a document or formula
  Validation,     // well-formed input violating a semantic rule
  Capability,     // exhaustive search cap exceeded
  Precondition,   // operation precondition violated
  StrategyBug,    // a game strategy produced an illegal move
  AlgorithmStall, // an iterative construction stopped making progress
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by searches whose input exceeds the configured size cap.
[[noreturn]] void throw_cap_exceeded(const char* operation, long long size, long long cap);

}  // namespace sparsity
