#pragma once

#include <stdexcept>
#include <string>

namespace minorhom {

// Every recoverable failure in the library is thrown as an Error carrying one
// of these kinds.  The CLI maps kinds onto exit codes; tests match on them.
enum class ErrorKind {
  UnknownVertex,
  UnknownEdge,
  DuplicateVertexId,
  DuplicateEdgeId,
  Disconnected,
  InvalidSize,
  WouldDisconnect,
  ContractLoop,
  Mismatch,
  TooLarge,
  NotMonotone,
  NotSubset,
  NotFunctorial,
  BadDegree,
  Unbalanced,
  NoFit,
  BadConfig,
  IoFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace minorhom
