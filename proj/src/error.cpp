#include "minorhom/error.hpp"

namespace minorhom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorKind::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::WouldDisconnect: return "WouldDisconnect";
    case ErrorKind::ContractLoop: return "ContractLoop";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::Unbalanced: return "Unbalanced";
    case ErrorKind::NoFit: return "NoFit";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Error";
}

}  // namespace minorhom
