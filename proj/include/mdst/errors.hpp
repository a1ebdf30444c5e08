#pragma once

#include <stdexcept>
#include <string>

namespace mdst {

enum class ErrorKind {
  // input parsing and construction
  BadHeader,
  IdOutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  // tree operations
  SameVertex,
  AlreadyTreeEdge,
  NotOnCycle,
  // dynamic forest
  WouldCreateCycle,
  NotAForestEdge,
  NotConnected,
  // augmentation
  ThresholdTooSmall,
  EmptySk,
  InvalidSequence,
  // certificates
  NotTerminal,
  ComponentNotConnected,
  ComponentsOverlap,
  UncoveredBoundaryEdge,
  BoundOverclaimed,
  // oracles and generators
  TooLarge,
  BadParams,
};

const char* error_kind_name(ErrorKind k);

// All contract violations surface as this one exception type; `kind` lets
// callers (and tests) dispatch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::AlreadyTreeEdge: return "AlreadyTreeEdge";
    case ErrorKind::NotOnCycle: return "NotOnCycle";
    case ErrorKind::WouldCreateCycle: return "WouldCreateCycle";
    case ErrorKind::NotAForestEdge: return "NotAForestEdge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::ThresholdTooSmall: return "ThresholdTooSmall";
    case ErrorKind::EmptySk: return "EmptySk";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::NotTerminal: return "NotTerminal";
    case ErrorKind::ComponentNotConnected: return "ComponentNotConnected";
    case ErrorKind::ComponentsOverlap: return "ComponentsOverlap";
    case ErrorKind::UncoveredBoundaryEdge: return "UncoveredBoundaryEdge";
    case ErrorKind::BoundOverclaimed: return "BoundOverclaimed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadParams: return "BadParams";
  }
  return "UnknownError";
}

}  // namespace mdst
