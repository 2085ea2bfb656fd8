#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace odot {

enum class ErrorKind {
  DuplicateId,
  UnknownId,
  CycleError,
  GradingError,
  EmptyFaceSet,
  FaceOverlap,
  NotClosed,
  NotMonotone,
  NotCartesian,
  NotInclusion,
  NotRound,
  NotParallel,
  BoundaryMismatch,
  NotSubmolecule,
  NotAtom,
  KNotInBoundary,
  NotDegenerate,
  TypeMismatch,
  MissingWitness,
  NotMarkingPreserving,
  InvalidDiagram,
  ParseError,
};

std::string_view error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace odot
