#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twoblock {

enum class ErrorKind {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  EmptySet,
  NotOnCycle,
  Acyclic,
  CapExceeded,
  PreconditionViolated,
  NotAChord,
  NotHamiltonian,
  NotStrong,
  AttachMismatch,
  StructuralViolation,
  BoundExceeded,
  ParseError,
  LemmaViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotOnCycle: return "NotOnCycle";
    case ErrorKind::Acyclic: return "Acyclic";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAChord: return "NotAChord";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::NotStrong: return "NotStrong";
    case ErrorKind::AttachMismatch: return "AttachMismatch";
    case ErrorKind::StructuralViolation: return "StructuralViolation";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
  }
  return "Unknown";
}

}  // namespace twoblock
