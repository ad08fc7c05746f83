#pragma once

#include <stdexcept>
#include <string>

namespace geolie {

/// Machine-readable error codes carried by every geolie::Error.
enum class Err {
  MalformedSpec,
  JacobiViolation,
  AntisymmetryViolation,
  DimensionMismatch,
  NotNilpotent,
  NotBracketGenerating,
  Unsupported,
  ZeroVector,
  EmptyCloud,
  DisconnectedNet,
  TooLargeForExact,
  NoInfinityBoundary,
  OverlappingSets,
  BadRadii,
  BadExponent,
  SolverDiverged,
  WindowTooShort,
  EmptySample,
  MetricViolation,
  BadInput,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedSpec: return "MalformedSpec";
    case Err::JacobiViolation: return "JacobiViolation";
    case Err::AntisymmetryViolation: return "AntisymmetryViolation";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::NotBracketGenerating: return "NotBracketGenerating";
    case Err::Unsupported: return "Unsupported";
    case Err::ZeroVector: return "ZeroVector";
    case Err::EmptyCloud: return "EmptyCloud";
    case Err::DisconnectedNet: return "DisconnectedNet";
    case Err::TooLargeForExact: return "TooLargeForExact";
    case Err::NoInfinityBoundary: return "NoInfinityBoundary";
    case Err::OverlappingSets: return "OverlappingSets";
    case Err::BadRadii: return "BadRadii";
    case Err::BadExponent: return "BadExponent";
    case Err::SolverDiverged: return "SolverDiverged";
    case Err::WindowTooShort: return "WindowTooShort";
    case Err::EmptySample: return "EmptySample";
    case Err::MetricViolation: return "MetricViolation";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message),
        m_code(code),
        m_message(std::move(message)) {}

  [[nodiscard]] Err code() const { return m_code; }
  [[nodiscard]] const std::string& message() const { return m_message; }

 private:
  Err m_code;
  std::string m_message;
};

}  // namespace geolie
