#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmop {

enum class ErrorKind {
  NotCoprime,
  NonMonicDivisor,
  ZeroElement,
  NotHomogeneous,
  NotMonic,
  QuasiHomogeneous,
  MalformedSpec,
  GammaTouchesH,
  LambdaNotSpecialized,
  TruncationTooSmall,
  PreconditionInitialForm,
  HIsZero,
  InvalidLambda,
  NoConvergence,
  Parse,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::QuasiHomogeneous: return "QuasiHomogeneous";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::GammaTouchesH: return "GammaTouchesH";
    case ErrorKind::LambdaNotSpecialized: return "LambdaNotSpecialized";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::PreconditionInitialForm: return "PreconditionInitialForm";
    case ErrorKind::HIsZero: return "HIsZero";
    case ErrorKind::InvalidLambda: return "InvalidLambda";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Errors caused by the caller's input rather than a defect in the engine.
  bool is_precondition() const noexcept { return kind_ != ErrorKind::NoConvergence; }

 private:
  ErrorKind kind_;
};

}  // namespace gmop
