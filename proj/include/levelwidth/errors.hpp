#ifndef LEVELWIDTH_ERRORS_HPP
#define LEVELWIDTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lw {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad parameters, coordinate
/// outside the allowed region, malformed spec strings).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at the singular point of a divergent potential.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No bounded classical motion exists at the requested energy.
class NoOrbitError : public Error {
 public:
  using Error::Error;
};

/// Operation not available for the given potential family.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical procedure did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : Error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Energy window exhausted while bracketing a quantization root.
class QuantizationError : public Error {
 public:
  using Error::Error;
};

/// Requested quantity beyond what a sampled orbit can resolve.
class ResolutionError : public Error {
 public:
  ResolutionError(const std::string& what, double limit) : Error(what), limit_(limit) {}
  /// Smallest resolvable time, or largest resolvable harmonic, depending on the source.
  double limit() const noexcept { return limit_; }

 private:
  double limit_;
};

/// A width sum needs dipole entries that the table does not carry.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& what, int missing_l) : Error(what), missing_l_(missing_l) {}
  int missing_l() const noexcept { return missing_l_; }

 private:
  int missing_l_;
};

/// Power-law tail fit could not be performed.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace lw

#endif  // LEVELWIDTH_ERRORS_HPP
