#pragma once

#include <stdexcept>
#include <string>

namespace kernellab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point violates the domain of a kernel or model (off-interval, off-sphere, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A dense numerical routine (eigensolver, quadrature) failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Every eigenvalue of a matrix fell below the working floor.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A least-squares fit has too few usable points or zero spread.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

/// A conditional model produced a Bayes-function value outside [-1, 1].
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A randomized search hit its retry cap without reaching its target.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

/// A binary input file does not match its documented layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A class label is outside the documented range.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A dataset does not contain enough points for the requested subset.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// An image with all-zero pixels cannot be projected to the unit sphere.
class ZeroImageError : public Error {
 public:
  using Error::Error;
};

/// Invalid command-line or config-file input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kernellab
