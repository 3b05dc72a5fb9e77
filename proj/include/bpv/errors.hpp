#pragma once

#include <stdexcept>
#include <string>

namespace bpv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid grid, configuration file or parameter value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Two fields that must share one grid do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A jet does not carry enough derivatives for the requested quantity.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// The moving frame is undefined because psi_x vanishes.
class SingularFrameError : public Error {
 public:
  using Error::Error;
};

/// A phantom normalized invariant (fixed by the normalization) was requested.
class PhantomIndexError : public Error {
 public:
  using Error::Error;
};

/// A finite-difference stencil crosses the psi_x = 0 locus.
class StencilCrossingError : public Error {
 public:
  using Error::Error;
};

/// A domain condition of an identity fails (e.g. D^i_x I_020 = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closure produced non-finite values.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The time integration blew up.
class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, long step) : Error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

/// Group parameters outside the subgroup the field harness supports.
class HarnessDomainError : public Error {
 public:
  using Error::Error;
};

/// Fit range contains non-positive shell energies.
class FitDomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace bpv
