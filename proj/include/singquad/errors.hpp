#pragma once

#include <stdexcept>
#include <string>

namespace singquad {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation requested at a point where the integrand is singular or outside
// its interval.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A sum scheme was applied to an integrand it cannot handle (e.g. endpoint
// trapezoid weights on a function that blows up at x = 1).
class SchemeMismatchError : public Error {
 public:
  using Error::Error;
};

// The integrand does not satisfy the structural hypotheses of the requested
// result (wrong decomposition shape, wrong sign, wrong smoothness class, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A derivative order was requested that the smooth part does not provide.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (bad n, bad tolerance, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Closed-form integration of a power term whose integral does not exist.
class DivergentIntegralError : public Error {
 public:
  using Error::Error;
};

// Rate fitting needs at least four usable data points.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// An envelope constant was requested over an empty window.
class EmptyWindowError : public Error {
 public:
  using Error::Error;
};

// Named fixture lookup failed.
class UnknownFixtureError : public Error {
 public:
  using Error::Error;
};

// The dyadic search for bracket constants ran out of candidates, or a computed
// certificate failed its own re-check.
class CertificateError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its budget.  Carries the best estimate seen so
// far together with the residual error estimate for that value.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double residual)
      : Error(what), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

}  // namespace singquad
