#pragma once

#include <stdexcept>
#include <string>

namespace riphawk {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations (v >= c, T <= 0, argument outside validity, ...).
class domain_error : public error {
 public:
  using error::error;
};

// The existence condition 1/(n0+eta) <= v/c < 1/n0 fails.
class no_horizon_error : public error {
 public:
  using error::error;
};

// Degenerate double root c/v = n0 + eta: kappa = 0, every temperature
// downstream is zero and the Euclidean period diverges.
class tangent_horizon_error : public error {
 public:
  tangent_horizon_error(const std::string& what, double x_tangent)
      : error(what), x_tangent(x_tangent) {}
  double x_tangent;  // location of the would-be horizon (argmax of the intensity)
};

// Mode analysis requested exactly on a horizon (n v / c = 1).
class horizon_singular_error : public error {
 public:
  using error::error;
};

// Frobenius recursion pivot vanished (cannot happen for generic exponents).
class resonant_indicial_error : public error {
 public:
  using error::error;
};

class quadrature_error : public error {
 public:
  using error::error;
};

class ode_error : public error {
 public:
  using error::error;
};

// Numerov grid too coarse for the local wavelength.
class resolution_error : public error {
 public:
  using error::error;
};

// A condition the theory guarantees failed numerically; firing indicates a bug.
class internal_inconsistency_error : public error {
 public:
  using error::error;
};

// Bad CLI input, config file or material file.
class config_error : public error {
 public:
  using error::error;
};

}  // namespace riphawk
