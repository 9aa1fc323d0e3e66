#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace bhf {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using cplx = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or contradictory input (dimension mismatch, empty sweep, unknown key).
struct ConfigError : Error {
  using Error::Error;
};
// Grid too coarse or too short for the requested object.
struct ResolutionError : Error {
  using Error::Error;
};
struct NoBoundState : Error {
  using Error::Error;
};
struct BracketError : Error {
  using Error::Error;
};
struct InfeasibleError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct InconsistentInput : Error {
  using Error::Error;
};

}  // namespace bhf
