// riscade - cascaded channel estimation for RIS-aided mmWave uplinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <armadillo>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace riscade {

using arma::cx_double;
using arma::cx_mat;
using arma::cx_vec;
using arma::uword;

// Error taxonomy. Estimators throw; the experiment harness converts thrown
// failures into failed-trial rows so a sweep never aborts mid-run.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised before any estimation runs when the slot budget cannot support the
// requested number of common paths.
class PilotBudgetError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Carries the spectrum peaks found so far so a caller can diagnose why the
// requested number of directions could not be resolved.
class EstimationFailure : public Error {
 public:
  EstimationFailure(const std::string& what, std::vector<double> peak_freqs)
      : Error(what), peak_freqs_(std::move(peak_freqs)) {}
  const std::vector<double>& peak_freqs() const { return peak_freqs_; }

 private:
  std::vector<double> peak_freqs_;
};

class NumericalRankError : public Error {
 public:
  using Error::Error;
};

class DegenerateReference : public Error {
 public:
  using Error::Error;
};

// Carries the support accumulated before the least-squares step became
// rank-deficient.
class RecoveryFailure : public Error {
 public:
  RecoveryFailure(const std::string& what, arma::uvec partial_support)
      : Error(what), partial_support_(std::move(partial_support)) {}
  const arma::uvec& partial_support() const { return partial_support_; }

 private:
  arma::uvec partial_support_;
};

class DegenerateScene : public Error {
 public:
  using Error::Error;
};

class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

class OracleFailure : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Reduces a spatial frequency to the principal period [-0.5, 0.5). Steering
// vectors are periodic with period 1, so reduction never changes a channel;
// it does make equal-modulo-period inputs bit-identical.
inline double principal_period(double x) { return x - std::floor(x + 0.5); }

// Circular distance between two spatial frequencies (period 1).
inline double circular_distance(double a, double b) {
  const double d = std::abs(principal_period(a - b));
  return std::min(d, 1.0 - d);
}

// SVD-based pseudo-inverse. Singular values below rel_tol times the largest
// are treated as zero. When rank_out is non-null it receives the numerical
// rank under the same truncation rule.
cx_mat pseudo_inverse(const cx_mat& a, double rel_tol = 1e-10,
                      uword* rank_out = nullptr);

}  // namespace riscade
