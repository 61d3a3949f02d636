#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

// Finite-dimensional state types used throughout the library. Every type
// validates its defining invariants on construction and throws
// std::invalid_argument with a human-readable message on violation, so code
// downstream can assume a DensityMatrix really is one.

namespace atlas::core {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Subsystem dimensions, slowest index first: dims {2,2,2} is a qubit triple
// with flat index a*4 + b*2 + c.
using Dims = std::vector<int>;

inline constexpr double herm_tol = 1e-12;   // max |M - M^dag| entry
inline constexpr double trace_tol = 1e-12;  // |tr - 1|
inline constexpr double psd_slack = 1e-10;  // eigenvalues may dip this far below 0
inline constexpr double norm_tol = 1e-12;   // | ||psi|| - 1 |

int dim_product(const Dims& dims);

class DensityMatrix {
 public:
  // Validates: square, dims consistent, Hermitian, unit trace, positive
  // semidefinite up to psd_slack.
  DensityMatrix(Mat entries, Dims dims);

  const Mat& entries() const { return entries_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(entries_.rows()); }

 private:
  Mat entries_;
  Dims dims_;
};

class PureState {
 public:
  // Validates: length matches dims, unit norm.
  PureState(Vec amplitudes, Dims dims);

  const Vec& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

 private:
  Vec amplitudes_;
  Dims dims_;
};

class HermitianOperator {
 public:
  // Validates: square, dims consistent, Hermitian.
  HermitianOperator(Mat entries, Dims dims);

  const Mat& entries() const { return entries_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(entries_.rows()); }

 private:
  Mat entries_;
  Dims dims_;
};

}  // namespace atlas::core
