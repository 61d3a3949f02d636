#include "atlas/core/types.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace atlas::core {

namespace {

void check_dims(const Dims& dims, int n, const char* what) {
  if (dims.empty())
    throw std::invalid_argument(std::string(what) + ": dims list is empty");
  long long prod = 1;
  for (int d : dims) {
    if (d < 1)
      throw std::invalid_argument(std::string(what) + ": nonpositive subsystem dimension");
    prod *= d;
  }
  if (prod != n) {
    std::ostringstream msg;
    msg << what << ": dims product " << prod << " does not match size " << n;
    throw std::invalid_argument(msg.str());
  }
}

double max_antihermitian_part(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

int dim_product(const Dims& dims) {
  int prod = 1;
  for (int d : dims) prod *= d;
  return prod;
}

DensityMatrix::DensityMatrix(Mat entries, Dims dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  check_dims(dims_, static_cast<int>(entries_.rows()), "DensityMatrix");
  if (double h = max_antihermitian_part(entries_); h > herm_tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max |M - M^dag| = " << h << ")";
    throw std::invalid_argument(msg.str());
  }
  if (double t = std::abs(entries_.trace() - Complex(1.0)); t > trace_tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << t;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(entries_, Eigen::EigenvaluesOnly);
  if (double lo = es.eigenvalues().minCoeff(); lo < -psd_slack) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << lo;
    throw std::invalid_argument(msg.str());
  }
}

PureState::PureState(Vec amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  check_dims(dims_, static_cast<int>(amplitudes_.size()), "PureState");
  if (double n = std::abs(amplitudes_.norm() - 1.0); n > norm_tol) {
    std::ostringstream msg;
    msg << "PureState: norm deviates from 1 by " << n;
    throw std::invalid_argument(msg.str());
  }
}

HermitianOperator::HermitianOperator(Mat entries, Dims dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("HermitianOperator: matrix is not square");
  check_dims(dims_, static_cast<int>(entries_.rows()), "HermitianOperator");
  if (double h = max_antihermitian_part(entries_); h > herm_tol) {
    std::ostringstream msg;
    msg << "HermitianOperator: not Hermitian (max |M - M^dag| = " << h << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace atlas::core
