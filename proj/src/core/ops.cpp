#include "atlas/core/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atlas::core {

namespace {

// Row-major strides: stride of the last subsystem is 1.
std::vector<long> strides_of(const Dims& dims) {
  std::vector<long> s(dims.size());
  long acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= dims[i];
  }
  return s;
}

void check_shape(const Mat& m, const Dims& dims, const char* what) {
  if (m.rows() != m.cols() || m.rows() != dim_product(dims))
    throw std::invalid_argument(std::string(what) + ": matrix shape does not match dims");
}

// Flat offset of a linear index over the listed subsystems (last one fastest).
long sub_offset(const Dims& dims, const std::vector<long>& strides,
                const std::vector<int>& subs, long lin) {
  long off = 0;
  for (int i = static_cast<int>(subs.size()) - 1; i >= 0; --i) {
    const int d = dims[subs[i]];
    off += (lin % d) * strides[subs[i]];
    lin /= d;
  }
  return off;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.entries(), b.entries()), concat(a.dims(), b.dims()));
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState(kron(a.amplitudes(), b.amplitudes()), concat(a.dims(), b.dims()));
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.entries(), b.entries()), concat(a.dims(), b.dims()));
}

Mat partial_trace_raw(const Mat& m, const Dims& dims, const std::vector<int>& keep) {
  check_shape(m, dims, "partial_trace");
  const int n = static_cast<int>(dims.size());
  if (keep.empty())
    throw std::invalid_argument("partial_trace: keep list is empty");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep list must be strictly increasing");
  }

  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);

  const auto strides = strides_of(dims);
  long dk = 1, dt = 1;
  for (int k : keep) dk *= dims[k];
  for (int t : traced) dt *= dims[t];

  std::vector<long> koff(dk), toff(dt);
  for (long i = 0; i < dk; ++i) koff[i] = sub_offset(dims, strides, keep, i);
  for (long i = 0; i < dt; ++i) toff[i] = sub_offset(dims, strides, traced, i);

  Mat out = Mat::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Complex acc(0.0, 0.0);
      for (long t = 0; t < dt; ++t) acc += m(koff[r] + toff[t], koff[c] + toff[t]);
      out(r, c) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  Mat out = partial_trace_raw(rho.entries(), rho.dims(), keep);
  Dims kept;
  for (int k : keep) kept.push_back(rho.dims()[k]);
  return DensityMatrix(std::move(out), std::move(kept));
}

Mat partial_transpose_raw(const Mat& m, const Dims& dims, int subsystem) {
  check_shape(m, dims, "partial_transpose");
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size()))
    throw std::invalid_argument("partial_transpose: subsystem index out of range");

  const auto strides = strides_of(dims);
  const long stride = strides[subsystem];
  const int d = dims[subsystem];
  const long n = m.rows();

  Mat out(n, n);
  for (long i = 0; i < n; ++i) {
    const long di = (i / stride) % d;
    for (long j = 0; j < n; ++j) {
      const long dj = (j / stride) % d;
      out(i + (dj - di) * stride, j + (di - dj) * stride) = m(i, j);
    }
  }
  return out;
}

HermitianOperator partial_transpose(const DensityMatrix& rho, int subsystem) {
  return HermitianOperator(partial_transpose_raw(rho.entries(), rho.dims(), subsystem),
                           rho.dims());
}

std::vector<double> eigenvalues_hermitian_raw(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenvalues_hermitian: matrix is not square");
  if (double h = (m - m.adjoint()).cwiseAbs().maxCoeff(); h > herm_tol)
    throw std::invalid_argument("eigenvalues_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> eigenvalues_hermitian(const HermitianOperator& op) {
  return eigenvalues_hermitian_raw(op.entries());
}

double entropy_of_spectrum(const std::vector<double>& lambda) {
  double s = 0.0;
  for (double l : lambda)
    if (l > 1e-15) s -= l * std::log2(l);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.entries(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return entropy_of_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

PureState purify(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.entries());
  const auto& ev = es.eigenvalues();  // ascending
  const int dim = rho.dim();

  int rank = 0;
  for (int i = 0; i < dim; ++i)
    if (ev(i) > 1e-12) ++rank;
  if (rank == 0)
    throw std::invalid_argument("purify: state has no positive spectrum");

  const int anc = next_pow2(rank);
  Vec psi = Vec::Zero(static_cast<long>(dim) * anc);
  for (int r = 0; r < rank; ++r) {
    const int col = dim - 1 - r;  // largest eigenvalues first
    const double w = std::sqrt(ev(col));
    for (int i = 0; i < dim; ++i) psi(static_cast<long>(i) * anc + r) = w * es.eigenvectors()(i, col);
  }
  psi /= psi.norm();  // absorb the weight lost to the rank cutoff

  Dims dims = rho.dims();
  dims.push_back(anc);
  return PureState(std::move(psi), std::move(dims));
}

DensityMatrix density(const PureState& psi) {
  Mat m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(std::move(m), psi.dims());
}

Vec basis_ket(int dim, int k) {
  if (k < 0 || k >= dim)
    throw std::invalid_argument("basis_ket: index out of range");
  Vec v = Vec::Zero(dim);
  v(k) = Complex(1.0, 0.0);
  return v;
}

Vec real_qubit_ket(double angle) {
  Vec v(2);
  v << Complex(std::cos(angle), 0.0), Complex(std::sin(angle), 0.0);
  return v;
}

Vec bloch_ket(double theta, double phi) {
  Vec v(2);
  v << Complex(std::cos(theta / 2.0), 0.0),
      std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
  return v;
}

}  // namespace atlas::core
