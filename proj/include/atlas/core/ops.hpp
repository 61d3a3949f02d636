#pragma once

#include <vector>

#include "atlas/core/types.hpp"

// Linear-algebra primitives on multipartite states. Everything is dense and
// aimed at the few-qubit / few-mode regime; all entropies are base-2.

namespace atlas::core {

// Kronecker products; the typed overloads concatenate the dims lists.
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

// Trace out every subsystem not listed in `keep`. `keep` must be a strictly
// increasing, non-empty list of valid subsystem indices; the kept subsystems
// retain their original order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
Mat partial_trace_raw(const Mat& m, const Dims& dims, const std::vector<int>& keep);

// Transpose a single subsystem. The result is Hermitian but generally not
// positive, hence the operator type.
HermitianOperator partial_transpose(const DensityMatrix& rho, int subsystem);
Mat partial_transpose_raw(const Mat& m, const Dims& dims, int subsystem);

// Real eigenvalues of a Hermitian matrix, ascending. Throws if the input is
// not Hermitian within herm_tol.
std::vector<double> eigenvalues_hermitian(const HermitianOperator& op);
std::vector<double> eigenvalues_hermitian_raw(const Mat& m);

// S(rho) = -sum lambda log2 lambda, eigenvalues below 1e-15 skipped.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const std::vector<double>& lambda);

// Minimal purification: spectral-decompose rho and attach one ancilla
// subsystem of dimension next-power-of-two(rank) as the last factor.
// partial_trace over the ancilla recovers rho to ~1e-10.
PureState purify(const DensityMatrix& rho);

// |psi><psi| with the same dims.
DensityMatrix density(const PureState& psi);

// Convenience kets.
Vec basis_ket(int dim, int k);
// (cos a, sin a) and the Bloch-sphere ket (cos(t/2), e^{i p} sin(t/2)).
Vec real_qubit_ket(double angle);
Vec bloch_ket(double theta, double phi);

}  // namespace atlas::core
