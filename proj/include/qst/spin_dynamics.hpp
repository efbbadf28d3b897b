#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qst/chain.hpp"

namespace qst {

/// One-excitation block h_N of the isotropic Heisenberg Hamiltonian
///   H = -sum_i J_i (sx sx + sy sy + sz sz),  s^a = Pauli matrices,
/// as a real symmetric tridiagonal matrix:
///   offdiag[j] = -2 J_{j+1},
///   diag[j]    = -sum_k J_k + 2 (J_j + J_{j+1})   (J_0 = J_N = 0).
struct OneExcitationBlock {
    Eigen::VectorXd diag;
    Eigen::VectorXd offdiag;
};

OneExcitationBlock build_one_excitation_block(const CouplingProfile& profile);

/// Dense Hamiltonian block of the k-excitation sector. Basis states are the
/// C(N,k) sets of excited sites in lexicographic order of their index sets.
struct KExcitationBlock {
    int k = 0;
    std::vector<std::vector<int>> basis;  // 1-based site indices, ascending
    Eigen::MatrixXd matrix;
};

inline constexpr int kDefaultDenseCap = 20000;

/// Builds the k-excitation block. Rejects k < 0 or k > N; prints a warning to
/// stderr when the sector dimension exceeds dense_cap.
KExcitationBlock build_k_excitation_block(const CouplingProfile& profile, int k,
                                          int dense_cap = kDefaultDenseCap);

/// Eigensystem with ascending eigenvalues and orthonormal eigenvectors
/// (columns). Sign convention: the largest-magnitude component of each
/// eigenvector is positive (first such index on ties). overlaps[i] = <v_i|1>
/// against the first basis state, weights[i] = overlaps[i]^2.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    Eigen::VectorXd overlaps;
    Eigen::VectorXd weights;
};

SpectralDecomposition eigendecompose(const OneExcitationBlock& block);
SpectralDecomposition eigendecompose(const KExcitationBlock& block);
SpectralDecomposition eigendecompose_dense(const Eigen::MatrixXd& matrix);

/// Eigenvalues plus the first and last rows of the eigenvector matrix, which
/// is all the transmission probability needs. Computed with an implicit-shift
/// tridiagonal QL iteration that rotates only those two rows, so it costs
/// O(N^2) instead of O(N^3). Iteration cap: 50 * dim.
struct EndpointSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::VectorXd first_components;  // v_i(1)
    Eigen::VectorXd last_components;   // v_i(N)
};

EndpointSpectrum endpoint_eigensystem(const OneExcitationBlock& block);

/// P_{1,N}(t) = |<N| exp(-i t h_N) |1>|^2.
double transmission_probability(const CouplingProfile& profile, double time);
double transmission_probability(const CouplingProfile& profile, const TransferTask& task);

/// Full arrival distribution P_{1,j}(t) for j = 1..N; sums to 1 (unitarity).
Eigen::VectorXd arrival_distribution(const CouplingProfile& profile, double time);

/// Brute-force |<i| exp(-i t H) |j>|^2 on the full 2^N Hilbert space of the
/// Hamiltonian above. Test oracle; rejects N > 12. Sites are 1-based.
double full_space_propagator_oracle(const CouplingProfile& profile, double time,
                                    int site_i, int site_j);

/// Dense 2^N x 2^N Hamiltonian used by the oracle. Basis state m has site s
/// excited iff bit (s-1) of m is set.
Eigen::MatrixXd build_full_hamiltonian(const CouplingProfile& profile);

/// True for eigenvalue indices that do not sit in a degenerate cluster
/// (adjacent gap < rel_tol * spectral width). Mirror-symmetry checks skip
/// clustered indices: eigenvectors are basis-dependent inside a degenerate
/// subspace.
std::vector<bool> nondegenerate_mask(const Eigen::VectorXd& ascending_eigenvalues,
                                     double rel_tol = 1e-10);

}  // namespace qst
