#include "qst/spin_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

double coupling_sum(const CouplingProfile& profile) {
    return std::accumulate(profile.couplings.begin(), profile.couplings.end(), 0.0);
}

// Binomial coefficient with overflow saturation (dimension checks only).
long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > (1ll << 40)) return 1ll << 40;
    }
    return result;
}

void fix_sign_convention(Eigen::MatrixXd& vectors) {
    for (Eigen::Index col = 0; col < vectors.cols(); ++col) {
        Eigen::Index max_idx = 0;
        double max_abs = -1.0;
        for (Eigen::Index row = 0; row < vectors.rows(); ++row) {
            const double a = std::abs(vectors(row, col));
            if (a > max_abs) {
                max_abs = a;
                max_idx = row;
            }
        }
        if (vectors(max_idx, col) < 0.0) vectors.col(col) = -vectors.col(col);
    }
}

SpectralDecomposition finish_decomposition(Eigen::VectorXd values, Eigen::MatrixXd vectors) {
    fix_sign_convention(vectors);
    SpectralDecomposition out;
    out.overlaps = vectors.row(0).transpose();
    out.weights = out.overlaps.cwiseProduct(out.overlaps);
    out.eigenvalues = std::move(values);
    out.eigenvectors = std::move(vectors);
    return out;
}

}  // namespace

OneExcitationBlock build_one_excitation_block(const CouplingProfile& profile) {
    validate_profile(profile, /*require_nonnegative=*/false);
    const int n = profile.n_sites;
    const double total = coupling_sum(profile);

    OneExcitationBlock block;
    block.diag.resize(n);
    block.offdiag.resize(n - 1);
    for (int j = 0; j < n; ++j) {
        const double left = (j > 0) ? profile.couplings[j - 1] : 0.0;
        const double right = (j < n - 1) ? profile.couplings[j] : 0.0;
        block.diag[j] = -total + 2.0 * (left + right);
    }
    for (int j = 0; j < n - 1; ++j) block.offdiag[j] = -2.0 * profile.couplings[j];
    return block;
}

KExcitationBlock build_k_excitation_block(const CouplingProfile& profile, int k,
                                          int dense_cap) {
    validate_profile(profile, /*require_nonnegative=*/false);
    const int n = profile.n_sites;
    if (k < 0 || k > n) {
        throw std::invalid_argument("k: excitation number " + std::to_string(k) +
                                    " outside [0, N=" + std::to_string(n) + "]");
    }
    const long long dim_ll = binomial(n, k);
    if (dim_ll > dense_cap) {
        std::fprintf(stderr,
                     "warning: %d-excitation sector of N=%d has dimension %lld, "
                     "above the dense-diagonalization cap %d\n",
                     k, n, dim_ll, dense_cap);
    }
    const int dim = static_cast<int>(dim_ll);

    // Basis: ascending index sets in lexicographic order (0-based internally).
    std::vector<std::vector<int>> basis;
    basis.reserve(dim);
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
        basis.push_back(combo);
        int pos = k - 1;
        while (pos >= 0 && combo[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++combo[pos];
        for (int q = pos + 1; q < k; ++q) combo[q] = combo[q - 1] + 1;
    }

    KExcitationBlock block;
    block.k = k;
    block.matrix = Eigen::MatrixXd::Zero(dim, dim);

    std::vector<char> excited(n);
    std::vector<int> hopped;
    for (int idx = 0; idx < dim; ++idx) {
        const auto& sites = basis[idx];
        std::fill(excited.begin(), excited.end(), 0);
        for (int s : sites) excited[s] = 1;

        // Diagonal: -sum_b J_b z_b with z_b = +1 for equal neighbor spins.
        double diag = 0.0;
        for (int b = 0; b < n - 1; ++b) {
            const double z = (excited[b] == excited[b + 1]) ? 1.0 : -1.0;
            diag -= profile.couplings[b] * z;
        }
        block.matrix(idx, idx) = diag;

        // Hops: -2 J_b between sets differing by one excitation across bond b.
        for (int b = 0; b < n - 1; ++b) {
            if (excited[b] == excited[b + 1]) continue;
            hopped = sites;
            for (int& s : hopped) {
                if (s == b) s = b + 1;
                else if (s == b + 1) s = b;
            }
            std::sort(hopped.begin(), hopped.end());
            const auto it = std::lower_bound(basis.begin(), basis.end(), hopped);
            const int jdx = static_cast<int>(it - basis.begin());
            block.matrix(idx, jdx) = -2.0 * profile.couplings[b];
        }
    }

    // Report basis with 1-based site labels.
    block.basis.reserve(dim);
    for (auto& sites : basis) {
        for (int& s : sites) ++s;
        block.basis.push_back(std::move(sites));
    }
    return block;
}

SpectralDecomposition eigendecompose(const OneExcitationBlock& block) {
    if (!block.diag.allFinite() || !block.offdiag.allFinite()) {
        throw std::invalid_argument("one-excitation block has non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(block.diag, block.offdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("tridiagonal eigensolver failed to converge");
    }
    return finish_decomposition(solver.eigenvalues(), solver.eigenvectors());
}

SpectralDecomposition eigendecompose(const KExcitationBlock& block) {
    return eigendecompose_dense(block.matrix);
}

SpectralDecomposition eigendecompose_dense(const Eigen::MatrixXd& matrix) {
    if (!matrix.allFinite()) {
        throw std::invalid_argument("matrix has non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense symmetric eigensolver failed to converge");
    }
    return finish_decomposition(solver.eigenvalues(), solver.eigenvectors());
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix, accumulating
// the Givens rotations into just the first and last rows of the eigenvector
// matrix. Follows the classic tql2 scheme.
EndpointSpectrum endpoint_eigensystem(const OneExcitationBlock& block) {
    const int n = static_cast<int>(block.diag.size());
    std::vector<double> d(block.diag.data(), block.diag.data() + n);
    std::vector<double> e(n, 0.0);
    for (int i = 0; i < n - 1; ++i) e[i] = block.offdiag[i];

    std::vector<double> row_first(n, 0.0), row_last(n, 0.0);
    row_first[0] = 1.0;
    row_last[n - 1] = 1.0;

    const double eps = std::numeric_limits<double>::epsilon();
    const long iteration_cap = 50l * n;
    long iterations = 0;

    for (int l = 0; l < n; ++l) {
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iterations > iteration_cap) {
                throw std::runtime_error(
                    "endpoint eigensolver exceeded iteration cap 50*dim");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                f = row_first[i + 1];
                row_first[i + 1] = s * row_first[i] + c * f;
                row_first[i] = c * row_first[i] - s * f;
                f = row_last[i + 1];
                row_last[i + 1] = s * row_last[i] + c * f;
                row_last[i] = c * row_last[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    EndpointSpectrum out;
    out.eigenvalues.resize(n);
    out.first_components.resize(n);
    out.last_components.resize(n);
    for (int i = 0; i < n; ++i) {
        out.eigenvalues[i] = d[order[i]];
        out.first_components[i] = row_first[order[i]];
        out.last_components[i] = row_last[order[i]];
    }
    return out;
}

double transmission_probability(const CouplingProfile& profile, double time) {
    const EndpointSpectrum spec = endpoint_eigensystem(build_one_excitation_block(profile));
    double re = 0.0, im = 0.0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        const double w = spec.first_components[i] * spec.last_components[i];
        const double phase = -spec.eigenvalues[i] * time;
        re += w * std::cos(phase);
        im += w * std::sin(phase);
    }
    return re * re + im * im;
}

double transmission_probability(const CouplingProfile& profile, const TransferTask& task) {
    validate_task(task);
    return transmission_probability(profile, task.arrival_time);
}

Eigen::VectorXd arrival_distribution(const CouplingProfile& profile, double time) {
    const SpectralDecomposition spec = eigendecompose(build_one_excitation_block(profile));
    const int n = profile.n_sites;
    Eigen::VectorXd distribution(n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> amp = 0.0;
        for (int i = 0; i < n; ++i) {
            amp += spec.eigenvectors(j, i) * spec.overlaps[i] *
                   std::exp(std::complex<double>(0.0, -spec.eigenvalues[i] * time));
        }
        distribution[j] = std::norm(amp);
    }
    return distribution;
}

Eigen::MatrixXd build_full_hamiltonian(const CouplingProfile& profile) {
    validate_profile(profile, /*require_nonnegative=*/false);
    const int n = profile.n_sites;
    if (n > 12) {
        throw std::invalid_argument("full-space Hamiltonian limited to N <= 12, got N = " +
                                    std::to_string(n));
    }
    const int dim = 1 << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int mask = 0; mask < dim; ++mask) {
        double diag = 0.0;
        for (int b = 0; b < n - 1; ++b) {
            const bool equal = (((mask >> b) ^ (mask >> (b + 1))) & 1) == 0;
            diag -= profile.couplings[b] * (equal ? 1.0 : -1.0);
            if (!equal) {
                const int partner = mask ^ (3 << b);
                h(mask, partner) = -2.0 * profile.couplings[b];
            }
        }
        h(mask, mask) = diag;
    }
    return h;
}

double full_space_propagator_oracle(const CouplingProfile& profile, double time,
                                    int site_i, int site_j) {
    const int n = profile.n_sites;
    if (site_i < 1 || site_i > n || site_j < 1 || site_j > n) {
        throw std::invalid_argument("oracle site indices must lie in 1..N");
    }
    const Eigen::MatrixXd h = build_full_hamiltonian(profile);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("full-space eigensolver failed to converge");
    }
    const int bi = 1 << (site_i - 1);
    const int bj = 1 << (site_j - 1);
    std::complex<double> amp = 0.0;
    for (int k = 0; k < h.rows(); ++k) {
        amp += solver.eigenvectors()(bi, k) * solver.eigenvectors()(bj, k) *
               std::exp(std::complex<double>(0.0, -solver.eigenvalues()[k] * time));
    }
    return std::norm(amp);
}

std::vector<bool> nondegenerate_mask(const Eigen::VectorXd& ascending_eigenvalues,
                                     double rel_tol) {
    const int n = static_cast<int>(ascending_eigenvalues.size());
    std::vector<bool> mask(n, true);
    if (n < 2) return mask;
    const double width = ascending_eigenvalues[n - 1] - ascending_eigenvalues[0];
    const double threshold = rel_tol * width;
    for (int i = 0; i + 1 < n; ++i) {
        if (ascending_eigenvalues[i + 1] - ascending_eigenvalues[i] < threshold) {
            mask[i] = false;
            mask[i + 1] = false;
        }
    }
    return mask;
}

}  // namespace qst
