#pragma once

#include <vector>

namespace qst {

/// Exchange couplings J_1..J_{N-1} of an N-site chain (hbar = 1 energy units).
/// couplings[i] is the bond between sites i+1 and i+2 in 1-based site labels.
struct CouplingProfile {
    int n_sites = 0;
    std::vector<double> couplings;

    bool is_centrosymmetric() const;
};

/// Check size and finiteness; with require_nonnegative also J_i >= 0.
/// Design-value profiles (genome expansion, files) are nonnegative; profiles
/// perturbed by static disorder may carry negative bonds and skip that check.
/// Throws std::invalid_argument naming the offending field.
void validate_profile(const CouplingProfile& profile, bool require_nonnegative = true);

/// State transfer task: excitation prepared at site 1, read out at site N
/// after free evolution for arrival_time.
struct TransferTask {
    double arrival_time = 0.0;
};

void validate_task(const TransferTask& task);

/// Mean |J_i - J_{i-1}| over successive couplings (0 when N < 3); the
/// roughness measure used to compare designed profiles.
double mean_abs_coupling_step(const CouplingProfile& profile);

}  // namespace qst
