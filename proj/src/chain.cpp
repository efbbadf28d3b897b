#include "qst/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qst {

bool CouplingProfile::is_centrosymmetric() const {
    const int bonds = static_cast<int>(couplings.size());
    for (int i = 0; i < bonds / 2; ++i) {
        if (couplings[i] != couplings[bonds - 1 - i]) return false;
    }
    return true;
}

void validate_profile(const CouplingProfile& profile, bool require_nonnegative) {
    if (profile.n_sites < 1) {
        throw std::invalid_argument("n_sites: must be >= 1, got " +
                                    std::to_string(profile.n_sites));
    }
    if (static_cast<int>(profile.couplings.size()) != profile.n_sites - 1) {
        throw std::invalid_argument(
            "couplings: expected length n-1 = " + std::to_string(profile.n_sites - 1) +
            ", got " + std::to_string(profile.couplings.size()));
    }
    for (std::size_t i = 0; i < profile.couplings.size(); ++i) {
        const double j = profile.couplings[i];
        if (!std::isfinite(j)) {
            throw std::invalid_argument("couplings[" + std::to_string(i) +
                                        "]: non-finite value");
        }
        if (require_nonnegative && j < 0.0) {
            throw std::invalid_argument("couplings[" + std::to_string(i) +
                                        "]: negative value " + std::to_string(j));
        }
    }
}

void validate_task(const TransferTask& task) {
    if (!(task.arrival_time > 0.0) || !std::isfinite(task.arrival_time)) {
        throw std::invalid_argument("arrival_time: must be a positive finite real");
    }
}

double mean_abs_coupling_step(const CouplingProfile& profile) {
    const std::size_t bonds = profile.couplings.size();
    if (bonds < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 1; i < bonds; ++i) {
        sum += std::abs(profile.couplings[i] - profile.couplings[i - 1]);
    }
    return sum / static_cast<double>(bonds - 1);
}

}  // namespace qst
