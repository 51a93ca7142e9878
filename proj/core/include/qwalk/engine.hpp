#pragma once

#include <stdexcept>
#include <vector>

#include "qwalk/schedule.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// Signals a broken evolution invariant (total probability drifted), i.e. an
/// implementation bug rather than a user error.
class integrity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvolveOptions {
    // Total probability is compared against 1 every norm_check_interval steps.
    // The state is never renormalized: drift means a kernel bug and must surface.
    long long norm_check_interval = 1024;
    double norm_tolerance = 1e-9;
};

/// One application of the evolution operator: coin, then conditional shift.
///   psi+(n,t+1) =  e^{i alpha} cos(theta) psi+(n-1,t) + e^{-i beta} sin(theta) psi-(n-1,t)
///   psi-(n,t+1) =  e^{i beta}  sin(theta) psi+(n+1,t) - e^{-i alpha} cos(theta) psi-(n+1,t)
/// The output is written into a fresh buffer; support grows by one site on
/// each side and parity-forbidden sites stay exact zeros.
WalkState step(const WalkState& state, const CoinParams& params);

/// Snapshots of one evolution at strictly increasing checkpoint times.
struct Trajectory {
    std::vector<WalkState> snapshots;

    const WalkState& final_state() const { return snapshots.back(); }
    const WalkState& at_time(long long t) const;
};

/// Runs T steps with generate_params(schedule, t) for t = 1..T, recording
/// snapshots at the given checkpoints (T itself is always recorded).
/// Checkpoints must be strictly increasing and within [0, T].
Trajectory evolve(const InitialState& init, const Schedule& schedule, long long steps,
                  const std::vector<long long>& checkpoints = {},
                  const EvolveOptions& options = {});

}  // namespace qwalk
