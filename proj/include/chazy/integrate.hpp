// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) along straight segments
// in the complex x-plane, with order-4 Taylor jets attached to every sample by
// re-deriving them from the vector field (so each sample is self-consistent
// with the ODE to machine precision).
#pragma once

#include <vector>

#include "chazy/systems.hpp"

namespace chazy {

struct Sample {
    Complex x;
    std::array<Complex, 3> state;
    std::array<Jet, 3> jets;
};

struct IntegratorStats {
    long accepted = 0;
    long rejected = 0;
    long rhs_evals = 0;
};

struct Trajectory {
    SystemSpec system;
    Complex start, end;
    std::vector<Sample> samples;
    IntegratorStats stats;
};

// Movable-singularity stop: natural behavior for Chazy-type flows. Carries the
// last x the integrator could reach and the partial trajectory up to it.
struct SingularityStop : std::runtime_error {
    SingularityStop(std::string msg, Complex last_good, std::vector<Sample> partial_)
        : std::runtime_error(std::move(msg)), last_good_x(last_good), partial(std::move(partial_)) {}
    Complex last_good_x;
    std::vector<Sample> partial;
};

// Total derivatives of the vector field along itself: value plus derivatives
// to order 4, by iterated evaluation of the RHS on truncated jets.
std::array<Jet, 3> jet_extend(const SystemSpec& sys, const std::array<Complex, 3>& state);

Trajectory integrate(const SystemSpec& sys, const std::array<Complex, 3>& state0, Complex x_start,
                     Complex x_end, double tol, int n_samples);

}  // namespace chazy
