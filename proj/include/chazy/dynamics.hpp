// Chain-rule residual certification: every "also satisfies" claim of the
// theorems reduces to pushing order-4 jets through the algebraic maps and
// measuring first-order residuals against the target system, pointwise along
// integrated trajectories.
#pragma once

#include <optional>

#include "chazy/integrate.hpp"
#include "chazy/theorem1.hpp"
#include "chazy/theorem2.hpp"

namespace chazy {

// max over components of |c1 - RHS(c0)| / max(1, |state|^2)
double residual_first_order(const SystemSpec& sys, const std::array<Jet, 3>& jets);

// Truncated-Taylor derivative: one order of validity is consumed.
inline Jet jet_derivative(const Jet& j) {
    Jet r;
    for (int k = 0; k < Jet::order; ++k) r.c[k] = static_cast<double>(k + 1) * j.c[k + 1];
    return r;
}

// y''' - 2 y y'' + 3 (y')^2 [- 4/(36-k^2) (6y' - y^2)^2], normalized by the
// largest participating term.
double chazy_residual(const Jet& y, const std::optional<Rational>& k = std::nullopt);

// p_i = -4 w_i - w_j - w_k and the exact rational inverse.
std::array<Jet, 3> halphen_combos(const std::array<Jet, 3>& w);
std::array<Jet, 3> halphen_combos_inverse(const std::array<Jet, 3>& p);

struct TransformResidualReport {
    double triple2 = 0.0, triple3 = 0.0, zero = 0.0;  // max over samples
    long used = 0, skipped = 0;
    double max() const { return std::max({triple2, triple3, zero}); }
};

// Theorem 1 forward: all three output triples against the Ramanujan system.
TransformResidualReport theorem1_forward_residual(const Trajectory& tr, const BranchChoice& br);
// Theorem 1 inverse row applied to a Ramanujan trajectory read as (p0,q0,r0).
TransformResidualReport theorem1_inverse_residual(const Trajectory& tr, const BranchChoice& br);
// Theorem 2 forward on a k=3/2 trajectory: Triple2/Triple3 vs k=3/2, Triple0 vs k=3.
TransformResidualReport theorem2_forward_residual(const Trajectory& tr, ZConvention conv,
                                                  int sqrt_sign = +1);
// Theorem 2 converse on a k=3 trajectory through one cubic root: result vs k=3/2
// (in .zero), plus the forward round-trip error of Triple0 (in .triple2).
TransformResidualReport theorem2_inverse_residual(const Trajectory& tr, int root_index);

struct DhComboReport {
    double chazy = 0.0;           // classic Chazy residual of p1, p2, p3, p0
    double c1n = 0.0;             // the first-order system in the p's
    double reconstruction = 0.0;  // algebraic vs differential q_i, r_i
    double ramanujan = 0.0;       // (p1, q1, r1) jets against the Ramanujan system
    double max() const { return std::max({chazy, c1n, reconstruction, ramanujan}); }
};
DhComboReport dh_combo_check(const Trajectory& tr);

struct Dh32ComboReport {
    double c2n = 0.0;
    double chazy32 = 0.0;  // k = 3/2 residual of p1, p2, p3
    double chazy3 = 0.0;   // k = 3 residual of p0
    double nde1 = 0.0;     // reconstructed (p1, q1, r1) against the k = 3/2 system
    double nde2 = 0.0;     // reconstructed (p0, q0, r0) against the k = 3 system
    double max() const { return std::max({c2n, chazy32, chazy3, nde1, nde2}); }
};
Dh32ComboReport dh32_combo_check(const Trajectory& tr);

struct SchwarzRemarkReport {
    double k3_combo1 = 0.0;     // -w1 - 2w2 - 3w3 against k = 3
    double k3_combo2 = 0.0;     // -2w1 - w2 - 3w3 against k = 3
    double symmetric = 0.0;     // -2(w1+w2+w3) against the stated k
    double unasserted = 0.0;    // -4w1 - w2 - w3, reported without judgment
    int symmetric_k = 0;
    double max_asserted() const { return std::max({k3_combo1, k3_combo2, symmetric}); }
};
// symmetric_k: 2 for the (1/3,1/3,1) profile, 4 for (1/3,1/3,1/2).
SchwarzRemarkReport schwarz_remark_check(const Trajectory& tr, int symmetric_k);

// w-jets from a Schwarz-triangle trajectory sample via the logarithmic
// derivative definitions.
std::array<Jet, 3> halphen_from_schwarz(const std::array<Jet, 3>& s_jets);

}  // namespace chazy
