// Explicit q-expansions: divisor sums, the Eisenstein series P=E2, Q=E4, R=E6,
// and the Jacobi theta constants on the quarter lattice, together with the
// exact coefficient identities that tie them together.
#pragma once

#include <optional>
#include <string>

#include "chazy/puiseux.hpp"

namespace chazy {

struct EisensteinTriple {
    PuiseuxSeries P, Q, R;  // E2, E4, E6
    PuiseuxSeries::Steps order;
};

struct ThetaTriple {
    PuiseuxSeries a, b, c;  // theta2, theta3, theta4
    PuiseuxSeries::Steps order;
};

// Outcome of one exact identity check: pass/fail plus the first mismatching
// exponent when it fails.
struct ExactCheck {
    bool pass = true;
    std::string id;
    std::optional<PuiseuxSeries::Mismatch> witness;
};

Integer sigma_power(unsigned long n, unsigned k);

// order in lattice steps (4 steps = one power of q)
EisensteinTriple eisenstein(PuiseuxSeries::Steps order);
ThetaTriple theta(PuiseuxSeries::Steps order);

// Eisenstein triple under q -> q^m with the matching lambda = m scaling, i.e.
// (m P(q^m), m^2 Q(q^m), m^3 R(q^m)); also sign-substituted variants.
EisensteinTriple eisenstein_scaled(PuiseuxSeries::Steps order, int sign, long m);

// The three derivation identities for D = q d/dq:
//   12 DP = P^2 - Q,  3 DQ = PQ - R,  2 DR = PR - Q^2.
// They are checked for an arbitrary triple so scaled/substituted solutions can
// be certified with the same code.
struct DerivationCheck {
    ExactCheck dP, dQ, dR;
    bool pass() const { return dP.pass && dQ.pass && dR.pass; }
};
DerivationCheck ramanujan_derivation_check(const EisensteinTriple& t, PuiseuxSeries::Steps order);
DerivationCheck ramanujan_derivation_check(PuiseuxSeries::Steps order);

// b^4 = a^4 + c^4
ExactCheck jacobi_identity_check(PuiseuxSeries::Steps order);

// Theta expressions for the weight-4 and weight-6 series. The theta side
// carries the nome of the theta constants; on the Eisenstein side this is the
// doubled-nome series E4(q^2), E6(q^2) (exact on the quarter lattice).
struct ThetaEisensteinCheck {
    ExactCheck weight4, weight6;
    bool pass() const { return weight4.pass && weight6.pass; }
};
ThetaEisensteinCheck eisenstein_theta_check(PuiseuxSeries::Steps order);

// sigma1(4n) + 2 sigma1(n) = 3 sigma1(2n) for 1 <= n <= n_max.
struct SigmaAdditionCheck {
    bool pass = true;
    unsigned long first_failure = 0;
    unsigned long n_max = 0;
};
SigmaAdditionCheck sigma_addition_check(unsigned long n_max);

}  // namespace chazy
