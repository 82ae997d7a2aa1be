// Gauss 2F1 machinery for the theta-modulus identities: exact coefficient
// sequences, numeric evaluation inside the unit disc, the two quadratic
// transformations, and the Schwarz-function series identities that fix the
// Wronskian constant c0 = -1/2.
#pragma once

#include <vector>

#include "chazy/jet.hpp"
#include "chazy/modular.hpp"
#include "chazy/puiseux.hpp"

namespace chazy {

struct HypergeometricCoeffs {
    Rational a, b, c;
    std::vector<Rational> coeffs;  // c_n = (a)_n (b)_n / ((c)_n n!)
};

// Exact coefficients by the ratio recursion; c must not be a nonpositive integer.
HypergeometricCoeffs coeffs_2F1(const Rational& a, const Rational& b, const Rational& c,
                                std::size_t length);

// Partial sum with tail bound <= tol; |x| must stay inside the convergence
// margin (no analytic continuation).
std::complex<double> eval_2F1(const HypergeometricCoeffs& f, std::complex<double> x, double tol,
                              double margin = 0.95);

// kappa^2 = a^4/b^4 and 1 - kappa^2 = c^4/b^4 as exact series.
struct ModulusData {
    PuiseuxSeries kappa_sq;
    PuiseuxSeries complement_sq;
};
ModulusData modulus_data(const ThetaTriple& t);

// The Wronskian constant of the (z1, z2) solution pair, fixed by the modulus
// identity below.
inline constexpr double wronskian_c0 = -0.5;
inline Rational wronskian_c0_exact() { return rat(-1, 2); }

// 2F1(1/2,1/2;1;x) against (1-2x)^{-1/2} 2F1(1/4,3/4;1;1-(2x-1)^{-2}) and
// (1-x/2)^{-1/2} 2F1(1/4,3/4;1;x^2/(2-x)^2), both exact in x.
struct QuadTransformCheck {
    ExactCheck first, second;
    bool pass() const { return first.pass && second.pass; }
};
QuadTransformCheck quad_transform_checks(PuiseuxSeries::Steps order);

// theta3^2 = 2F1(1/2,1/2;1;kappa^2) exactly to order.
ExactCheck theta_2F1_modulus_check(PuiseuxSeries::Steps order);

// Numeric closure of the c0 = -1/2 determination at real nome q, in the two
// convergent forms the series actually satisfy:
//   (a) -2 c0 b^4 = 2F1(1/2,1/2;1;kappa^2)^2 with c0 = -1/2, and
//   (b) 2F1(1/2,1/2;1;c^4/b^4) = (log(1/q)/pi) * 2F1(1/2,1/2;1;a^4/b^4),
// the complementary-period relation. The naive identification
// -2 c0 b^4 = 2F1(...;c^4/b^4)^2 conflates the two periods (reaching it
// evaluates the series beyond the unit disc); its measured defect is exactly
// the factor (log(1/q)/pi)^2, which (b) certifies.
struct ComplementaryModulusCheck {
    bool pass = true;
    double worst_rel_error = 0.0;       // worst over (a) and (b) and all q points
    double modulus_route_error = 0.0;   // (a)
    double period_ratio_error = 0.0;    // (b)
    double naive_form_defect = 0.0;     // |F(c^4/b^4)^2 / b^4 - 1|, for the record
    std::vector<double> q_points;
};
ComplementaryModulusCheck complementary_modulus_check(const std::vector<double>& q_points,
                                                      double tol);

// Series identities for the Schwarz function s and s' in terms of (u, v) and
// the theta forms, for both eliminations, plus z1^2 = -(2/3) c0 u. The s-form
// and s'-form of the a-eliminated pair require opposite u-signs; the check
// verifies each under its matching sign and reports the signs used.
struct SchwarzUVCheck {
    ExactCheck s_form, sprime_form, z1_relation;
    int s_form_u_sign = +1;       // u-sign under which the s-form holds
    int sprime_form_u_sign = +1;  // u-sign under which the s'-form holds
    bool single_sign_consistent = true;
    bool pass() const { return s_form.pass && sprime_form.pass && z1_relation.pass; }
};
struct SchwarzUVChecks {
    SchwarzUVCheck c_eliminated, a_eliminated;
    bool pass() const { return c_eliminated.pass() && a_eliminated.pass(); }
};
SchwarzUVChecks schwarz_uv_series_check(PuiseuxSeries::Steps order);

}  // namespace chazy
