// The Part One automorphism of Ramanujan-system solutions: T = R + sqrt(R^2-Q^3),
// the quantities (u, v), the three output triples, and the self-dual inverse
// row with t = r0 + sqrt(r0^2 - q0^3). Numeric (complex / jet) and exact
// (series, radical-free) modes share one set of formulas.
#pragma once

#include "chazy/jet.hpp"
#include "chazy/modular.hpp"
#include "chazy/puiseux.hpp"

namespace chazy {

// Explicit branch record: nothing in the math core picks a branch implicitly.
struct BranchChoice {
    int sqrt_sign = +1;       // sign on sqrt(R^2 - Q^3)
    int cube_root_index = 0;  // principal cube root times e^{2 pi i k/3}
    int u_sign = +1;          // the "+-" in u
};

struct BranchCollapse : std::domain_error {
    using std::domain_error::domain_error;
};

template <class S>
struct TripleT {
    S p, q, r;
};
using TripleC = TripleT<Complex>;
using TripleJ = TripleT<Jet>;
using TripleS = TripleT<PuiseuxSeries>;

template <class S>
struct UvTriples {
    TripleT<S> two, three, zero;
};

// rational-constant scaling, shared by all three carrier types
inline Complex scl(const Complex& x, long n, long d) {
    return x * (static_cast<double>(n) / static_cast<double>(d));
}
inline Jet scl(const Jet& x, long n, long d) {
    return x * (static_cast<double>(n) / static_cast<double>(d));
}
inline PuiseuxSeries scl(const PuiseuxSeries& x, long n, long d) { return x * rat(n, d); }

inline Complex value_of(const Complex& x) { return x; }
inline Complex value_of(const Jet& x) { return x.value(); }

inline Complex branched_sqrt(const Complex& x, int sign, double degenerate_eps = 0.0) {
    if (std::abs(x) <= degenerate_eps) return {0.0, 0.0};
    return static_cast<double>(sign) * principal_sqrt(x);
}
inline Jet branched_sqrt(const Jet& x, int sign, double degenerate_eps = 0.0) {
    Complex v = x.value();
    Complex root = std::abs(v) <= degenerate_eps
                       ? Complex(0.0)
                       : static_cast<double>(sign) * principal_sqrt(v);
    return jet_sqrt(x, root, degenerate_eps);
}
inline Complex branched_cbrt(const Complex& x, int index) { return principal_cbrt(x, index); }
inline Jet branched_cbrt(const Jet& x, int index) {
    return jet_cbrt(x, principal_cbrt(x.value(), index));
}

// The displayed (p2,q2,r2)/(p3,q3,r3) triples plus the reduced Triple0 row
// (p0 = P + v/3, q0 = -Q + (5/9) v^2, r0 = (11/4) R + (7/4) Q v). Pure ring
// arithmetic in u, v: valid for complex, jets, and series alike.
template <class S>
UvTriples<S> forward_from_uv(const S& P, const S& Q, const S& R, const S& u, const S& v) {
    auto branch23 = [&](const S& uu) {
        TripleT<S> t;
        t.p = P + scl(uu + v, 1, 2);
        t.q = scl(uu * (uu + v), 8, 9) + scl((v - uu) * (v - uu), 1, 36);
        t.r = scl((scl(uu, 3, 1) + v) * (scl(uu * (uu + v), 16, 1) - scl((v - uu) * (v - uu), 1, 4)),
                  1, 54);
        return t;
    };
    UvTriples<S> out;
    out.two = branch23(u);
    out.three = branch23(-u);  // the u-sign flip is exactly the 2 <-> 3 exchange
    out.zero.p = P + scl(v, 1, 3);
    out.zero.q = -Q + scl(v * v, 5, 9);
    out.zero.r = scl(R, 11, 4) + scl(Q * v, 7, 4);
    return out;
}

template <class S>
S compute_T(const S& Q, const S& R, const BranchChoice& br, double degenerate_eps = 1e-14) {
    return R + branched_sqrt(R * R - Q * Q * Q, br.sqrt_sign, degenerate_eps);
}

template <class S>
struct UVPairT {
    S u, v, V;
    S consistency;  // u^2 - (4/3) v^2 + 3Q, zero when the pair is coherent
};

template <class S>
UVPairT<S> compute_uv(const S& P, const S& Q, const S& T, const BranchChoice& br) {
    if (std::abs(value_of(T)) < 1e-300) throw BranchCollapse("cube-root of zero");
    S tau = branched_cbrt(T, br.cube_root_index);
    S v = scl(tau + Q / tau, 3, 2);
    S w = (Q * Q) / (tau * tau) + Q + tau * tau;
    S u = branched_sqrt(w, +1) * std::sqrt(3.0) * static_cast<double>(br.u_sign);
    UVPairT<S> out{u, v, scl(P, 2, 1) + v, u * u - scl(v * v, 4, 3) + scl(Q, 3, 1)};
    return out;
}

// The T-form row shared by the Triple0 output of the forward map and the
// inverse map (the duality: both are the same formula).
template <class S>
TripleT<S> radical_row(const S& p, const S& q, const S& r, const BranchChoice& br,
                       double degenerate_eps = 1e-14) {
    S t = compute_T(q, r, br, degenerate_eps);
    if (std::abs(value_of(t)) <= 1e-12 * std::max(1.0, std::abs(value_of(r))))
        throw BranchCollapse("cube-root of zero: T collapsed");
    S tau = branched_cbrt(t, br.cube_root_index);
    S tau2 = tau * tau;
    TripleT<S> out;
    out.p = p + scl(tau + q / tau, 1, 2);
    out.q = scl(q, 3, 2) + scl(tau2 + (q * q) / tau2, 5, 4);
    out.r = scl(r, 11, 4) + scl(q * tau + (q * q) / tau, 21, 8);
    return out;
}

template <class S>
struct ForwardResult {
    UvTriples<S> triples;
    UVPairT<S> uv;
    bool degenerate_radical = false;  // R^2 = Q^3 within tolerance, so T = R
};

// Numeric / jet forward map: Triple2 and Triple3 through (u, v), Triple0
// through the displayed T-form (equal to the reduced row; see the tests).
template <class S>
ForwardResult<S> forward_map(const S& P, const S& Q, const S& R, const BranchChoice& br,
                             double degenerate_eps = 1e-14) {
    S T = compute_T(Q, R, br, degenerate_eps);
    if (std::abs(value_of(T)) <= 1e-12 * std::max(1.0, std::abs(value_of(R))))
        throw BranchCollapse("cube-root of zero: T collapsed");
    UVPairT<S> uv = compute_uv(P, Q, T, br);
    ForwardResult<S> out{forward_from_uv(P, Q, R, uv.u, uv.v), uv, false};
    out.degenerate_radical =
        std::abs(value_of(R) * value_of(R) - value_of(Q) * value_of(Q) * value_of(Q)) <=
        degenerate_eps;
    out.triples.zero = radical_row(P, Q, R, br, degenerate_eps);
    return out;
}

template <class S>
TripleT<S> inverse_map(const S& p0, const S& q0, const S& r0, const BranchChoice& br,
                       double degenerate_eps = 1e-14) {
    return radical_row(p0, q0, r0, br, degenerate_eps);
}

// ----- series mode -----

enum class ThetaElimination { CEliminated, AEliminated };

struct UVSeries {
    PuiseuxSeries u, v;
};

// The literal pairs of the theta substitution: u = 3 a^2 b^2,
// v = -(3/2)(a^4 + b^4) after eliminating c^4, and u = 3 b^2 c^2,
// v = (3/2)(b^4 + c^4) after eliminating a. Compatible with the doubled-nome
// Eisenstein triple (E2, E4, E6)(q^2).
UVSeries uv_from_theta(const ThetaTriple& t, ThetaElimination elim);

// The same algebraic branch carried to the Eisenstein nome: u = 3 c^4,
// v = 3 (a^4 + b^4). Compatible with (E2, E4, E6)(q) and produces the
// integer-lattice instantiation triples.
UVSeries uv_eisenstein_nome(const ThetaTriple& t);

struct RelationCheck {
    ExactCheck relation1;          // 9Q = 16P^2 - 16PV + 4V^2 - 3u^2 with V = 2P + v
    ExactCheck relation2;          // R = (1/27)(2P - V)(18Q - 3u^2), the form consistent
                                   // with the q1/r1 reconstruction formulas
    ExactCheck relation2_variant8;  // the coefficient-8 variant; fails, kept as a control
    bool pass() const { return relation1.pass && relation2.pass; }
};
RelationCheck algebraic_relation_check(const PuiseuxSeries& P, const PuiseuxSeries& Q,
                                       const PuiseuxSeries& R, const PuiseuxSeries& u,
                                       const PuiseuxSeries& v, PuiseuxSeries::Steps order);

struct RelationResiduals {
    double relation1, relation2, relation2_variant8;
};
RelationResiduals algebraic_relation_residuals(Complex P, Complex Q, Complex R, Complex u,
                                               Complex v);

// Radical-free series forward map; requires (u, v) to satisfy the algebraic
// relations against (P, Q, R) exactly on the common known range.
UvTriples<PuiseuxSeries> forward_map_series(const PuiseuxSeries& P, const PuiseuxSeries& Q,
                                            const PuiseuxSeries& R, const PuiseuxSeries& u,
                                            const PuiseuxSeries& v);

struct InstantiationCheck {
    int matched_u_sign = +1;  // sign pairing Triple2 with (4P(q^4), ...)
    std::array<ExactCheck, 9> components;
    ExactCheck averaging;  // (1/3)(p1 + p2 + p3) = p0
    bool pass() const;
};
// Verifies the Eisenstein instantiation: Triple2 = (4P(q^4), 16Q(q^4), 64R(q^4)),
// Triple3 = (P(-q), Q(-q), R(-q)), Triple0 = (2P(q^2), 4Q(q^2), 8R(q^2)).
InstantiationCheck eisenstein_instantiation_check(PuiseuxSeries::Steps order);

struct IterateCheck {
    std::array<ExactCheck, 6> components;  // the (p4,q4,r4) and (p5,q5,r5) triples
    ExactCheck averaging;                  // (1/3)(p0 + p4 + p5) = p2
    DerivationCheck scaled_derivation;     // D-identities for (4P(q^4), 16Q(q^4), 64R(q^4))
    bool pass() const;
};
// Second application starting from (2P(q^2), 4Q(q^2), 8R(q^2)).
IterateCheck iterate_addition_check(PuiseuxSeries::Steps order);

}  // namespace chazy
