// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>

#include "chazy/dynamics.hpp"
#include "chazy/hypergeom.hpp"
#include "chazy/suites.hpp"

using namespace chazy;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    bool pass = true;
    double worst = 0.0;
    double budget_s = 0.0;  // 0: no stated runtime bound
    std::string note;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Criterion(std::string l, double budget = 0.0)
        : label(std::move(l)), budget_s(budget) {}
    void require(bool ok, double deviation = 0.0) {
        pass = pass && ok;
        worst = std::max(worst, deviation);
    }
    void finish() {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              t0)
                        .count();
        if (budget_s > 0.0 && ms > budget_s * 1000.0) pass = false;
        std::printf("[%s] %s (worst %.3e, %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", label.c_str(),
                    worst, ms, note.empty() ? "" : " -- ", note.c_str());
        if (!pass) ++failures;
    }
};

}  // namespace

int main() {
    // 1. exact derivation identities to order 200
    {
        Criterion c("criterion 1: derivation identities 12DP=P^2-Q, 3DQ=PQ-R, 2DR=PR-Q^2 exact to order 200", 10.0);
        DerivationCheck d = ramanujan_derivation_check(4 * 200);
        c.require(d.pass());
        c.finish();
    }

    // 2. Theorem 1 series instantiation to order 50, printed expansions included
    {
        Criterion c("criterion 2: Eisenstein instantiation (4P(q^4),...), (P(-q),...), (2P(q^2),...) exact to order 50", 30.0);
        InstantiationCheck inst = eisenstein_instantiation_check(4 * 50);
        c.require(inst.pass());
        EisensteinTriple t2 = eisenstein_scaled(4 * 50, +1, 4);
        EisensteinTriple t3 = eisenstein_scaled(4 * 50, -1, 1);
        c.require(t2.P.coeff_q(0) == 4 && t2.P.coeff_q(4) == -96 && t2.P.coeff_q(8) == -288 &&
                  t2.P.coeff_q(12) == -384 && t2.P.coeff_q(16) == -672);
        c.require(t3.P.coeff_q(0) == 1 && t3.P.coeff_q(1) == 24 && t3.P.coeff_q(2) == -72 &&
                  t3.P.coeff_q(3) == 96 && t3.P.coeff_q(4) == -168 && t3.P.coeff_q(5) == 144);
        c.note = "u-sign pairing Triple2 with 4P(q^4): " + std::to_string(inst.matched_u_sign);
        c.finish();
    }

    // 3. algebraic relations for both theta eliminations, exact to order 50
    {
        Criterion c("criterion 3: algebraic relations 9Q = 16P^2-16PV+4V^2-3u^2 and R = (1/27)(2P-V)(18Q-3u^2) exact to order 50, both eliminations");
        const long order = 4 * 50;
        ThetaTriple th = theta(order);
        EisensteinTriple e = eisenstein(order);
        PuiseuxSeries P2 = e.P.substitute_monomial(1, 2).truncate(order);
        PuiseuxSeries Q2 = e.Q.substitute_monomial(1, 2).truncate(order);
        PuiseuxSeries R2 = e.R.substitute_monomial(1, 2).truncate(order);
        bool variant_fails = true;
        for (auto elim : {ThetaElimination::CEliminated, ThetaElimination::AEliminated}) {
            UVSeries uv = uv_from_theta(th, elim);
            RelationCheck rc = algebraic_relation_check(P2, Q2, R2, uv.u, uv.v, order);
            c.require(rc.relation1.pass && rc.relation2.pass);
            variant_fails = variant_fails && !rc.relation2_variant8.pass;
        }
        c.note = variant_fails
                     ? "second relation in the reconstruction-consistent 18Q form; the 8Q variant fails at q^0 and is kept as a control"
                     : "unexpected: the 8Q variant passed";
        c.require(variant_fails);
        c.finish();
    }

    // 4. iterate/addition and the sigma law
    {
        Criterion c("criterion 4: iterate (8P(q^8),...),(2P(-q^2),...), (1/3)(p0+p4+p5)=p2 exact to order 50; sigma law to 10^4");
        IterateCheck it = iterate_addition_check(4 * 50);
        c.require(it.pass());
        c.require(sigma_addition_check(10000).pass);
        c.finish();
    }

    // 5. Jacobi quartic and theta expressions for E4, E6
    {
        Criterion c("criterion 5: b^4 = a^4 + c^4 and the theta forms of the weight-4/6 series exact to order 50");
        c.require(jacobi_identity_check(4 * 50).pass);
        c.require(eisenstein_theta_check(4 * 50).pass());
        c.finish();
    }

    // 6. hypergeometric block
    {
        Criterion c("criterion 6: quadratic transforms + modulus identity exact to order 30; complementary check at 1e-8; Schwarz u,v series with c0 = -1/2 to order 20");
        QuadTransformCheck qt = quad_transform_checks(4 * 30);
        c.require(qt.pass());
        c.require(theta_2F1_modulus_check(4 * 30).pass);
        ComplementaryModulusCheck cm = complementary_modulus_check({0.01, 0.05}, 1e-8);
        c.require(cm.pass, cm.worst_rel_error);
        SchwarzUVChecks uvc = schwarz_uv_series_check(4 * 20);
        c.require(uvc.pass());
        c.finish();
    }

    RunConfig cfg;  // defaults: order 50, tol 1e-7, samples 25, seed 42

    // 7. Theorem 1 numeric certification
    {
        Criterion c("criterion 7: Theorem 1 chain-rule residuals <= 1e-7 (some branch per sample), round trip <= 1e-9, u-swap exact", 60.0);
        VerificationReport rep = run_suite("theorem1-numeric", cfg);
        for (const auto& e : rep.checks) c.require(e.pass, std::atof(e.max_deviation.c_str()));
        VerificationReport rt = run_suite("duality-roundtrip", cfg);
        for (const auto& e : rt.checks) c.require(e.pass, std::atof(e.max_deviation.c_str()));
        c.finish();
    }

    // 8. Theorem 2 numeric certification
    {
        Criterion c("criterion 8: exactly one Z-convention certifies (pinned: proof half-sqrt); cubic converse residuals <= 1e-7, round trip <= 1e-9");
        VerificationReport conv = run_suite("convention-resolve", cfg);
        for (const auto& e : conv.checks) c.require(e.pass);
        VerificationReport rep = run_suite("theorem2-numeric", cfg);
        for (const auto& e : rep.checks) c.require(e.pass, std::atof(e.max_deviation.c_str()));
        c.finish();
    }

    // 9. dynamics combo certification
    {
        Criterion c("criterion 9: DH combos (classic Chazy + reconstructions), dh32 combos (k=3/2, k=3), Schwarz remarks (k=3/k=2 and k=3/k=4), Riccati closed form");
        for (const char* suite : {"dh-combos", "dh32-combos", "schwarz-remarks"}) {
            VerificationReport rep = run_suite(suite, cfg);
            for (const auto& e : rep.checks) c.require(e.pass, std::atof(e.max_deviation.c_str()));
        }
        c.finish();
    }

    // 10. property suite through a full verify run
    {
        Criterion c("criterion 10: full verify --suite all green (ring axioms, derivation, inverse, jets vs FD, covariance, determinism)");
        auto t0 = std::chrono::steady_clock::now();
        FullReport full = run_all(cfg);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(full.pass());
        c.require(secs < 300.0, secs);
        c.note = "full run " + std::to_string(secs) + " s, " +
                 std::to_string(full.sections.size()) + " suites";
        c.finish();
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
