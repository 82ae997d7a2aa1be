#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chazy/systems.hpp"
#include "chazy/theorem2.hpp"

using namespace chazy;

namespace {

double cdist(Complex a, Complex b) { return std::abs(a - b); }

std::mt19937_64 gen(24680);
Complex rand_c() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    double re = d(gen), im = d(gen);
    return {re, im};
}

}  // namespace

TEST_CASE("generalised Chazy parameter") {
    CHECK(GenChazyParam(rat(3, 2)).coeff == rat(1, 15));
    CHECK(GenChazyParam(rat(3)).coeff == rat(1, 3));
    CHECK(GenChazyParam(rat(2)).coeff == rat(1, 8));
    CHECK(GenChazyParam(rat(4)).coeff == rat(4, 5));
    CHECK_THROWS_AS(GenChazyParam(rat(6)), std::domain_error);
}

TEST_CASE("system right-hand sides") {
    SystemSpec n15 = SystemSpec::gen_chazy(rat(3, 2));
    std::array<Complex, 3> zero{{{0, 0}, {0, 0}, {0, 0}}};
    auto f0 = n15.rhs(zero);
    CHECK(cdist(f0[0], {0, 0}) == 0);
    CHECK(cdist(f0[2], {0, 0}) == 0);

    std::array<Complex, 3> ones{{{1, 0}, {1, 0}, {1, 0}}};
    auto f1 = n15.rhs(ones);
    CHECK(cdist(f1[0], {0, 0}) < 1e-15);
    CHECK(cdist(f1[1], {0, 0}) < 1e-15);
    CHECK(cdist(f1[2], {1.0 + 1.0 / 15, 0}) < 1e-15);

    auto f3 = SystemSpec::gen_chazy(rat(3)).rhs(ones);
    CHECK(cdist(f3[2], {1.0 + 1.0 / 3, 0}) < 1e-15);

    CHECK_THROWS_AS(SystemSpec::gen_chazy(rat(6)), std::domain_error);
}

TEST_CASE("Z pair in both conventions") {
    Complex Q(-5.0 / 3, 0), R(0, 0);
    auto zt = compute_Z_pair(Q, R, ZConvention::TheoremFullSqrt);
    CHECK(cdist(zt.Z, {1, 0}) < 1e-15);
    CHECK(cdist(zt.Zbar, {-1, 0}) < 1e-15);
    auto zp = compute_Z_pair(Q, R, ZConvention::ProofHalfSqrt);
    CHECK(cdist(zp.Z, {0.5, 0}) < 1e-15);
    CHECK(cdist(zp.Zbar, {-0.5, 0}) < 1e-15);

    auto zf = compute_Z_pair(Q, R, ZConvention::TheoremFullSqrt, -1);
    CHECK(cdist(zf.Z, zt.Zbar) == 0);
    CHECK(cdist(zf.Zbar, zt.Z) == 0);

    CHECK_THROWS_AS(compute_Z_pair<Complex>({0, 0}, {1, 0}, ZConvention::ProofHalfSqrt),
                    BranchCollapse);
}

TEST_CASE("forward map values at the worked point") {
    Complex P(0, 0), Q(-5.0 / 3, 0), R(0, 0);
    auto z = compute_Z_pair(Q, R, ZConvention::TheoremFullSqrt);
    auto t = forward_map32(P, Q, R, z);
    CHECK(cdist(t.two.p, {1, 0}) < 1e-15);
    CHECK(cdist(t.two.q, {-5.0 / 3, 0}) < 1e-15);
    CHECK(cdist(t.two.r, {5.0 / 3, 0}) < 1e-15);
    CHECK(cdist(t.three.p, {-1, 0}) < 1e-15);
    CHECK(cdist(t.three.q, {-5.0 / 3, 0}) < 1e-15);
    CHECK(cdist(t.three.r, {-5.0 / 3, 0}) < 1e-15);
    CHECK(cdist(t.zero.p, {0, 0}) < 1e-15);
    CHECK(cdist(t.zero.q, {-1, 0}) < 1e-15);
    CHECK(cdist(t.zero.r, {0, 0}) < 1e-15);
}

TEST_CASE("sum rule and swap symmetry") {
    for (int i = 0; i < 30; ++i) {
        Complex P = rand_c(), Q = rand_c(), R = rand_c();
        if (std::abs(Q) < 0.05) continue;
        for (auto conv : {ZConvention::TheoremFullSqrt, ZConvention::ProofHalfSqrt}) {
            auto z = compute_Z_pair(Q, R, conv);
            CHECK(cdist(z.Z + z.Zbar, 3.0 * R / Q) < 1e-12);
            auto f = forward_map32(P, Q, R, z);
            CHECK(cdist(f.two.p + f.three.p, 2.0 * P + 3.0 * R / Q) < 1e-12);
            // (1/3)(p1 + p2 + p3) = P + R/Q = p0
            CHECK(cdist((P + f.two.p + f.three.p) / 3.0, f.zero.p) < 1e-12);

            auto zswap = compute_Z_pair(Q, R, conv, -1);
            auto g = forward_map32(P, Q, R, zswap);
            CHECK(cdist(f.two.p, g.three.p) < 1e-13);
            CHECK(cdist(f.two.q, g.three.q) < 1e-13);
            CHECK(cdist(f.zero.q, g.zero.q) < 1e-13);
        }
    }
}

TEST_CASE("proof-internal consistency distinguishes the conventions") {
    // with the proof convention Q = -(5/3)(p2 - p3)^2 identically; the
    // theorem's full-sqrt convention misses it by the factor 4
    for (int i = 0; i < 20; ++i) {
        Complex P = rand_c(), Q = rand_c(), R = rand_c();
        if (std::abs(Q) < 0.05) continue;
        auto zp = compute_Z_pair(Q, R, ZConvention::ProofHalfSqrt);
        auto fp = forward_map32(P, Q, R, zp);
        Complex d = fp.two.p - fp.three.p;
        CHECK(cdist(Q, -5.0 / 3.0 * d * d) < 1e-12);
        CHECK(cdist(R, -(1.0 / 3.0) * Q * (2.0 * P - fp.two.p - fp.three.p)) < 1e-12);

        auto zt = compute_Z_pair(Q, R, ZConvention::TheoremFullSqrt);
        auto ft = forward_map32(P, Q, R, zt);
        Complex dt = ft.two.p - ft.three.p;
        CHECK(cdist(4.0 * Q, -5.0 / 3.0 * dt * dt) < 1e-12);
    }
}

TEST_CASE("cubic roots") {
    // r0 = 0 factors as (4z - q0)^2 (z - q0)
    CubicRoots r = cubic_roots({-1, 0}, {0, 0});
    std::array<double, 3> expected{-1.0, -0.25, -0.25};
    for (double e : expected) {
        double best = 1e300;
        for (auto z : r.roots) best = std::min(best, cdist(z, {e, 0}));
        CHECK(best < 1e-9);
    }
    for (double res : r.residuals) CHECK(res < 1e-12 * r.scale);

    // q0 = 0: 16 z^3 = 3 r0^2
    CubicRoots r2 = cubic_roots({0, 0}, {2, 0});
    for (auto z : r2.roots) CHECK(cdist(z * z * z, {12.0 / 16, 0}) < 1e-12);

    CubicRoots r3 = cubic_roots(rand_c(), rand_c());
    for (double res : r3.residuals) CHECK(res < 1e-12 * r3.scale);
}

TEST_CASE("inverse map through the cubic") {
    // the worked example: (0,-1,0) with root z = -1 recovers (0,-5/3,0)
    TripleC t = inverse_map32<Complex>({0, 0}, {-1, 0}, {0, 0}, {-1, 0});
    CHECK(cdist(t.p, {0, 0}) < 1e-14);
    CHECK(cdist(t.q, {-5.0 / 3, 0}) < 1e-14);
    CHECK(cdist(t.r, {0, 0}) < 1e-14);

    // the double root z = q0/4 is singular when r0 = 0
    CHECK_THROWS_AS(inverse_map32<Complex>({0, 0}, {-1, 0}, {0, 0}, {-0.25, 0}), BranchCollapse);
}

TEST_CASE("forward round trip for every nonsingular root") {
    for (int i = 0; i < 40; ++i) {
        Complex p0 = rand_c(), q0 = rand_c(), r0 = rand_c();
        CubicRoots roots = cubic_roots(q0, r0);
        for (auto z : roots.roots) {
            if (std::abs(4.0 * z - q0) < 1e-6) continue;
            TripleC t = inverse_map32(p0, q0, r0, z);
            // the k=3 row reproduces (p0, q0, r0)
            Complex rq = t.r / t.q;
            CHECK(cdist(t.p + rq, p0) < 1e-9);
            CHECK(cdist(t.q * (3.0 / 5) - rq * rq * 3.0, q0) < 1e-9);
            CHECK(cdist(t.r * (9.0 / 5) + rq * rq * rq * 3.0, r0) < 1e-9);
        }
    }
}
