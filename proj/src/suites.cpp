#include "chazy/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "chazy/dynamics.hpp"
#include "chazy/hypergeom.hpp"

namespace chazy {

namespace {

using Clock = std::chrono::steady_clock;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    Complex box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
};

std::array<Complex, 3> random_state(Rng& rng, double radius, double min_abs_q = 0.0) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Complex, 3> s{rng.box(radius), rng.box(radius), rng.box(radius)};
        if (std::abs(s[1]) >= min_abs_q) return s;
    }
    throw std::runtime_error("could not draw an admissible random state");
}

// Integrate from the configured base point; on a movable-singularity stop,
// retry with a shorter path, then with a fresh draw.
std::vector<Trajectory> random_trajectories(const SystemSpec& sys, const RunConfig& cfg, Rng& rng,
                                            int count, double radius, double min_abs_q = 0.0) {
    std::vector<Trajectory> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < 20 * count) {
        ++attempts;
        std::array<Complex, 3> s0 = random_state(rng, radius, min_abs_q);
        double len = cfg.path_len;
        for (int shrink = 0; shrink < 3; ++shrink) {
            try {
                out.push_back(integrate(sys, s0, cfg.base_x, cfg.base_x + Complex(len, 0.0),
                                        cfg.integ_tol, cfg.traj_samples));
                break;
            } catch (const SingularityStop&) {
                len *= 0.5;
            }
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("failed to assemble the requested trajectory ensemble");
    return out;
}

CheckEntry variant_control(std::string id, const ExactCheck& derived,
                           const ExactCheck& variant) {
    // passes when the reconstruction-consistent relation holds and the
    // coefficient-8 variant demonstrably does not
    CheckEntry e;
    e.id = std::move(id);
    e.max_deviation = derived.pass ? "0" : "coefficient mismatch";
    e.tolerance = "exact";
    e.pass = derived.pass && !variant.pass;
    if (variant.witness) {
        e.witnesses["variant_first_mismatch"] = to_string(variant.witness->exponent);
        e.witnesses["variant_lhs"] = to_string(variant.witness->lhs);
        e.witnesses["variant_rhs"] = to_string(variant.witness->rhs);
    }
    return e;
}

// ---------------- exact suites ----------------

VerificationReport suite_ramanujan_derivation(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "ramanujan-derivation";
    DerivationCheck d = ramanujan_derivation_check(cfg.order_steps());
    for (const auto* c : {&d.dP, &d.dQ, &d.dR}) {
        CheckEntry e = entry_from_exact(*c);
        e.params["order"] = cfg.order_q;
        rep.checks.push_back(std::move(e));
    }
    {
        // normalization on the record: the exact checks use D = q d/dq, the
        // only rational-coefficient form; in the x-variable every derivative
        // carries an extra 2*pi*i*q factor, which the numeric arm integrates
        // directly
        CheckEntry e;
        e.id = "normalization: exact arm uses D = q d/dq; the x-flow differs by 2*pi*i per derivative";
        e.params["informational"] = true;
        rep.checks.push_back(std::move(e));
    }
    return rep;
}

VerificationReport suite_jacobi(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "jacobi";
    CheckEntry e = entry_from_exact(jacobi_identity_check(cfg.order_steps()));
    e.params["order"] = cfg.order_q;
    rep.checks.push_back(std::move(e));
    return rep;
}

VerificationReport suite_eisenstein_theta(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "eisenstein-theta";
    ThetaEisensteinCheck c = eisenstein_theta_check(cfg.order_steps());
    rep.checks.push_back(entry_from_exact(c.weight4));
    rep.checks.push_back(entry_from_exact(c.weight6));
    return rep;
}

VerificationReport suite_sigma_addition(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "sigma-addition";
    SigmaAdditionCheck c = sigma_addition_check(cfg.sigma_n_max);
    CheckEntry e;
    e.id = "sigma1(4n) + 2 sigma1(n) = 3 sigma1(2n)";
    e.params["n_max"] = c.n_max;
    e.pass = c.pass;
    if (!c.pass) e.witnesses["first_failure_n"] = c.first_failure;
    rep.checks.push_back(std::move(e));
    return rep;
}

VerificationReport suite_theorem1_series(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "theorem1-series";
    const PuiseuxSeries::Steps order = cfg.order_steps();

    InstantiationCheck inst = eisenstein_instantiation_check(order);
    for (const auto& c : inst.components) {
        CheckEntry e = entry_from_exact(c);
        e.params["u_sign"] = inst.matched_u_sign;
        rep.checks.push_back(std::move(e));
    }
    rep.checks.push_back(entry_from_exact(inst.averaging));

    // the leading expansions of p2 and p3
    {
        EisensteinTriple e2 = eisenstein_scaled(order, +1, 4);
        EisensteinTriple e3 = eisenstein_scaled(order, -1, 1);
        const std::vector<std::pair<long, long>> p2_terms{
            {0, 4}, {4, -96}, {8, -288}, {12, -384}, {16, -672}};
        const std::vector<std::pair<long, long>> p3_terms{{0, 1},   {1, 24},   {2, -72},
                                                          {3, 96},  {4, -168}, {5, 144}};
        CheckEntry e;
        e.id = "leading expansions: p2 = 4-96q^4-288q^8-384q^12-672q^16, p3 = 1+24q-72q^2+...";
        for (auto [k, v] : p2_terms)
            if (e2.P.coeff_q(k) != v) e.pass = false;
        for (auto [k, v] : p3_terms)
            if (e3.P.coeff_q(k) != v) e.pass = false;
        rep.checks.push_back(std::move(e));
    }

    // algebraic relations for the two theta eliminations against the
    // doubled-nome Eisenstein triple, and for the integer-nome route
    ThetaTriple th = theta(order);
    EisensteinTriple eis = eisenstein(order);
    PuiseuxSeries P2 = eis.P.substitute_monomial(1, 2).truncate(order);
    PuiseuxSeries Q2 = eis.Q.substitute_monomial(1, 2).truncate(order);
    PuiseuxSeries R2 = eis.R.substitute_monomial(1, 2).truncate(order);
    auto push_relations = [&](const std::string& tag, const PuiseuxSeries& P,
                              const PuiseuxSeries& Q, const PuiseuxSeries& R, const UVSeries& uv) {
        RelationCheck rc = algebraic_relation_check(P, Q, R, uv.u, uv.v, order);
        CheckEntry e1 = entry_from_exact(rc.relation1);
        e1.id = tag + ": " + e1.id;
        rep.checks.push_back(std::move(e1));
        CheckEntry e2 = entry_from_exact(rc.relation2);
        e2.id = tag + ": " + e2.id;
        rep.checks.push_back(std::move(e2));
        rep.checks.push_back(
            variant_control(tag + ": relation2 control (18Q holds, the 8Q variant fails)",
                            rc.relation2, rc.relation2_variant8));
    };
    push_relations("c-eliminated", P2, Q2, R2, uv_from_theta(th, ThetaElimination::CEliminated));
    push_relations("a-eliminated", P2, Q2, R2, uv_from_theta(th, ThetaElimination::AEliminated));
    push_relations("integer-nome", eis.P, eis.Q, eis.R, uv_eisenstein_nome(th));
    return rep;
}

VerificationReport suite_iterate_addition(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "iterate-addition";
    IterateCheck it = iterate_addition_check(cfg.order_steps());
    for (const auto& c : it.components) rep.checks.push_back(entry_from_exact(c));
    rep.checks.push_back(entry_from_exact(it.averaging));
    for (const auto* c : {&it.scaled_derivation.dP, &it.scaled_derivation.dQ,
                          &it.scaled_derivation.dR}) {
        CheckEntry e = entry_from_exact(*c);
        e.id = "scaled triple (4P(q^4),16Q(q^4),64R(q^4)): " + e.id;
        rep.checks.push_back(std::move(e));
    }
    return rep;
}

// ---------------- numeric suites ----------------

VerificationReport suite_theorem1_numeric(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "theorem1-numeric";
    Rng rng(cfg.seed);
    SystemSpec sys = SystemSpec::ramanujan();
    auto trajectories = random_trajectories(sys, cfg, rng, cfg.samples, 1.0);

    std::vector<BranchChoice> branches;
    for (int ss : {+1, -1})
        for (int ci : {0, 1, 2})
            for (int us : {+1, -1}) branches.push_back({ss, ci, us});

    // per sample point, some branch must certify all three triples
    double worst_best = 0.0;
    std::map<std::string, double> per_branch;
    long skipped = 0;
    for (const auto& tr : trajectories) {
        for (const auto& s : tr.samples) {
            double best = 1e300;
            for (const auto& br : branches) {
                Trajectory one;
                one.system = sys;
                one.samples = {s};
                TransformResidualReport r = theorem1_forward_residual(one, br);
                if (r.used == 0) {
                    ++skipped;
                    continue;
                }
                best = std::min(best, r.max());
                std::string key = "s" + std::to_string(br.sqrt_sign) + ":c" +
                                  std::to_string(br.cube_root_index) + ":u" +
                                  std::to_string(br.u_sign);
                per_branch[key] = std::max(per_branch[key], r.max());
            }
            worst_best = std::max(worst_best, best);
        }
    }
    {
        CheckEntry e = entry_from_residual(
            "some branch certifies all three triples at every sample", worst_best, cfg.tol);
        e.params["trajectories"] = trajectories.size();
        for (const auto& [k, v] : per_branch)
            e.witnesses["branch_max"][k] = format_deviation(v);
        Json passing = Json::array();
        for (const auto& [k, v] : per_branch)
            if (v <= cfg.tol) passing.push_back(k);
        e.witnesses["passing_branches"] = passing;
        e.witnesses["collapsed_samples"] = skipped;
        rep.checks.push_back(std::move(e));
    }

    // u-sign flip swaps Triple2 and Triple3; Triple0 invariant
    {
        double worst = 0.0;
        for (const auto& tr : trajectories) {
            const auto& s = tr.samples.front();
            auto plus = forward_map<Complex>(s.state[0], s.state[1], s.state[2], {+1, 0, +1});
            auto minus = forward_map<Complex>(s.state[0], s.state[1], s.state[2], {+1, 0, -1});
            double sc = std::max({1.0, std::abs(s.state[0]), std::abs(s.state[1]),
                                  std::abs(s.state[2])});
            worst = std::max(worst, std::abs(plus.triples.two.p - minus.triples.three.p) / sc);
            worst = std::max(worst, std::abs(plus.triples.two.q - minus.triples.three.q) / sc);
            worst = std::max(worst, std::abs(plus.triples.two.r - minus.triples.three.r) / sc);
            worst = std::max(worst, std::abs(plus.triples.zero.p - minus.triples.zero.p) / sc);
        }
        rep.checks.push_back(
            entry_from_residual("u-sign flip exchanges Triple2 and Triple3", worst, 1e-14));
    }

    // u^2 = (4/3) v^2 - 3Q along every branch
    {
        double worst = 0.0;
        for (const auto& tr : trajectories) {
            const auto& s = tr.samples.front();
            for (const auto& br : branches) {
                try {
                    Complex T = compute_T(s.state[1], s.state[2], br);
                    auto uv = compute_uv(s.state[0], s.state[1], T, br);
                    worst = std::max(worst, std::abs(uv.consistency));
                } catch (const BranchCollapse&) {
                }
            }
        }
        rep.checks.push_back(entry_from_residual("u,v consistency residual", worst, 1e-12));
    }

    // the radical-free Triple0 reductions agree with the displayed T-form
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            Complex P = rng.box(1.0), Q = rng.box(1.0), R = rng.box(1.0);
            BranchChoice br{rng.gen() % 2 ? +1 : -1, static_cast<int>(rng.gen() % 3), +1};
            try {
                auto fwd = forward_map<Complex>(P, Q, R, br);
                TripleC reduced = forward_from_uv(P, Q, R, fwd.uv.u, fwd.uv.v).zero;
                worst = std::max(worst, std::abs(fwd.triples.zero.p - reduced.p));
                worst = std::max(worst, std::abs(fwd.triples.zero.q - reduced.q));
                worst = std::max(worst, std::abs(fwd.triples.zero.r - reduced.r));
            } catch (const BranchCollapse&) {
            }
        }
        rep.checks.push_back(entry_from_residual(
            "Triple0 reductions (p0 = P + v/3, q0 = -Q + 5v^2/9, r0 = 11R/4 + 7Qv/4)", worst,
            1e-12));
    }
    return rep;
}

VerificationReport suite_duality_roundtrip(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "duality-roundtrip";
    Rng rng(cfg.seed);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        Complex P = rng.box(1.0), Q = rng.box(1.0), R = rng.box(1.0);
        TripleC t0;
        try {
            t0 = forward_map<Complex>(P, Q, R, {+1, 0, +1}).triples.zero;
        } catch (const BranchCollapse&) {
            continue;
        }
        double best = 1e300;
        for (int ss : {+1, -1}) {
            for (int ci : {0, 1, 2}) {
                try {
                    TripleC back = inverse_map(t0.p, t0.q, t0.r, BranchChoice{ss, ci, +1});
                    double sc = std::max({1.0, std::abs(P), std::abs(Q), std::abs(R)});
                    double err = std::max({std::abs(back.p - P), std::abs(back.q - Q),
                                           std::abs(back.r - R)}) /
                                 sc;
                    best = std::min(best, err);
                } catch (const BranchCollapse&) {
                }
            }
        }
        worst = std::max(worst, best);
    }
    {
        CheckEntry e = entry_from_residual("inverse(forward Triple0) recovers (P,Q,R)", worst,
                                           1e-9);
        e.params["samples"] = cfg.samples;
        rep.checks.push_back(std::move(e));
    }

    // the inverse row maps Ramanujan solutions to Ramanujan solutions
    {
        SystemSpec sys = SystemSpec::ramanujan();
        auto trajectories = random_trajectories(sys, cfg, rng, std::min(cfg.samples, 8), 1.0);
        double worst_res = 0.0;
        long used = 0, skipped = 0;
        for (const auto& tr : trajectories) {
            TransformResidualReport r = theorem1_inverse_residual(tr, {+1, 0, +1});
            worst_res = std::max(worst_res, r.zero);
            used += r.used;
            skipped += r.skipped;
        }
        CheckEntry e = entry_from_residual("inverse row output satisfies the Ramanujan system",
                                           worst_res, cfg.tol);
        e.witnesses["samples_used"] = used;
        e.witnesses["samples_skipped"] = skipped;
        rep.checks.push_back(std::move(e));
    }
    return rep;
}

VerificationReport suite_theorem2_numeric(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "theorem2-numeric";
    Rng rng(cfg.seed);
    ZConvention conv = cfg.z_convention.value_or(pinned_z_convention);
    SystemSpec nde1 = SystemSpec::gen_chazy(rat(3, 2));
    SystemSpec nde2 = SystemSpec::gen_chazy(rat(3));

    auto trajectories = random_trajectories(nde1, cfg, rng, cfg.samples, 1.0, 0.05);
    double t2 = 0.0, t3 = 0.0, t0 = 0.0;
    long skipped = 0;
    for (const auto& tr : trajectories) {
        TransformResidualReport r = theorem2_forward_residual(tr, conv);
        t2 = std::max(t2, r.triple2);
        t3 = std::max(t3, r.triple3);
        t0 = std::max(t0, r.zero);
        skipped += r.skipped;
    }
    {
        CheckEntry e = entry_from_residual("Triple2 satisfies the k=3/2 system", t2, cfg.tol);
        e.params["z_convention"] = to_string(conv);
        e.params["trajectories"] = trajectories.size();
        e.witnesses["samples_skipped"] = skipped;
        rep.checks.push_back(std::move(e));
    }
    rep.checks.push_back(
        entry_from_residual("Triple3 satisfies the k=3/2 system", t3, cfg.tol));
    rep.checks.push_back(entry_from_residual("Triple0 satisfies the k=3 system", t0, cfg.tol));

    // sqrt-sign flip swaps the two triples
    {
        double worst = 0.0;
        for (const auto& tr : trajectories) {
            const auto& s = tr.samples.front();
            auto zp = compute_Z_pair<Complex>(s.state[1], s.state[2], conv, +1);
            auto zm = compute_Z_pair<Complex>(s.state[1], s.state[2], conv, -1);
            auto fp = forward_map32<Complex>(s.state[0], s.state[1], s.state[2], zp);
            auto fm = forward_map32<Complex>(s.state[0], s.state[1], s.state[2], zm);
            double sc = std::max({1.0, std::abs(s.state[0]), std::abs(s.state[1])});
            worst = std::max(worst, std::abs(fp.two.p - fm.three.p) / sc);
            worst = std::max(worst, std::abs(fp.two.q - fm.three.q) / sc);
            worst = std::max(worst, std::abs(fp.two.r - fm.three.r) / sc);
            worst = std::max(worst, std::abs(fp.zero.p - fm.zero.p) / sc);
        }
        rep.checks.push_back(
            entry_from_residual("sqrt-sign flip exchanges Triple2 and Triple3", worst, 1e-14));
    }

    // converse through the cubic: every nonsingular root gives a k=3/2 solution
    {
        auto back_trajs = random_trajectories(nde2, cfg, rng, cfg.samples, 1.0, 0.05);
        double worst_res = 0.0, worst_rt = 0.0;
        long used = 0, singular = 0;
        for (const auto& tr : back_trajs) {
            for (int root = 0; root < 3; ++root) {
                TransformResidualReport r = theorem2_inverse_residual(tr, root);
                worst_res = std::max(worst_res, r.zero);
                worst_rt = std::max(worst_rt, r.triple2);
                used += r.used;
                singular += r.skipped;
            }
        }
        CheckEntry e = entry_from_residual(
            "cubic converse: recovered (P,Q,R) satisfies the k=3/2 system", worst_res, cfg.tol);
        e.witnesses["roots_used"] = used;
        e.witnesses["singular_roots_skipped"] = singular;
        rep.checks.push_back(std::move(e));
        rep.checks.push_back(
            entry_from_residual("cubic converse: forward round trip", worst_rt, 1e-9));
    }
    return rep;
}

VerificationReport suite_convention_resolve(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "convention-resolve";
    Rng rng(cfg.seed);
    SystemSpec nde1 = SystemSpec::gen_chazy(rat(3, 2));
    auto trajectories = random_trajectories(nde1, cfg, rng, cfg.samples, 1.0, 0.05);
    double worst_theorem = 0.0, worst_proof = 0.0;
    for (const auto& tr : trajectories) {
        TransformResidualReport rt = theorem2_forward_residual(tr, ZConvention::TheoremFullSqrt);
        TransformResidualReport rp = theorem2_forward_residual(tr, ZConvention::ProofHalfSqrt);
        worst_theorem = std::max(worst_theorem, std::max(rt.triple2, rt.triple3));
        worst_proof = std::max(worst_proof, std::max(rp.triple2, rp.triple3));
    }
    bool theorem_ok = worst_theorem <= cfg.tol;
    bool proof_ok = worst_proof <= cfg.tol;
    CheckEntry e;
    e.id = "exactly one Z-convention certifies; the winner is the pinned library default";
    e.params["samples"] = cfg.samples;
    e.witnesses["theorem_full_sqrt_max_residual"] = format_deviation(worst_theorem);
    e.witnesses["proof_half_sqrt_max_residual"] = format_deviation(worst_proof);
    const char* winner = proof_ok && !theorem_ok  ? "proof"
                         : theorem_ok && !proof_ok ? "theorem"
                                                    : "ambiguous";
    e.witnesses["winner"] = winner;
    e.witnesses["pinned_default"] = to_string(pinned_z_convention);
    e.max_deviation = format_deviation(std::min(worst_theorem, worst_proof));
    e.tolerance = format_deviation(cfg.tol);
    e.pass = (proof_ok != theorem_ok) &&
             std::string(winner) == to_string(pinned_z_convention);
    rep.checks.push_back(std::move(e));
    return rep;
}

VerificationReport suite_dh_combos(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "dh-combos";
    Rng rng(cfg.seed);
    SystemSpec dh = SystemSpec::darboux_halphen();
    auto trajectories = random_trajectories(dh, cfg, rng, std::max(4, cfg.samples / 2), 0.7);
    DhComboReport worst;
    for (const auto& tr : trajectories) {
        DhComboReport r = dh_combo_check(tr);
        worst.chazy = std::max(worst.chazy, r.chazy);
        worst.c1n = std::max(worst.c1n, r.c1n);
        worst.reconstruction = std::max(worst.reconstruction, r.reconstruction);
        worst.ramanujan = std::max(worst.ramanujan, r.ramanujan);
    }
    rep.checks.push_back(
        entry_from_residual("combos p1,p2,p3,p0 satisfy the classic Chazy equation", worst.chazy,
                            cfg.tol));
    rep.checks.push_back(
        entry_from_residual("the first-order system in the p's holds", worst.c1n, cfg.tol));
    rep.checks.push_back(entry_from_residual("algebraic and differential q_i, r_i agree",
                                             worst.reconstruction, cfg.tol));
    rep.checks.push_back(entry_from_residual("(p1,q1,r1) satisfies the Ramanujan system",
                                             worst.ramanujan, cfg.tol));

    // equal-w start: each w solves w' = -w^2, so w(x) = w0/(1 + w0 x)
    {
        double worst_riccati = 0.0;
        for (Complex w0 : {Complex(0.4, 0.3), Complex(-0.5, 0.2), Complex(0.3, -0.6)}) {
            Trajectory tr = integrate(dh, {w0, w0, w0}, cfg.base_x,
                                      cfg.base_x + Complex(cfg.path_len, 0.0), cfg.integ_tol,
                                      cfg.traj_samples);
            for (const auto& s : tr.samples) {
                Complex expected = w0 / (1.0 + w0 * s.x);
                for (int i = 0; i < 3; ++i)
                    worst_riccati = std::max(worst_riccati, std::abs(s.state[i] - expected));
            }
        }
        rep.checks.push_back(entry_from_residual("equal-w trajectories match the Riccati solution",
                                                 worst_riccati, 1e-8));
    }
    return rep;
}

VerificationReport suite_dh32_combos(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "dh32-combos";
    Rng rng(cfg.seed);
    SystemSpec dh32 = SystemSpec::symmetric_dh32();
    auto trajectories = random_trajectories(dh32, cfg, rng, std::max(4, cfg.samples / 2), 0.7);
    Dh32ComboReport worst;
    for (const auto& tr : trajectories) {
        Dh32ComboReport r = dh32_combo_check(tr);
        worst.c2n = std::max(worst.c2n, r.c2n);
        worst.chazy32 = std::max(worst.chazy32, r.chazy32);
        worst.chazy3 = std::max(worst.chazy3, r.chazy3);
        worst.nde1 = std::max(worst.nde1, r.nde1);
        worst.nde2 = std::max(worst.nde2, r.nde2);
    }
    rep.checks.push_back(entry_from_residual("the cyclic first-order system in the p's holds",
                                             worst.c2n, cfg.tol));
    rep.checks.push_back(entry_from_residual(
        "combos p1,p2,p3 satisfy the generalised Chazy equation with k=3/2", worst.chazy32,
        cfg.tol));
    rep.checks.push_back(entry_from_residual(
        "p0 satisfies the generalised Chazy equation with k=3", worst.chazy3, cfg.tol));
    rep.checks.push_back(entry_from_residual("reconstructed (p1,q1,r1) satisfies the k=3/2 system",
                                             worst.nde1, cfg.tol));
    rep.checks.push_back(entry_from_residual("reconstructed (p0,q0,r0) satisfies the k=3 system",
                                             worst.nde2, cfg.tol));

    // cross-weight control: the 16/9 variant breaks the same checks
    {
        SystemSpec variant = SystemSpec::symmetric_dh32(16.0 / 9.0);
        Trajectory tr = integrate(variant, {Complex(0.3, 0.1), Complex(-0.2, 0.2),
                                            Complex(0.1, -0.3)},
                                  cfg.base_x, cfg.base_x + Complex(cfg.path_len, 0.0),
                                  cfg.integ_tol, cfg.traj_samples);
        Dh32ComboReport r = dh32_combo_check(tr);
        CheckEntry e;
        e.id = "cross-weight control: 4/9 certifies, the 16/9 variant does not";
        e.max_deviation = format_deviation(worst.max());
        e.tolerance = format_deviation(cfg.tol);
        e.pass = worst.max() <= cfg.tol && r.max() > 1e-3;
        e.witnesses["variant_16_9_max_residual"] = format_deviation(r.max());
        e.witnesses["measured_weight"] = "4/9";
        rep.checks.push_back(std::move(e));
    }
    return rep;
}

VerificationReport suite_schwarz_remarks(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "schwarz-remarks";
    Rng rng(cfg.seed);
    const double tol = std::max(cfg.tol, 1e-6);
    struct ProfileCase {
        SchwarzProfile profile;
        int symmetric_k;
    };
    for (const ProfileCase& pc :
         {ProfileCase{schwarz_13131(), 2}, ProfileCase{schwarz_131312(), 4}}) {
        SystemSpec sys = SystemSpec::schwarz_triangle(pc.profile);
        SchwarzRemarkReport worst;
        worst.symmetric_k = pc.symmetric_k;
        int done = 0, attempts = 0;
        while (done < std::max(3, cfg.samples / 5) && attempts < 100) {
            ++attempts;
            std::array<Complex, 3> s0{Complex(0.4, 0.2) + rng.box(0.15),
                                      Complex(1.0, 0.0) + rng.box(0.3), rng.box(0.3)};
            if (sys.is_singular(s0)) continue;
            try {
                Trajectory tr = integrate(sys, s0, cfg.base_x,
                                          cfg.base_x + Complex(cfg.path_len, 0.0), cfg.integ_tol,
                                          cfg.traj_samples);
                SchwarzRemarkReport r = schwarz_remark_check(tr, pc.symmetric_k);
                worst.k3_combo1 = std::max(worst.k3_combo1, r.k3_combo1);
                worst.k3_combo2 = std::max(worst.k3_combo2, r.k3_combo2);
                worst.symmetric = std::max(worst.symmetric, r.symmetric);
                worst.unasserted = std::max(worst.unasserted, r.unasserted);
                ++done;
            } catch (const SingularityStop&) {
            } catch (const std::domain_error&) {
            }
        }
        CheckEntry e = entry_from_residual(
            pc.profile.name + ": -w1-2w2-3w3 and -2w1-w2-3w3 satisfy k=3, -2(w1+w2+w3) satisfies k=" +
                std::to_string(pc.symmetric_k),
            worst.max_asserted(), tol);
        e.params["trajectories"] = done;
        e.witnesses["unasserted_-4w1-w2-w3_k3_residual"] = format_deviation(worst.unasserted);
        rep.checks.push_back(std::move(e));
    }
    return rep;
}

VerificationReport suite_hypergeom(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "hypergeom";
    const PuiseuxSeries::Steps order = std::min<PuiseuxSeries::Steps>(cfg.order_steps(), 120);
    QuadTransformCheck qt = quad_transform_checks(order);
    rep.checks.push_back(entry_from_exact(qt.first));
    rep.checks.push_back(entry_from_exact(qt.second));
    rep.checks.push_back(entry_from_exact(theta_2F1_modulus_check(order)));
    {
        ComplementaryModulusCheck c = complementary_modulus_check({0.01, 0.05}, 1e-8);
        CheckEntry e = entry_from_residual("-2 c0 b^4 = 2F1(1/2,1/2;1;c^4/b^4)^2 numerically",
                                           c.worst_rel_error, 1e-8);
        e.params["q_points"] = c.q_points;
        rep.checks.push_back(std::move(e));
    }
    {
        // numeric evaluation agrees with the exact truncated series
        auto f = coeffs_2F1(rat(1, 2), rat(1, 2), rat(1), 64);
        PuiseuxSeries x = PuiseuxSeries::monomial(1, 4, 244);
        PuiseuxSeries series = PuiseuxSeries::compose(f.coeffs, x, 240);
        Complex sv = series.eval(Complex(0.25, 0.0));
        Complex ev = eval_2F1(f, Complex(0.25, 0.0), 1e-13);
        rep.checks.push_back(
            entry_from_residual("eval_2F1 agrees with the exact series at x = 1/4",
                                std::abs(sv - ev), 1e-12));
    }
    return rep;
}

VerificationReport suite_schwarz_uv(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "schwarz-uv";
    const PuiseuxSeries::Steps order = std::min<PuiseuxSeries::Steps>(cfg.order_steps(), 80);
    SchwarzUVChecks c = schwarz_uv_series_check(order);
    for (const auto* one : {&c.c_eliminated, &c.a_eliminated}) {
        CheckEntry e1 = entry_from_exact(one->s_form);
        e1.params["u_sign"] = one->s_form_u_sign;
        rep.checks.push_back(std::move(e1));
        CheckEntry e2 = entry_from_exact(one->sprime_form);
        e2.params["u_sign"] = one->sprime_form_u_sign;
        e2.witnesses["single_sign_consistent"] = one->single_sign_consistent;
        rep.checks.push_back(std::move(e2));
        rep.checks.push_back(entry_from_exact(one->z1_relation));
    }
    // c0 = -1/2 closes the exact modulus route as well
    {
        ThetaTriple t = theta(order + 8);
        ModulusData m = modulus_data(t);
        auto f = coeffs_2F1(rat(1, 2), rat(1, 2), rat(1),
                            static_cast<std::size_t>(order / 4 + 2));
        PuiseuxSeries z1 = PuiseuxSeries::compose(f.coeffs, m.kappa_sq, order);
        PuiseuxSeries b4 = (t.b * t.b * t.b * t.b).truncate(order);
        ExactCheck ch;
        ch.id = "modulus route: -2 c0 b^4 = 2F1(1/2,1/2;1;kappa^2)^2 with c0 = -1/2";
        ch.witness = PuiseuxSeries::first_mismatch((z1 * z1).truncate(order),
                                                   b4 * (rat(-2) * wronskian_c0_exact()), order);
        ch.pass = !ch.witness.has_value();
        rep.checks.push_back(entry_from_exact(ch));
    }
    return rep;
}

// ---------------- property suite ----------------

PuiseuxSeries random_series(Rng& rng, long min_steps, long max_steps, long trunc) {
    PuiseuxSeries s = PuiseuxSeries::zero(trunc);
    int terms = 2 + static_cast<int>(rng.gen() % 5);
    for (int i = 0; i < terms; ++i) {
        long e = min_steps + static_cast<long>(rng.gen() % (max_steps - min_steps));
        long num = static_cast<long>(rng.gen() % 19) - 9;
        long den = 1 + static_cast<long>(rng.gen() % 4);
        if (num != 0) s = s + PuiseuxSeries::monomial(rat(num, den), e, trunc);
    }
    return s;
}

VerificationReport suite_properties(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "properties";
    Rng rng(cfg.seed);
    const long trunc = 48;

    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            PuiseuxSeries a = random_series(rng, -4, 20, trunc);
            PuiseuxSeries b = random_series(rng, -4, 20, trunc);
            PuiseuxSeries c = random_series(rng, -4, 20, trunc);
            PuiseuxSeries lhs = (a + b) * c;
            PuiseuxSeries rhs = a * c + b * c;
            ok = ok && lhs == rhs && (a * b) == (b * a);
        }
        CheckEntry e;
        e.id = "ring axioms on random series: (a+b)c = ac+bc, ab = ba";
        e.pass = ok;
        rep.checks.push_back(std::move(e));
    }
    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            PuiseuxSeries a = random_series(rng, 0, 20, trunc);
            PuiseuxSeries b = random_series(rng, 0, 20, trunc);
            ok = (a * b).derive() == (a.derive() * b + a * b.derive());
        }
        CheckEntry e;
        e.id = "D is a derivation: D(ab) = D(a)b + aD(b)";
        e.pass = ok;
        rep.checks.push_back(std::move(e));
    }
    {
        bool ok = true;
        for (int i = 0; i < 30 && ok; ++i) {
            // shift by a random lattice power so fractional valuations are hit too
            long shift = static_cast<long>(rng.gen() % 7) - 3;
            PuiseuxSeries a =
                (PuiseuxSeries::constant(rat(1 + static_cast<long>(rng.gen() % 5)), trunc) +
                 random_series(rng, 1, 20, trunc)) *
                PuiseuxSeries::monomial(1, shift, trunc + 8);
            PuiseuxSeries prod = a.inverse() * a;
            ok = prod == PuiseuxSeries::constant(1, prod.trunc_order());
        }
        ThetaTriple t = theta(cfg.order_steps());
        PuiseuxSeries b4 = t.b.pow(4);
        PuiseuxSeries prod = b4.inverse() * b4;
        ok = ok && prod == PuiseuxSeries::constant(1, prod.trunc_order());
        CheckEntry e;
        e.id = "inverse: inv(a) * a = 1 to available order (random series and theta3^4)";
        e.pass = ok;
        rep.checks.push_back(std::move(e));
    }
    {
        bool ok = true;
        for (int i = 0; i < 30 && ok; ++i) {
            PuiseuxSeries a = random_series(rng, 0, 16, trunc);
            PuiseuxSeries b = random_series(rng, 0, 16, trunc);
            long m = 1 + static_cast<long>(rng.gen() % 3);
            ok = (a * b).substitute_monomial(1, m) ==
                 a.substitute_monomial(1, m) * b.substitute_monomial(1, m);
            PuiseuxSeries lhs = a.substitute_monomial(1, m).derive();
            PuiseuxSeries rhs = a.derive().substitute_monomial(1, m) * rat(m);
            ok = ok && lhs == rhs;
        }
        CheckEntry e;
        e.id = "substitution q -> q^m commutes with products; D(f(q^m)) = m (Df)(q^m)";
        e.pass = ok;
        rep.checks.push_back(std::move(e));
    }
    {
        // jets against a 5-point finite-difference stencil: O(h^4)
        SystemSpec sys = SystemSpec::ramanujan();
        std::array<Complex, 3> y0{Complex(0.3, 0.1), Complex(1.2, 0.0), Complex(0.9, 0.0)};
        auto jets = jet_extend(sys, y0);
        auto state_at = [&](double h) {
            if (h >= 0)
                return integrate(sys, y0, 0.0, Complex(h, 0.0), 1e-13, 2).samples.back().state;
            return integrate(sys, y0, 0.0, Complex(h, 0.0), 1e-13, 2).samples.back().state;
        };
        auto fd_error = [&](double h) {
            auto p2 = state_at(2 * h), p1 = state_at(h), m1 = state_at(-h), m2 = state_at(-2 * h);
            double worst = 0.0;
            for (int i = 0; i < 3; ++i) {
                Complex fd =
                    (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h);
                worst = std::max(worst, std::abs(fd - jets[i].c[1]));
            }
            return worst;
        };
        double e1 = fd_error(0.02), e2 = fd_error(0.01);
        double ratio = e1 / std::max(e2, 1e-18);
        CheckEntry e;
        e.id = "jet derivatives match finite differences at O(h^4)";
        e.max_deviation = format_deviation(e2);
        e.tolerance = "ratio in [8,32] under h -> h/2";
        e.pass = e2 < 1e-8 && ratio > 8.0 && ratio < 32.0;
        e.witnesses["error_h"] = format_deviation(e1);
        e.witnesses["error_h_half"] = format_deviation(e2);
        e.witnesses["ratio"] = format_deviation(ratio);
        rep.checks.push_back(std::move(e));
    }
    {
        // constant-solution covariance
        double c = 0.5;
        auto fwd = forward_map<Complex>(Complex(c), Complex(c * c), Complex(c * c * c),
                                        {+1, 0, +1});
        double worst = 0.0;
        auto probe = [&](const TripleC& t, double lam) {
            worst = std::max(worst, std::abs(t.p - Complex(lam * c)));
            worst = std::max(worst, std::abs(t.q - Complex(lam * lam * c * c)));
            worst = std::max(worst, std::abs(t.r - Complex(lam * lam * lam * c * c * c)));
        };
        probe(fwd.triples.two, 4.0);
        probe(fwd.triples.three, 1.0);
        probe(fwd.triples.zero, 2.0);
        rep.checks.push_back(entry_from_residual(
            "constant solution (c,c^2,c^3) maps to the lambda in {4,1,2} family", worst, 1e-12));
    }
    {
        // report determinism under a fixed seed
        VerificationReport a = suite_duality_roundtrip(cfg);
        VerificationReport b = suite_duality_roundtrip(cfg);
        CheckEntry e;
        e.id = "reports are byte-identical for a fixed seed (runtime excluded)";
        e.pass = a.to_json(false).dump() == b.to_json(false).dump();
        rep.checks.push_back(std::move(e));
    }
    return rep;
}

using SuiteFn = VerificationReport (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"ramanujan-derivation", suite_ramanujan_derivation},
        {"jacobi", suite_jacobi},
        {"eisenstein-theta", suite_eisenstein_theta},
        {"sigma-addition", suite_sigma_addition},
        {"theorem1-series", suite_theorem1_series},
        {"theorem1-numeric", suite_theorem1_numeric},
        {"duality-roundtrip", suite_duality_roundtrip},
        {"iterate-addition", suite_iterate_addition},
        {"theorem2-numeric", suite_theorem2_numeric},
        {"convention-resolve", suite_convention_resolve},
        {"dh-combos", suite_dh_combos},
        {"dh32-combos", suite_dh32_combos},
        {"schwarz-remarks", suite_schwarz_remarks},
        {"hypergeom", suite_hypergeom},
        {"schwarz-uv", suite_schwarz_uv},
        {"properties", suite_properties},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [n, f] : registry()) names.push_back(n);
    names.push_back("all");
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    for (const auto& [n, f] : registry())
        if (n == name) return true;
    return false;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
    for (const auto& [n, f] : registry()) {
        if (n == name) {
            auto t0 = Clock::now();
            VerificationReport rep;
            try {
                rep = f(cfg);
            } catch (const std::exception& e) {
                // an integration or sampling failure inside a check fails the
                // suite with the error embedded, rather than aborting the run
                rep.suite = name;
                CheckEntry err;
                err.id = "suite aborted";
                err.pass = false;
                err.max_deviation = "n/a";
                err.tolerance = "n/a";
                err.witnesses["error"] = e.what();
                rep.checks.push_back(std::move(err));
            }
            rep.seed = cfg.seed;
            rep.runtime_ms =
                std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            return rep;
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

FullReport run_all(const RunConfig& cfg) {
    FullReport full;
    for (const auto& [n, f] : registry()) full.sections.push_back(run_suite(n, cfg));
    return full;
}

}  // namespace chazy
