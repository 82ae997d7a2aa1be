#include "chazy/theorem1.hpp"

namespace chazy {

namespace {

ExactCheck equal_check(std::string id, const PuiseuxSeries& lhs, const PuiseuxSeries& rhs,
                       PuiseuxSeries::Steps order) {
    ExactCheck c;
    c.id = std::move(id);
    c.witness = PuiseuxSeries::first_mismatch(lhs, rhs, order);
    c.pass = !c.witness.has_value();
    return c;
}

}  // namespace

UVSeries uv_from_theta(const ThetaTriple& t, ThetaElimination elim) {
    PuiseuxSeries a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
    if (elim == ThetaElimination::CEliminated)
        return {a2 * b2 * rat(3), (a2 * a2 + b2 * b2) * rat(-3, 2)};
    return {b2 * c2 * rat(3), (b2 * b2 + c2 * c2) * rat(3, 2)};
}

UVSeries uv_eisenstein_nome(const ThetaTriple& t) {
    PuiseuxSeries a4 = t.a.pow(4), b4 = t.b.pow(4), c4 = t.c.pow(4);
    return {c4 * rat(3), (a4 + b4) * rat(3)};
}

RelationCheck algebraic_relation_check(const PuiseuxSeries& P, const PuiseuxSeries& Q,
                                       const PuiseuxSeries& R, const PuiseuxSeries& u,
                                       const PuiseuxSeries& v, PuiseuxSeries::Steps order) {
    PuiseuxSeries V = P * rat(2) + v;
    PuiseuxSeries u2 = u * u;
    PuiseuxSeries rhs1 = P * P * rat(16) - P * V * rat(16) + V * V * rat(4) - u2 * rat(3);
    PuiseuxSeries two_p_minus_v = P * rat(2) - V;
    RelationCheck out;
    out.relation1 = equal_check("9Q = 16P^2 - 16PV + 4V^2 - 3u^2", Q * rat(9), rhs1, order);
    out.relation2 = equal_check("R = (1/27)(2P - V)(18Q - 3u^2)", R,
                                two_p_minus_v * (Q * rat(18) - u2 * rat(3)) * rat(1, 27), order);
    out.relation2_variant8 =
        equal_check("R = (1/27)(2P - V)(8Q - 3u^2) [coefficient-8 variant]", R,
                    two_p_minus_v * (Q * rat(8) - u2 * rat(3)) * rat(1, 27), order);
    return out;
}

RelationResiduals algebraic_relation_residuals(Complex P, Complex Q, Complex R, Complex u,
                                               Complex v) {
    Complex V = 2.0 * P + v;
    Complex u2 = u * u;
    double scale = std::max({1.0, std::abs(P), std::abs(Q), std::abs(R)});
    RelationResiduals out;
    out.relation1 = std::abs(9.0 * Q - (16.0 * P * P - 16.0 * P * V + 4.0 * V * V - 3.0 * u2)) /
                    (scale * scale);
    out.relation2 =
        std::abs(R - (2.0 * P - V) * (18.0 * Q - 3.0 * u2) / 27.0) / (scale * scale * scale);
    out.relation2_variant8 =
        std::abs(R - (2.0 * P - V) * (8.0 * Q - 3.0 * u2) / 27.0) / (scale * scale * scale);
    return out;
}

UvTriples<PuiseuxSeries> forward_map_series(const PuiseuxSeries& P, const PuiseuxSeries& Q,
                                            const PuiseuxSeries& R, const PuiseuxSeries& u,
                                            const PuiseuxSeries& v) {
    PuiseuxSeries::Steps order = std::min(
        {P.trunc_order(), Q.trunc_order(), R.trunc_order(), u.trunc_order(), v.trunc_order()});
    RelationCheck pre = algebraic_relation_check(P, Q, R, u, v, order);
    if (!pre.pass()) throw std::domain_error("u,v not compatible with (P,Q,R)");
    return forward_from_uv(P, Q, R, u, v);
}

bool InstantiationCheck::pass() const {
    for (const auto& c : components)
        if (!c.pass) return false;
    return averaging.pass;
}

InstantiationCheck eisenstein_instantiation_check(PuiseuxSeries::Steps order) {
    EisensteinTriple e = eisenstein(order);
    ThetaTriple th = theta(order);
    UVSeries uv = uv_eisenstein_nome(th);
    EisensteinTriple t2 = eisenstein_scaled(order, +1, 4);
    EisensteinTriple t3 = eisenstein_scaled(order, -1, 1);
    EisensteinTriple t0 = eisenstein_scaled(order, +1, 2);

    InstantiationCheck out;
    // the u-sign pairing is not forced a priori; it is resolved by comparison
    UvTriples<PuiseuxSeries> maps = forward_map_series(e.P, e.Q, e.R, uv.u, uv.v);
    if (PuiseuxSeries::first_mismatch(maps.two.p, t2.P, order).has_value()) {
        out.matched_u_sign = -1;
        maps = forward_map_series(e.P, e.Q, e.R, -uv.u, uv.v);
    }
    out.components[0] = equal_check("p2 = 4P(q^4)", maps.two.p, t2.P, order);
    out.components[1] = equal_check("q2 = 16Q(q^4)", maps.two.q, t2.Q, order);
    out.components[2] = equal_check("r2 = 64R(q^4)", maps.two.r, t2.R, order);
    out.components[3] = equal_check("p3 = P(-q)", maps.three.p, t3.P, order);
    out.components[4] = equal_check("q3 = Q(-q)", maps.three.q, t3.Q, order);
    out.components[5] = equal_check("r3 = R(-q)", maps.three.r, t3.R, order);
    out.components[6] = equal_check("p0 = 2P(q^2)", maps.zero.p, t0.P, order);
    out.components[7] = equal_check("q0 = 4Q(q^2)", maps.zero.q, t0.Q, order);
    out.components[8] = equal_check("r0 = 8R(q^2)", maps.zero.r, t0.R, order);
    out.averaging = equal_check("(1/3)(p1+p2+p3) = p0",
                                (e.P + maps.two.p + maps.three.p) * rat(1, 3), maps.zero.p, order);
    return out;
}

bool IterateCheck::pass() const {
    for (const auto& c : components)
        if (!c.pass) return false;
    return averaging.pass && scaled_derivation.pass();
}

IterateCheck iterate_addition_check(PuiseuxSeries::Steps order) {
    EisensteinTriple in = eisenstein_scaled(order, +1, 2);  // (2P(q^2), 4Q(q^2), 8R(q^2))
    PuiseuxSeries::Steps base = (order + 1) / 2;
    UVSeries uv_base = uv_eisenstein_nome(theta(base));
    // scaling (lambda P, lambda^2 Q, lambda^3 R) carries (u, v) -> lambda (u, v)
    PuiseuxSeries u = uv_base.u.substitute_monomial(+1, 2).truncate(order) * rat(2);
    PuiseuxSeries v = uv_base.v.substitute_monomial(+1, 2).truncate(order) * rat(2);
    UvTriples<PuiseuxSeries> maps = forward_map_series(in.P, in.Q, in.R, u, v);

    EisensteinTriple t4 = eisenstein_scaled(order, +1, 8);
    EisensteinTriple t5 = eisenstein_scaled(order, -1, 2);
    EisensteinTriple t2 = eisenstein_scaled(order, +1, 4);

    IterateCheck out;
    out.components[0] = equal_check("p4 = 8P(q^8)", maps.two.p, t4.P, order);
    out.components[1] = equal_check("q4 = 64Q(q^8)", maps.two.q, t4.Q, order);
    out.components[2] = equal_check("r4 = 512R(q^8)", maps.two.r, t4.R, order);
    out.components[3] = equal_check("p5 = 2P(-q^2)", maps.three.p, t5.P, order);
    out.components[4] = equal_check("q5 = 4Q(-q^2)", maps.three.q, t5.Q, order);
    out.components[5] = equal_check("r5 = 8R(-q^2)", maps.three.r, t5.R, order);
    out.averaging =
        equal_check("(1/3)(p0+p4+p5) = p2", (in.P + maps.two.p + maps.three.p) * rat(1, 3),
                    t2.P, order);
    out.scaled_derivation = ramanujan_derivation_check(t2, order);
    return out;
}

}  // namespace chazy
