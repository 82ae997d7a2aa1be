#include "chazy/modular.hpp"

namespace chazy {

Integer sigma_power(unsigned long n, unsigned k) {
    if (n == 0) throw std::domain_error("sigma_power needs n >= 1");
    Integer acc = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer dk, ek;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        acc += dk;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(ek.get_mpz_t(), e, k);
            acc += ek;
        }
    }
    return acc;
}

namespace {

PuiseuxSeries eisenstein_series(PuiseuxSeries::Steps order, long scale, unsigned k) {
    PuiseuxSeries s = PuiseuxSeries::constant(1, order);
    for (long n = 1; 4 * n < order; ++n)
        s = s + PuiseuxSeries::monomial(Rational(scale) * Rational(sigma_power(n, k)), 4 * n,
                                        order);
    return s;
}

}  // namespace

EisensteinTriple eisenstein(PuiseuxSeries::Steps order) {
    return {eisenstein_series(order, -24, 1), eisenstein_series(order, 240, 3),
            eisenstein_series(order, -504, 5), order};
}

EisensteinTriple eisenstein_scaled(PuiseuxSeries::Steps order, int sign, long m) {
    // compute at base order ceil(order/m) so the substituted series reaches `order`
    PuiseuxSeries::Steps base = (order + m - 1) / m;
    EisensteinTriple e = eisenstein(base);
    Rational lm(m);
    return {(e.P.substitute_monomial(sign, m) * lm).truncate(order),
            (e.Q.substitute_monomial(sign, m) * (lm * lm)).truncate(order),
            (e.R.substitute_monomial(sign, m) * (lm * lm * lm)).truncate(order), order};
}

ThetaTriple theta(PuiseuxSeries::Steps order) {
    PuiseuxSeries a = PuiseuxSeries::zero(order);
    PuiseuxSeries b = PuiseuxSeries::constant(1, order);
    PuiseuxSeries c = PuiseuxSeries::constant(1, order);
    for (long n = 0; (2 * n + 1) * (2 * n + 1) < order; ++n)
        a = a + PuiseuxSeries::monomial(2, (2 * n + 1) * (2 * n + 1), order);
    for (long n = 1; 4 * n * n < order; ++n) {
        b = b + PuiseuxSeries::monomial(2, 4 * n * n, order);
        c = c + PuiseuxSeries::monomial(n % 2 == 0 ? 2 : -2, 4 * n * n, order);
    }
    return {a, b, c, order};
}

namespace {

ExactCheck check_equal(std::string id, const PuiseuxSeries& lhs, const PuiseuxSeries& rhs,
                       PuiseuxSeries::Steps order) {
    ExactCheck c;
    c.id = std::move(id);
    c.witness = PuiseuxSeries::first_mismatch(lhs, rhs, order);
    c.pass = !c.witness.has_value();
    return c;
}

}  // namespace

DerivationCheck ramanujan_derivation_check(const EisensteinTriple& t,
                                           PuiseuxSeries::Steps order) {
    const auto& [P, Q, R, ord] = t;
    DerivationCheck out;
    out.dP = check_equal("12*D(P) = P^2 - Q", P.derive() * rat(12), P * P - Q, order);
    out.dQ = check_equal("3*D(Q) = P*Q - R", Q.derive() * rat(3), P * Q - R, order);
    out.dR = check_equal("2*D(R) = P*R - Q^2", R.derive() * rat(2), P * R - Q * Q, order);
    return out;
}

DerivationCheck ramanujan_derivation_check(PuiseuxSeries::Steps order) {
    return ramanujan_derivation_check(eisenstein(order), order);
}

ExactCheck jacobi_identity_check(PuiseuxSeries::Steps order) {
    ThetaTriple t = theta(order);
    return check_equal("b^4 = a^4 + c^4", t.b.pow(4), t.a.pow(4) + t.c.pow(4), order);
}

ThetaEisensteinCheck eisenstein_theta_check(PuiseuxSeries::Steps order) {
    ThetaTriple t = theta(order);
    EisensteinTriple e = eisenstein((order + 1) / 2);
    PuiseuxSeries E4q2 = e.Q.substitute_monomial(1, 2);
    PuiseuxSeries E6q2 = e.R.substitute_monomial(1, 2);
    PuiseuxSeries a4 = t.a.pow(4), b4 = t.b.pow(4), c4 = t.c.pow(4);
    PuiseuxSeries a8 = a4 * a4, b8 = b4 * b4, c8 = c4 * c4;
    ThetaEisensteinCheck out;
    out.weight4 = check_equal("E4(q^2) = (a^8+b^8+c^8)/2", E4q2,
                              (a8 + b8 + c8) * rat(1, 2), order);
    out.weight6 = check_equal("E6(q^2) = (b^12+c^12-3a^8(b^4+c^4))/2", E6q2,
                              (b8 * b4 + c8 * c4 - a8 * (b4 + c4) * rat(3)) * rat(1, 2), order);
    return out;
}

SigmaAdditionCheck sigma_addition_check(unsigned long n_max) {
    SigmaAdditionCheck out;
    out.n_max = n_max;
    for (unsigned long n = 1; n <= n_max; ++n) {
        if (sigma_power(4 * n, 1) + 2 * sigma_power(n, 1) != 3 * sigma_power(2 * n, 1)) {
            out.pass = false;
            out.first_failure = n;
            return out;
        }
    }
    return out;
}

}  // namespace chazy
