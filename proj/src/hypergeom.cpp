#include "chazy/hypergeom.hpp"

#include <cmath>

namespace chazy {

HypergeometricCoeffs coeffs_2F1(const Rational& a, const Rational& b, const Rational& c,
                                std::size_t length) {
    if (c <= 0 && c.get_den() == 1)
        throw std::domain_error("2F1 parameter c must not be a nonpositive integer");
    HypergeometricCoeffs f{a, b, c, {}};
    f.coeffs.reserve(length);
    Rational cur(1);
    for (std::size_t n = 0; n < length; ++n) {
        f.coeffs.push_back(cur);
        Rational ln(static_cast<long>(n));
        cur = cur * (a + ln) * (b + ln) / ((c + ln) * (ln + 1));
    }
    return f;
}

std::complex<double> eval_2F1(const HypergeometricCoeffs& f, std::complex<double> x, double tol,
                              double margin) {
    double ax = std::abs(x);
    if (ax > margin) throw std::domain_error("outside convergence margin");
    // once n clears the parameters, successive term ratios approach |x|; the
    // geometric bound then controls the tail
    double aa = std::abs(to_double(f.a)), ab = std::abs(to_double(f.b)),
           ac = std::abs(to_double(f.c));
    double safe = 1.0 + (1.0 + ax) / std::max(1e-9, 1.0 - ax);
    std::size_t n_settle = static_cast<std::size_t>(8 + safe * (aa + ab + ac));
    double tail_scale = 2.0 / (1.0 - ax);
    std::complex<double> acc(0.0), xn(1.0);
    for (std::size_t n = 0;; ++n) {
        if (n >= f.coeffs.size())
            throw std::domain_error("2F1 coefficient supply exhausted before tolerance");
        double cn = to_double(f.coeffs[n]);
        acc += cn * xn;
        xn *= x;
        if (n >= n_settle && std::abs(cn) * std::abs(xn) * tail_scale < tol) break;
    }
    return acc;
}

ModulusData modulus_data(const ThetaTriple& t) {
    PuiseuxSeries a4 = t.a.pow(4), b4 = t.b.pow(4), c4 = t.c.pow(4);
    PuiseuxSeries inv_b4 = b4.inverse();
    return {a4 * inv_b4, c4 * inv_b4};
}

QuadTransformCheck quad_transform_checks(PuiseuxSeries::Steps order) {
    // series in x on the integer lattice
    const std::size_t len = static_cast<std::size_t>(order / 4 + 2);
    auto f_half = coeffs_2F1(rat(1, 2), rat(1, 2), rat(1), len);
    auto f_quarter = coeffs_2F1(rat(1, 4), rat(3, 4), rat(1), len);
    PuiseuxSeries x = PuiseuxSeries::monomial(1, 4, order + 4);
    PuiseuxSeries lhs = PuiseuxSeries::compose(f_half.coeffs, x, order);

    QuadTransformCheck out;
    {
        // (1-2x)^{-1/2} 2F1(1/4,3/4;1;1-(1-2x)^{-2}); the inner argument has
        // valuation 1: 1-(1-2x)^{-2} = -4x - 12x^2 - ...
        PuiseuxSeries m2x = x * rat(-2);
        PuiseuxSeries pref = PuiseuxSeries::binomial_pow(m2x, rat(-1, 2), order);
        PuiseuxSeries inner =
            PuiseuxSeries::constant(1, order) - PuiseuxSeries::binomial_pow(m2x, rat(-2), order);
        PuiseuxSeries rhs = pref * PuiseuxSeries::compose(f_quarter.coeffs, inner, order);
        ExactCheck c;
        c.id = "2F1(1/2,1/2;1;x) = (1-2x)^{-1/2} 2F1(1/4,3/4;1;1-1/(2x-1)^2)";
        c.witness = PuiseuxSeries::first_mismatch(lhs, rhs, order);
        c.pass = !c.witness.has_value();
        out.first = std::move(c);
    }
    {
        // (1-x/2)^{-1/2} 2F1(1/4,3/4;1;x^2/(2-x)^2); inner valuation 2
        PuiseuxSeries mhx = x * rat(-1, 2);
        PuiseuxSeries pref = PuiseuxSeries::binomial_pow(mhx, rat(-1, 2), order);
        PuiseuxSeries inner =
            (x * x * rat(1, 4) * PuiseuxSeries::binomial_pow(mhx, rat(-2), order))
                .truncate(order);
        PuiseuxSeries rhs = pref * PuiseuxSeries::compose(f_quarter.coeffs, inner, order);
        ExactCheck c;
        c.id = "2F1(1/2,1/2;1;x) = (1-x/2)^{-1/2} 2F1(1/4,3/4;1;x^2/(2-x)^2)";
        c.witness = PuiseuxSeries::first_mismatch(lhs, rhs, order);
        c.pass = !c.witness.has_value();
        out.second = std::move(c);
    }
    return out;
}

ExactCheck theta_2F1_modulus_check(PuiseuxSeries::Steps order) {
    ThetaTriple t = theta(order + 8);
    ModulusData m = modulus_data(t);
    auto f_half = coeffs_2F1(rat(1, 2), rat(1, 2), rat(1), static_cast<std::size_t>(order / 4 + 2));
    PuiseuxSeries lhs = PuiseuxSeries::compose(f_half.coeffs, m.kappa_sq, order);
    ExactCheck c;
    c.id = "theta3^2 = 2F1(1/2,1/2;1;kappa^2)";
    c.witness = PuiseuxSeries::first_mismatch(lhs, t.b * t.b, order);
    c.pass = !c.witness.has_value();
    return c;
}

namespace {

double theta_num(int which, double q) {
    // direct defining sums; independent of the series path
    double acc = which == 2 ? 0.0 : 1.0;
    for (int n = 1; n < 64; ++n) {
        double term;
        if (which == 2) {
            double e = (n - 0.5) * (n - 0.5);
            term = 2.0 * std::pow(q, e);
        } else {
            term = 2.0 * std::pow(q, static_cast<double>(n) * n);
            if (which == 4 && n % 2 == 1) term = -term;
        }
        acc += term;
        if (std::abs(term) < 1e-18) break;
    }
    return acc;
}

}  // namespace

ComplementaryModulusCheck complementary_modulus_check(const std::vector<double>& q_points,
                                                      double tol) {
    ComplementaryModulusCheck out;
    out.q_points = q_points;
    auto f_half = coeffs_2F1(rat(1, 2), rat(1, 2), rat(1), 4096);
    for (double q : q_points) {
        double a = theta_num(2, q), b = theta_num(3, q), c = theta_num(4, q);
        double a4 = a * a * a * a, b4 = b * b * b * b, c4 = c * c * c * c;
        std::complex<double> fk = eval_2F1(f_half, a4 / b4, 1e-15);
        std::complex<double> fc = eval_2F1(f_half, c4 / b4, 1e-15);

        double target = -2.0 * wronskian_c0 * b4;  // = b^4 with c0 = -1/2
        double rel_a = std::abs(fk * fk - target) / target;
        out.modulus_route_error = std::max(out.modulus_route_error, rel_a);

        double period_ratio = std::log(1.0 / q) / M_PI;
        double rel_b = std::abs(fc - period_ratio * fk) / std::abs(fc);
        out.period_ratio_error = std::max(out.period_ratio_error, rel_b);

        out.naive_form_defect =
            std::max(out.naive_form_defect, std::abs(std::norm(fc) / b4 - 1.0));
    }
    out.worst_rel_error = std::max(out.modulus_route_error, out.period_ratio_error);
    out.pass = out.worst_rel_error <= tol;
    return out;
}

namespace {

SchwarzUVCheck schwarz_uv_one(const PuiseuxSeries& u, const PuiseuxSeries& v,
                              const PuiseuxSeries& s_theta, const PuiseuxSeries& sp_theta,
                              const PuiseuxSeries& z1_sq_theta, PuiseuxSeries::Steps order,
                              const std::string& tag) {
    SchwarzUVCheck out;
    // s = 1/2 - v/(2u), Laurent in general; try both u-signs against the
    // theta form and keep the matching one.
    auto s_of = [&](int sgn) {
        PuiseuxSeries su = u * rat(sgn);
        return PuiseuxSeries::constant(rat(1, 2), order) - (v * su.inverse()) * rat(1, 2);
    };
    auto sp_of = [&](int sgn) {
        PuiseuxSeries su = u * rat(sgn);
        return (su * su - v * v) * (su * rat(6)).inverse();
    };
    auto pick = [&](auto make, const PuiseuxSeries& target, int& sign_out) {
        for (int sgn : {+1, -1}) {
            auto cand = make(sgn);
            if (!PuiseuxSeries::first_mismatch(cand, target, order).has_value()) {
                sign_out = sgn;
                return std::optional<PuiseuxSeries::Mismatch>{};
            }
        }
        sign_out = +1;
        return PuiseuxSeries::first_mismatch(make(+1), target, order);
    };
    out.s_form.id = tag + ": s = 1/2 - v/(2u) equals the theta form";
    out.s_form.witness = pick(s_of, s_theta, out.s_form_u_sign);
    out.s_form.pass = !out.s_form.witness.has_value();
    out.sprime_form.id = tag + ": s' = (u^2-v^2)/(6u) equals the theta form";
    out.sprime_form.witness = pick(sp_of, sp_theta, out.sprime_form_u_sign);
    out.sprime_form.pass = !out.sprime_form.witness.has_value();
    out.single_sign_consistent = out.s_form_u_sign == out.sprime_form_u_sign;
    // z1^2 = -(2/3) c0 u = u/3 with c0 = -1/2, against the theta product form
    out.z1_relation.id = tag + ": z1^2 = -(2/3) c0 u with c0 = -1/2";
    out.z1_relation.witness =
        PuiseuxSeries::first_mismatch(u * rat(1, 3), z1_sq_theta, order);
    out.z1_relation.pass = !out.z1_relation.witness.has_value();
    return out;
}

}  // namespace

SchwarzUVChecks schwarz_uv_series_check(PuiseuxSeries::Steps order) {
    ThetaTriple t = theta(order + 16);
    PuiseuxSeries a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
    PuiseuxSeries a4 = a2 * a2, b4 = b2 * b2, c4 = c2 * c2;
    SchwarzUVChecks out;
    {
        PuiseuxSeries u = a2 * b2 * rat(3);
        PuiseuxSeries v = (a4 + b4) * rat(-3, 2);
        PuiseuxSeries s_theta = PuiseuxSeries::constant(rat(1, 2), order + 8) +
                                (a4 + b4) * (a2 * b2 * rat(4)).inverse();
        PuiseuxSeries sp_theta = -((a2 + b2) * (a2 + b2) * (t.a - t.b) * (t.a - t.b) *
                                   (t.a + t.b) * (t.a + t.b)) *
                                 (a2 * b2 * rat(8)).inverse();
        out.c_eliminated = schwarz_uv_one(u, v, s_theta, sp_theta, a2 * b2, order, "c-eliminated");
    }
    {
        PuiseuxSeries u = b2 * c2 * rat(3);
        PuiseuxSeries v = (b4 + c4) * rat(3, 2);
        PuiseuxSeries s_theta = PuiseuxSeries::constant(rat(1, 2), order + 8) +
                                (b4 + c4) * (b2 * c2 * rat(4)).inverse();
        PuiseuxSeries sp_theta = -((b2 + c2) * (b2 + c2) * (t.b - t.c) * (t.b - t.c) *
                                   (t.b + t.c) * (t.b + t.c)) *
                                 (b2 * c2 * rat(8)).inverse();
        out.a_eliminated = schwarz_uv_one(u, v, s_theta, sp_theta, b2 * c2, order, "a-eliminated");
    }
    return out;
}

}  // namespace chazy
