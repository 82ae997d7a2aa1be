#include "chazy/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace chazy {

std::array<Jet, 3> jet_extend(const SystemSpec& sys, const std::array<Complex, 3>& state) {
    std::array<Jet, 3> jets{Jet(state[0]), Jet(state[1]), Jet(state[2])};
    for (int k = 0; k < Jet::order; ++k) {
        std::array<Jet, 3> f = sys.rhs(jets);
        for (int i = 0; i < 3; ++i) jets[i].c[k + 1] = f[i].c[k] / static_cast<double>(k + 1);
    }
    return jets;
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

using State = std::array<Complex, 3>;

State axpy(const State& y, double h, Complex dir, const State& k) {
    State r;
    for (int i = 0; i < 3; ++i) r[i] = y[i] + h * dir * k[i];
    return r;
}

}  // namespace

Trajectory integrate(const SystemSpec& sys, const State& state0, Complex x_start, Complex x_end,
                     double tol, int n_samples) {
    if (n_samples < 2) throw std::domain_error("need at least two samples");
    Trajectory tr;
    tr.system = sys;
    tr.start = x_start;
    tr.end = x_end;

    Complex seg = x_end - x_start;
    double seg_len = std::abs(seg);
    if (seg_len == 0.0) throw std::domain_error("empty integration path");
    Complex dir = seg / seg_len;  // |dir| = 1; integrate in arclength t

    auto record = [&](double t, const State& y) {
        Sample s;
        s.x = x_start + t * dir;
        s.state = y;
        s.jets = jet_extend(sys, y);
        tr.samples.push_back(std::move(s));
    };

    auto rhs_scaled = [&](const State& y, State& out) {
        std::array<Complex, 3> f = sys.rhs(y);
        for (int i = 0; i < 3; ++i) out[i] = f[i];
        ++tr.stats.rhs_evals;
    };

    State y = state0;
    if (sys.is_singular(y))
        throw SingularityStop("initial state is singular", x_start, {});

    record(0.0, y);
    double t = 0.0;
    double h = std::min(seg_len / 16.0, 0.05);
    const double h_min = seg_len * 1e-13;

    for (int target_i = 1; target_i < n_samples; ++target_i) {
        double t_target = seg_len * target_i / (n_samples - 1);
        while (t < t_target - seg_len * 1e-14) {
            h = std::min(h, t_target - t);
            State k1, k2, k3, k4, k5, k6, k7;
            rhs_scaled(y, k1);
            rhs_scaled(axpy(y, h * a21, dir, k1), k2);
            {
                State tmp = y;
                for (int i = 0; i < 3; ++i)
                    tmp[i] = y[i] + h * dir * (a31 * k1[i] + a32 * k2[i]);
                rhs_scaled(tmp, k3);
                for (int i = 0; i < 3; ++i)
                    tmp[i] = y[i] + h * dir * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
                rhs_scaled(tmp, k4);
                for (int i = 0; i < 3; ++i)
                    tmp[i] = y[i] +
                             h * dir * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
                rhs_scaled(tmp, k5);
                for (int i = 0; i < 3; ++i)
                    tmp[i] = y[i] + h * dir *
                                        (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                         a65 * k5[i]);
                rhs_scaled(tmp, k6);
            }
            State ynew;
            for (int i = 0; i < 3; ++i)
                ynew[i] = y[i] + h * dir *
                                     (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                                      a76 * k6[i]);
            rhs_scaled(ynew, k7);

            double err = 0.0;
            for (int i = 0; i < 3; ++i) {
                Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                 e7 * k7[i]);
                double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                double v = std::abs(e) / sc;
                err += v * v;
            }
            err = std::sqrt(err / 3.0);

            bool singular_new = sys.is_singular(ynew);
            if (err <= 1.0 && !singular_new) {
                t += h;
                y = ynew;
                ++tr.stats.accepted;
                double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
                h *= std::clamp(fac, 0.2, 5.0);
            } else {
                ++tr.stats.rejected;
                if (singular_new) {
                    h *= 0.3;
                } else {
                    double fac = 0.9 * std::pow(err, -0.2);
                    h *= std::clamp(fac, 0.1, 0.9);
                }
            }
            if (h < h_min) {
                throw SingularityStop("step-size underflow near a movable singularity",
                                      x_start + t * dir, tr.samples);
            }
            if (!std::isfinite(std::abs(y[0])) || !std::isfinite(std::abs(y[1])) ||
                !std::isfinite(std::abs(y[2])))
                throw SingularityStop("state blew up", x_start + t * dir, tr.samples);
        }
        record(t, y);
    }
    return tr;
}

}  // namespace chazy
