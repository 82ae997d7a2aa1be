#include "chazy/theorem2.hpp"

namespace chazy {

namespace {

Complex cubic_value(Complex z, Complex q0, Complex r0) {
    return 16.0 * z * z * z - 24.0 * q0 * z * z + 9.0 * q0 * q0 * z - q0 * q0 * q0 -
           3.0 * r0 * r0;
}

Complex cubic_derivative(Complex z, Complex q0) {
    return 48.0 * z * z - 48.0 * q0 * z + 9.0 * q0 * q0;
}

}  // namespace

CubicRoots cubic_roots(Complex q0, Complex r0) {
    // depressed form via z = w + q0/2: 16 w^3 - 3 q0^2 w - (q0^3/2 + 3 r0^2) = 0,
    // i.e. w^3 + p w + q = 0
    Complex p = -3.0 * q0 * q0 / 16.0;
    Complex q = -(q0 * q0 * q0 / 2.0 + 3.0 * r0 * r0) / 16.0;
    std::array<Complex, 3> w;
    Complex disc = q * q / 4.0 + p * p * p / 27.0;
    Complex d = std::sqrt(disc);
    Complex a3 = -q / 2.0 + d;
    if (std::abs(a3) < std::abs(-q / 2.0 - d)) a3 = -q / 2.0 - d;  // avoid cancellation
    if (std::abs(a3) < 1e-300) {
        // p ~ q ~ 0: triple root at the shift
        w = {Complex(0.0), Complex(0.0), Complex(0.0)};
    } else {
        Complex A = principal_cbrt(a3);
        const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
        for (int i = 0; i < 3; ++i) {
            Complex Ai = A * (i == 0 ? Complex(1.0) : (i == 1 ? omega : omega * omega));
            w[i] = Ai - p / (3.0 * Ai);
        }
    }
    CubicRoots out;
    double m = std::max({std::abs(q0), std::abs(r0), 1.0});
    out.scale = m * m * m;
    for (int i = 0; i < 3; ++i) {
        Complex z = w[i] + q0 / 2.0;
        for (int it = 0; it < 40; ++it) {
            Complex f = cubic_value(z, q0, r0);
            if (std::abs(f) <= 1e-13 * out.scale) break;
            Complex df = cubic_derivative(z, q0);
            if (std::abs(df) < 1e-300) break;
            z -= f / df;
        }
        out.roots[i] = z;
        out.residuals[i] = std::abs(cubic_value(z, q0, r0));
    }
    return out;
}

TripleC inverse_map32_root(Complex p0, Complex q0, Complex r0, int root_index) {
    CubicRoots roots = cubic_roots(q0, r0);
    return inverse_map32(p0, q0, r0, roots.roots[root_index % 3]);
}

Jet cubic_root_jet(const Jet& q0, const Jet& r0, Complex root_value) {
    Jet z(root_value);
    Jet q02 = q0 * q0;
    for (int it = 0; it < 8; ++it) {
        Jet f = z * z * z * 16.0 - q0 * (z * z) * 24.0 + q02 * z * 9.0 - q02 * q0 -
                (r0 * r0) * 3.0;
        Jet df = z * z * 48.0 - q0 * z * 48.0 + q02 * 9.0;
        if (std::abs(df.value()) < 1e-300) throw BranchCollapse("cubic root jet: multiple root");
        z = z - f / df;
    }
    return z;
}

}  // namespace chazy
