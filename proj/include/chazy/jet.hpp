// Order-4 truncated Taylor expansions of a complex-valued state component
// along the independent variable. Coefficients are Taylor-normalized:
// c[k] = f^(k)(x0)/k!. Radicals carry an explicit branch through the value at
// the expansion point; everything downstream is then forced by the recurrences.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace chazy {

using Complex = std::complex<double>;

struct Jet {
    static constexpr int order = 4;
    std::array<Complex, order + 1> c{};

    Jet() = default;
    explicit Jet(Complex value) { c[0] = value; }
    Jet(Complex value, Complex d1) {
        c[0] = value;
        c[1] = d1;
    }

    Complex value() const { return c[0]; }
    Complex d1() const { return c[1]; }
    Complex d2() const { return 2.0 * c[2]; }
    Complex d3() const { return 6.0 * c[3]; }
    Complex d4() const { return 24.0 * c[4]; }

    Jet operator+(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Jet operator-() const {
        Jet r;
        for (int i = 0; i <= order; ++i) r.c[i] = -c[i];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    Jet operator*(double s) const {
        Jet r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] * s;
        return r;
    }
    Jet operator*(Complex s) const {
        Jet r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] * s;
        return r;
    }
    Jet operator+(Complex s) const {
        Jet r = *this;
        r.c[0] += s;
        return r;
    }
    Jet operator-(Complex s) const {
        Jet r = *this;
        r.c[0] -= s;
        return r;
    }
    Jet operator/(const Jet& o) const {
        if (o.c[0] == Complex(0.0)) throw std::domain_error("jet division by zero value");
        Jet r;
        Complex inv0 = 1.0 / o.c[0];
        r.c[0] = c[0] * inv0;
        for (int k = 1; k <= order; ++k) {
            Complex acc = c[k];
            for (int j = 1; j <= k; ++j) acc -= o.c[j] * r.c[k - j];
            r.c[k] = acc * inv0;
        }
        return r;
    }
};

inline Jet operator*(double s, const Jet& j) { return j * s; }
inline Jet operator*(Complex s, const Jet& j) { return j * s; }
inline Jet operator+(Complex s, const Jet& j) { return j + s; }
inline Jet operator-(Complex s, const Jet& j) { return (-j) + s; }
inline Jet operator/(Complex s, const Jet& j) { return Jet(s) / j; }
inline Jet operator/(double s, const Jet& j) { return Jet(Complex(s, 0.0)) / j; }

// Square root jet with the root of the leading value supplied by the caller.
// A vanishing leading value is allowed only for the identically-degenerate
// case (all coefficients below tolerance), where the zero jet is returned.
inline Jet jet_sqrt(const Jet& x, Complex root0, double degenerate_eps = 0.0) {
    Jet r;
    if (root0 == Complex(0.0)) {
        double m = 0.0;
        for (auto v : x.c) m = std::max(m, std::abs(v));
        if (m <= degenerate_eps) return r;  // sqrt of the zero jet
        throw std::domain_error("jet sqrt at a branch point");
    }
    r.c[0] = root0;
    for (int k = 1; k <= Jet::order; ++k) {
        Complex acc = x.c[k];
        for (int j = 1; j < k; ++j) acc -= r.c[j] * r.c[k - j];
        r.c[k] = acc / (2.0 * r.c[0]);
    }
    return r;
}

// Cube root jet with the chosen root of the leading value supplied.
inline Jet jet_cbrt(const Jet& x, Complex root0) {
    if (root0 == Complex(0.0)) throw std::domain_error("jet cbrt of zero");
    Jet r;
    r.c[0] = root0;
    for (int k = 1; k <= Jet::order; ++k) {
        // isolate the linear appearance of r.c[k] in (r^3).c[k] = 3 r0^2 r_k + rest
        Jet partial = r;
        partial.c[k] = 0.0;
        Jet cube = partial * partial * partial;
        r.c[k] = (x.c[k] - cube.c[k]) / (3.0 * r.c[0] * r.c[0]);
    }
    return r;
}

inline Complex principal_sqrt(Complex z) { return std::sqrt(z); }

inline Complex principal_cbrt(Complex z, int index = 0) {
    if (z == Complex(0.0)) return {0.0, 0.0};
    Complex root = std::exp(std::log(z) / 3.0);
    if (index % 3 != 0) {
        double angle = 2.0 * M_PI * (index % 3) / 3.0;
        root *= Complex(std::cos(angle), std::sin(angle));
    }
    return root;
}

}  // namespace chazy
