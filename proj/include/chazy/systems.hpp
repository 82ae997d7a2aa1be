// The first-order systems and Schwarzian equations handled by the integrator:
//   Ramanujan (p' = (p^2-q)/6, ...), generalised-Chazy first-order systems,
//   the classic Darboux-Halphen system, its k = 3/2 symmetric analogue, and
//   the Schwarz triangle equations encoded by their coefficient profile on
//   (s')^2 * {1/s^2, 1/(s-1)^2, 1/(s(s-1))}.
#pragma once

#include <array>
#include <string>

#include "chazy/jet.hpp"
#include "chazy/rational.hpp"

namespace chazy {

struct SchwarzProfile {
    double c1, c2, c3;
    std::string name;
};

// the four displayed Schwarzian equations
inline SchwarzProfile schwarz_000() { return {0.5, 0.5, -0.5, "s(0,0,0)"}; }
inline SchwarzProfile schwarz_232323() { return {5.0 / 18, 5.0 / 18, -5.0 / 18, "s(2/3,2/3,2/3)"}; }
inline SchwarzProfile schwarz_13131() { return {4.0 / 9, 0.0, 0.0, "s(1/3,1/3,1)"}; }
inline SchwarzProfile schwarz_131312() { return {4.0 / 9, 3.0 / 8, -3.0 / 8, "s(1/3,1/3,1/2)"}; }

// The symmetric k = 3/2 system carries a cross term proportional to
// (w1-w2)(w3-w1) + (w2-w3)(w1-w2) + (w3-w1)(w2-w3), identical in all three
// equations. The weight under which the combos solve the k = 3/2 and k = 3
// equations is 4/9 (measured; the dh32 suite also reports the 16/9 variant,
// which fails).
inline constexpr double dh32_cross_weight = 4.0 / 9.0;

class SystemSpec {
public:
    enum class Kind { Ramanujan, GenChazy, DarbouxHalphen, SymmetricDH32, SchwarzTriangle };

    static SystemSpec ramanujan();
    static SystemSpec gen_chazy(const Rational& k);
    static SystemSpec darboux_halphen();
    static SystemSpec symmetric_dh32(double cross_weight = dh32_cross_weight);
    static SystemSpec schwarz_triangle(const SchwarzProfile& profile);

    Kind kind() const { return kind_; }
    int dimension() const { return 3; }
    const std::string& name() const { return name_; }
    const SchwarzProfile& profile() const { return profile_; }
    double gen_chazy_coeff() const { return gen_coeff_; }
    double cross_weight() const { return cross_weight_; }

    template <class S>
    std::array<S, 3> rhs(const std::array<S, 3>& y) const {
        switch (kind_) {
            case Kind::Ramanujan: {
                const S &p = y[0], &q = y[1], &r = y[2];
                return {(p * p - q) * (1.0 / 6.0), (p * q - r) * (2.0 / 3.0), p * r - q * q};
            }
            case Kind::GenChazy: {
                const S &p = y[0], &q = y[1], &r = y[2];
                return {(p * p - q) * (1.0 / 6.0), (p * q - r) * (2.0 / 3.0),
                        p * r + (q * q) * gen_coeff_};
            }
            case Kind::DarbouxHalphen: {
                const S &w1 = y[0], &w2 = y[1], &w3 = y[2];
                return {w2 * w3 - w1 * w2 - w1 * w3, w3 * w1 - w2 * w3 - w2 * w1,
                        w1 * w2 - w3 * w1 - w3 * w2};
            }
            case Kind::SymmetricDH32: {
                const S &w1 = y[0], &w2 = y[1], &w3 = y[2];
                S cross = ((w1 - w2) * (w3 - w1) + (w2 - w3) * (w1 - w2) +
                           (w3 - w1) * (w2 - w3)) *
                          cross_weight_;
                return {w2 * w3 - w1 * w2 - w1 * w3 + cross,
                        w3 * w1 - w2 * w3 - w2 * w1 + cross,
                        w1 * w2 - w3 * w1 - w3 * w2 + cross};
            }
            case Kind::SchwarzTriangle: {
                const S &s = y[0], &s1 = y[1], &s2 = y[2];
                S sm1 = s - Complex(1.0);
                S sum = s1 * 0.0;
                if (profile_.c1 != 0.0) sum = sum + profile_.c1 / (s * s);
                if (profile_.c2 != 0.0) sum = sum + profile_.c2 / (sm1 * sm1);
                if (profile_.c3 != 0.0) sum = sum + profile_.c3 / (s * sm1);
                S s3 = (s2 * s2) / s1 * 1.5 - s1 * s1 * s1 * sum;
                return {s1, s2, s3};
            }
        }
        throw std::logic_error("unknown system kind");
    }

    // states the vector field cannot be evaluated at
    bool is_singular(const std::array<Complex, 3>& y) const {
        if (kind_ != Kind::SchwarzTriangle) return false;
        constexpr double eps = 1e-8;
        return std::abs(y[0]) < eps || std::abs(y[0] - Complex(1.0)) < eps ||
               std::abs(y[1]) < eps;
    }

private:
    Kind kind_ = Kind::Ramanujan;
    std::string name_ = "ramanujan";
    double gen_coeff_ = 0.0;
    double cross_weight_ = 0.0;
    SchwarzProfile profile_{0, 0, 0, ""};
};

}  // namespace chazy
