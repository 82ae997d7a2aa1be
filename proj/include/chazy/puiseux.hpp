// Truncated Puiseux/Laurent series over exact rationals on the quarter-exponent
// lattice. Every exact identity in the library is an equality of these objects.
//
// Exponents live on (1/4)Z and are stored as integer multiples of 1/4
// ("steps"). A series knows its truncation order: terms with exponent >= the
// order are unknown, not zero. Negative exponents are allowed (Laurent tails
// are finite by construction). Values are immutable after construction.
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chazy/rational.hpp"

namespace chazy {

class PuiseuxSeries {
public:
    static constexpr long lattice_den = 4;

    // Exponents in lattice steps (exponent = steps / 4).
    using Steps = long;

    PuiseuxSeries() : trunc_(0) {}
    explicit PuiseuxSeries(Steps trunc) : trunc_(trunc) {}

    static PuiseuxSeries zero(Steps trunc) { return PuiseuxSeries(trunc); }
    static PuiseuxSeries constant(const Rational& c, Steps trunc);
    // c * q^(steps/4), truncated at `trunc` steps.
    static PuiseuxSeries monomial(const Rational& c, Steps steps, Steps trunc);

    static Steps steps_of(const Rational& exponent);
    static Rational exponent_of(Steps s) { return rat(s, lattice_den); }

    Steps trunc_order() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    // Valuation in steps; a zero series reports its truncation order.
    Steps valuation() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }
    Steps min_exponent_steps() const { return valuation(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(Steps s) const;
    Rational coeff_q(long integer_exponent) const { return coeff(integer_exponent * lattice_den); }
    const std::map<Steps, Rational>& terms() const { return terms_; }

    // True iff all exponents are integers (step multiples of 4).
    bool integer_lattice() const;

    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-() const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const Rational& c) const;

    // Laurent inverse; requires a nonzero lowest term.
    PuiseuxSeries inverse() const;

    // D = q d/dq: coefficient of q^e picks up a factor e.
    PuiseuxSeries derive() const;

    // q -> sign * q^m (m >= 1). sign = -1 requires the integer lattice.
    PuiseuxSeries substitute_monomial(int sign, long m) const;

    // Integer power by repeated squaring (n >= 0).
    PuiseuxSeries pow(unsigned long n) const;

    PuiseuxSeries truncate(Steps trunc) const;

    struct Mismatch {
        Rational exponent;
        Rational lhs, rhs;
    };
    // Equality of all coefficients with exponent < order (in steps). Errors if
    // either operand is truncated before `order`.
    static std::optional<Mismatch> first_mismatch(const PuiseuxSeries& a, const PuiseuxSeries& b,
                                                  Steps order);
    static bool eq_to_order(const PuiseuxSeries& a, const PuiseuxSeries& b, Steps order) {
        return !first_mismatch(a, b, order).has_value();
    }

    // Equal on the common known range (min of the two truncation orders).
    bool operator==(const PuiseuxSeries& o) const;

    // Sum of outer[n] * inner^n truncated at `order` steps; inner must have
    // strictly positive valuation.
    static PuiseuxSeries compose(const std::vector<Rational>& outer, const PuiseuxSeries& inner,
                                 Steps order);

    // (1 + u)^alpha via the binomial series; u must have positive valuation.
    static PuiseuxSeries binomial_pow(const PuiseuxSeries& u, const Rational& alpha, Steps order);

    // Numeric evaluation at a point (|q| small); principal branch for the
    // fractional powers of the lattice.
    std::complex<double> eval(std::complex<double> q) const;

    std::string to_json() const;
    std::string to_csv() const;
    std::string str(std::size_t max_terms = 12) const;

private:
    void set(Steps s, Rational v);

    std::map<Steps, Rational> terms_;
    Steps trunc_;
};

inline PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& s) { return s * c; }

}  // namespace chazy
