#include "chazy/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chazy {

void PuiseuxSeries::set(Steps s, Rational v) {
    if (v == 0 || s >= trunc_) return;
    terms_[s] = std::move(v);
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c, Steps trunc) {
    return monomial(c, 0, trunc);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, Steps steps, Steps trunc) {
    PuiseuxSeries r(trunc);
    r.set(steps, c);
    return r;
}

PuiseuxSeries::Steps PuiseuxSeries::steps_of(const Rational& exponent) {
    Rational scaled = exponent * lattice_den;
    if (scaled.get_den() != 1)
        throw std::domain_error("exponent off the quarter lattice: " + to_string(exponent));
    if (!scaled.get_num().fits_slong_p())
        throw std::domain_error("exponent out of range");
    return scaled.get_num().get_si();
}

Rational PuiseuxSeries::coeff(Steps s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool PuiseuxSeries::integer_lattice() const {
    for (const auto& [s, c] : terms_)
        if (s % lattice_den != 0) return false;
    return true;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    PuiseuxSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [s, c] : terms_) r.set(s, c);
    for (const auto& [s, c] : o.terms_) {
        if (s >= r.trunc_) continue;
        auto it = r.terms_.find(s);
        if (it == r.terms_.end()) {
            r.terms_[s] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r(trunc_);
    for (const auto& [s, c] : terms_) r.terms_[s] = -c;
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    // Cauchy product; sound truncation is min over valuation-shifted cutoffs.
    Steps tr = std::min(trunc_ + o.valuation(), o.trunc_ + valuation());
    PuiseuxSeries r(tr);
    for (const auto& [sa, ca] : terms_) {
        for (const auto& [sb, cb] : o.terms_) {
            Steps s = sa + sb;
            if (s >= tr) break;  // o.terms_ ascending
            auto it = r.terms_.find(s);
            if (it == r.terms_.end()) {
                Rational prod = ca * cb;
                if (prod != 0) r.terms_[s] = std::move(prod);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::operator*(const Rational& c) const {
    PuiseuxSeries r(trunc_);
    if (c == 0) return r;
    for (const auto& [s, v] : terms_) r.terms_[s] = v * c;
    return r;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (terms_.empty()) throw std::domain_error("non-invertible: zero series");
    Steps v = valuation();
    const Rational& lead = terms_.begin()->second;
    Steps tr = trunc_ - 2 * v;  // relative precision is preserved
    PuiseuxSeries r(tr);
    r.terms_[-v] = 1 / lead;
    // recurrence from (a * r)(s + v) = 0 for s > -v: lead * r[s] = -sum over
    // higher terms of a paired with already-known coefficients of r
    for (Steps s = -v + 1; s < tr; ++s) {
        Rational acc(0);
        bool lead_slot = true;
        for (const auto& [sa, ca] : terms_) {
            if (lead_slot) {
                lead_slot = false;
                continue;
            }
            Steps sr = s + v - sa;
            if (sr < -v) break;  // sa ascending, sr descending
            auto it = r.terms_.find(sr);
            if (it != r.terms_.end()) acc += ca * it->second;
        }
        if (acc != 0) r.terms_[s] = -acc / lead;
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::derive() const {
    PuiseuxSeries r(trunc_);
    for (const auto& [s, c] : terms_) r.set(s, c * exponent_of(s));
    return r;
}

PuiseuxSeries PuiseuxSeries::substitute_monomial(int sign, long m) const {
    if (m < 1) throw std::domain_error("substitution power must be positive");
    if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
    if (sign == -1 && !integer_lattice())
        throw std::domain_error("sign substitution needs integer exponents");
    PuiseuxSeries r(trunc_ * m);
    for (const auto& [s, c] : terms_) {
        Rational v = c;
        if (sign == -1 && (s / lattice_den) % 2 != 0) v = -v;
        r.terms_[s * m] = std::move(v);
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::pow(unsigned long n) const {
    PuiseuxSeries acc = constant(1, n == 0 ? trunc_ : trunc_ + (n - 1) * valuation());
    PuiseuxSeries base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

PuiseuxSeries PuiseuxSeries::truncate(Steps trunc) const {
    PuiseuxSeries r(std::min(trunc, trunc_));
    for (const auto& [s, c] : terms_) {
        if (s >= r.trunc_) break;
        r.terms_[s] = c;
    }
    return r;
}

std::optional<PuiseuxSeries::Mismatch> PuiseuxSeries::first_mismatch(const PuiseuxSeries& a,
                                                                     const PuiseuxSeries& b,
                                                                     Steps order) {
    if (a.trunc_ < order || b.trunc_ < order)
        throw std::domain_error("order exceeds available precision");
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        Steps sa = ia != a.terms_.end() ? ia->first : order;
        Steps sb = ib != b.terms_.end() ? ib->first : order;
        Steps s = std::min(sa, sb);
        if (s >= order) break;
        Rational ca = sa == s ? ia->second : Rational(0);
        Rational cb = sb == s ? ib->second : Rational(0);
        if (ca != cb) return Mismatch{exponent_of(s), ca, cb};
        if (sa == s) ++ia;
        if (sb == s) ++ib;
    }
    return std::nullopt;
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& o) const {
    return !first_mismatch(*this, o, std::min(trunc_, o.trunc_)).has_value();
}

PuiseuxSeries PuiseuxSeries::compose(const std::vector<Rational>& outer,
                                     const PuiseuxSeries& inner, Steps order) {
    if (outer.empty()) return zero(order);
    Steps v = inner.valuation();
    if (!inner.is_zero() && v <= 0)
        throw std::domain_error("composition requires positive valuation");
    // validity: requested order, inner truncation, and the coefficient supply
    Steps tr = std::min(order, inner.trunc_order());
    if (!inner.is_zero()) tr = std::min(tr, static_cast<Steps>(outer.size()) * v);
    PuiseuxSeries r = constant(outer.back(), tr);
    for (auto it = outer.rbegin() + 1; it != outer.rend(); ++it)
        r = (r * inner).truncate(tr) + constant(*it, tr);
    return r.truncate(tr);
}

PuiseuxSeries PuiseuxSeries::binomial_pow(const PuiseuxSeries& u, const Rational& alpha,
                                          Steps order) {
    Steps v = u.valuation();
    if (!u.is_zero() && v <= 0)
        throw std::domain_error("binomial power requires positive valuation");
    Steps tr = std::min(order, u.is_zero() ? order : u.trunc_order());
    PuiseuxSeries r = constant(1, tr);
    PuiseuxSeries term = constant(1, tr);
    if (u.is_zero()) return r;
    long n = 0;
    while ((n + 1) * v < tr) {
        ++n;
        Rational binom_step = (alpha - (n - 1)) / n;
        if (binom_step == 0) break;  // alpha a nonnegative integer: series terminates
        term = (term * u).truncate(tr) * binom_step;
        if (term.is_zero()) break;
        r = r + term;
    }
    return r;
}

std::complex<double> PuiseuxSeries::eval(std::complex<double> q) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [s, c] : terms_)
        acc += to_double(c) * std::pow(q, static_cast<double>(s) / lattice_den);
    return acc;
}

std::string PuiseuxSeries::to_json() const {
    std::ostringstream os;
    os << "{\"lattice_den\":" << lattice_den << ",\"trunc_order\":\""
       << to_string(exponent_of(trunc_)) << "\",\"terms\":[";
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[\"" << to_string(exponent_of(s)) << "\",\"" << to_string(c) << "\"]";
    }
    os << "]}";
    return os.str();
}

std::string PuiseuxSeries::to_csv() const {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (const auto& [s, c] : terms_)
        os << to_string(exponent_of(s)) << "," << to_string(c) << "\n";
    return os.str();
}

std::string PuiseuxSeries::str(std::size_t max_terms) const {
    if (terms_.empty()) return "0 + O(q^" + to_string(exponent_of(trunc_)) + ")";
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& [s, c] : terms_) {
        if (n++ >= max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1) os << " + ";
        os << to_string(c);
        if (s != 0) os << "*q^" << to_string(exponent_of(s));
    }
    os << " + O(q^" << to_string(exponent_of(trunc_)) << ")";
    return os.str();
}

}  // namespace chazy
