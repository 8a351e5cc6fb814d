#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tutte/bigint.hpp"

namespace tutte {

// Dense univariate polynomial over an exact coefficient ring (Int or Rat).
// Immutable value type: every operation returns a fresh polynomial.
// Invariant: coeffs_ has no trailing zeros; the zero polynomial stores {}.
template <class C>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }
    static Poly one() { return constant(C(1)); }
    static Poly variable() { return monomial(1); }

    static Poly monomial(std::size_t k, C coeff = C(1)) {
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(coeff);
        return Poly(std::move(v));
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is "none".
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    // Index of the lowest nonzero coefficient; "none" for zero.
    std::optional<int> order() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return std::nullopt;
    }

    Poly operator+(const Poly& other) const {
        std::vector<C> out(std::max(coeffs_.size(), other.coeffs_.size()), C(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& other) const {
        std::vector<C> out(std::max(coeffs_.size(), other.coeffs_.size()), C(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
        return Poly(std::move(out));
    }

    Poly operator-() const {
        std::vector<C> out = coeffs_;
        for (auto& c : out) c = -c;
        return Poly(std::move(out));
    }

    Poly operator*(const Poly& other) const {
        if (is_zero() || other.is_zero()) return zero();
        std::vector<C> out(coeffs_.size() + other.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
        return Poly(std::move(out));
    }

    Poly scaled(const C& k) const {
        std::vector<C> out = coeffs_;
        for (auto& c : out) c *= k;
        return Poly(std::move(out));
    }

    // p * t^k
    Poly times_monomial(std::size_t k) const {
        if (is_zero()) return zero();
        std::vector<C> out(coeffs_.size() + k, C(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
        return Poly(std::move(out));
    }

    Poly pow(unsigned e) const {
        Poly result = one();
        Poly base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    // Exact evaluation (Horner).
    C eval(const C& x) const {
        C acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // Argument shift: returns q with q(t) = p(offset + t), exact Horner composition.
    Poly shifted_arg(const C& offset) const {
        Poly acc = zero();
        const Poly lin(std::vector<C>{offset, C(1)});  // offset + t
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * lin + constant(coeffs_[i]);
        return acc;
    }

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Poly& other) const { return !(*this == other); }

private:
    std::vector<C> coeffs_;

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

using UniPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rational(const UniPoly& p) {
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return RatPoly(std::move(out));
}

// Integer reinterpretation of a rational polynomial; "none" if any
// coefficient has a denominator.
inline std::optional<UniPoly> to_integer(const RatPoly& p) {
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
        out.push_back(boost::multiprecision::numerator(c));
    }
    return UniPoly(std::move(out));
}

// Result of polynomial division p = quotient * d + remainder. A failed
// exact division is data for the harness, not a crash: `exact` is false and
// `remainder` carries the diagnostic leftover.
template <class C>
struct PolyDivision {
    bool exact = false;
    Poly<C> quotient;
    Poly<C> remainder;
};

// Long division top-down. Over Int this detects Z[t]-divisibility: if p is
// divisible by d the leading coefficient is divisible at every step.
template <class C>
PolyDivision<C> exact_divide(const Poly<C>& p, const Poly<C>& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    PolyDivision<C> res;
    std::vector<C> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const C& dlead = dc.back();
    const std::size_t dd = dc.size() - 1;
    std::vector<C> quot;
    if (rem.size() >= dc.size()) quot.assign(rem.size() - dc.size() + 1, C(0));
    while (rem.size() >= dc.size()) {
        const C& rlead = rem.back();
        if (rlead != 0) {
            C q = rlead / dlead;
            if (q * dlead != rlead) {  // only possible over Int
                res.exact = false;
                res.quotient = Poly<C>(std::move(quot));
                res.remainder = Poly<C>(std::move(rem));
                return res;
            }
            const std::size_t shift = rem.size() - 1 - dd;
            quot[shift] = q;
            for (std::size_t i = 0; i < dc.size(); ++i) rem[shift + i] -= q * dc[i];
        }
        rem.pop_back();
    }
    res.quotient = Poly<C>(std::move(quot));
    res.remainder = Poly<C>(std::move(rem));
    res.exact = res.remainder.is_zero();
    return res;
}

// [r]_y = 1 + y + ... + y^{r-1}
inline UniPoly q_analogue(int r) {
    if (r < 1) throw std::invalid_argument("q_analogue: r must be >= 1");
    return UniPoly(std::vector<Int>(static_cast<std::size_t>(r), Int(1)));
}

// Rendering with ascending exponents, the way the univariate families are
// written out ("2+3q+2q^2+q^3").
template <class C>
std::string poly_text(const Poly<C>& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        C a = cs[i];
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? '-' : '+');
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

template <class C>
std::ostream& operator<<(std::ostream& os, const Poly<C>& p) {
    return os << poly_text(p, 't');
}

}  // namespace tutte
