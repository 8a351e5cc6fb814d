#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

// Sparse bivariate polynomial in (x, y) with exact integer coefficients.
// Invariant: stored terms are nonzero; keys are (x-exponent, y-exponent)
// ordered lexicographically, which is also the canonical serialization order.
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Int>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly{}; }

    static BiPoly constant(Int c) {
        BiPoly p;
        p.add_term(0, 0, std::move(c));
        return p;
    }

    static BiPoly one() { return constant(Int(1)); }
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    static BiPoly monomial(int i, int j, Int c = Int(1)) {
        BiPoly p;
        p.add_term(i, j, std::move(c));
        return p;
    }

    // Embed a univariate polynomial as a polynomial in y alone.
    static BiPoly from_y_poly(const UniPoly& p) {
        BiPoly out;
        const auto& cs = p.coeffs();
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (cs[j] != 0) out.terms_.emplace(Key{0, static_cast<int>(j)}, cs[j]);
        return out;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(int i, int j, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BiPoly operator+(const BiPoly& other) const {
        BiPoly out = *this;
        for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
        return out;
    }

    BiPoly operator-(const BiPoly& other) const {
        BiPoly out = *this;
        for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, -c);
        return out;
    }

    BiPoly operator*(const BiPoly& other) const {
        BiPoly out;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : other.terms_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    BiPoly pow(unsigned e) const {
        BiPoly result = one();
        BiPoly base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    BiPoly scaled(const Int& k) const {
        if (k == 0) return zero();
        BiPoly out;
        for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * k);
        return out;
    }

    Int eval(const Int& x0, const Int& y0) const {
        Int acc = 0;
        for (const auto& [k, c] : terms_) acc += c * ipow(x0, k.first) * ipow(y0, k.second);
        return acc;
    }

    // Substitute x = x0; the result is a univariate polynomial in y.
    UniPoly specialize_x(const Int& x0) const {
        std::vector<Int> out;
        for (const auto& [k, c] : terms_) {
            const std::size_t j = static_cast<std::size_t>(k.second);
            if (out.size() <= j) out.resize(j + 1, Int(0));
            out[j] += c * ipow(x0, k.first);
        }
        return UniPoly(std::move(out));
    }

    bool operator==(const BiPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const BiPoly& other) const { return !(*this == other); }

private:
    TermMap terms_;

    static Int ipow(const Int& b, int e) {
        Int acc = 1;
        for (int i = 0; i < e; ++i) acc *= b;
        return acc;
    }
};

// Expand a grid of counts over the shifted-power basis:
//   sum_{a,b} counts[a][b] * (x-1)^a * (y-1)^b
// This is how the subgraph-expansion enumerators fold their per-mask tallies
// into a Tutte polynomial.
inline BiPoly expand_shifted_counts(const std::vector<std::vector<Int>>& counts) {
    BiPoly out;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        for (std::size_t b = 0; b < counts[a].size(); ++b) {
            const Int& n = counts[a][b];
            if (n == 0) continue;
            for (std::size_t i = 0; i <= a; ++i) {
                const Int xc = binomial(static_cast<long long>(a), static_cast<long long>(i)) *
                               (((a - i) % 2 == 0) ? 1 : -1);
                for (std::size_t j = 0; j <= b; ++j) {
                    const Int yc = binomial(static_cast<long long>(b), static_cast<long long>(j)) *
                                   (((b - j) % 2 == 0) ? 1 : -1);
                    out.add_term(static_cast<int>(i), static_cast<int>(j), n * xc * yc);
                }
            }
        }
    }
    return out;
}

// Rendering in the triangular-table order: total degree ascending, then
// x-exponent descending ("x+y+x^2", "2x+2y+3x^2+4xy+3y^2+x^3+y^3").
inline std::string poly_text(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<BiPoly::Key, Int>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second;
        const int db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coeff] : ts) {
        Int a = coeff;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? '-' : '+');
            if (a < 0) a = -a;
        }
        first = false;
        const bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || a != 1) os << a;
        if (k.first > 0) {
            os << 'x';
            if (k.first > 1) os << '^' << k.first;
        }
        if (k.second > 0) {
            os << 'y';
            if (k.second > 1) os << '^' << k.second;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
    return os << poly_text(p);
}

}  // namespace tutte
