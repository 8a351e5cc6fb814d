#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/bipoly.hpp"
#include "tutte/partition.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

// Triangular array of the polynomials T_n^(r), 1 <= r <= n <= n_max, built
// bottom-up from the recurrence
//   T_n^(r) = sum_{s=1}^{n-r} C(n-r,s) [r]_y^s y^C(s,2) T_{n-r}^(s)
//             + (x-1) T_{n-r}^(1),
// with base case T_n^(n) = 1. Row n reads only row n-r, so rows fill in
// increasing n. Entries are immutable after construction.
class TutteTable {
public:
    explicit TutteTable(int n_max) : n_max_(n_max) {
        if (n_max < 1) throw std::invalid_argument("TutteTable: n_max must be >= 1");
        rows_.resize(static_cast<std::size_t>(n_max) + 1);
        const BiPoly xm1 = BiPoly::x() - BiPoly::one();
        for (int n = 1; n <= n_max; ++n) {
            rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
            rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = BiPoly::one();
            for (int r = n - 1; r >= 1; --r) {
                const int m = n - r;
                // [r]_y powers, reused across s
                const BiPoly qr = BiPoly::from_y_poly(q_analogue(r));
                BiPoly qr_pow = qr;
                BiPoly sum = BiPoly::zero();
                for (int s = 1; s <= m; ++s) {
                    BiPoly term = qr_pow.scaled(binomial(m, s));
                    term = term * BiPoly::monomial(0, s * (s - 1) / 2);
                    sum = sum + term * entry(m, s);
                    if (s < m) qr_pow = qr_pow * qr;
                }
                sum = sum + xm1 * entry(m, 1);
                rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] = sum;
            }
        }
    }

    int n_max() const { return n_max_; }

    const BiPoly& entry(int n, int r) const {
        if (n < 1 || n > n_max_ || r < 1 || r > n)
            throw std::invalid_argument("TutteTable: entry out of range");
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
    }

private:
    int n_max_;
    std::vector<std::vector<BiPoly>> rows_;
};

inline TutteTable tutte_table(int n_max) { return TutteTable(n_max); }

// J_n^(r)(q) = T_n^(r)(1, q).
inline UniPoly j_poly(const TutteTable& table, int n, int r) {
    return table.entry(n, r).specialize_x(1);
}

// Independent J recurrence (the x=1 specialization computed directly):
//   J_n^(r) = sum_{s=1}^{n-r} C(n-r,s) [r]_q^s q^C(s,2) J_{n-r}^(s),
// J_n^(n) = 1. Used to cross-check j_poly; the two paths must agree.
inline std::vector<std::vector<UniPoly>> j_table_direct(int n_max) {
    std::vector<std::vector<UniPoly>> rows(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = UniPoly::one();
        for (int r = n - 1; r >= 1; --r) {
            const int m = n - r;
            const UniPoly qr = q_analogue(r);
            UniPoly qr_pow = qr;
            UniPoly sum = UniPoly::zero();
            for (int s = 1; s <= m; ++s) {
                UniPoly term = qr_pow.scaled(binomial(m, s));
                term = term.times_monomial(static_cast<std::size_t>(s) * (s - 1) / 2);
                sum = sum + term * rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)];
                if (s < m) qr_pow = qr_pow * qr;
            }
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] = sum;
        }
    }
    return rows;
}

// C_n^(r)(t) = t^{n-r} J_n^(r)(1+t): the edge enumerator of spanning
// connected subgraphs of the contracted graph.
inline UniPoly c_poly(const TutteTable& table, int n, int r) {
    return j_poly(table, n, r).shifted_arg(1).times_monomial(static_cast<std::size_t>(n - r));
}

// P_n^(s)(t) = t^n C(n,s) (1+t)^C(s,2) J_n^(s)(1+t): edge enumerator of the
// spanning connected subgraphs of K_{n+1} whose root has degree s.
inline UniPoly p_poly_ns(const TutteTable& table, int n, int s) {
    if (s < 1 || s > n) throw std::invalid_argument("p_poly_ns: require 1 <= s <= n");
    UniPoly p = j_poly(table, n, s).shifted_arg(1);
    const UniPoly one_plus_t(std::vector<Int>{1, 1});
    p = p * one_plus_t.pow(static_cast<unsigned>(s * (s - 1) / 2));
    p = p.scaled(binomial(n, s));
    return p.times_monomial(static_cast<std::size_t>(n));
}

// P_lambda(t) = n t^n (1+t)^{n(lambda)} J_lambda(1+t) / m(lambda)!.
// The division by m(lambda)! must be exact on the final coefficients;
// a non-exact division signals an inconsistent j_lambda input.
inline std::optional<UniPoly> p_lambda_from_j(const Partition& lambda, const UniPoly& j_lambda) {
    const int n = lambda.sum();
    if (n < 1) throw std::invalid_argument("p_lambda_from_j: |lambda| must be >= 1");
    const UniPoly one_plus_t(std::vector<Int>{1, 1});
    UniPoly num = j_lambda.shifted_arg(1);
    num = num * one_plus_t.pow(static_cast<unsigned>(n_stat(lambda)));
    num = num.scaled(n).times_monomial(static_cast<std::size_t>(n));
    const Int mf = multiplicity_factorial(lambda);
    std::vector<Int> coeffs = num.coeffs();
    for (auto& c : coeffs) {
        if (c % mf != 0) return std::nullopt;
        c /= mf;
    }
    return UniPoly(std::move(coeffs));
}

// Closed-form J_lambda for the families with a known expression:
//   (n)       -> J_n^(1)
//   1^n       -> (n-1)! (times J_n^(n) = 1)
//   1^{n-2} 2 -> (n-2)! J_n^{(n-1)}
// plus the two worked four-vertex cases (3,1) and (2,2). Anything else is
// "unavailable" (nullopt); such classes only ever carry derived candidates.
inline std::optional<UniPoly> j_lambda_known(const Partition& lambda, const TutteTable& table) {
    const int n = lambda.sum();
    const int len = lambda.length();
    if (n < 1 || n > table.n_max()) return std::nullopt;
    if (len == 1) return j_poly(table, n, 1);
    if (lambda.parts().front() == 1) return UniPoly::constant(factorial(n - 1));
    if (lambda.parts().front() == 2 && len == n - 1)
        return j_poly(table, n, n - 1).scaled(factorial(n - 2));
    if (lambda == Partition({3, 1})) return UniPoly(std::vector<Int>{3, 3, 2, 1});
    if (lambda == Partition({2, 2})) return UniPoly(std::vector<Int>{3, 2, 1});
    return std::nullopt;
}

}  // namespace tutte
