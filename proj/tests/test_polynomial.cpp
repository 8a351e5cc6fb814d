#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tutte/bigint.hpp"
#include "tutte/bipoly.hpp"
#include "tutte/unipoly.hpp"

using namespace tutte;

namespace {

UniPoly upoly(std::vector<long long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return UniPoly(std::move(v));
}

// Independent argument-shift oracle: expand each c_k (offset + t)^k by the
// binomial theorem and accumulate term by term. Deliberately a different
// code path from the library's Horner composition.
UniPoly shift_oracle(const UniPoly& p, long long offset) {
    std::vector<Int> out(p.coeffs().size(), Int(0));
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) {
            Int pw = 1;
            for (std::size_t j = 0; j < k - i; ++j) pw *= offset;
            out[i] += cs[k] * binomial(static_cast<long long>(k), static_cast<long long>(i)) * pw;
        }
    }
    return UniPoly(std::move(out));
}

UniPoly random_upoly(std::mt19937& rng, int max_deg = 6, int max_abs = 9) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
    std::vector<Int> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = coeff(rng);
    return UniPoly(std::move(cs));
}

BiPoly random_bipoly(std::mt19937& rng, int max_deg = 4, int max_abs = 9) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
    BiPoly p;
    const int terms = deg(rng) + 1;
    for (int k = 0; k < terms; ++k) p.add_term(deg(rng), deg(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("add and mul basics") {
    CHECK(UniPoly::variable() + UniPoly::one() == upoly({1, 1}));
    CHECK(upoly({1, 1}) * upoly({1, 1}) == upoly({1, 2, 1}));
    // 4t^4(1+t) * (9+10t+5t^2+t^3)
    const UniPoly lhs = upoly({1, 1}).times_monomial(4).scaled(4);
    const UniPoly rhs = upoly({9, 10, 5, 1});
    CHECK(lhs * rhs == upoly({0, 0, 0, 0, 36, 76, 60, 24, 4}));
}

TEST_CASE("zero polynomial degree is none") {
    CHECK(!UniPoly::zero().degree().has_value());
    CHECK(UniPoly::zero().is_zero());
    CHECK(upoly({0, 0}).is_zero());
    CHECK(upoly({5}).degree() == 0);
    CHECK(!BiPoly::zero().terms().empty() == false);
}

TEST_CASE("argument shift") {
    // q^2 at q = 1+t
    CHECK(UniPoly::monomial(2).shifted_arg(1) == upoly({1, 2, 1}));
    // 2+3q+2q^2+q^3 at q = 1+t, frozen from the expansion oracle
    const UniPoly p = upoly({2, 3, 2, 1});
    const UniPoly expected = shift_oracle(p, 1);
    CHECK(expected == upoly({8, 10, 5, 1}));
    CHECK(p.shifted_arg(1) == expected);
    // 3+2q+q^2 at q = 1+t
    CHECK(upoly({3, 2, 1}).shifted_arg(1) == upoly({6, 4, 1}));
    CHECK(upoly({3, 2, 1}).shifted_arg(1) == shift_oracle(upoly({3, 2, 1}), 1));
}

TEST_CASE("shift is invertible and matches the oracle on random inputs") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        const UniPoly p = random_upoly(rng);
        CHECK(p.shifted_arg(1).shifted_arg(-1) == p);
        CHECK(p.shifted_arg(2) == shift_oracle(p, 2));
        CHECK(p.shifted_arg(-3) == shift_oracle(p, -3));
    }
}

TEST_CASE("specialize_x") {
    CHECK(BiPoly::x().specialize_x(1) == upoly({1}));
    // x + y + x^2 at x = 1
    const BiPoly t31 = BiPoly::x() + BiPoly::y() + BiPoly::monomial(2, 0);
    CHECK(t31.specialize_x(1) == upoly({2, 1}));
    // T_4^(2) = x+y+x^2+2xy+2y^2+y^3 at x = 1
    BiPoly t42;
    t42.add_term(1, 0, 1);
    t42.add_term(0, 1, 1);
    t42.add_term(2, 0, 1);
    t42.add_term(1, 1, 2);
    t42.add_term(0, 2, 2);
    t42.add_term(0, 3, 1);
    CHECK(t42.specialize_x(1) == upoly({2, 3, 2, 1}));
}

TEST_CASE("specialization agrees with full evaluation on a grid") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const BiPoly p = random_bipoly(rng);
        for (int x0 = -3; x0 <= 3; ++x0)
            for (int y0 = -3; y0 <= 3; ++y0)
                CHECK(p.specialize_x(x0).eval(y0) == p.eval(x0, y0));
    }
}

TEST_CASE("q_analogue") {
    CHECK(q_analogue(1) == upoly({1}));
    CHECK(q_analogue(3) == upoly({1, 1, 1}));
    CHECK(q_analogue(2) == upoly({1, 1}));
    CHECK_THROWS_AS(q_analogue(0), std::invalid_argument);
    for (int r = 1; r <= 12; ++r) CHECK(q_analogue(r).eval(1) == r);
}

TEST_CASE("exact division") {
    const auto ok = exact_divide(upoly({0, 1, 1}), UniPoly::variable());
    CHECK(ok.exact);
    CHECK(ok.quotient == upoly({1, 1}));

    // (36t^4+76t^5+60t^6+24t^7+4t^8) / (4t^4(1+t))
    const auto big = exact_divide(upoly({0, 0, 0, 0, 36, 76, 60, 24, 4}),
                                  upoly({1, 1}).times_monomial(4).scaled(4));
    CHECK(big.exact);
    CHECK(big.quotient == upoly({9, 10, 5, 1}));

    const auto bad = exact_divide(upoly({1, 0, 1}), UniPoly::variable());
    CHECK(!bad.exact);
    CHECK(bad.remainder == upoly({1}));

    CHECK_THROWS_AS(exact_divide(upoly({1}), UniPoly::zero()), std::invalid_argument);
}

TEST_CASE("exact division round-trips products") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        const UniPoly p = random_upoly(rng);
        UniPoly d = random_upoly(rng);
        if (d.is_zero()) d = UniPoly::one();
        const auto div = exact_divide(p * d, d);
        CHECK(div.exact);
        CHECK(div.quotient == p);
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(52, 26) == Int("495918532948104"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        const UniPoly p = random_upoly(rng), q = random_upoly(rng), r = random_upoly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);

        const BiPoly a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("rational conversion") {
    const UniPoly p = upoly({3, 2, 1});
    CHECK(to_integer(to_rational(p)) == p);
    RatPoly half = to_rational(p).scaled(Rat(1, 2));
    CHECK(!to_integer(half).has_value());
    CHECK(to_integer(half.scaled(Rat(2))) == p);
}
