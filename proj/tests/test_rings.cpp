#include "finf/format.hpp"
#include "finf/rings.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace finf;

TEST_CASE("Int promotes to GMP and agrees with mpz") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-(1LL << 62), 1LL << 62);
    for (int t = 0; t < 300; ++t) {
        const long long a = d(rng), b = d(rng);
        const Int x(a), y(b);
        const mpz_class ma(std::to_string(a)), mb(std::to_string(b));
        CHECK((x + y).to_mpz() == ma + mb);
        CHECK((x - y).to_mpz() == ma - mb);
        CHECK((x * y).to_mpz() == ma * mb);
        CHECK(((x * y) * (x * y)).to_mpz() == ma * mb * ma * mb);
    }
    Int q;
    CHECK(Int::divide_exact(Int(12), Int(4), q));
    CHECK(q == Int(3));
    CHECK_FALSE(Int::divide_exact(Int(13), Int(4), q));
    CHECK(Int("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
}

TEST_CASE("quantum integers and binomials") {
    CHECK(qint(1) == UnivariateLaurent(1));
    CHECK(qint(3) == xpow(2) + 1 + xpow(-2));
    CHECK(qbinom(2, 1) == xpow(1) + xpow(-1));
    CHECK(qbinom(-1, 1).is_zero());
    CHECK(qbinom(3, 4).is_zero());
    CHECK(qfactorial(0) == UnivariateLaurent(1));
    CHECK(qfactorial(3) == qint(1) * qint(2) * qint(3));
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(qbinom(n, k) == xpow(k) * qbinom(n - 1, k) + xpow(k - n) * qbinom(n - 1, k - 1));
}

TEST_CASE("q-Pascal, mirrored") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(qbinom(n, k) == xpow(-k) * qbinom(n - 1, k) + xpow(n - k) * qbinom(n - 1, k - 1));
}

TEST_CASE("braces") {
    CHECK(brace(2) == xpow(2) - xpow(-2));
    CHECK(brace_alpha(0, 0) == BivariateLaurent(1));
    CHECK(brace_alpha_shift(0) == qs(0, 1) - qs(0, -1));
    CHECK(brace_alpha_shift(2) == qs(2, 1) - qs(-2, -1));
    CHECK(brace_alpha(0, 2) == (qs(0, 1) - qs(0, -1)) * (qs(-1, 1) - qs(1, -1)));
    CHECK(brace_alpha(3, 1) == qs(-3, 1) - qs(3, -1));
    for (int N = 0; N <= 4; ++N) {
        CHECK(specialize_s(brace_alpha(0, N + 1), N).is_zero());
        CHECK_FALSE(specialize_s(brace_alpha(0, N), N).is_zero());
    }
}

TEST_CASE("specializations") {
    CHECK(specialize_s(qs(0, 1) - qs(0, -1), 0).is_zero());
    CHECK(specialize_s(qs(1, 1), 2) == xpow(3));
    CHECK(specialize_q1(qs(5, 2) + qs(-1, 2)) == xpow(2, Int(2)));
    for (int r = 1; r <= 6; ++r) {
        CHECK(specialize_q_root(qs(2 * r, 0), r) == CyclotomicLaurent(CyclotomicScalar(2 * r, Int(1))));
        CHECK(specialize_q_root(qs(r, 0), r) == CyclotomicLaurent(CyclotomicScalar(2 * r, Int(-1))));
    }
    CHECK(specialize_q_root(qs(1, 1), 1) == CyclotomicLaurent::monomial(1, CyclotomicScalar(2, Int(-1))));
    CHECK(substitute(qs(1, 2), -2, 3) == qs(-2, 6));
    CHECK(mirror(qs(1, -2)) == qs(-1, 2));
}

TEST_CASE("specializations are ring homomorphisms") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        const auto a = testing::random_bivariate(rng, 5), b = testing::random_bivariate(rng, 5);
        for (int N : {0, 1, 3}) {
            CHECK(specialize_s(a * b, N) == specialize_s(a, N) * specialize_s(b, N));
            CHECK(specialize_s(a + b, N) == specialize_s(a, N) + specialize_s(b, N));
        }
        CHECK(specialize_q1(a * b) == specialize_q1(a) * specialize_q1(b));
        for (int r : {2, 3, 5}) {
            CHECK(specialize_q_root(a * b, r) == specialize_q_root(a, r) * specialize_q_root(b, r));
            CHECK(specialize_q_root(a + b, r) == specialize_q_root(a, r) + specialize_q_root(b, r));
        }
    }
}

TEST_CASE("ring axioms on random bivariate Laurent polynomials") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        const auto a = testing::random_bivariate(rng, 4), b = testing::random_bivariate(rng, 4),
                   c = testing::random_bivariate(rng, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BivariateLaurent());
    }
    CHECK(qs(1, 0) * qs(-1, 0) == BivariateLaurent(1));
    CHECK(qs(0, 1) * qs(0, -1) == BivariateLaurent(1));
}

TEST_CASE("cyclotomic arithmetic") {
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(euler_phi(12) == 4);
    for (int order : {2, 4, 6, 8, 10, 12}) {
        const auto z = CyclotomicScalar::zeta_power(order, 1);
        CyclotomicScalar p(order, Int(1));
        for (int k = 1; k <= order; ++k) {
            p = p * z;
            CHECK((k == order) == (p == CyclotomicScalar(order, Int(1))));
        }
        // Phi(zeta) = 0
        CyclotomicScalar acc(order);
        const auto& phi = cyclotomic_polynomial(order);
        for (size_t i = 0; i < phi.size(); ++i) acc += CyclotomicScalar::zeta_power(order, i, phi[i]);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cyclotomic products agree with floating point") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-4, 4), e(0, 30);
    auto eval = [](const CyclotomicScalar& x, int r) {
        std::complex<double> z = std::polar(1.0, M_PI / r), acc = 0, p = 1;
        for (const auto& k : x.coeffs()) {
            acc += static_cast<double>(k.to_int64()) * p;
            p *= z;
        }
        return acc;
    };
    for (int r : {2, 3, 4, 5, 6}) {
        for (int t = 0; t < 20; ++t) {
            CyclotomicScalar a = CyclotomicScalar::zeta_power(2 * r, e(rng), Int(c(rng))) +
                                 CyclotomicScalar::zeta_power(2 * r, e(rng), Int(c(rng)));
            CyclotomicScalar b = CyclotomicScalar::zeta_power(2 * r, e(rng), Int(c(rng))) +
                                 CyclotomicScalar::zeta_power(2 * r, e(rng), Int(c(rng)));
            CHECK(std::abs(eval(a * b, r) - eval(a, r) * eval(b, r)) < 1e-9);
        }
    }
}

TEST_CASE("divisibility") {
    const UnivariateLaurent base = xpow(1) - xpow(-1);
    CHECK(divisible_by_power(UnivariateLaurent(), base, 5));
    CHECK(divisible_by_power(base * base, base, 2));
    CHECK_FALSE(divisible_by_power(base, base, 2));
    CHECK(divisibility_order(pow(base, 3) * (xpow(2) + 1), base, 10) == 3);
    CHECK(divisible(brace_alpha(0, 3) * qs(2, 1), brace_alpha(0, 3)));
    CHECK_FALSE(divisible(brace_alpha(0, 2), brace_alpha(0, 3)));
}

TEST_CASE("frobenius residue") {
    const int order = 6, R = 6;
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    auto one_minus = [&](int e) {
        CyclotomicLaurent f(CyclotomicScalar(order, Int(1)));
        const CyclotomicLaurent g = CyclotomicLaurent(CyclotomicScalar(order, Int(1))) -
                                    CyclotomicLaurent::monomial(R, CyclotomicScalar(order, Int(1)));
        for (int i = 0; i < e; ++i) f *= g;
        return f;
    };
    for (int e = 1; e <= 3; ++e) {
        const int L = -3 * e;
        CyclotomicLaurent in_window(order);
        for (int k = L; k < L + R * e; ++k)
            in_window += CyclotomicLaurent::monomial(k, CyclotomicScalar::zeta_power(order, k, Int(c(rng))));
        CyclotomicLaurent noise(order);
        for (int k = -10; k <= 10; k += 3) noise += CyclotomicLaurent::monomial(k, CyclotomicScalar(order, Int(c(rng))));
        CHECK(frobenius_residue(in_window, R, e, L) == in_window);
        CHECK(frobenius_residue(in_window + one_minus(e) * noise, R, e, L) == in_window);
    }
}

TEST_CASE("text and json formatting") {
    CHECK(to_text(xpow(1, Int(-1)) + 3 - xpow(-1), "t") == "−t + 3 − t⁻¹");
    CHECK(to_text(UnivariateLaurent(), "q") == "0");
    CHECK(superscript(-12) == "⁻¹²");
    CHECK(to_text(qs(2, 1) - qs(0, 1) + qs(-1, 0)) == "(q² − 1)s + q⁻¹");
    CHECK(to_json(qs(1, 0) + qs(0, 2, Int(-3))).dump() == R"([[0,2,"-3"],[1,0,"1"]])");
    CHECK(to_json(xpow(2), true).dump() == R"([[0,2,"1"]])");
    const auto z = CyclotomicLaurent::monomial(1, CyclotomicScalar::zeta_power(4, 1));
    CHECK(to_json(z).dump() == R"([[0,1,{"order":4,"coeffs":["0","1"]}]])");
    CHECK(to_text(z) == "ζs");
}
