#pragma once

#include "finf/laurent.hpp"

#include <map>
#include <vector>

namespace finf {

// Element of Z[zeta] with zeta a primitive `order`-th root of unity,
// stored as coefficients of 1, zeta, ..., zeta^{phi(order)-1}.
class CyclotomicScalar {
public:
    CyclotomicScalar() = default;
    explicit CyclotomicScalar(int order);
    CyclotomicScalar(int order, const Int& c);
    CyclotomicScalar(int order, std::vector<Int> coeffs);

    static CyclotomicScalar zeta_power(int order, long long e, const Int& c = Int(1));
    static CyclotomicScalar from_univariate(int order, const UnivariateLaurent& p);

    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;

    CyclotomicScalar& operator+=(const CyclotomicScalar& o);
    CyclotomicScalar& operator-=(const CyclotomicScalar& o);
    friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
    friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b);
    CyclotomicScalar operator-() const;
    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) { return !(a == b); }

private:
    int order_ = 0;
    std::vector<Int> c_;
};

// Integer coefficients of the cyclotomic polynomial Phi_n, lowest degree first.
const std::vector<Int>& cyclotomic_polynomial(int n);
int euler_phi(int n);

// Laurent polynomial in s with coefficients in Z[zeta_order].
class CyclotomicLaurent {
public:
    CyclotomicLaurent() = default;
    explicit CyclotomicLaurent(int order) : order_(order) {}
    CyclotomicLaurent(const CyclotomicScalar& c);

    static CyclotomicLaurent monomial(int s_exp, const CyclotomicScalar& c);

    int order() const { return order_; }
    const std::map<int, CyclotomicScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    CyclotomicScalar coeff(int s_exp) const;

    CyclotomicLaurent& operator+=(const CyclotomicLaurent& o);
    CyclotomicLaurent& operator-=(const CyclotomicLaurent& o);
    CyclotomicLaurent& operator*=(const CyclotomicLaurent& o) { return *this = *this * o; }
    friend CyclotomicLaurent operator+(CyclotomicLaurent a, const CyclotomicLaurent& b) { return a += b; }
    friend CyclotomicLaurent operator-(CyclotomicLaurent a, const CyclotomicLaurent& b) { return a -= b; }
    friend CyclotomicLaurent operator*(const CyclotomicLaurent& a, const CyclotomicLaurent& b);
    CyclotomicLaurent operator-() const;
    friend bool operator==(const CyclotomicLaurent& a, const CyclotomicLaurent& b);
    friend bool operator!=(const CyclotomicLaurent& a, const CyclotomicLaurent& b) { return !(a == b); }

    // s -> s^k.
    CyclotomicLaurent substitute_s_power(int k) const;
    CyclotomicLaurent scaled(int s_exp, const CyclotomicScalar& c) const;
    // Evaluate at s = zeta^N.
    CyclotomicScalar at_zeta_power(long long N) const;

private:
    void add_term(int e, const CyclotomicScalar& c, bool negate);
    int order_ = 0;
    std::map<int, CyclotomicScalar> t_;
};

}  // namespace finf
