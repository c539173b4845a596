#pragma once

#include "finf/cyclotomic.hpp"
#include "finf/laurent.hpp"

#include <optional>

namespace finf {

// Monomials.
inline BivariateLaurent qs(int eq, int es, Int c = Int(1)) { return BivariateLaurent::monomial({eq, es}, std::move(c)); }
inline UnivariateLaurent xpow(int e, Int c = Int(1)) { return UnivariateLaurent::monomial(e, std::move(c)); }

// Embedding of Z[q^{+-1}] into R as s-degree 0.
BivariateLaurent lift_q(const UnivariateLaurent& p);

// Quantum integers and binomials, balanced form in q.
UnivariateLaurent qint(int n);
UnivariateLaurent qfactorial(int n);
// Zero when n < 0, k < 0 or k > n.
const UnivariateLaurent& qbinom(int n, int k);
// {n} = q^n - q^{-n}
UnivariateLaurent brace(int n);
// {alpha + l} = s q^l - s^{-1} q^{-l}
BivariateLaurent brace_alpha_shift(int l);
// {alpha - a; n} = prod_{k<n} (s q^{-a-k} - s^{-1} q^{a+k})
const BivariateLaurent& brace_alpha(int a, int n);

// Specializations.
UnivariateLaurent specialize_s(const BivariateLaurent& p, int N);        // s -> q^N
UnivariateLaurent specialize_q1(const BivariateLaurent& p);              // q -> 1, result in s
CyclotomicLaurent specialize_q_root(const BivariateLaurent& p, int r);   // q -> exp(pi i / r)
BivariateLaurent substitute(const BivariateLaurent& p, int q_to_q, int s_to_s);  // q -> q^a, s -> s^b
BivariateLaurent mirror(const BivariateLaurent& p);                      // (q, s) -> (q^-1, s^-1)
UnivariateLaurent substitute(const UnivariateLaurent& p, int k);         // x -> x^k
CyclotomicScalar specialize(const UnivariateLaurent& p, int order);       // q -> zeta_order

// Exact division treating p as a polynomial in s over Z[q^{+-1}].
std::optional<BivariateLaurent> divide_exact_in_s(const BivariateLaurent& p, const BivariateLaurent& d);
std::optional<UnivariateLaurent> divide_exact(const UnivariateLaurent& p, const UnivariateLaurent& d);
inline bool divisible(const BivariateLaurent& p, const BivariateLaurent& d) {
    return divide_exact_in_s(p, d).has_value();
}
// base^k divides p exactly.
bool divisible_by_power(const UnivariateLaurent& p, const UnivariateLaurent& base, int k);
// Largest k <= cap with d^k dividing p (p == 0 gives cap).
int divisibility_order(const UnivariateLaurent& p, const UnivariateLaurent& d, int cap);

// The unique Laurent polynomial congruent to p modulo (1 - s^R)^e whose exponents lie in
// [L, L + R e); each residue class of exponents mod R gets e consecutive slots.
CyclotomicLaurent frobenius_residue(const CyclotomicLaurent& p, int R, int e, int L);

// Degree bounds; undefined for zero.
int min_s_degree(const BivariateLaurent& p);
int max_s_degree(const BivariateLaurent& p);
int min_degree(const UnivariateLaurent& p);
int max_degree(const UnivariateLaurent& p);

// Coefficient of s^k as a Laurent polynomial in q.
UnivariateLaurent s_coefficient(const BivariateLaurent& p, int k);

// Reused power products.
UnivariateLaurent pow(const UnivariateLaurent& p, int k);
BivariateLaurent pow(const BivariateLaurent& p, int k);

}  // namespace finf
