#include "finf/rings.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace finf {

BivariateLaurent lift_q(const UnivariateLaurent& p) {
    std::vector<BivariateLaurent::Term> t;
    for (const auto& [e, c] : p.terms()) t.push_back({{e, 0}, c});
    return BivariateLaurent::from_terms(std::move(t));
}

UnivariateLaurent qint(int n) {
    if (n < 0) return -qint(-n);
    std::vector<UnivariateLaurent::Term> t;
    for (int k = 0; k < n; ++k) t.push_back({n - 1 - 2 * k, Int(1)});
    return UnivariateLaurent::from_terms(std::move(t));
}

UnivariateLaurent qfactorial(int n) {
    UnivariateLaurent r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

namespace {

std::mutex g_binom_mutex;
std::map<std::pair<int, int>, UnivariateLaurent> g_binom;
const UnivariateLaurent g_zero_u;

const UnivariateLaurent& qbinom_locked(int n, int k) {
    if (n < 0 || k < 0 || k > n) return g_zero_u;
    auto it = g_binom.find({n, k});
    if (it != g_binom.end()) return it->second;
    // Fill the needed part of Pascal's triangle row by row.
    for (int m = 0; m <= n; ++m) {
        for (int j = std::max(0, k - (n - m)); j <= std::min(k, m); ++j) {
            if (g_binom.count({m, j})) continue;
            UnivariateLaurent v;
            if (j == 0 || j == m) {
                v = UnivariateLaurent(1);
            } else {
                v = g_binom.at({m - 1, j}).scaled(-j, Int(1)) + g_binom.at({m - 1, j - 1}).scaled(m - j, Int(1));
            }
            g_binom.emplace(std::make_pair(m, j), std::move(v));
        }
    }
    return g_binom.at({n, k});
}

std::mutex g_brace_mutex;
std::map<std::pair<int, int>, BivariateLaurent> g_brace;

}  // namespace

const UnivariateLaurent& qbinom(int n, int k) {
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    return qbinom_locked(n, k);
}

UnivariateLaurent brace(int n) { return xpow(n) - xpow(-n); }

BivariateLaurent brace_alpha_shift(int l) { return qs(l, 1) - qs(-l, -1); }

const BivariateLaurent& brace_alpha(int a, int n) {
    std::lock_guard<std::mutex> lock(g_brace_mutex);
    auto key = std::make_pair(a, n);
    auto it = g_brace.find(key);
    if (it != g_brace.end()) return it->second;
    BivariateLaurent v(1);
    int start = 0;
    for (int j = n; j > 0; --j) {
        auto f = g_brace.find({a, j});
        if (f != g_brace.end()) {
            v = f->second;
            start = j;
            break;
        }
    }
    for (int k = start; k < n; ++k) {
        v *= qs(-a - k, 1) - qs(a + k, -1);
        g_brace.emplace(std::make_pair(a, k + 1), v);
    }
    return g_brace.emplace(key, v).first->second;
}

UnivariateLaurent specialize_s(const BivariateLaurent& p, int N) {
    std::vector<UnivariateLaurent::Term> t;
    t.reserve(p.size());
    for (const auto& [e, c] : p.terms()) t.push_back({e.q + N * e.s, c});
    return UnivariateLaurent::from_terms(std::move(t));
}

UnivariateLaurent specialize_q1(const BivariateLaurent& p) {
    std::vector<UnivariateLaurent::Term> t;
    t.reserve(p.size());
    for (const auto& [e, c] : p.terms()) t.push_back({e.s, c});
    return UnivariateLaurent::from_terms(std::move(t));
}

CyclotomicLaurent specialize_q_root(const BivariateLaurent& p, int r) {
    const int order = 2 * r;
    std::map<int, std::vector<Int>> acc;
    for (const auto& [e, c] : p.terms()) {
        auto& v = acc[e.s];
        if (v.empty()) v.assign(order, Int(0));
        v[((e.q % order) + order) % order] += c;
    }
    CyclotomicLaurent out(order);
    for (auto& [es, v] : acc) out += CyclotomicLaurent::monomial(es, CyclotomicScalar(order, std::move(v)));
    return out;
}

BivariateLaurent substitute(const BivariateLaurent& p, int a, int b) {
    return p.map_exponents([a, b](BiExp e) { return BiExp{e.q * a, e.s * b}; });
}

BivariateLaurent mirror(const BivariateLaurent& p) { return substitute(p, -1, -1); }

UnivariateLaurent substitute(const UnivariateLaurent& p, int k) {
    return p.map_exponents([k](int e) { return e * k; });
}

CyclotomicScalar specialize(const UnivariateLaurent& p, int order) { return CyclotomicScalar::from_univariate(order, p); }

std::optional<UnivariateLaurent> divide_exact(const UnivariateLaurent& p, const UnivariateLaurent& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return UnivariateLaurent();
    const int pmin = min_degree(p), dmin = min_degree(d);
    std::map<int, Int> rem;
    for (const auto& [e, c] : p.terms()) rem[e - pmin] = c;
    std::vector<std::pair<int, Int>> dv;
    for (const auto& [e, c] : d.terms()) dv.push_back({e - dmin, c});
    const int ddeg = dv.back().first;
    const Int& lc = dv.back().second;
    std::vector<UnivariateLaurent::Term> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const int k = top->first - ddeg;
        if (k < 0) return std::nullopt;
        Int qc;
        if (!Int::divide_exact(top->second, lc, qc)) return std::nullopt;
        for (const auto& [e, c] : dv) {
            Int& slot = rem[e + k];
            slot -= qc * c;
            if (slot.is_zero()) rem.erase(e + k);
        }
        quot.push_back({k + pmin - dmin, qc});
    }
    return UnivariateLaurent::from_terms(std::move(quot));
}

namespace {

std::map<int, UnivariateLaurent> by_s(const BivariateLaurent& p) {
    std::map<int, std::vector<UnivariateLaurent::Term>> tmp;
    for (const auto& [e, c] : p.terms()) tmp[e.s].push_back({e.q, c});
    std::map<int, UnivariateLaurent> out;
    for (auto& [s, t] : tmp) out.emplace(s, UnivariateLaurent::from_terms(std::move(t)));
    return out;
}

}  // namespace

std::optional<BivariateLaurent> divide_exact_in_s(const BivariateLaurent& p, const BivariateLaurent& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return BivariateLaurent();
    auto rem = by_s(p);
    const auto dv = by_s(d);
    const int pmin = rem.begin()->first, dmin = dv.begin()->first;
    const int ddeg = std::prev(dv.end())->first;
    const UnivariateLaurent& lc = std::prev(dv.end())->second;
    BivariateLaurent quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const int k = top->first - ddeg;  // s-shift of this quotient term
        if (k + dmin < pmin) return std::nullopt;
        auto qc = divide_exact(top->second, lc);
        if (!qc) return std::nullopt;
        for (const auto& [e, c] : dv) {
            UnivariateLaurent& slot = rem[e + k];
            slot -= *qc * c;
            if (slot.is_zero()) rem.erase(e + k);
        }
        std::vector<BivariateLaurent::Term> t;
        for (const auto& [eq, c] : qc->terms()) t.push_back({{eq, k}, c});
        quot += BivariateLaurent::from_terms(std::move(t));
    }
    return quot;
}

bool divisible_by_power(const UnivariateLaurent& p, const UnivariateLaurent& base, int k) {
    return divisibility_order(p, base, k) >= k;
}

int divisibility_order(const UnivariateLaurent& p, const UnivariateLaurent& d, int cap) {
    UnivariateLaurent cur = p;
    for (int k = 0; k < cap; ++k) {
        if (cur.is_zero()) return cap;
        auto q = divide_exact(cur, d);
        if (!q) return k;
        cur = std::move(*q);
    }
    return cap;
}

int min_s_degree(const BivariateLaurent& p) {
    int m = p.terms().front().first.s;
    for (const auto& t : p.terms()) m = std::min(m, t.first.s);
    return m;
}

int max_s_degree(const BivariateLaurent& p) {
    int m = p.terms().front().first.s;
    for (const auto& t : p.terms()) m = std::max(m, t.first.s);
    return m;
}

int min_degree(const UnivariateLaurent& p) { return p.terms().front().first; }
int max_degree(const UnivariateLaurent& p) { return p.terms().back().first; }

UnivariateLaurent s_coefficient(const BivariateLaurent& p, int k) {
    std::vector<UnivariateLaurent::Term> t;
    for (const auto& [e, c] : p.terms())
        if (e.s == k) t.push_back({e.q, c});
    return UnivariateLaurent::from_terms(std::move(t));
}

UnivariateLaurent pow(const UnivariateLaurent& p, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    UnivariateLaurent r(1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

BivariateLaurent pow(const BivariateLaurent& p, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    BivariateLaurent r(1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

namespace {

// k (k-1) ... (k-i+1) / i! for any integer k.
Int general_binomial(long long k, int i) {
    mpz_class num = 1, den;
    for (int j = 0; j < i; ++j) num *= mpz_class(std::to_string(k - j));
    mpz_fac_ui(den.get_mpz_t(), i);
    return Int(mpz_class(num / den));
}

}  // namespace

CyclotomicLaurent frobenius_residue(const CyclotomicLaurent& p, int R, int e, int L) {
    const int order = p.order();
    CyclotomicLaurent out(order);
    auto mod = [](int a, int b) { return ((a % b) + b) % b; };
    for (int c = 0; c < R; ++c) {
        const int j0 = (L + mod(c - L, R) - c) / R;
        // Expand t^k in powers of h = t - 1 up to h^{e-1}.
        std::vector<CyclotomicScalar> h(e, CyclotomicScalar(order));
        bool any = false;
        for (const auto& [ex, co] : p.terms()) {
            if (mod(ex - c, R)) continue;
            any = true;
            const long long k = (ex - c) / R - j0;
            for (int i = 0; i < e; ++i) h[i] += co * CyclotomicScalar(order, general_binomial(k, i));
        }
        if (!any) continue;
        for (int i = 0; i < e; ++i)
            for (int l = 0; l <= i; ++l) {
                Int b = general_binomial(i, l);
                if ((i - l) % 2) b = -b;
                out += CyclotomicLaurent::monomial(c + R * (j0 + l), h[i] * CyclotomicScalar(order, b));
            }
    }
    return out;
}

}  // namespace finf
