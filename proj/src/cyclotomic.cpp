#include "finf/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>

namespace finf {

namespace {

using IntPoly = std::vector<Int>;  // lowest degree first

void trim(IntPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly a, const IntPoly& d) {
    trim(a);
    const size_t dd = d.size() - 1;
    if (a.size() < d.size()) return {};
    IntPoly q(a.size() - dd, Int(0));
    for (size_t k = a.size(); k-- > dd;) {
        Int c = a[k];
        if (c.is_zero()) continue;
        q[k - dd] = c;
        for (size_t i = 0; i <= dd; ++i) a[k - dd + i] -= c * d[i];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::mutex g_phi_mutex;
std::map<int, IntPoly> g_phi;

const IntPoly& phi_locked(int n) {
    auto it = g_phi.find(n);
    if (it != g_phi.end()) return it->second;
    IntPoly p(n + 1, Int(0));
    p[0] = Int(-1);
    p[n] = Int(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, phi_locked(d));
    return g_phi.emplace(n, p).first->second;
}

// Reduce a polynomial modulo the monic Phi_order.
std::vector<Int> reduce(std::vector<Int> a, int order) {
    const IntPoly& phi = cyclotomic_polynomial(order);
    const size_t d = phi.size() - 1;
    for (size_t k = a.size(); k-- > d;) {
        if (a[k].is_zero()) continue;
        Int c = a[k];
        for (size_t i = 0; i <= d; ++i) a[k - d + i] -= c * phi[i];
    }
    a.resize(d, Int(0));
    return a;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return phi_locked(n);
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

CyclotomicScalar::CyclotomicScalar(int order) : order_(order), c_(euler_phi(order), Int(0)) {}

CyclotomicScalar::CyclotomicScalar(int order, const Int& c) : CyclotomicScalar(order) { c_[0] = c; }

CyclotomicScalar::CyclotomicScalar(int order, std::vector<Int> coeffs) : order_(order) {
    c_ = reduce(std::move(coeffs), order);
}

CyclotomicScalar CyclotomicScalar::zeta_power(int order, long long e, const Int& c) {
    long long k = ((e % order) + order) % order;
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return CyclotomicScalar(order, std::move(v));
}

CyclotomicScalar CyclotomicScalar::from_univariate(int order, const UnivariateLaurent& p) {
    std::vector<Int> v(order, Int(0));
    for (const auto& [e, c] : p.terms()) v[((e % order) + order) % order] += c;
    return CyclotomicScalar(order, std::move(v));
}

bool CyclotomicScalar::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
    if (order_ == 0) return *this = o;
    if (o.order_ == 0) return *this;
    if (o.order_ != order_) throw std::invalid_argument("cyclotomic order mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) { return *this += -o; }

CyclotomicScalar CyclotomicScalar::operator-() const {
    CyclotomicScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    if (a.order_ == 0 || b.order_ == 0) return {};
    if (a.order_ != b.order_) throw std::invalid_argument("cyclotomic order mismatch");
    std::vector<Int> prod(a.c_.size() + b.c_.size(), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CyclotomicScalar(a.order_, std::move(prod));
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    if (a.order_ == 0 || b.order_ == 0) return a.is_zero() && b.is_zero();
    return a.order_ == b.order_ && a.c_ == b.c_;
}

CyclotomicLaurent::CyclotomicLaurent(const CyclotomicScalar& c) : order_(c.order()) {
    if (!c.is_zero()) t_.emplace(0, c);
}

CyclotomicLaurent CyclotomicLaurent::monomial(int s_exp, const CyclotomicScalar& c) {
    CyclotomicLaurent r(c.order());
    if (!c.is_zero()) r.t_.emplace(s_exp, c);
    return r;
}

CyclotomicScalar CyclotomicLaurent::coeff(int s_exp) const {
    auto it = t_.find(s_exp);
    return it == t_.end() ? CyclotomicScalar(order_) : it->second;
}

void CyclotomicLaurent::add_term(int e, const CyclotomicScalar& c, bool negate) {
    if (order_ == 0) order_ = c.order();
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(e, negate ? -c : c);
        return;
    }
    if (negate) it->second -= c; else it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

CyclotomicLaurent& CyclotomicLaurent::operator+=(const CyclotomicLaurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c, false);
    if (order_ == 0) order_ = o.order_;
    return *this;
}

CyclotomicLaurent& CyclotomicLaurent::operator-=(const CyclotomicLaurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c, true);
    if (order_ == 0) order_ = o.order_;
    return *this;
}

CyclotomicLaurent operator*(const CyclotomicLaurent& a, const CyclotomicLaurent& b) {
    CyclotomicLaurent r(a.order_ ? a.order_ : b.order_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb, false);
    return r;
}

CyclotomicLaurent CyclotomicLaurent::operator-() const {
    CyclotomicLaurent r(order_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

bool operator==(const CyclotomicLaurent& a, const CyclotomicLaurent& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    for (; i != a.t_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

CyclotomicLaurent CyclotomicLaurent::substitute_s_power(int k) const {
    CyclotomicLaurent r(order_);
    for (const auto& [e, c] : t_) r.add_term(e * k, c, false);
    return r;
}

CyclotomicLaurent CyclotomicLaurent::scaled(int s_exp, const CyclotomicScalar& c) const {
    CyclotomicLaurent r(order_ ? order_ : c.order());
    for (const auto& [e, x] : t_) r.add_term(e + s_exp, x * c, false);
    return r;
}

CyclotomicScalar CyclotomicLaurent::at_zeta_power(long long N) const {
    CyclotomicScalar r(order_);
    for (const auto& [e, c] : t_) r += c * CyclotomicScalar::zeta_power(order_, N * e);
    return r;
}

}  // namespace finf
