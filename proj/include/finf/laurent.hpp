#pragma once

#include "finf/integer.hpp"

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

namespace finf {

// Exponent of q^{q} s^{s}; ordered lexicographically by (q, s).
struct BiExp {
    int q = 0;
    int s = 0;
    friend BiExp operator+(BiExp a, BiExp b) { return {a.q + b.q, a.s + b.s}; }
    friend auto operator<=>(const BiExp&, const BiExp&) = default;
};

// Sparse Laurent polynomial with integer coefficients; terms kept sorted by exponent,
// no zero coefficients stored.
template <class E>
class LaurentPoly {
public:
    using Exp = E;
    using Term = std::pair<E, Int>;

    LaurentPoly() = default;
    LaurentPoly(const Int& c) {
        if (!c.is_zero()) terms_.push_back({E{}, c});
    }
    LaurentPoly(long long c) : LaurentPoly(Int(c)) {}
    LaurentPoly(int c) : LaurentPoly(Int(c)) {}

    static LaurentPoly monomial(E e, Int c = Int(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
        return p;
    }
    // Builds from unsorted terms, merging duplicates.
    static LaurentPoly from_terms(std::vector<Term> t) {
        LaurentPoly p;
        p.terms_ = std::move(t);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }

    Int coeff(E e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const E& x) { return t.first < x; });
        return (it != terms_.end() && it->first == e) ? it->second : Int(0);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
        if (b.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
        std::vector<Term> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) out.push_back({x.first + y.first, x.second * y.second});
        return from_terms(std::move(out));
    }

    // Multiply by c * x^e; keeps the ordering since shifting is monotone.
    LaurentPoly scaled(E e, const Int& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.first + e, t.second * c});
        return r;
    }

    // this += a * b without materializing a * b when one factor is a monomial.
    void add_product(const LaurentPoly& a, const LaurentPoly& b) { *this += a * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
                return false;
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    template <class F>
    LaurentPoly map_exponents(F f) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back({f(t.first), t.second});
        return from_terms(std::move(out));
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        size_t w = 0;
        for (size_t i = 0; i < terms_.size();) {
            E e = terms_[i].first;
            Int c = std::move(terms_[i].second);
            size_t j = i + 1;
            for (; j < terms_.size() && terms_[j].first == e; ++j) c += terms_[j].second;
            if (!c.is_zero()) terms_[w++] = {e, std::move(c)};
            i = j;
        }
        terms_.resize(w);
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool negate_b) {
        LaurentPoly r;
        r.terms_.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back({b.terms_[j].first, negate_b ? -b.terms_[j].second : b.terms_[j].second});
                ++j;
            } else {
                Int c = a.terms_[i].second;
                if (negate_b) c -= b.terms_[j].second; else c += b.terms_[j].second;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

using BivariateLaurent = LaurentPoly<BiExp>;
using UnivariateLaurent = LaurentPoly<int>;

}  // namespace finf
