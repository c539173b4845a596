#include "finf/integer.hpp"

#include <stdexcept>

namespace finf {

namespace {

mpz_class from_ll(long long v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Int::Int(const std::string& decimal) {
    mpz_class z;
    if (z.set_str(decimal, 10) != 0) throw std::invalid_argument("bad integer literal: " + decimal);
    set_big(z);
}

void Int::set_big(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
        small_ = mpz_get_si(z.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(z);
    }
}

mpz_class Int::to_mpz() const { return big_ ? *big_ : from_ll(small_); }

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

Int& Int::operator+=(const Int& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() + o.to_mpz());
    return *this;
}

Int& Int::operator-=(const Int& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() - o.to_mpz());
    return *this;
}

Int& Int::operator*=(const Int& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() * o.to_mpz());
    return *this;
}

Int Int::operator-() const {
    Int r;
    if (!big_ && small_ != INT64_MIN) {
        r.small_ = -small_;
        return r;
    }
    r.set_big(-to_mpz());
    return r;
}

bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits int64
}

bool operator<(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.to_mpz() < b.to_mpz();
}

bool Int::divide_exact(const Int& a, const Int& b, Int& q) {
    if (b.is_zero()) return false;
    if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
        if (a.small_ % b.small_ != 0) return false;
        q = Int(a.small_ / b.small_);
        return true;
    }
    mpz_class A = a.to_mpz(), B = b.to_mpz();
    if (!mpz_divisible_p(A.get_mpz_t(), B.get_mpz_t())) return false;
    mpz_class Q;
    mpz_divexact(Q.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    q.set_big(Q);
    return true;
}

}  // namespace finf
