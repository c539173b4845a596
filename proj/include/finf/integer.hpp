#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace finf {

// Integer with an int64 fast path; promotes to GMP on overflow.
class Int {
public:
    Int() = default;
    Int(long long v) : small_(v) {}
    Int(int v) : small_(v) {}
    Int(long v) : small_(v) {}
    explicit Int(const mpz_class& z) { set_big(z); }
    explicit Int(const std::string& decimal);

    Int(const Int& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (small_ > 0) - (small_ < 0); }
    bool fits_int64() const { return !big_; }
    long long to_int64() const { return small_; }
    mpz_class to_mpz() const;
    std::string str() const;

    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);
    Int operator-() const;

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    friend bool operator==(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b);

    // a = q*b + r with r == 0 required for exact division; returns false otherwise.
    static bool divide_exact(const Int& a, const Int& b, Int& q);

private:
    void set_big(const mpz_class& z);
    long long small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace finf
