#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace sds {

/// Arbitrary-precision rational. Thin RAII wrapper over GMP's mpq_t: exact
/// arithmetic everywhere, no floating point anywhere in the library.
class rat {
  public:
    rat() { mpq_init(v_); }
    rat(long n) {  // NOLINT(google-explicit-constructor) - numeric literal convenience
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    rat(long num, unsigned long den) {
        mpq_init(v_);
        mpq_set_si(v_, num, den);
        mpq_canonicalize(v_);
    }
    explicit rat(const std::string& s);

    rat(const rat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    rat(rat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    rat& operator=(const rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    rat& operator=(rat&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~rat() { mpq_clear(v_); }

    friend rat operator+(const rat& a, const rat& b) {
        rat r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend rat operator-(const rat& a, const rat& b) {
        rat r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend rat operator*(const rat& a, const rat& b) {
        rat r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend rat operator/(const rat& a, const rat& b) {
        rat r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    rat operator-() const {
        rat r;
        mpq_neg(r.v_, v_);
        return r;
    }
    rat& operator+=(const rat& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    rat& operator-=(const rat& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    rat& operator*=(const rat& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    rat inv() const;

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sgn() const { return mpq_sgn(v_); }

    friend bool operator==(const rat& a, const rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
    friend bool operator<(const rat& a, const rat& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    /// Canonical text form "n" or "n/d", d > 0, gcd(n,d) = 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const rat& r);

    mpq_srcptr raw() const { return v_; }
    static rat from_mpq(mpq_srcptr v) {
        rat r;
        mpq_set(r.v_, v);
        return r;
    }

  private:
    mpq_t v_;
};

}  // namespace sds
