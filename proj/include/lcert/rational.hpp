#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "lcert/intutil.hpp"

namespace lcert {

// Arbitrary-precision rational number. Always kept normalized:
// gcd(|num|, den) = 1 and den >= 1. Normalization happens at construction,
// never lazily.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_((long)n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) : num_((long)n), den_((long)d) { normalize(); }
    Rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit Rational(const mpz_class& n) : num_(n), den_(1) {}

    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s), 1);
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const { return Rational(-num_, den_, already_normal{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        mpq_class q(num_, den_);
        return q.get_d();
    }

    std::string str() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

  private:
    struct already_normal {};
    Rational(mpz_class n, mpz_class d, already_normal) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        mpz_class g = gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    mpz_class num_, den_;
};

inline Rational rational_power_int(i64 base, long e) {
    if (base <= 0) throw std::invalid_argument("rational_power_int: base must be positive");
    return Rational(base).pow(e);
}

}  // namespace lcert
