#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "recipchow/errors.hpp"

namespace recipchow {

/// Arbitrary-precision rational, always kept canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Thin value wrapper around GMP's mpq.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    BigRat(long n, long d) {
        if (d == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit BigRat(const mpz_class& z) : v_(z) {}
    explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws input_error on malformed text or q = 0.
    static BigRat parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw input_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }
    BigRat inverse() const {
        if (is_zero()) throw input_error("inverse of zero");
        return BigRat(mpq_class(1) / v_);
    }
    BigRat pow(unsigned e) const;

    /// True iff the value is a square of a rational; if so *root is the
    /// nonnegative square root.
    bool square_root(BigRat* root) const;

    double to_double() const { return v_.get_d(); }

    /// Canonical text form: "p" when den = 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

private:
    mpq_class v_;
};

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRat {
    BigRat re;
    BigRat im;

    GaussianRat() = default;
    GaussianRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRat(long r) : re(r) {}                  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRat conj() const { return {re, -im}; }
    BigRat norm() const { return re * re + im * im; }

    GaussianRat operator-() const { return {-re, -im}; }
    friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRat inverse() const {
        if (is_zero()) throw input_error("inverse of zero");
        BigRat n = norm();
        return {re / n, -im / n};
    }
    friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

    std::string str() const;
};

} // namespace recipchow
