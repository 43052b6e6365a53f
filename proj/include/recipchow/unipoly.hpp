#pragma once

#include <string>
#include <utility>
#include <vector>

#include "recipchow/rational.hpp"

namespace recipchow {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial is the empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const BigRat& c) { return UniPoly({c}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<BigRat>& coeffs() const { return c_; }
    BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }
    const BigRat& leading() const;

    BigRat eval(const BigRat& x) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const BigRat& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division by a nonzero polynomial: (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);

    /// p / gcd(p, p'), made monic.
    UniPoly squarefree_part() const;

    std::string str(const std::string& var = "y") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

/// Number of distinct real roots of p over (-inf, inf), by a Sturm sequence
/// on the squarefree part. Throws input_error on the zero polynomial.
int sturm_real_roots(const UniPoly& p);

/// Resultant of two binary forms given by their full coefficient vectors
/// (degree = size - 1, coefficient of s^i t^(deg-i) at index i). Sizes fix
/// the form degrees; a zero leading entry is a root at [1:0].
BigRat sylvester_resultant(const std::vector<BigRat>& f, const std::vector<BigRat>& g);

} // namespace recipchow
