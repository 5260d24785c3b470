#pragma once
/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one deformation parameter q over Q.
 *
 * A LaurentPoly is a finite map exponent -> nonzero rational coefficient.
 * This is the coefficient ring of every algebra element in the library,
 * so equality here is exact ring equality and printing is canonical
 * (ascending exponents), making printed output byte-reproducible.
 */

#include "qrpw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qrpw {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPoly(long long num, long long den) : LaurentPoly(rational_from(num, den)) {}

    /// c * q^e as a one-term polynomial.
    static LaurentPoly monomial(const Rational& c, int e) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static LaurentPoly q_power(int e) { return monomial(Rational(1), e); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    static LaurentPoly zero() { return LaurentPoly(); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the support is a single exponent (the unit group of this ring).
    bool is_monomial() const { return coeffs_.size() == 1; }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    /// Coefficient of q^e (zero if absent).
    Rational coeff(int e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    /// Arbitrary strict total order (for use as a map key).
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Substitution q -> q^k with k != 0 (k may be negative).
    LaurentPoly substitute_power(int k) const;

    /// Multiplicative inverse; only monomials are invertible here.
    LaurentPoly inverse() const;

    double eval(double q0) const;

    /// Canonical text form, e.g. "3/2*q^-2 - 1 + q^4"; "0" when zero.
    std::string str() const;

private:
    std::map<int, Rational> coeffs_;
};

/// Parses the canonical text form produced by LaurentPoly::str().
/// Accepts signed rational coefficients, '*' products with q-powers, and
/// '+'/'-' term chains. Throws std::invalid_argument on malformed input.
LaurentPoly lp_parse(const std::string& text);

}  // namespace qrpw
