#pragma once

#include "mpp/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mpp {

/// Polynomial in the dilation variable n with exact rational coefficients,
/// constant term first. The zero polynomial has no coefficients.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coefficients);
    static UnivariatePolynomial constant(const Rational& c);
    /// slope·n + offset
    static UnivariatePolynomial linear(const Rational& slope, const Rational& offset);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(std::size_t i) const;
    Rational evaluate(const Rational& n) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
    UnivariatePolynomial& operator*=(const UnivariatePolynomial& other);
    UnivariatePolynomial& operator*=(const Rational& c);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a *= b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// "1, 3, 3, 1" for (n+1)^3; "0" for the zero polynomial.
std::string to_string(const UnivariatePolynomial& p);
/// Same listing with "num/den" coefficients.
std::vector<std::string> to_fraction_strings(const UnivariatePolynomial& p);

/// Lagrange interpolation through (n, value) pairs; throws InvalidArgument on
/// repeated abscissae.
UnivariatePolynomial interpolate_polynomial(const std::vector<std::pair<Integer, Integer>>& points);

/// C(slope·n + offset, k) = Π_{j<k} (slope·n + offset − j) / k!.
UnivariatePolynomial binomial_in_n(const Rational& slope, const Rational& offset, unsigned k);

}  // namespace mpp
