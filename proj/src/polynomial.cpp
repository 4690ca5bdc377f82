#include "mpp/polynomial.hpp"

#include "mpp/error.hpp"

#include <algorithm>

namespace mpp {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c)
{
    return UnivariatePolynomial({c});
}

UnivariatePolynomial UnivariatePolynomial::linear(const Rational& slope, const Rational& offset)
{
    return UnivariatePolynomial({offset, slope});
}

void UnivariatePolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UnivariatePolynomial::evaluate(const Rational& n) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const UnivariatePolynomial& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

std::string to_string(const UnivariatePolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& c : p.coefficients()) {
        if (!out.empty())
            out += ", ";
        out += to_string(c);
    }
    return out;
}

std::vector<std::string> to_fraction_strings(const UnivariatePolynomial& p)
{
    std::vector<std::string> out;
    for (const auto& c : p.coefficients())
        out.push_back(to_fraction_string(c));
    return out;
}

UnivariatePolynomial interpolate_polynomial(const std::vector<std::pair<Integer, Integer>>& points)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw Error(ErrorKind::InvalidArgument,
                            "repeated abscissa n = " + points[i].first.get_str() + " in interpolation data");
    UnivariatePolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        UnivariatePolynomial basis = UnivariatePolynomial::constant(Rational(points[i].second));
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            Rational denom = Rational(points[i].first - points[j].first);
            basis *= UnivariatePolynomial::linear(Rational(1), Rational(-points[j].first));
            basis *= Rational(1 / denom);
        }
        result += basis;
    }
    return result;
}

UnivariatePolynomial binomial_in_n(const Rational& slope, const Rational& offset, unsigned k)
{
    UnivariatePolynomial out = UnivariatePolynomial::constant(Rational(1));
    Integer factorial = 1;
    for (unsigned j = 0; j < k; ++j) {
        out *= UnivariatePolynomial::linear(slope, offset - j);
        factorial *= j + 1;
    }
    out *= Rational(1, 1) / Rational(factorial);
    return out;
}

}  // namespace mpp
