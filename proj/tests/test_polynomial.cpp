#include "mpp/error.hpp"
#include "mpp/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mpp;
using namespace testing;

namespace {

UnivariatePolynomial poly(std::initializer_list<long> cs)
{
    return UnivariatePolynomial(std::vector<Rational>(cs.begin(), cs.end()));
}

std::vector<std::pair<Integer, Integer>> samples(std::initializer_list<std::pair<long, long>> xs)
{
    std::vector<std::pair<Integer, Integer>> out;
    for (auto [n, v] : xs)
        out.emplace_back(n, v);
    return out;
}

}  // namespace

TEST_CASE("interpolate_polynomial examples")
{
    CHECK(interpolate_polynomial(samples({{0, 1}, {1, 2}, {2, 3}})) == poly({1, 1}));
    CHECK(interpolate_polynomial(samples({{0, 1}, {1, 4}, {2, 9}})) == poly({1, 2, 1}));
    CHECK(interpolate_polynomial(samples({{0, 1}, {1, 1}})) == poly({1}));
    CHECK_THROWS_AS(interpolate_polynomial(samples({{0, 1}, {0, 2}})), Error);
    // n(n+1)/2 through unordered abscissae.
    auto tri = interpolate_polynomial(samples({{3, 6}, {0, 0}, {5, 15}}));
    CHECK(tri.coefficients() == std::vector<Rational>{0, q(1, 2), q(1, 2)});
}

TEST_CASE("polynomial arithmetic and printing")
{
    auto a = poly({1, 1});
    CHECK(to_string(a * a * a) == "1, 3, 3, 1");
    CHECK(to_string(UnivariatePolynomial()) == "0");
    CHECK((a + poly({-1, -1})).is_zero());
    CHECK((a + poly({-1, -1})).degree() == -1);
    CHECK((a * Rational(0)).is_zero());
    CHECK(a.evaluate(Rational(4)) == 5);
    CHECK(to_fraction_strings(poly({3, 0, 2})) == std::vector<std::string>{"3/1", "0/1", "2/1"});
    CHECK(to_string(poly({1}) * UnivariatePolynomial({q(1, 2)})) == "1/2");
}

TEST_CASE("binomial_in_n")
{
    // C(2n + 2, 2) = (2n+2)(2n+1)/2 = 2n^2 + 3n + 1
    CHECK(binomial_in_n(Rational(2), Rational(2), 2) == poly({1, 3, 2}));
    CHECK(binomial_in_n(Rational(5), Rational(-3), 0) == poly({1}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        long slope = static_cast<long>(rng() % 4), offset = static_cast<long>(rng() % 5);
        unsigned k = static_cast<unsigned>(rng() % 5);
        auto p = binomial_in_n(Rational(slope), Rational(offset), k);
        for (long n = 0; n <= 4; ++n) {
            long top = slope * n + offset;
            Integer expected;
            mpz_bin_ui(expected.get_mpz_t(), Integer(top).get_mpz_t(), k);
            CHECK(p.evaluate(Rational(n)) == Rational(expected));
        }
    }
}
