#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/special_fn.hpp"

#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

using namespace hardy;
using namespace hardy::special;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

double big_gamma(double x)
{
    return static_cast<double>(boost::math::tgamma(Big(x)));
}

double rel_err(double got, double want)
{
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

} // namespace

TEST_CASE("log_gamma matches known values")
{
    auto g = log_gamma(1.0);
    CHECK(g.sign == 1);
    CHECK(g.log_abs == doctest::Approx(0.0).epsilon(1e-15));
    g = log_gamma(0.5);
    CHECK(g.log_abs == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    g = log_gamma(-1.5);
    CHECK(g.sign == 1);
    CHECK(g.log_abs == doctest::Approx(std::log(4.0 * std::sqrt(std::numbers::pi) / 3.0)).epsilon(1e-14));
    CHECK(log_gamma(-3.0).sign == 0);
    CHECK(log_gamma(0.0).sign == 0);
    CHECK(log_gamma(-0.5).sign == -1);
}

TEST_CASE("gamma agrees with a 50-digit oracle on [-50, 50]")
{
    double worst = 0.0;
    for (int i = -5000; i <= 5000; ++i) {
        const double x = i * 0.01 + 0.003;
        const auto g = log_gamma(x);
        const double got = g.sign * std::exp(g.log_abs);
        const double want = big_gamma(x);
        if (std::isfinite(want) && std::fabs(want) > 1e-290 && std::fabs(want) < 1e290) {
            worst = std::max(worst, rel_err(got, want));
        }
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("gamma_ratio")
{
    CHECK(gamma_ratio(8.0, 7.0) == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(gamma_ratio(2.0, 4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(gamma_ratio(1.5, -0.5) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(gamma_ratio(2.0, -3.0) == 0.0);
    CHECK_THROWS_AS(gamma_ratio(-2.0, 1.5), NumeratorPole);

    // Large arguments: Gamma(n + 1/2)/Gamma(n) against the oracle.
    for (double n : {10.0, 1e3, 1e5, 1e8}) {
        const Big want = boost::multiprecision::exp(boost::math::lgamma(Big(n) + Big(0.5)) - boost::math::lgamma(Big(n)));
        CHECK(rel_err(gamma_ratio(n + 0.5, n), static_cast<double>(want)) <= 1e-13);
    }
    // Mixed signs through reflection.
    for (double a : {-3.7, -1.2, 0.4, 5.5}) {
        for (double b : {-4.3, -0.6, 1.9, 12.25}) {
            const Big want = boost::math::tgamma(Big(a)) / boost::math::tgamma(Big(b));
            CHECK(rel_err(gamma_ratio(a, b), static_cast<double>(want)) <= 1e-13);
        }
    }
}

TEST_CASE("binomial_real")
{
    CHECK(binomial_real(2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(binomial_real(2.0, 3.0) == 0.0);
    CHECK(binomial_real(1.0, 0.5) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-14));
    for (double a : {0.6, 1.5, 2.5}) {
        for (double b : {-2.7, -0.3, 0.8, 3.25, 20.5}) {
            if (is_nonpositive_integer(a - b + 1.0)) {
                CHECK(binomial_real(a, b) == 0.0);
                continue;
            }
            const Big want = boost::math::tgamma(Big(a) + 1) /
                             (boost::math::tgamma(Big(b) + 1) * boost::math::tgamma(Big(a) - Big(b) + 1));
            CHECK(rel_err(binomial_real(a, b), static_cast<double>(want)) <= 1e-13);
        }
    }
    CHECK_THROWS_AS(binomial_real(-2.0, 0.5), NumeratorPole);
}

TEST_CASE("pochhammer and chebyshev_u")
{
    CHECK(pochhammer(0.7, 0) == 1.0);
    CHECK(pochhammer(1.0, 4) == doctest::Approx(24.0));
    CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75));
    CHECK(chebyshev_u(0, 0.37) == 1.0);
    CHECK(chebyshev_u(1, 0.3) == doctest::Approx(0.6));
    CHECK(chebyshev_u(2, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    // U_n(1) = n + 1, U_n(-1) = (-1)^n (n + 1)
    CHECK(chebyshev_u(40, 1.0) == doctest::Approx(41.0));
    CHECK(chebyshev_u(41, -1.0) == doctest::Approx(-42.0));
    for (std::uint64_t n : {3u, 17u, 60u}) {
        const double t = 0.81;
        CHECK(chebyshev_u(n, std::cos(t)) == doctest::Approx(std::sin((n + 1) * t) / std::sin(t)).epsilon(1e-12));
    }
}

TEST_CASE("digamma against the oracle")
{
    CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-15));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler_gamma).epsilon(1e-15));
    CHECK(digamma(0.5) == doctest::Approx(-euler_gamma - 2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(digamma(-2.0), PoleError);
    for (double x : {-7.3, -2.5, -0.1, 0.01, 0.75, 1.4616321449683622, 3.3, 27.0, 1e6}) {
        const double want = static_cast<double>(boost::math::digamma(Big(x)));
        CHECK(std::fabs(digamma(x) - want) <= std::max(1e-13 * std::fabs(want), 1e-14));
    }
}

TEST_CASE("sin_pi and cos_pi are exact at lattice points")
{
    CHECK(sin_pi(3.0) == 0.0);
    CHECK(sin_pi(-7.0) == 0.0);
    CHECK(cos_pi(2.5) == 0.0);
    CHECK(sin_pi(0.5) == 1.0);
    CHECK(sin_pi(1e6 + 0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(is_nonpositive_integer(-4.0));
    CHECK_FALSE(is_nonpositive_integer(-4.5));
    CHECK_FALSE(is_nonpositive_integer(1.0));
}

TEST_CASE("quad_adaptive")
{
    const double pi = std::numbers::pi;
    auto r = quad_adaptive([](double t) { return std::sin(t) * std::sin(t); }, 0.0, pi, 1e-13);
    CHECK(r.value == doctest::Approx(pi / 2).epsilon(1e-13));

    r = quad_adaptive([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12, {-0.5, std::nullopt});
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));

    // (1 - cos t)^{1/2} sin^2 t: the sigma = 1/2 kernel entry K_{1,1} times pi / 2^{3/2}.
    r = quad_adaptive([](double t) { return std::sqrt(1.0 - std::cos(t)) * std::sin(t) * std::sin(t); }, 0.0, pi,
                      1e-13);
    CHECK(r.value == doctest::Approx(64.0 / (15.0 * pi) * pi / (2.0 * std::sqrt(2.0))).epsilon(1e-12));

    // Strong singularity at the origin; a weak one at the upper end.
    r = quad_adaptive([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, 1e-10, {-0.9, std::nullopt});
    CHECK(r.value == doctest::Approx(10.0).epsilon(1e-9));
    r = quad_adaptive([](double x) { return std::sqrt(2.0 - x); }, 0.0, 2.0, 1e-12, {std::nullopt, 0.5});
    CHECK(r.value == doctest::Approx(2.0 / 3.0 * std::pow(2.0, 1.5)).epsilon(1e-12));

    CHECK_THROWS_AS(quad_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-14, {}, {64, 4}),
                    NoConvergence);
}
