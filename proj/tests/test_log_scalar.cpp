#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gravbound/log_scalar.hpp"

using namespace gravbound;
using Catch::Approx;

TEST_CASE("log_mul multiplies magnitudes and signs") {
    const auto a = LogScalar::from_log10(+1, 2.0);
    const auto b = LogScalar::from_log10(+1, 3.0);
    CHECK(log_mul(a, b).log10_mag == Approx(5.0));
    CHECK(log_mul(a, b).sign == +1);

    CHECK(log_mul(LogScalar::zero(), LogScalar::from_log10(+1, 300.0)).is_zero());

    const auto n = LogScalar::from_log10(-1, 1.0);
    const auto p = log_mul(n, n);
    CHECK(p.sign == +1);
    CHECK(p.log10_mag == Approx(2.0));
}

TEST_CASE("log_pow scales the exponent by a rational power") {
    CHECK(log_pow(LogScalar::from_log10(+1, 6.0), {1, 2}).log10_mag == Approx(3.0));

    // extended-precision oracle: log10(t_P) * 4/3 with t_P = 5.391247e-44
    const long double expected = -43.2683L * 4.0L / 3.0L;
    const auto r = log_pow(LogScalar::from_log10(+1, -43.2683), {4, 3});
    CHECK(r.sign == +1);
    CHECK(r.log10_mag == Approx(static_cast<double>(expected)).epsilon(1e-12));

    CHECK_THROWS_AS(log_pow(LogScalar::from_log10(-1, 2.0), Rational{1, 3}), DomainError);
    // integer exponents on negative bases are fine, including unreduced ones
    CHECK(log_pow(LogScalar::from_log10(-1, 2.0), {3}).sign == -1);
    CHECK(log_pow(LogScalar::from_log10(-1, 2.0), {4, 2}).sign == +1);
    CHECK(log_pow(LogScalar::zero(), {3}).is_zero());
    CHECK(log_pow(LogScalar::zero(), {0}).sign == +1);
    CHECK_THROWS_AS(log_pow(LogScalar::zero(), Rational{-1}), DomainError);
}

TEST_CASE("log_add shift-and-sum") {
    const auto one = LogScalar::one();
    const auto two = log_add(one, one);
    CHECK(two.log10_mag == Approx(std::log10(2.0)).epsilon(1e-14));

    // gap of 100 decades: smaller term is below representable precision
    const auto big = LogScalar::from_log10(+1, 100.0);
    CHECK(log_add(big, one).log10_mag == Approx(100.0));

    // exact cancellation
    CHECK(log_add(LogScalar::from_log10(+1, 1.0), LogScalar::from_log10(-1, 1.0)).is_zero());

    // near-cancellation below 15 decades collapses to canonical zero
    const auto a = LogScalar::from_real(1.0);
    const auto b = LogScalar::from_real(-(1.0 - 1e-16));
    CHECK(log_add(a, b).is_zero());

    // a gap that is huge but finite still works
    const auto far = LogScalar::from_log10(+1, 3.0e8);
    CHECK(log_add(far, one).log10_mag == Approx(3.0e8));
}

TEST_CASE("to_real reports clamping explicitly") {
    const auto r = to_real(LogScalar::from_log10(+1, 2.0));
    CHECK(r.value == Approx(100.0));
    CHECK(r.flag == RangeFlag::ExactRange);

    // e^{-1e9} expressed in base 10
    const auto u = to_real(LogScalar::from_log10(+1, -3.9e8));
    CHECK(u.value == 0.0);
    CHECK(u.flag == RangeFlag::UnderflowToZero);

    const auto o = to_real(LogScalar::from_log10(+1, 400.0));
    CHECK(std::isinf(o.value));
    CHECK(o.flag == RangeFlag::OverflowToInf);

    const auto z = to_real(LogScalar::zero());
    CHECK(z.value == 0.0);
    CHECK(z.flag == RangeFlag::ExactRange);
}

TEST_CASE("from_real round trip and canonical zero") {
    CHECK(LogScalar::from_real(0.0).is_zero());
    CHECK(LogScalar::from_real(0.0).log10_mag == 0.0);
    CHECK_THROWS_AS(LogScalar::from_real(std::nan("")), DomainError);

    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> mag(-300.0, 300.0);
    std::bernoulli_distribution coin;
    for (int i = 0; i < 500; ++i) {
        const double x = (coin(rng) ? 1.0 : -1.0) * std::pow(10.0, mag(rng));
        const auto back = to_real(LogScalar::from_real(x));
        REQUIRE(back.flag == RangeFlag::ExactRange);
        REQUIRE(back.value == Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("random mul/add/pow properties") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mag(-30.0, 30.0);
    std::bernoulli_distribution coin;
    const auto rand_scalar = [&]() {
        return LogScalar::from_real((coin(rng) ? 1.0 : -1.0) * std::pow(10.0, mag(rng)));
    };

    for (int i = 0; i < 300; ++i) {
        const auto a = rand_scalar();
        const auto b = rand_scalar();
        const double av = to_real(a).value;
        const double bv = to_real(b).value;

        REQUIRE(to_real(log_mul(a, b)).value == Approx(av * bv).epsilon(1e-12));

        // commutativity / associativity of addition
        const auto c = rand_scalar();
        const auto ab = log_add(a, b);
        const auto ba = log_add(b, a);
        REQUIRE(to_real(ab).value == Approx(to_real(ba).value).epsilon(1e-12));
        const auto abc1 = log_add(ab, c);
        const auto abc2 = log_add(a, log_add(b, c));
        const double s = to_real(abc1).value;
        if (std::fabs(s) > 1e-280) {
            REQUIRE(to_real(abc2).value == Approx(s).epsilon(1e-9).margin(1e-300));
        }

        // pow inversion for positive bases
        const auto pos = LogScalar::from_log10(+1, mag(rng));
        const Rational p{4, 3};
        const auto round = log_pow(log_pow(pos, p), p.inverse());
        REQUIRE(round.log10_mag == Approx(pos.log10_mag).margin(1e-12));
    }
}

TEST_CASE("compare is a total order consistent with magnitudes") {
    const auto small = LogScalar::from_log10(+1, 1.0);
    const auto large = LogScalar::from_log10(+1, 2.0);
    CHECK(compare(small, large) == -1);
    CHECK(compare(large, small) == +1);
    CHECK(compare(small, small) == 0);
    // for negative values the larger magnitude is the smaller number
    CHECK(compare(LogScalar::from_log10(-1, 2.0), LogScalar::from_log10(-1, 1.0)) == -1);
    CHECK(compare(LogScalar::zero(), small) == -1);
    CHECK(compare(LogScalar::from_log10(-1, 0.0), LogScalar::zero()) == -1);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> mag(-200.0, 200.0);
    for (int i = 0; i < 200; ++i) {
        const double ma = mag(rng), mb = mag(rng);
        const auto a = LogScalar::from_log10(+1, ma);
        const auto b = LogScalar::from_log10(+1, mb);
        REQUIRE(compare(a, b) == (ma < mb ? -1 : (ma > mb ? +1 : 0)));
    }
}
