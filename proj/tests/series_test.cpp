#include <catch2/catch_amalgamated.hpp>

#include "changhee/combinatorics.hpp"
#include "changhee/series.hpp"
#include "oracles.hpp"

using namespace changhee;

namespace {

Series one_plus_t(std::size_t trunc) {
    std::vector<Polynomial> c(trunc + 1, Polynomial::zero());
    c[0] = Polynomial::one();
    if (trunc >= 1) c[1] = Polynomial::one();
    return Series(trunc, std::move(c));
}

Series one_minus_t(std::size_t trunc) {
    std::vector<Polynomial> c(trunc + 1, Polynomial::zero());
    c[0] = Polynomial::one();
    if (trunc >= 1) c[1] = Polynomial(Rational(-1));
    return Series(trunc, std::move(c));
}

}  // namespace

TEST_CASE("series ring basics", "[series]") {
    const std::size_t N = 12;

    SECTION("(1+t)(1-t) = 1 - t^2") {
        Series prod = series_mul(one_plus_t(N), one_minus_t(N));
        REQUIRE(prod.coeff(0) == Polynomial::one());
        REQUIRE(prod.coeff(1) == Polynomial::zero());
        REQUIRE(prod.coeff(2) == Polynomial(Rational(-1)));
        for (std::size_t n = 3; n <= N; ++n) REQUIRE(prod.coeff(n) == Polynomial::zero());
    }

    SECTION("add and sub are inverse") {
        testing_oracles::Rng rng(0x5e11e5u);
        std::vector<Polynomial> ac, bc;
        for (std::size_t i = 0; i <= N; ++i) {
            ac.push_back(rng.polynomial(3));
            bc.push_back(rng.polynomial(3));
        }
        Series a(N, ac), b(N, bc);
        REQUIRE(series_sub(series_add(a, b), b) == a);
    }

    SECTION("mul truncates to the shorter operand") {
        Series a = one_plus_t(10);
        Series b = one_plus_t(6);
        REQUIRE(series_mul(a, b).trunc() == 6);
        REQUIRE(series_add(a, b).trunc() == 6);
    }

    SECTION("coeff past truncation throws") {
        Series a = Series::one(4);
        REQUIRE_THROWS_AS(a.coeff(5), std::out_of_range);
        REQUIRE_THROWS_AS(egf_coeff(a, 5), std::out_of_range);
    }
}

TEST_CASE("series inversion", "[series]") {
    const std::size_t N = 10;

    SECTION("2/(2+t) times (2+t)/2 is 1") {
        std::vector<Polynomial> c(N + 1, Polynomial::zero());
        c[0] = Polynomial::one();
        c[1] = Polynomial(Rational(1, 2));
        Series half(N, c);  // 1 + t/2
        Series inv = series_inv(half);
        REQUIRE(series_mul(half, inv) == Series::one(N));
        // geometric coefficients: [t^n] 1/(1+t/2) = (-1/2)^n
        for (std::size_t n = 0; n <= N; ++n) {
            Rational want = rational_pow(Rational(-1, 2), n);
            REQUIRE(inv.coeff(n) == Polynomial(want));
        }
        // as an EGF that is (-1)^n n! / 2^n
        for (std::size_t n = 0; n <= N; ++n) {
            Rational want = factorial(static_cast<unsigned>(n)) * rational_pow(Rational(-1, 2), n);
            REQUIRE(egf_coeff(inv, n) == Polynomial(want));
        }
    }

    SECTION("random unit series invert exactly") {
        testing_oracles::Rng rng(0x1abe11eu);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<Polynomial> c;
            c.push_back(Polynomial(rng.nonzero_rational()));
            for (std::size_t i = 1; i <= 8; ++i) c.push_back(rng.polynomial(2));
            Series a(8, c);
            REQUIRE(series_mul(a, series_inv(a)) == Series::one(8));
        }
    }

    SECTION("inversion requires a nonzero rational constant term") {
        std::vector<Polynomial> zc(3, Polynomial::zero());
        REQUIRE_THROWS_AS(series_inv(Series(2, zc)), std::domain_error);
        std::vector<Polynomial> xc(3, Polynomial::zero());
        xc[0] = Polynomial::x();
        REQUIRE_THROWS_AS(series_inv(Series(2, xc)), std::domain_error);
    }
}

TEST_CASE("series exp and log", "[series]") {
    const std::size_t N = 12;

    SECTION("exp(t) has coefficients 1/n!") {
        std::vector<Polynomial> c(N + 1, Polynomial::zero());
        c[1] = Polynomial::one();
        Series e = series_exp(Series(N, c));
        for (std::size_t n = 0; n <= N; ++n) {
            Rational want = Rational(1) / factorial(static_cast<unsigned>(n));
            REQUIRE(e.coeff(n) == Polynomial(want));
        }
    }

    SECTION("exp requires zero constant term") {
        std::vector<Polynomial> c(3, Polynomial::zero());
        c[0] = Polynomial::one();
        REQUIRE_THROWS_AS(series_exp(Series(2, c)), std::domain_error);
    }

    SECTION("exp(log(1+t)) = 1 + t") {
        Series lg = series_log1p(N);
        Series back = series_exp(lg);
        REQUIRE(back == one_plus_t(N));
    }

    SECTION("log(1+t) coefficients are (-1)^(n+1)/n") {
        Series lg = series_log1p(N);
        REQUIRE(lg.coeff(0) == Polynomial::zero());
        for (std::size_t n = 1; n <= N; ++n) {
            Rational want = Rational((n % 2 == 0) ? -1 : 1, static_cast<long long>(n));
            REQUIRE(lg.coeff(n) == Polynomial(want));
        }
    }

    SECTION("exp(x log(1+t)) recovers binomial polynomials") {
        // (1+t)^x = sum_n binom(x,n) t^n
        Series pw = detail::pow_one_plus_t(Polynomial::x(), N);
        for (std::size_t n = 0; n <= N; ++n) {
            REQUIRE(pw.coeff(n) == poly_binom(n));
        }
    }

    SECTION("(1+t)^x squared equals (1+t)^(2x)") {
        const std::size_t M = 10;
        Series pw = detail::pow_one_plus_t(Polynomial::x(), M);
        Series sq = series_mul(pw, pw);
        Series dz = detail::pow_one_plus_t(Polynomial::x(), M);
        for (std::size_t n = 0; n <= M; ++n) {
            REQUIRE(sq.coeff(n) == dz.coeff(n).scale_arg(Rational(2)));
        }
    }
}

TEST_CASE("integer powers of series", "[series]") {
    const std::size_t N = 8;
    std::vector<Polynomial> c(N + 1, Polynomial::zero());
    c[0] = Polynomial::one();
    c[1] = Polynomial(Rational(1, 2));
    Series half(N, c);  // 1 + t/2, i.e. (2+t)/2

    SECTION("negative power matches the sum with repetition count") {
        for (long long k = 1; k <= 5; ++k) {
            Series p = series_ipow(half, -k);
            // [t^i] (1+t/2)^(-k) = (-1/2)^i * C(k+i-1, i)
            for (std::size_t i = 0; i <= N; ++i) {
                Rational want = rational_pow(Rational(-1, 2), i) *
                                binomial(Rational(k + static_cast<long long>(i) - 1),
                                         static_cast<unsigned>(i));
                REQUIRE(p.coeff(i) == Polynomial(want));
            }
        }
    }

    SECTION("power zero is one") {
        REQUIRE(series_ipow(half, 0) == Series::one(N));
    }

    SECTION("positive powers agree with repeated multiplication") {
        Series p3 = series_ipow(half, 3);
        Series m3 = series_mul(series_mul(half, half), half);
        REQUIRE(p3 == m3);
    }

    SECTION("scale by a polynomial factor") {
        Series s = series_scale(one_plus_t(4), Polynomial(Rational(3)));
        REQUIRE(s.coeff(0) == Polynomial(Rational(3)));
        REQUIRE(s.coeff(1) == Polynomial(Rational(3)));
        REQUIRE(s.coeff(2) == Polynomial::zero());
    }
}

TEST_CASE("family generating functions", "[series]") {
    SECTION("truncation is monotone") {
        for (Family f : kAllFamilies) {
            Series big = family_gf(f, 2, true, 16);
            Series small = family_gf(f, 2, true, 8);
            REQUIRE(big.truncated(8) == small);
        }
    }

    SECTION("spot values against independently computed coefficients") {
        // order-3 variant of the (1+t)-substituted family: n=2 coefficient at x=... is
        // 2! [t^2] (2/(2+t))^3 (1+t)^x evaluated symbolically
        Series ch1 = family_gf(Family::changhee1, 3, true, 6);
        Polynomial c2 = egf_coeff(ch1, 2);
        // hand expansion: x^2 - 4x + 3
        Polynomial want({Rational(3), Rational(-4), Rational(1)});
        REQUIRE(c2 == want);

        Series ch2 = family_gf(Family::changhee2, 2, true, 6);
        REQUIRE(poly_eval(egf_coeff(ch2, 2), Rational(0)) == Rational(-1, 2));

        Series dh = family_gf(Family::daehee, 1, false, 6);
        REQUIRE(egf_coeff(dh, 3) == Polynomial(Rational(-3, 2)));

        Series nl = family_gf(Family::norlund2, 1, false, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            Rational want_n = Rational((n % 2 == 0) ? 1 : -1, static_cast<long long>(n) + 1);
            REQUIRE(egf_coeff(nl, n) == Polynomial(want_n));
        }
    }

    SECTION("order zero collapses the exponential factor") {
        Series eu = family_gf(Family::euler, 0, true, 8);
        for (std::size_t n = 0; n <= 8; ++n) {
            REQUIRE(egf_coeff(eu, n) == Polynomial::monomial(Rational(1), n));
        }
    }

    SECTION("first-order variant matches the classical recurrence") {
        Series b = family_gf(Family::bernoulli, 1, false, 12);
        const auto row = testing_oracles::bernoulli_first_order(12);
        for (std::size_t n = 0; n <= 12; ++n) {
            REQUIRE(egf_coeff(b, n) == Polynomial(row[n]));
        }
        // order 2 is the convolution of two order-1 rows
        Series b2 = family_gf(Family::bernoulli, 2, false, 6);
        Rational conv;
        for (unsigned j = 0; j <= 2; ++j) {
            conv += binomial(Rational(2), j) * row[j] * row[2 - j];
        }
        REQUIRE(egf_coeff(b2, 2) == Polynomial(conv));
        REQUIRE(conv == Rational(5, 6));
    }
}
