#include <catch2/catch_amalgamated.hpp>

#include "changhee/combinatorics.hpp"
#include "changhee/families.hpp"
#include "changhee/series.hpp"
#include "oracles.hpp"

using namespace changhee;

TEST_CASE("higher-order euler polynomials", "[families]") {
    SECTION("first-order numbers") {
        REQUIRE(poly_eval(euler(0, 1), Rational(0)) == Rational(1));
        REQUIRE(poly_eval(euler(1, 1), Rational(0)) == Rational(-1, 2));
        REQUIRE(poly_eval(euler(2, 1), Rational(0)) == Rational(0));
        REQUIRE(poly_eval(euler(3, 1), Rational(0)) == Rational(1, 4));
        REQUIRE(poly_eval(euler(4, 1), Rational(0)) == Rational(0));
    }

    SECTION("second-order numbers") {
        REQUIRE(poly_eval(euler(0, 2), Rational(0)) == Rational(1));
        REQUIRE(poly_eval(euler(1, 2), Rational(0)) == Rational(-1));
        REQUIRE(poly_eval(euler(2, 2), Rational(0)) == Rational(1, 2));
        REQUIRE(poly_eval(euler(3, 2), Rational(0)) == Rational(1, 2));
        REQUIRE(poly_eval(euler(4, 2), Rational(0)) == Rational(-1));
    }

    SECTION("polynomial forms") {
        Polynomial e22({Rational(1, 2), Rational(-2), Rational(1)});
        REQUIRE(euler(2, 2) == e22);
        Polynomial e14({Rational(-2), Rational(1)});
        REQUIRE(euler(1, 4) == e14);
        REQUIRE(poly_eval(euler(3, 4), Rational(0)) == Rational(-2));
    }

    SECTION("order zero gives plain powers") {
        for (unsigned n = 0; n <= 10; ++n) {
            REQUIRE(euler(n, 0) == Polynomial::monomial(Rational(1), n));
        }
    }

    SECTION("monic of degree n") {
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned k = 1; k <= 5; ++k) {
                Polynomial p = euler(n, k);
                REQUIRE(p.degree() == n);
                REQUIRE(p.leading_coeff() == Rational(1));
            }
        }
    }
}

TEST_CASE("higher-order bernoulli polynomials", "[families]") {
    SECTION("first-order numbers match the defining recurrence") {
        const auto row = testing_oracles::bernoulli_first_order(12);
        for (unsigned n = 0; n <= 12; ++n) {
            REQUIRE(poly_eval(bernoulli(n, 1), Rational(0)) == row[n]);
        }
    }

    SECTION("classical second polynomial") {
        Polynomial b2({Rational(1, 6), Rational(-1), Rational(1)});
        REQUIRE(bernoulli(2, 1) == b2);
    }

    SECTION("order-2 number at n=2") {
        REQUIRE(poly_eval(bernoulli(2, 2), Rational(0)) == Rational(5, 6));
    }

    SECTION("order zero gives plain powers") {
        for (unsigned n = 0; n <= 10; ++n) {
            REQUIRE(bernoulli(n, 0) == Polynomial::monomial(Rational(1), n));
        }
    }

    SECTION("agrees with the generating function") {
        for (unsigned order = 1; order <= 4; ++order) {
            Series gf = family_gf(Family::bernoulli, order, true, 8);
            for (unsigned n = 0; n <= 8; ++n) {
                REQUIRE(bernoulli(n, order) == egf_coeff(gf, n));
            }
        }
    }
}

TEST_CASE("changhee polynomials of the first kind", "[families]") {
    SECTION("known values") {
        Polynomial c21({Rational(1, 2), Rational(-2), Rational(1)});
        REQUIRE(changhee1(2, 1) == c21);
        REQUIRE(poly_eval(changhee1(3, 2), Rational(0)) == Rational(-3));
        REQUIRE(poly_eval(changhee1(4, 4), Rational(0)) == Rational(105, 2));
    }

    SECTION("degree and leading coefficient") {
        for (unsigned n = 0; n <= 12; ++n) {
            for (unsigned k = 0; k <= 6; ++k) {
                Polynomial p = changhee1(n, k);
                REQUIRE(p.degree() == n);
                REQUIRE(p.leading_coeff() == Rational(1));
            }
        }
    }

    SECTION("order zero degenerates to falling factorials") {
        for (unsigned n = 0; n <= 10; ++n) {
            REQUIRE(changhee1(n, 0) == falling_factorial_poly(n));
        }
    }

    SECTION("number recurrence matches the closed form") {
        for (unsigned n = 0; n <= 20; ++n) {
            REQUIRE(changhee1_number_recurrence(n) ==
                    poly_eval(changhee1(n, 1), Rational(0)));
        }
    }
}

TEST_CASE("changhee polynomials of the second kind", "[families]") {
    SECTION("known values") {
        Polynomial c11({Rational(1, 2), Rational(1)});
        REQUIRE(changhee2(1, 1) == c11);
        REQUIRE(poly_eval(changhee2(2, 2), Rational(0)) == Rational(-1, 2));
        REQUIRE(poly_eval(changhee2(3, 3), Rational(0)) == Rational(-3, 2));
    }

    SECTION("explicit number sum equals the polynomial at zero") {
        for (unsigned n = 0; n <= 12; ++n) {
            for (unsigned k = 0; k <= 6; ++k) {
                REQUIRE(changhee2_number_explicit(n, k) ==
                        poly_eval(changhee2(n, k), Rational(0)));
            }
        }
    }

    SECTION("order zero degenerates to falling factorials") {
        for (unsigned n = 0; n <= 10; ++n) {
            REQUIRE(changhee2(n, 0) == falling_factorial_poly(n));
        }
    }

    SECTION("argument shift connects the two kinds") {
        for (unsigned n = 0; n <= 15; ++n) {
            for (unsigned k = 0; k <= 6; ++k) {
                REQUIRE(changhee2(n, k) ==
                        changhee1(n, k).shift_arg(Rational(k)));
            }
        }
    }
}

TEST_CASE("daehee numbers and polynomials", "[families]") {
    SECTION("known values") {
        REQUIRE(daehee(3, 1) == Rational(-3, 2));
        REQUIRE(daehee(2, 2) == Rational(11, 6));
        Polynomial d11({Rational(-1, 2), Rational(1)});
        REQUIRE(daehee_poly(1, 1) == d11);
        Polynomial d21({Rational(2, 3), Rational(-2), Rational(1)});
        REQUIRE(daehee_poly(2, 1) == d21);
    }

    SECTION("order zero is the delta sequence") {
        REQUIRE(daehee(0, 0) == Rational(1));
        for (unsigned n = 1; n <= 10; ++n) REQUIRE(daehee(n, 0) == Rational(0));
    }

    SECTION("polynomial at zero returns the number") {
        for (unsigned n = 0; n <= 10; ++n) {
            for (unsigned k = 0; k <= 5; ++k) {
                REQUIRE(poly_eval(daehee_poly(n, k), Rational(0)) == daehee(n, k));
            }
        }
    }

    SECTION("agrees with the generating function") {
        for (unsigned k = 1; k <= 4; ++k) {
            Series gf = family_gf(Family::daehee, k, true, 8);
            for (unsigned n = 0; n <= 8; ++n) {
                REQUIRE(daehee_poly(n, k) == egf_coeff(gf, n));
            }
        }
    }
}

TEST_CASE("second-kind norlund column", "[families]") {
    for (unsigned n = 0; n <= 12; ++n) {
        Rational want((n % 2 == 0) ? 1 : -1, (long long)n + 1);
        REQUIRE(norlund2(n) == want);
    }
    REQUIRE(norlund2(0) == Rational(1));
    REQUIRE(norlund2(1) == Rational(-1, 2));
    REQUIRE(norlund2(2) == Rational(1, 3));
}

TEST_CASE("two-term number bridges", "[families]") {
    SECTION("first-kind numbers against the euler chain") {
        // Ch_n = sum_l s1(n,l) E_l evaluated at 0
        for (unsigned n = 0; n <= 20; ++n) {
            Rational acc(0);
            for (unsigned l = 0; l <= n; ++l) {
                acc += Rational(stirling1(n, l)) * poly_eval(euler(l, 1), Rational(0));
            }
            REQUIRE(acc == poly_eval(changhee1(n, 1), Rational(0)));
        }
    }

    SECTION("euler numbers against the first-kind chain") {
        // E_n = sum_l s2(n,l) Ch_l evaluated at 0
        for (unsigned n = 0; n <= 20; ++n) {
            Rational acc(0);
            for (unsigned l = 0; l <= n; ++l) {
                acc += Rational(stirling2(n, l)) * poly_eval(changhee1(l, 1), Rational(0));
            }
            REQUIRE(acc == poly_eval(euler(n, 1), Rational(0)));
        }
    }
}

TEST_CASE("family dispatch", "[families]") {
    REQUIRE(family_poly(Family::euler, 2, 2) == euler(2, 2));
    REQUIRE(family_poly(Family::bernoulli, 3, 1) == bernoulli(3, 1));
    REQUIRE(family_poly(Family::changhee1, 2, 1) == changhee1(2, 1));
    REQUIRE(family_poly(Family::changhee2, 2, 1) == changhee2(2, 1));
    REQUIRE(family_poly(Family::daehee, 2, 1) == daehee_poly(2, 1));
    REQUIRE(family_poly(Family::norlund2, 4, 7) == Polynomial(norlund2(4)));

    REQUIRE(family_number(Family::changhee1, 3, 2) ==
            poly_eval(changhee1(3, 2), Rational(0)));
    REQUIRE(family_number(Family::daehee, 3, 1) == daehee(3, 1));
    REQUIRE(family_number(Family::norlund2, 5, 0) == norlund2(5));
}

TEST_CASE("every family matches its generating function", "[families]") {
    for (Family f : kAllFamilies) {
        unsigned k_lo = (f == Family::norlund2) ? 1 : 0;
        unsigned k_hi = (f == Family::norlund2) ? 1 : 5;
        for (unsigned k = k_lo; k <= k_hi; ++k) {
            Series gf = family_gf(f, k, true, 10);
            for (unsigned n = 0; n <= 10; ++n) {
                INFO("family=" << family_name(f) << " n=" << n << " k=" << k);
                REQUIRE(family_poly(f, n, k) == egf_coeff(gf, n));
            }
        }
    }
}
