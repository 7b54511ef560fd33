#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "zeno/bessel.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

TEST(Bessel, MatchesStandardLibrary) {
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n) {
        for (double x = 0.0; x <= 50.0; x += 0.173) {
            worst = std::max(worst, std::abs(bessel_j(n, x) - std::cyl_bessel_j(static_cast<double>(n), x)));
        }
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(Bessel, SymmetryRelations) {
    for (int n = 0; n <= 8; ++n) {
        for (double x : {0.3, 2.4, 7.7}) {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            EXPECT_NEAR(bessel_j(-n, x), sign * bessel_j(n, x), 1e-15);
            EXPECT_NEAR(bessel_j(n, -x), sign * bessel_j(n, x), 1e-15);
        }
    }
}

TEST(Bessel, SequenceMatchesSingleEvaluations) {
    const auto seq = bessel_j_sequence(20, 6.3);
    for (int n = 0; n <= 20; ++n) EXPECT_NEAR(seq[static_cast<std::size_t>(n)], bessel_j(n, 6.3), 1e-15);
}

TEST(Bessel, SmallArgument) {
    EXPECT_DOUBLE_EQ(bessel_j(0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(bessel_j(3, 0.0), 0.0);
    EXPECT_NEAR(bessel_j(1, 1e-8), 5e-9, 1e-22);
}

TEST(Bessel, ZerosMatchBoost) {
    for (int n = 0; n <= 3; ++n) {
        for (int k = 1; k <= 5; ++k) {
            const double ref = boost::math::cyl_bessel_j_zero(static_cast<double>(n), k);
            EXPECT_NEAR(bessel_zero(n, k), ref, 1e-11) << "n=" << n << " k=" << k;
        }
    }
    EXPECT_NEAR(bessel_zero(0, 1), 2.404825557695773, 1e-12);
    EXPECT_NEAR(bessel_zero(0, 2), 5.520078110286311, 1e-12);
}

TEST(Bessel, ZeroArgumentsRejected) {
    EXPECT_THROW(bessel_zero(0, 0), DomainError);
    EXPECT_THROW(bessel_zero(-1, 1), DomainError);
}

TEST(Bessel, Derivative) {
    for (double x : {0.5, 3.0, 9.0}) {
        const double h = 1e-5;
        const double fd = (bessel_j(2, x + h) - bessel_j(2, x - h)) / (2 * h);
        EXPECT_NEAR(bessel_j_derivative(2, x), fd, 1e-9);
    }
}
