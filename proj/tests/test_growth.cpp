#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ldpclab/growth.hpp"
#include "oracles.hpp"

using namespace ldpclab;

TEST_SUITE_BEGIN("growth");

TEST_CASE("limit point s = 0") {
    const auto curve = growth_curve(3, 6, {0.0});
    CHECK(curve[0].t == 0.0);
    CHECK(curve[0].Z == doctest::Approx(1.0));
    CHECK(curve[0].G == 0.0);
}

TEST_CASE("s = 1 closed form: half density, Z = 2^(k-1), rate (1-d/k) log 2") {
    for (int d = 2; d <= 5; ++d) {
        const int k = 6;
        CHECK(growth_density_of_s(k, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(growth_partition_of_s(k, 1.0) == doctest::Approx(32.0));
        const double expected = (1.0 - static_cast<double>(d) / k) * std::log(2.0);
        CHECK(std::abs(growth_rate_of_s(d, k, 1.0) - expected) < 1e-12);
        CHECK(std::abs(growth_rate_at_density(d, k, 0.5) - expected) < 1e-9);
    }
}

TEST_CASE("density inversion matches the parametric curve") {
    for (double s : {0.05, 0.2, 0.7, 1.3, 3.0}) {
        for (auto [d, k] : {std::pair{3, 4}, std::pair{5, 6}, std::pair{2, 7}}) {
            const double t = growth_density_of_s(k, s);
            CHECK(std::abs(growth_rate_at_density(d, k, t) - growth_rate_of_s(d, k, s)) < 1e-9);
        }
    }
}

TEST_CASE("attainable density range by parity of k") {
    CHECK(growth_density_max(6) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(growth_density_max(5) == doctest::Approx(0.8).epsilon(1e-3)); // (k-1)/k
    CHECK(growth_density_max(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
    CHECK_THROWS_AS(growth_rate_at_density(2, 5, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(growth_rate_at_density(3, 6, -0.1), std::invalid_argument);
    CHECK(growth_rate_at_density(3, 6, 0.0) == 0.0);
}

TEST_CASE("asymptotic closed form: frozen value and small-t sign") {
    // (1/2) t (d log(k-1) - d + 2 + (d-2) log t) at d=3, k=6, t=0.01
    CHECK(growth_rate_asymptotic(3, 6, 0.01) == doctest::Approx(-0.0038843).epsilon(1e-4));
    // d=2 reduces to t log(k-1) > 0
    CHECK(growth_rate_asymptotic(2, 6, 0.01) ==
          doctest::Approx(0.01 * std::log(5.0)).epsilon(1e-12));
    CHECK(growth_rate_asymptotic(2, 6, 1e-9) > 0.0);
    CHECK_THROWS_AS(growth_rate_asymptotic(3, 6, 0.0), std::invalid_argument);

    // exact curve tracks the asymptotic to O(t^2)
    CHECK(std::abs(growth_rate_at_density(3, 6, 0.01) - growth_rate_asymptotic(3, 6, 0.01)) <
          5e-4);
}

TEST_CASE("negative dip near zero density iff d > 2 (k = 6)") {
    for (int d = 2; d <= 5; ++d) {
        const double g = growth_rate_at_density(d, 6, 1e-3);
        if (d > 2)
            CHECK(g < 0.0);
        else
            CHECK(g > 0.0);
    }
    // sign-change density is positive exactly when the dip exists
    CHECK(growth_sign_change_density(2, 6) == 0.0);
    for (int d = 3; d <= 5; ++d) {
        const double root = growth_sign_change_density(d, 6);
        CHECK(root > 0.0);
        CHECK(std::abs(growth_rate_at_density(d, 6, root)) < 1e-8);
        CHECK(growth_rate_at_density(d, 6, root * 0.5) < 0.0);
    }
}

TEST_CASE("asymptotic error is O(t^2): the ratio stays bounded over a decade") {
    for (int d = 2; d <= 5; ++d) {
        double r_min = 1e300, r_max = 0.0;
        for (double t = 1e-4; t <= 1e-2 * 1.0000001; t *= std::pow(10.0, 0.25)) {
            const double diff =
                std::abs(growth_rate_at_density(d, 6, t) - growth_rate_asymptotic(d, 6, t));
            const double ratio = diff / (t * t);
            r_min = std::min(r_min, ratio);
            r_max = std::max(r_max, ratio);
        }
        CHECK(r_max / r_min < 2.0);
    }
}

TEST_CASE("even k symmetry: complementation by the all-ones codeword") {
    for (double t : {0.2, 0.3, 0.45}) {
        CHECK(std::abs(growth_rate_at_density(3, 6, t) - growth_rate_at_density(3, 6, 1.0 - t)) <
              1e-9);
        CHECK(std::abs(growth_rate_at_density(3, 4, t) - growth_rate_at_density(3, 4, 1.0 - t)) <
              1e-9);
    }
}

TEST_CASE("dip depth at the minimizer: refined-grid oracle agreement (k=6, d=5)") {
    // coarse scan for the minimizer, then two refinement rounds
    auto scan = [](double lo, double hi, int steps) {
        double best_t = lo, best_g = 1e300;
        for (int i = 0; i <= steps; ++i) {
            const double t = lo + (hi - lo) * i / steps;
            if (t <= 0.0) continue;
            const double g = growth_rate_at_density(5, 6, t);
            if (g < best_g) {
                best_g = g;
                best_t = t;
            }
        }
        return std::pair{best_t, best_g};
    };
    auto [t1, g1] = scan(1e-5, 0.2, 2000);
    auto [t2, g2] = scan(t1 * 0.9, t1 * 1.1, 4000);
    // golden-section refinement as the independent high-precision evaluation
    double a = t2 * 0.99, b = t2 * 1.01;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = growth_rate_at_density(5, 6, x1), f2 = growth_rate_at_density(5, 6, x2);
    for (int iter = 0; iter < 80; ++iter) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = growth_rate_at_density(5, 6, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = growth_rate_at_density(5, 6, x2);
        }
    }
    const double golden_min = std::min(f1, f2);
    CHECK(std::abs(g2 - golden_min) < 1e-8);
    (void)g1;
}

TEST_CASE("cancellation exponent") {
    // zero entropies vanish
    CHECK(cancellation_exponent(3, 4, 0.5, 0.0, 0.0) == doctest::Approx(0.0));
    CHECK(cancellation_exponent(3, 4, 0.5, 1.0, 1.0) == doctest::Approx(0.0));
    // t = 0 collapses to (1/d - 1/k) H(alpha)
    for (double alpha : {0.1, 0.3, 0.5}) {
        const double h = -alpha * std::log(alpha) - (1 - alpha) * std::log(1 - alpha);
        CHECK(cancellation_exponent(3, 4, 0.0, alpha, alpha) ==
              doctest::Approx((1.0 / 3 - 1.0 / 4) * h).epsilon(1e-12));
    }
    CHECK_THROWS_AS(cancellation_exponent(3, 4, 1.5, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("cancellation exponent lower bound on the ordered region") {
    // with alpha'' <= alpha' <= 1/2 and small t, the exponent dominates
    // (1/d - 1/k - t/d) H(alpha) where alpha is the mixed argument
    const int d = 3, k = 4;
    for (double t : {0.0, 0.005, 0.01}) {
        for (double a1 = 0.02; a1 <= 0.5; a1 += 0.02) {
            for (double a2 = 0.0; a2 <= a1 + 1e-12; a2 += 0.02) {
                const double mixed = (1 - t) * a1 + t * a2;
                const double h =
                    mixed <= 0 ? 0.0
                               : -mixed * std::log(mixed) - (1 - mixed) * std::log(1 - mixed);
                const double bound = (1.0 / d - 1.0 / k - t / d) * h;
                CHECK(cancellation_exponent(d, k, t, a1, a2) >= bound - 1e-12);
            }
        }
    }
}

TEST_CASE("variational oracle: projected gradient matches the closed form") {
    for (double t : {0.1, 0.2, 0.3}) {
        const double via_formula = growth_rate_at_density(3, 4, t);
        const double via_oracle = oracles::max_kikuchi_at_density(3, 4, t);
        CHECK(std::abs(via_formula - via_oracle) < 1e-6);
    }
}

TEST_CASE("monotonicity guard rejects an out-of-order grid") {
    CHECK_THROWS_AS(growth_curve(3, 6, {0.5, 0.1}), std::logic_error);
}

TEST_SUITE_END();
