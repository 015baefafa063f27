#include "doctest.h"

#include <stdexcept>

#include "fracbody/constants.hpp"
#include "fracbody/report_io.hpp"
#include "fracbody/rng.hpp"
#include "fracbody/star_body.hpp"

#include <cmath>
#include <memory>
#include <numbers>

using namespace fracbody;

namespace {

constexpr double kPi = std::numbers::pi;

std::shared_ptr<const SphereGrid> grid2(int level = 64) {
    return std::make_shared<SphereGrid>(sphere_grid(2, level));
}

std::shared_ptr<const SphereGrid> grid3(int level = 8) {
    return std::make_shared<SphereGrid>(sphere_grid(3, level));
}

}  // namespace

TEST_CASE("gauge of balls and dilates; one-homogeneity") {
    const StarBody b = ball_body(grid2());
    CHECK(gauge_eval(b, Vec{0.3, -0.4, 0.0}) == doctest::Approx(0.5));
    const StarBody twob = scaled(b, 2.0);
    CHECK(gauge_eval(twob, Vec{3.0, 0.0, 0.0}) == doctest::Approx(1.5));

    Rng rng(11);
    const StarBody k = random_star_body(5, 2, grid2());
    for (int trial = 0; trial < 20; ++trial) {
        const Vec x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), 0.0};
        if (norm(x) < 0.1) continue;
        const double lambda = rng.uniform(0.1, 3.0);
        CHECK(gauge_eval(k, lambda * x) ==
              doctest::Approx(lambda * gauge_eval(k, x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gauge_eval(b, vec_zero()), std::domain_error);
}

TEST_CASE("volume: balls, homogeneity, analytic ellipse") {
    CHECK(volume(ball_body(grid2())) == doctest::Approx(kPi).epsilon(1e-10));
    const StarBody k = random_star_body(17, 2, grid2());
    CHECK(volume(scaled(k, 1.7)) == doctest::Approx(1.7 * 1.7 * volume(k)));

    // ellipse with semi-axes (2, 1) as an exact radial function
    const auto g = grid2(96);
    std::vector<double> rho(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) {
        const double c = g->nodes[i][0], s = g->nodes[i][1];
        rho[i] = 1.0 / std::sqrt(c * c / 4.0 + s * s);
    }
    CHECK(volume(StarBody(g, rho)) == doctest::Approx(2.0 * kPi).epsilon(1e-6));
}

TEST_CASE("dual mixed volume: diagonal, homogeneity, inequality") {
    const auto g = grid2();
    const StarBody k = random_star_body(23, 2, g);
    const StarBody l = random_star_body(57, 2, g);
    const double alpha = 1.3;

    CHECK(dual_mixed_volume(k, k, alpha) == doctest::Approx(volume(k)).epsilon(1e-12));
    CHECK(dual_mixed_volume(k, scaled(l, 1.9), alpha) ==
          doctest::Approx(std::pow(1.9, alpha) * dual_mixed_volume(k, l, alpha)));

    // inequality with strict gap for non-dilates, equality for dilates
    for (int trial = 0; trial < 50; ++trial) {
        const StarBody a = random_star_body(100 + trial, 2, g);
        const StarBody b = random_star_body(900 + trial, 2, g);
        const double lhs = dual_mixed_volume(a, b, alpha);
        const double rhs = std::pow(volume(a), (2.0 - alpha) / 2.0) *
                           std::pow(volume(b), alpha / 2.0);
        CHECK(lhs <= rhs * (1.0 + 1e-12));
        CHECK(lhs < rhs);  // random pairs are never dilates
    }
    const StarBody dil = scaled(k, 2.3);
    const double lhs = dual_mixed_volume(k, dil, alpha);
    const double rhs = std::pow(volume(k), (2.0 - alpha) / 2.0) *
                       std::pow(volume(dil), alpha / 2.0);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-8);

    CHECK_THROWS_AS(dual_mixed_volume(k, l, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dual_mixed_volume(k, l, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(dual_mixed_volume(k, random_star_body(1, 2, grid2(32)), alpha),
                    std::invalid_argument);
}

TEST_CASE("radial sums and the dual Brunn-Minkowski inequality") {
    const auto g = grid2();
    const StarBody k = random_star_body(31, 2, g);
    const double q = 1.7;

    const StarBody doubled = radial_sum(k, k, q);
    for (std::size_t i = 0; i < k.rho.size(); ++i)
        CHECK(doubled.rho[i] == doctest::Approx(std::pow(2.0, 1.0 / q) * k.rho[i]));

    // q = -ps sum of balls
    const double ps = 0.6, r1 = 0.8, r2 = 1.7;
    const StarBody sum =
        radial_sum(ball_body(g, r1), ball_body(g, r2), -ps);
    const double expected =
        std::pow(std::pow(r1, -ps) + std::pow(r2, -ps), -1.0 / ps);
    CHECK(sum.rho[0] == doctest::Approx(expected));

    for (int trial = 0; trial < 50; ++trial) {
        const StarBody a = random_star_body(4000 + trial, 2, g);
        const StarBody b = random_star_body(8000 + trial, 2, g);
        const double qq = 1.1;
        const double lhs = std::pow(volume(radial_sum(a, b, -qq)), -qq / 2.0);
        const double rhs =
            std::pow(volume(a), -qq / 2.0) + std::pow(volume(b), -qq / 2.0);
        CHECK(lhs >= rhs * (1.0 - 1e-12));
    }
    const StarBody lam = scaled(k, 1.4);
    const double lhs = std::pow(volume(radial_sum(k, lam, -q)), -q / 2.0);
    const double rhs = std::pow(volume(k), -q / 2.0) + std::pow(volume(lam), -q / 2.0);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-8);
}

TEST_CASE("linear images: identity, determinant scaling, ellipse") {
    const auto g = grid2();
    const StarBody k = random_star_body(77, 2, g);

    const StarBody same = linear_image(AffineMap(2), k);
    for (std::size_t i = 0; i < k.rho.size(); ++i)
        CHECK(same.rho[i] == doctest::Approx(k.rho[i]).epsilon(1e-9));

    const double shear[4] = {1.0, 0.9, 0.0, 1.0};
    const AffineMap phi(2, shear, nullptr);
    const StarBody sheared = linear_image(phi, k);
    CHECK(volume(sheared) == doctest::Approx(volume(k)).epsilon(0.01));

    const double diag[4] = {2.0, 0.0, 0.0, 0.5};
    const StarBody ellipse = linear_image(AffineMap(2, diag, nullptr), ball_body(g));
    CHECK(volume(ellipse) == doctest::Approx(kPi).epsilon(0.01));

    const double tr[2] = {0.4, 0.0};
    CHECK_THROWS_AS(linear_image(AffineMap(2, nullptr, tr), k), std::invalid_argument);
}

TEST_CASE("gauge composes with linear images") {
    const auto g = grid2(96);
    const StarBody k = random_star_body(123, 2, g);
    const double m[4] = {1.2, 0.5, -0.3, 0.9};
    const AffineMap phi(2, m, nullptr);
    const StarBody phik = linear_image(phi, k);
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), 0.0};
        if (norm(x) < 0.2) continue;
        CHECK(gauge_eval(phik, phi.apply_linear(x)) ==
              doctest::Approx(gauge_eval(k, x)).epsilon(0.01));
    }
}

TEST_CASE("schwarz ball: fixed point, ellipse, exact volume") {
    const auto g = grid2();
    const StarBody b = ball_body(g, 1.3);
    const StarBody bs = schwarz_ball(b);
    CHECK(bs.rho[0] == doctest::Approx(1.3).epsilon(1e-12));

    const double diag[4] = {2.0, 0.0, 0.0, 0.5};
    const StarBody ellipse = linear_image(AffineMap(2, diag, nullptr), ball_body(g));
    const StarBody disc = schwarz_ball(ellipse);
    CHECK(disc.rho[0] == doctest::Approx(1.0).epsilon(0.005));

    const StarBody k = random_star_body(55, 2, g);
    CHECK(volume(schwarz_ball(k)) == doctest::Approx(volume(k)).epsilon(1e-13));
}

TEST_CASE("moment body support values") {
    const auto g = grid2();
    const StarBody b = ball_body(g);
    const double p = 2.0;
    const double expect = std::pow(alpha_np(2, p), 1.0 / p);
    const Vec xi{1.0, 0.0, 0.0};
    const Vec eta{0.6, 0.8, 0.0};
    CHECK(moment_body_support(b, p, xi) == doctest::Approx(expect).epsilon(1e-8));
    CHECK(moment_body_support(b, p, eta) == doctest::Approx(expect).epsilon(1e-8));

    const StarBody l = random_star_body(42, 2, g);
    const double lambda = 1.8;
    CHECK(moment_body_support(scaled(l, lambda), p, xi) ==
          doctest::Approx(std::pow(lambda, (2.0 + p) / p) *
                          moment_body_support(l, p, xi)));

    // quarter-turn equivariance on the grid
    const Vec rot_xi{0.0, 1.0, 0.0};
    std::vector<double> rho_rot(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) {
        const Vec& node = g->nodes[i];
        const Vec pre{node[1], -node[0], 0.0};  // rotate back by a quarter turn
        rho_rot[i] = 1.0 / gauge_eval(l, pre);
    }
    const StarBody lrot(g, rho_rot);
    CHECK(moment_body_support(lrot, p, rot_xi) ==
          doctest::Approx(moment_body_support(l, p, xi)).epsilon(0.01));
}

TEST_CASE("random bodies: determinism, clipping, positive volume") {
    const auto g = grid3();
    const StarBody a = random_star_body(99, 3, g);
    const StarBody b = random_star_body(99, 3, g);
    for (std::size_t i = 0; i < a.rho.size(); ++i) CHECK(a.rho[i] == b.rho[i]);
    for (double r : a.rho) {
        CHECK(r >= 0.2);
        CHECK(r <= 5.0);
    }
    CHECK(volume(a) > 0.0);
    CHECK(!is_dilate_pair(a, random_star_body(100, 3, g)));
    CHECK(is_dilate_pair(a, scaled(a, 2.0)));
}

TEST_CASE("star body JSON round trip") {
    const auto g = grid2(16);
    const StarBody k = random_star_body(3, 2, g);
    const StarBody back = star_body_from_json(star_body_to_json(k));
    REQUIRE(back.rho.size() == k.rho.size());
    for (std::size_t i = 0; i < k.rho.size(); ++i) CHECK(back.rho[i] == k.rho[i]);
}

TEST_CASE("n = 3 interpolation tolerates mesh queries") {
    const auto g = grid3(6);
    const StarBody k = random_star_body(7, 3, g);
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        Vec x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (norm(x) < 0.2) continue;
        const double gauge = gauge_eval(k, x);
        CHECK(std::isfinite(gauge));
        CHECK(gauge > 0.0);
        // interpolated rho stays within the global rho range
        const double rho = norm(x) / gauge;
        CHECK(rho >= 0.19);
        CHECK(rho <= 5.01);
    }
}
