#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wirtlab/convex.hpp"
#include "wirtlab/curve.hpp"
#include "wirtlab/errors.hpp"
#include "wirtlab/trig.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace wirtlab;
using doctest::Approx;

namespace {

SupportFunction oval() {
    // h = 1 + 0.2 cos 2theta, the non-round extremal of the low-order bounds
    return SupportFunction::make(TrigSeries(1.0) + TrigSeries::harmonic_cos(2, 0.2));
}

// Left side of the change-of-variable identity, computed on the reconstructed
// curve only: rho_c = 1 / curvature from the parametrization, arclength weight
// from the speed, theta-derivatives by 4th-order central differences.
double curve_side_integral(const PlaneCurve& c, int l, int n) {
    std::vector<double> rho_c(static_cast<std::size_t>(n)), speed(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        rho_c[static_cast<std::size_t>(j)] = 1.0 / c.curvature(t);
        speed[static_cast<std::size_t>(j)] = c.speed(t);
    }
    const double dt = kTwoPi / n;
    const auto diff = [&](const std::vector<double>& g) {
        std::vector<double> out(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const auto at = [&](int k) { return g[static_cast<std::size_t>(((k % n) + n) % n)]; };
            out[static_cast<std::size_t>(j)] =
                (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * dt);
        }
        return out;
    };

    // (rho d/ds) g = rho * g'(theta) / (ds/dtheta), applied l times to rho
    std::vector<double> u = rho_c;
    for (int step = 0; step < l; ++step) {
        const auto du = diff(u);
        for (int j = 0; j < n; ++j)
            u[static_cast<std::size_t>(j)] = rho_c[static_cast<std::size_t>(j)] *
                                             du[static_cast<std::size_t>(j)] /
                                             speed[static_cast<std::size_t>(j)];
    }
    double sum = 0.0;
    for (int j = 0; j < n; ++j)
        sum += u[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(j)] /
               rho_c[static_cast<std::size_t>(j)] * speed[static_cast<std::size_t>(j)];
    return sum * dt;
}

} // namespace

TEST_CASE("support_geometry examples") {
    SUBCASE("round body of radius R") {
        const SupportFunction body = SupportFunction::make(TrigSeries(2.5));
        const auto g = support_geometry(body);
        CHECK(g.L == Approx(kTwoPi * 2.5).epsilon(1e-14));
        CHECK(g.A == Approx(kPi * 6.25).epsilon(1e-14));
        CHECK(body.rho().mean() == 2.5);
        CHECK(body.rho().degree() == 0);
    }
    SUBCASE("non-round extremal") {
        const SupportFunction body = oval();
        const auto g = support_geometry(body);
        CHECK(g.L == Approx(kTwoPi).epsilon(1e-14));
        CHECK(g.A == Approx(0.94 * kPi).epsilon(1e-14));
        CHECK(body.rho().mean() == Approx(1.0).epsilon(1e-15));
        CHECK(body.rho().cos_coeff(2) == Approx(-0.6).epsilon(1e-15));
        CHECK(body.min_rho() == Approx(0.4).epsilon(1e-9));
    }
    SUBCASE("convexity gate") {
        CHECK_THROWS_AS(
            SupportFunction::make(TrigSeries(1.0) + TrigSeries::harmonic_cos(2, 0.4)), GateError);
        try {
            SupportFunction::make(TrigSeries(1.0) + TrigSeries::harmonic_cos(2, 0.4));
        } catch (const GateError& e) {
            CHECK(e.gate() == "convexity");
        }
    }
}

TEST_CASE("deficit bounds on round bodies vanish at every order") {
    const SupportFunction body = SupportFunction::make(TrigSeries(1.4));
    for (int m = 1; m <= 5; ++m) {
        const ConvexAudit a = thm32_audit(body, m);
        CHECK(std::abs(a.deficit) <= a.atol);
        CHECK(std::abs(a.bound) <= a.atol);
        CHECK(a.slack >= -a.atol);
    }
}

TEST_CASE("order-3 bound on the non-round extremal is an equality at 0.24 pi^2") {
    const ConvexAudit a = thm32_audit(oval(), 3);
    CHECK(a.odd);
    CHECK(a.deficit == Approx(0.24 * kPi * kPi).epsilon(1e-13));
    CHECK(a.inv_curv == Approx(2.36 * kPi).epsilon(1e-14));
    REQUIRE(a.deriv_terms.size() == 1);
    CHECK(a.deriv_terms[0] == Approx(1.44 * kPi).epsilon(1e-14));  // int rho'^2
    CHECK(a.bound == Approx(0.24 * kPi * kPi).epsilon(1e-12));
    CHECK(std::abs(a.slack) <= a.atol);
}

TEST_CASE("a harmonic above the order breaks equality") {
    const SupportFunction body =
        SupportFunction::make(TrigSeries(1.0) + TrigSeries::harmonic_cos(4, 0.05));
    const ConvexAudit a = thm32_audit(body, 3);
    CHECK(a.slack > a.atol);  // strict inequality
}

TEST_CASE("order-1 bound is the classical isoperimetric inequality") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        const ConvexAudit a = thm32_audit(random_convex(rng, 6, 0.3), 1);
        CHECK(a.bound == 0.0);
        CHECK(a.deficit >= -a.atol);
    }
}

TEST_CASE("order-2 bound matches the standalone Lin-Tsai audit") {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 50; ++rep) {
        const SupportFunction body = random_convex(rng, 6, 0.3);
        const ConvexAudit a2 = thm32_audit(body, 2);
        const LinTsaiReport lt = lin_tsai_audit(body);
        // first chain slack = (2/pi) * (bound - deficit)
        const double scale = 1.0 + std::abs(lt.middle) + std::abs(a2.slack);
        CHECK(std::abs(lt.lower_slack - 2.0 / kPi * a2.slack) <= 1e-10 * scale);
    }
}

TEST_CASE("lin_tsai_audit examples") {
    SUBCASE("round body: all chain members vanish") {
        const LinTsaiReport r = lin_tsai_audit(SupportFunction::make(TrigSeries(2.0)));
        CHECK(std::abs(r.middle) <= r.atol);
        CHECK(std::abs(r.upper) <= r.atol);
    }
    SUBCASE("non-round extremal: both inequalities hold with equality") {
        const LinTsaiReport r = lin_tsai_audit(oval());
        CHECK(std::abs(r.lower_slack) <= 1e-10);
        CHECK(std::abs(r.upper_slack) <= 1e-10);
        CHECK(std::abs(r.middle) <= 1e-10);
        CHECK(std::abs(r.upper) <= 1e-10);
    }
    SUBCASE("harmonics above 3 make the chain strict") {
        std::mt19937_64 rng(3);
        for (int rep = 0; rep < 20; ++rep) {
            const SupportFunction body = random_convex(rng, 6, 0.3);
            if (std::hypot(body.h().cos_coeff(4), body.h().sin_coeff(4)) +
                    std::hypot(body.h().cos_coeff(5), body.h().sin_coeff(5)) +
                    std::hypot(body.h().cos_coeff(6), body.h().sin_coeff(6)) <
                1e-6)
                continue;
            const LinTsaiReport r = lin_tsai_audit(body);
            CHECK(r.lower_slack > r.atol);
            CHECK(r.upper_slack > r.atol);
        }
    }
}

TEST_CASE("reverse isoperimetric bounds and auxiliaries") {
    SUBCASE("round body: zero slack on both sides of everything") {
        const ReverseIsoReport r =
            reverse_isoperimetric_audit(SupportFunction::make(TrigSeries(1.2)));
        CHECK(std::abs(r.deficit) <= r.atol);
        CHECK(std::abs(r.q_rho) <= r.atol);
        CHECK(std::abs(r.bm_k3_lhs - r.bm_k3_rhs) <= r.atol);
        CHECK(std::abs(r.bm_k2_lhs - r.bm_k2_rhs) <= r.atol);
        CHECK(std::abs(r.gage_lhs - r.gage_rhs) <= r.atol);
    }
    SUBCASE("non-round extremal: the kappa^-5 bound is an equality") {
        const ReverseIsoReport r = reverse_isoperimetric_audit(oval());
        CHECK(r.deficit == Approx(0.24 * kPi * kPi).epsilon(1e-13));
        CHECK(r.reverse01_rhs == Approx(kPi / 6.0 * 1.44 * kPi).epsilon(1e-13));
        CHECK(std::abs(r.reverse01_rhs - r.deficit) <= 1e-9);
        // hand value: int rho'^2 dtheta with rho' = 1.2 sin 2theta
        CHECK(r.q_rho == Approx(1.44 * kPi).epsilon(1e-14));
    }
    SUBCASE("random corpus: all five inequalities pass") {
        std::mt19937_64 rng(4);
        for (int rep = 0; rep < 30; ++rep) {
            const ReverseIsoReport r = reverse_isoperimetric_audit(random_convex(rng, 6, 0.3));
            CHECK(r.deficit <= r.reverse01_rhs + r.atol);
            CHECK(r.deficit <= r.reverse02_rhs + r.atol);
            CHECK(r.deficit <= r.reverse03_rhs + r.atol);
            CHECK(r.bm_k3_lhs >= r.bm_k3_rhs - r.atol);
            CHECK(r.bm_k2_lhs >= r.bm_k2_rhs - r.atol);
            CHECK(r.gage_lhs >= r.gage_rhs - r.atol);
        }
    }
}

TEST_CASE("odd/even alternation when harmonics above the order are present") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const SupportFunction body = random_convex(rng, 6, 0.3);
        if (std::hypot(body.h().cos_coeff(6), body.h().sin_coeff(6)) < 1e-6) continue;
        for (int m = 1; m <= 5; ++m) {
            const ConvexAudit a = thm32_audit(body, m);
            CHECK(a.slack > a.atol);  // strict in the stated direction, both parities
        }
    }
}

TEST_CASE("reconstruction: round bodies and translates") {
    SUBCASE("h = R gives the origin-centered circle of radius R") {
        const PlaneCurve c = reconstruct_curve(SupportFunction::make(TrigSeries(1.8)));
        CHECK(c.length() == Approx(kTwoPi * 1.8).epsilon(1e-12));
        CHECK(c.area() == Approx(kPi * 1.8 * 1.8).epsilon(1e-14));
        CHECK(c.centroid().norm() <= 1e-12);
        CHECK(c.curvature(0.9) == Approx(1.0 / 1.8).epsilon(1e-12));
    }
    SUBCASE("first harmonics translate the body") {
        TrigSeries h(2.0);
        h += TrigSeries::harmonic_cos(1, 0.7) + TrigSeries::harmonic_sin(1, -0.4);
        const PlaneCurve c = reconstruct_curve(SupportFunction::make(h));
        CHECK(c.length() == Approx(kTwoPi * 2.0).epsilon(1e-12));
        CHECK(c.area() == Approx(kPi * 4.0).epsilon(1e-13));
        CHECK(c.centroid().x == Approx(0.7).epsilon(1e-10));
        CHECK(c.centroid().y == Approx(-0.4).epsilon(1e-10));
    }
}

TEST_CASE("round trip: curve measurements match support-function formulas") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 15; ++rep) {
        const SupportFunction body = random_convex(rng, 6, 0.3);
        const auto g = support_geometry(body);
        const PlaneCurve c = reconstruct_curve(body);
        CHECK(oracles::close_rel(c.length(), g.L, 1e-8));
        CHECK(oracles::close_rel(c.area(), g.A, 1e-8));
        for (double t : {0.0, 1.0, 2.6, 4.9})
            CHECK(oracles::close_rel(c.curvature(t), 1.0 / body.rho()(t), 1e-8));
        // Minkowski consistency on the reconstruction
        const CurveIdentities ids = identity_checks(c);
        CHECK(oracles::close_rel(ids.minkowski.lhs, g.L, 1e-8));
        CHECK(oracles::close_rel(ids.divergence.lhs, 2.0 * g.A, 1e-8));
    }
}

TEST_CASE("change of variable: curve-side arclength integrals match theta-side") {
    std::mt19937_64 rng(8);
    std::vector<SupportFunction> corpus;
    corpus.push_back(oval());
    for (int rep = 0; rep < 4; ++rep) corpus.push_back(random_convex(rng, 5, 0.3));
    for (const auto& body : corpus) {
        const PlaneCurve c = reconstruct_curve(body);
        for (int l = 1; l <= 2; ++l) {
            const double theta_side = derivative_l2_integral(body.rho(), l);
            const double curve_side = curve_side_integral(c, l, 16384);
            CHECK(std::abs(curve_side - theta_side) <= 1e-8 * (1.0 + theta_side));
        }
    }
}

TEST_CASE("band-limited equality at the audited order") {
    std::mt19937_64 rng(9);
    for (int m = 2; m <= 5; ++m) {
        const SupportFunction body = random_convex(rng, m, 0.3);
        const ConvexAudit a = thm32_audit(body, m);
        CHECK(std::abs(a.deficit - a.bound) <= 1e-9 * (1.0 + std::abs(a.deficit)));
    }
}

TEST_CASE("random_convex generator") {
    SUBCASE("degree 0 is the unit disk") {
        std::mt19937_64 rng(10);
        const SupportFunction body = random_convex(rng, 0, 0.5);
        CHECK(body.h().degree() == 0);
        CHECK(body.h().mean() == 1.0);
    }
    SUBCASE("margin keeps rho above it") {
        const SupportFunction body = random_convex(2, /*seed=*/77, /*margin=*/0.5);
        CHECK(body.min_rho() >= 0.5 - 1e-12);
        CHECK(body.h().cos_coeff(1) == 0.0);  // first harmonics omitted
        CHECK(body.h().sin_coeff(1) == 0.0);
    }
    SUBCASE("500 seeds at degree 6 all pass the convexity gate") {
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            const SupportFunction body = random_convex(6, seed, 0.3);
            CHECK(body.min_rho() > 0.3 - 1e-12);
        }
    }
    SUBCASE("bad margin rejected") {
        std::mt19937_64 rng(11);
        CHECK_THROWS_AS(random_convex(rng, 4, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(random_convex(rng, 4, 1.0), std::invalid_argument);
    }
}
