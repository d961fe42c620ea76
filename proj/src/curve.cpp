#include "wirtlab/curve.hpp"

#include "wirtlab/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wirtlab {

namespace {

int gate_grid_size(const TrigSeries& a, const TrigSeries& b) {
    return std::max(256, 16 * (std::max(a.degree(), b.degree()) + 1));
}

} // namespace

PlaneCurve::PlaneCurve(TrigSeries x, TrigSeries y)
    : x_(std::move(x)),
      y_(std::move(y)),
      dx_(derivative(x_)),
      dy_(derivative(y_)),
      ddx_(derivative(x_, 2)),
      ddy_(derivative(y_, 2)) {}

PlaneCurve PlaneCurve::make(TrigSeries x, TrigSeries y) {
    PlaneCurve c(std::move(x), std::move(y));

    // 2A = int (x y' - y x') dt; flip the parameter direction if clockwise.
    const double two_area = inner_integral(c.x_, c.dy_) - inner_integral(c.y_, c.dx_);
    if (two_area < 0.0) c = PlaneCurve(reflect_parameter(c.x_), reflect_parameter(c.y_));

    const int n = gate_grid_size(c.x_, c.y_);
    double vmin = std::numeric_limits<double>::infinity(), vmax = 0.0;
    for (int j = 0; j < n; ++j) {
        const double v = c.speed(kTwoPi * j / n);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    if (!(vmin > 1e-9 * vmax) || vmax == 0.0)
        throw GateError("regularity", "curve: parametrization is singular (grid min |X'| = " +
                                          std::to_string(vmin) + ")");
    return c;
}

double PlaneCurve::curvature(double t) const {
    const Vec2 v = velocity(t), a = acceleration(t);
    const double sp = v.norm();
    return (v.x * a.y - v.y * a.x) / (sp * sp * sp);
}

std::pair<Vec2, Vec2> PlaneCurve::frames(double t) const {
    const Vec2 v = velocity(t);
    const double sp = v.norm();
    const Vec2 tangent{v.x / sp, v.y / sp};
    const Vec2 normal{tangent.y, -tangent.x};  // -J T, outward for CCW convex
    return {tangent, normal};
}

double PlaneCurve::length() const {
    return integrate_periodic([this](double t) { return speed(t); });
}

double PlaneCurve::area() const {
    return 0.5 * (inner_integral(x_, dy_) - inner_integral(y_, dx_));
}

Vec2 PlaneCurve::centroid() const {
    const double len = length();
    const double gx = integrate_periodic([this](double t) { return x_(t) * speed(t); });
    const double gy = integrate_periodic([this](double t) { return y_(t) * speed(t); });
    return {gx / len, gy / len};
}

bool simplicity_check(const PlaneCurve& c, int n) {
    if (n < 3) throw std::invalid_argument("simplicity_check: need at least 3 vertices");
    std::vector<Vec2> p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = c.point(kTwoPi * j / n);

    const auto orient = [](Vec2 a, Vec2 b, Vec2 q) {
        return (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
    };
    const auto crosses = [&](Vec2 a, Vec2 b, Vec2 u, Vec2 v) {
        const double d1 = orient(u, v, a), d2 = orient(u, v, b);
        const double d3 = orient(a, b, u), d4 = orient(a, b, v);
        return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // wrap-around neighbours
            if (crosses(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>((i + 1) % n)],
                        p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>((j + 1) % n)]))
                return false;
        }
    }
    return true;
}

namespace {

void require_simple(const PlaneCurve& c) {
    if (!simplicity_check(c))
        throw GateError("simplicity", "curve: simplicity check failed (self-crossing found)");
}

CurveAudit full_audit(const PlaneCurve& c) {
    CurveAudit a;
    a.L = c.length();
    a.A = c.area();
    a.deficit = a.L * a.L - 4.0 * kPi * a.A;
    a.centroid = c.centroid();

    const Vec2 g = a.centroid;
    const double r1 = a.L / kTwoPi;        // comparison radius L / 2pi
    const double r2 = r1 * r1;             // (L / 2pi)^2

    const double i1 = integrate_periodic([&](double t) {
        const Vec2 n = c.frames(t).second;
        return (c.point(t) - g - n * r1).norm2() * c.speed(t);
    });
    const double i2 = integrate_periodic([&](double t) {
        const Vec2 n = c.frames(t).second;
        return (c.point(t) - g - n * (r2 * c.curvature(t))).norm2() * c.speed(t);
    });
    a.T1 = 2.0 * kPi * kPi / a.L * i1;
    a.T2 = 2.0 * kPi * kPi / (3.0 * a.L) * i2;

    const double w = integrate_periodic(
        [&](double t) { return (c.point(t) - g).norm2() * c.speed(t); });
    const double kappa_sq = integrate_periodic([&](double t) {
        const double k = c.curvature(t);
        return k * k * c.speed(t);
    });
    a.sachs_gap = a.L * a.L * a.L / (4.0 * kPi * kPi) - w;
    const double l4 = a.L * a.L * a.L * a.L;
    a.reverse_sachs_rhs =
        l4 / (64.0 * kPi * kPi * kPi * kPi) * (kappa_sq - 4.0 * kPi * kPi / a.L);
    return a;
}

} // namespace

CurveAudit thm31a_audit(const PlaneCurve& c) {
    require_simple(c);
    return full_audit(c);
}

CurveAudit thm31b_audit(const PlaneCurve& c) {
    require_simple(c);
    return full_audit(c);
}

CurveIdentities identity_checks(const PlaneCurve& c) {
    require_simple(c);
    const double L = c.length();
    const double A = c.area();
    const Vec2 g = c.centroid();
    const double r1 = L / kTwoPi;
    const double r2 = r1 * r1;

    const double w = integrate_periodic(
        [&](double t) { return (c.point(t) - g).norm2() * c.speed(t); });
    const double kappa_sq = integrate_periodic([&](double t) {
        const double k = c.curvature(t);
        return k * k * c.speed(t);
    });

    CurveIdentities out;
    out.square_kappa.lhs = integrate_periodic([&](double t) {
        const Vec2 n = c.frames(t).second;
        return (c.point(t) - g - n * (r2 * c.curvature(t))).norm2() * c.speed(t);
    });
    out.square_kappa.rhs = w - 2.0 * L * L * L / (kTwoPi * kTwoPi) + r2 * r2 * kappa_sq;

    out.square_normal.lhs = integrate_periodic([&](double t) {
        const Vec2 n = c.frames(t).second;
        return (c.point(t) - g - n * r1).norm2() * c.speed(t);
    });
    out.square_normal.rhs = w - 2.0 * A * L / kPi + L * L * L / (kTwoPi * kTwoPi);

    out.minkowski.lhs = integrate_periodic([&](double t) {
        const Vec2 n = c.frames(t).second;
        return c.curvature(t) * (c.point(t) - g).dot(n) * c.speed(t);
    });
    out.minkowski.rhs = L;

    out.divergence.lhs = integrate_periodic([&](double t) {
        const Vec2 n = c.frames(t).second;
        return (c.point(t) - g).dot(n) * c.speed(t);
    });
    out.divergence.rhs = 2.0 * A;
    return out;
}

PlaneCurve translate(const PlaneCurve& c, Vec2 v) {
    return PlaneCurve::make(c.x() + TrigSeries(v.x), c.y() + TrigSeries(v.y));
}

PlaneCurve rotate(const PlaneCurve& c, double angle) {
    const double ca = std::cos(angle), sa = std::sin(angle);
    return PlaneCurve::make(ca * c.x() - sa * c.y(), sa * c.x() + ca * c.y());
}

PlaneCurve scale(const PlaneCurve& c, double factor) {
    if (factor <= 0.0) throw std::invalid_argument("scale: factor must be positive");
    return PlaneCurve::make(factor * c.x(), factor * c.y());
}

PlaneCurve reparametrize(const PlaneCurve& c, double phase) {
    return PlaneCurve::make(phase_shift(c.x(), phase), phase_shift(c.y(), phase));
}

PlaneCurve random_simple_curve(std::mt19937_64& rng, int degree, double amplitude) {
    if (!(amplitude > 0.0 && amplitude < 1.0))
        throw std::invalid_argument("random_simple_curve: amplitude must lie in (0, 1)");
    TrigSeries p = random_series(rng, degree, /*zero_mean=*/false);
    const double norm = std::abs(p.mean()) + p.coeff_scale();
    if (norm > 0.0) p *= amplitude / norm;

    const TrigSeries radius = TrigSeries(1.0) + p;
    return PlaneCurve::make(multiply(radius, TrigSeries::harmonic_cos(1, 1.0)),
                            multiply(radius, TrigSeries::harmonic_sin(1, 1.0)));
}

} // namespace wirtlab
