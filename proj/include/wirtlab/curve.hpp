#pragma once

#include "wirtlab/trig.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace wirtlab {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {s * x, s * y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

/// Closed plane curve X(t) = (x(t), y(t)), t in [0, 2pi), given by a pair of
/// trigonometric series. Construction normalizes the orientation to
/// counter-clockwise (positive signed area) and rejects irregular
/// parametrizations (grid minimum of |X'| below 1e-9 of its maximum).
class PlaneCurve {
public:
    static PlaneCurve make(TrigSeries x, TrigSeries y);

    const TrigSeries& x() const { return x_; }
    const TrigSeries& y() const { return y_; }

    Vec2 point(double t) const { return {x_(t), y_(t)}; }
    Vec2 velocity(double t) const { return {dx_(t), dy_(t)}; }
    Vec2 acceleration(double t) const { return {ddx_(t), ddy_(t)}; }
    double speed(double t) const { return velocity(t).norm(); }

    /// Signed curvature (x'y'' - y'x'') / |X'|^3; positive for convex
    /// counter-clockwise curves.
    double curvature(double t) const;

    /// Unit tangent T = X'/|X'| and outward unit normal N = -JT, J the
    /// counter-clockwise quarter rotation.
    std::pair<Vec2, Vec2> frames(double t) const;

    double length() const;   // int |X'| dt, adaptive trapezoid
    double area() const;     // (1/2) int (x y' - y x') dt, Parseval-exact
    Vec2 centroid() const;   // arclength centroid (1/L) int X |X'| dt

private:
    PlaneCurve(TrigSeries x, TrigSeries y);

    TrigSeries x_, y_, dx_, dy_, ddx_, ddy_;
};

/// Polyline self-intersection test on an n-gon sample of the curve; true
/// means no crossing among nonadjacent segments was found at this resolution.
bool simplicity_check(const PlaneCurve& c, int n = 256);

/// Everything the deficit-bound chains need, with the arclength centroid
/// subtracted where the formulas require it.
struct CurveAudit {
    double L = 0.0;
    double A = 0.0;
    double deficit = 0.0;  // L^2 - 4 pi A
    Vec2 centroid;
    double T1 = 0.0;       // (2 pi^2 / L)   int |X - G - (L/2pi)   N|^2 ds
    double T2 = 0.0;       // (2 pi^2 / 3L)  int |X - G - (L/2pi)^2 kappa N|^2 ds
    double sachs_gap = 0.0;          // L^3/(4 pi^2) - int |X - G|^2 ds
    double reverse_sachs_rhs = 0.0;  // L^4/(64 pi^4) (int kappa^2 ds - 4 pi^2 / L)
};

/// Deficit chain 0 <= D - T1 <= T2. Rejects non-simple curves.
CurveAudit thm31a_audit(const PlaneCurve& c);

/// Sachs chain 0 <= sachs_gap <= reverse_sachs_rhs. Rejects non-simple curves.
CurveAudit thm31b_audit(const PlaneCurve& c);

/// lhs/rhs pairs of the square expansions, the Minkowski formula, and the
/// divergence identity, computed with independent quadratures on both sides.
struct CurveIdentities {
    struct Pair {
        double lhs = 0.0, rhs = 0.0;
    };
    Pair square_kappa;   // int |X - (L/2pi)^2 kappa N|^2 ds expansion
    Pair square_normal;  // int |X - (L/2pi) N|^2 ds expansion
    Pair minkowski;      // int kappa <X, N> ds  vs  L
    Pair divergence;     // int <X, N> ds        vs  2A
};

CurveIdentities identity_checks(const PlaneCurve& c);

PlaneCurve translate(const PlaneCurve& c, Vec2 v);
PlaneCurve rotate(const PlaneCurve& c, double angle);
PlaneCurve scale(const PlaneCurve& c, double factor);
PlaneCurve reparametrize(const PlaneCurve& c, double phase);

/// Perturbed circle X = (1 + p)(cos t, sin t) with random p of the given
/// degree rescaled to sup |p| <= amplitude < 1; star-shaped, hence simple.
PlaneCurve random_simple_curve(std::mt19937_64& rng, int degree, double amplitude);

} // namespace wirtlab
