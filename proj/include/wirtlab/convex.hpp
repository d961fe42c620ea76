#pragma once

#include "wirtlab/curve.hpp"
#include "wirtlab/trig.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace wirtlab {

/// Strictly convex body given by its support function h(theta) in the
/// outward-normal angle. The radius of curvature rho = h + h'' must stay
/// positive; construction rejects bodies whose grid minimum of rho falls
/// below 1e-9 of its maximum.
class SupportFunction {
public:
    static SupportFunction make(TrigSeries h);

    const TrigSeries& h() const { return h_; }
    const TrigSeries& rho() const { return rho_; }
    double min_rho() const { return min_rho_; }

private:
    SupportFunction(TrigSeries h, TrigSeries rho, double min_rho)
        : h_(std::move(h)), rho_(std::move(rho)), min_rho_(min_rho) {}

    TrigSeries h_, rho_;
    double min_rho_ = 0.0;
};

struct SupportGeometry {
    double L = 0.0;  // int h dtheta
    double A = 0.0;  // (1/2) int (h^2 - h'^2) dtheta
};

/// Length and area from the support function, Parseval-exact.
SupportGeometry support_geometry(const SupportFunction& body);

/// The order-m deficit bound in the normal-angle variable. For odd m the
/// deficit is bounded below by `bound`, for even m above; `slack` is
/// oriented so the inequality holds iff slack >= -atol.
struct ConvexAudit {
    int m = 1;
    double L = 0.0;
    double A = 0.0;
    double deficit = 0.0;
    double inv_curv = 0.0;            // int (1/kappa) ds = int rho^2 dtheta
    std::vector<double> deriv_terms;  // D_l = int (rho^{(l)})^2 dtheta, l = 1..m-2
    double bound = 0.0;
    double slack = 0.0;
    bool odd = false;
    double atol = 0.0;
};

ConvexAudit thm32_audit(const SupportFunction& body, int m);

/// The two-sided stability chain around the Lin-Tsai inequality:
/// 0 <= (inv_curv - L^2/2pi) - (3/2pi) D <= (1/12)[int rho'^2 dtheta - (6/pi) D].
struct LinTsaiReport {
    double L = 0.0, A = 0.0, deficit = 0.0, inv_curv = 0.0;
    double curv_variation = 0.0;  // int (1/kappa^5)(dkappa/ds)^2 ds = int rho'^2 dtheta
    double middle = 0.0;          // (inv_curv - L^2/2pi) - (3/2pi) D
    double upper = 0.0;           // (1/12)[curv_variation - (6/pi) D]
    double lower_slack = 0.0;     // middle - 0
    double upper_slack = 0.0;     // upper - middle
    double atol = 0.0;
};

LinTsaiReport lin_tsai_audit(const SupportFunction& body);

/// The three reverse isoperimetric bounds plus the Bernstein-Mettler and Gage
/// auxiliaries, all evaluated in the theta variable (ds = rho dtheta,
/// dkappa/ds = -rho'/rho^3).
struct ReverseIsoReport {
    double L = 0.0, A = 0.0, deficit = 0.0;
    double q_rho = 0.0;          // int rho'^2 dtheta            (kappa^-5 weight)
    double q_rho_ratio = 0.0;    // int (rho'/rho)^2 dtheta      (kappa^-3 weight)
    double q_rho_cubed = 0.0;    // int rho'^2 / rho^3 dtheta    (kappa^-2 weight)
    double kappa_sq = 0.0;       // int kappa^2 ds = int dtheta / rho

    double reverse01_rhs = 0.0;  // (pi/6)      q_rho
    double reverse02_rhs = 0.0;  // (L^2/24pi)  q_rho_ratio
    double reverse03_rhs = 0.0;  // (AL/4pi)    q_rho_cubed
    double bm_k3_lhs = 0.0, bm_k3_rhs = 0.0;  // q_rho_ratio/4 >= -2pi + (4pi^2/L^2) inv_curv
    double bm_k2_lhs = 0.0, bm_k2_rhs = 0.0;  // q_rho_cubed/4 >= -4pi^2/L + kappa_sq
    double gage_lhs = 0.0, gage_rhs = 0.0;    // kappa_sq >= pi L / A
    double atol = 0.0;
};

ReverseIsoReport reverse_isoperimetric_audit(const SupportFunction& body);

/// X(theta) = h (cos, sin) + h' (-sin, cos); an exact trig-series curve of
/// degree at most degree(h) + 1.
PlaneCurve reconstruct_curve(const SupportFunction& body);

/// h = 1 + sum_{n=2}^{degree} (a_n cos + b_n sin) rescaled so that
/// sum (n^2 - 1) |(a_n, b_n)| <= 1 - margin, which keeps rho > margin.
/// First harmonics are omitted; they only translate the body.
SupportFunction random_convex(std::mt19937_64& rng, int degree, double margin);
SupportFunction random_convex(int degree, std::uint64_t seed, double margin);

} // namespace wirtlab
