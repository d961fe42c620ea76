#include "wirtlab/convex.hpp"

#include "wirtlab/coefficients.hpp"
#include "wirtlab/errors.hpp"
#include "wirtlab/wirtinger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wirtlab {

SupportFunction SupportFunction::make(TrigSeries h) {
    TrigSeries rho = h + derivative(h, 2);
    const int n = std::max(256, 16 * (h.degree() + 1));
    double rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
    for (int j = 0; j < n; ++j) {
        const double r = rho(kTwoPi * j / n);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    if (!(rmax > 0.0) || !(rmin > 1e-9 * rmax))
        throw GateError("convexity", "support function: body is not strictly convex (grid min "
                                     "rho = " + std::to_string(rmin) + ")");
    return SupportFunction(std::move(h), std::move(rho), rmin);
}

SupportGeometry support_geometry(const SupportFunction& body) {
    const TrigSeries& h = body.h();
    SupportGeometry g;
    g.L = kTwoPi * h.mean();
    g.A = 0.5 * (l2_integral(h) - derivative_l2_integral(h, 1));
    return g;
}

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

} // namespace

ConvexAudit thm32_audit(const SupportFunction& body, int m) {
    if (m < 1) throw std::invalid_argument("thm32_audit: order m must be >= 1");
    if (m > kMaxFloatOrder)
        throw std::invalid_argument("thm32_audit: order m exceeds the floating-point cap of 8");

    const auto geom = support_geometry(body);
    ConvexAudit a;
    a.m = m;
    a.odd = (m % 2 == 1);
    a.L = geom.L;
    a.A = geom.A;
    a.deficit = a.L * a.L - 4.0 * kPi * a.A;
    a.inv_curv = l2_integral(body.rho());

    const auto S = CoefficientTable::make(std::max(m, 2)).S;
    double correction = 0.0;
    double correction_abs = 0.0;
    for (int l = 1; l <= m - 2; ++l) {
        const double d_l = derivative_l2_integral(body.rho(), l);
        a.deriv_terms.push_back(d_l);
        const double s = S[static_cast<std::size_t>(l + 1)].convert_to<double>();
        correction += s * d_l;
        correction_abs += std::abs(s) * d_l;
    }
    const double fact_sq = factorial(m) * factorial(m);
    const double lead = (m - 1) * kPi / m * (a.inv_curv - 2.0 * a.A);
    const double tail = kTwoPi / fact_sq * correction;
    a.bound = a.odd ? lead - tail : lead + tail;
    a.slack = a.odd ? a.deficit - a.bound : a.bound - a.deficit;
    a.atol = 1e-9 * (1.0 + std::abs(a.deficit) + std::abs(lead) +
                     kTwoPi / fact_sq * correction_abs);
    return a;
}

LinTsaiReport lin_tsai_audit(const SupportFunction& body) {
    const auto geom = support_geometry(body);
    LinTsaiReport r;
    r.L = geom.L;
    r.A = geom.A;
    r.deficit = r.L * r.L - 4.0 * kPi * r.A;
    r.inv_curv = l2_integral(body.rho());
    r.curv_variation = derivative_l2_integral(body.rho(), 1);

    r.middle = (r.inv_curv - r.L * r.L / kTwoPi) - 3.0 / kTwoPi * r.deficit;
    r.upper = (r.curv_variation - 6.0 / kPi * r.deficit) / 12.0;
    r.lower_slack = r.middle;
    r.upper_slack = r.upper - r.middle;
    r.atol = 1e-9 * (1.0 + r.inv_curv + r.L * r.L / kTwoPi + std::abs(r.deficit) +
                     r.curv_variation / 12.0);
    return r;
}

ReverseIsoReport reverse_isoperimetric_audit(const SupportFunction& body) {
    const auto geom = support_geometry(body);
    const TrigSeries& rho = body.rho();
    const TrigSeries drho = derivative(rho);

    ReverseIsoReport r;
    r.L = geom.L;
    r.A = geom.A;
    r.deficit = r.L * r.L - 4.0 * kPi * r.A;

    r.q_rho = l2_integral(drho);
    r.q_rho_ratio = integrate_periodic([&](double t) {
        const double q = drho(t) / rho(t);
        return q * q;
    });
    r.q_rho_cubed = integrate_periodic([&](double t) {
        const double d = drho(t), p = rho(t);
        return d * d / (p * p * p);
    });
    r.kappa_sq = integrate_periodic([&](double t) { return 1.0 / rho(t); });

    r.reverse01_rhs = kPi / 6.0 * r.q_rho;
    r.reverse02_rhs = r.L * r.L / (24.0 * kPi) * r.q_rho_ratio;
    r.reverse03_rhs = r.A * r.L / (4.0 * kPi) * r.q_rho_cubed;

    const double inv_curv = l2_integral(rho);
    r.bm_k3_lhs = 0.25 * r.q_rho_ratio;
    r.bm_k3_rhs = -kTwoPi + kTwoPi * kTwoPi / (r.L * r.L) * inv_curv;
    r.bm_k2_lhs = 0.25 * r.q_rho_cubed;
    r.bm_k2_rhs = -kTwoPi * kTwoPi / r.L + r.kappa_sq;
    r.gage_lhs = r.kappa_sq;
    r.gage_rhs = kPi * r.L / r.A;

    r.atol = 1e-9 * (1.0 + std::abs(r.deficit) + r.reverse01_rhs + r.reverse02_rhs +
                     r.reverse03_rhs + r.kappa_sq + inv_curv);
    return r;
}

PlaneCurve reconstruct_curve(const SupportFunction& body) {
    const TrigSeries& h = body.h();
    const TrigSeries dh = derivative(h);
    const TrigSeries cos1 = TrigSeries::harmonic_cos(1, 1.0);
    const TrigSeries sin1 = TrigSeries::harmonic_sin(1, 1.0);
    return PlaneCurve::make(multiply(h, cos1) - multiply(dh, sin1),
                            multiply(h, sin1) + multiply(dh, cos1));
}

SupportFunction random_convex(std::mt19937_64& rng, int degree, double margin) {
    if (!(margin > 0.0 && margin < 1.0))
        throw std::invalid_argument("random_convex: margin must lie in (0, 1)");
    std::vector<double> c, s;
    double weight = 0.0;
    for (int n = 2; n <= degree; ++n) {
        const double a = uniform_pm1(rng), b = uniform_pm1(rng);
        c.push_back(a);
        s.push_back(b);
        weight += (static_cast<double>(n) * n - 1.0) * std::hypot(a, b);
    }
    TrigSeries h(1.0);
    if (weight > 0.0) {
        const double rescale = (1.0 - margin) / weight;
        std::vector<double> cos_coeffs(static_cast<std::size_t>(degree), 0.0);
        std::vector<double> sin_coeffs(static_cast<std::size_t>(degree), 0.0);
        for (int n = 2; n <= degree; ++n) {
            cos_coeffs[static_cast<std::size_t>(n - 1)] = rescale * c[static_cast<std::size_t>(n - 2)];
            sin_coeffs[static_cast<std::size_t>(n - 1)] = rescale * s[static_cast<std::size_t>(n - 2)];
        }
        h = TrigSeries(1.0, std::move(cos_coeffs), std::move(sin_coeffs));
    }
    return SupportFunction::make(std::move(h));
}

SupportFunction random_convex(int degree, std::uint64_t seed, double margin) {
    std::mt19937_64 rng(seed);
    return random_convex(rng, degree, margin);
}

} // namespace wirtlab
