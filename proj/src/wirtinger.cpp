#include "wirtlab/wirtinger.hpp"

#include "wirtlab/coefficients.hpp"
#include "wirtlab/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wirtlab {

namespace {

void check_order(int m) {
    if (m < 1) throw std::invalid_argument("wirtinger: order m must be >= 1");
    if (m > kMaxFloatOrder)
        throw std::invalid_argument("wirtinger: order m exceeds the floating-point cap of 8");
}

const CoefficientTable& cached_table(int m) {
    static const std::vector<CoefficientTable> tables = [] {
        std::vector<CoefficientTable> t;
        for (int order = 1; order <= kMaxFloatOrder; ++order)
            t.push_back(CoefficientTable::make(order));
        return t;
    }();
    return tables[static_cast<std::size_t>(m - 1)];
}

BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Per-harmonic spectral weights of the functionals. By Parseval each form is
// pi * sum_n (cos_n^2 + sin_n^2) * w(n) with w(n) an integer combination of
// the table; evaluating w(n) exactly and rounding once keeps the forms free
// of the (m!)^2-sized cancellation the term-by-term integral route suffers.
BigInt weight_form_a(const CoefficientTable& t, const BigInt& n2) { return horner(t.c, n2); }

BigInt weight_form_b(const CoefficientTable& t, const BigInt& n2) {
    return (n2 - 1) * horner(t.lambda, n2);
}

BigInt weight_form_c(const CoefficientTable& t, const BigInt& n2) {
    const BigInt r = n2 - 1;
    BigInt acc = t.S[0] * r;
    BigInt pow = 1;  // n^{2(k-1)}
    for (int k = 1; k <= t.m - 1; ++k) {
        acc += t.S[static_cast<std::size_t>(k)] * pow * r * r;
        pow *= n2;
    }
    return acc;
}

BigInt weight_certificate(const CoefficientTable& t, const BigInt& n2) {
    BigInt acc = 1;
    for (int j = 1; j <= t.m; ++j) acc *= n2 - BigInt(j) * j;
    return acc;
}

// Shifted weights of the upper refinement bounds (before the 1/(m+1)^2).
BigInt weight_upper_a(const CoefficientTable& t, const BigInt& n2) {
    return n2 * horner(t.c, n2);
}

BigInt weight_upper_b(const CoefficientTable& t, const BigInt& n2) {
    return n2 * (n2 - 1) * horner(t.lambda, n2);
}

BigInt weight_upper_c(const CoefficientTable& t, const BigInt& n2) {
    const BigInt r = n2 - 1;
    BigInt acc = t.S[0] * r;
    BigInt pow = 1;  // n^{2k}
    for (int k = 0; k <= t.m - 1; ++k) {
        acc += t.S[static_cast<std::size_t>(k)] * pow * r * r;
        pow *= n2;
    }
    return acc;
}

template <typename WeightFn>
double spectral_sum(const TrigSeries& f, int m, WeightFn&& weight) {
    const CoefficientTable& table = cached_table(m);
    double acc = 0.0;
    for (int n = 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        const double energy = a * a + b * b;
        if (energy == 0.0) continue;
        acc += energy * weight(table, BigInt(n) * n).template convert_to<double>();
    }
    return kPi * acc;
}

/// int (f^{(k+1)} + f^{(k-1)})^2 dt for k >= 1. Per harmonic n the combined
/// coefficient is a_n (in)^{k-1} (1 - n^2), so the integrand contributes
/// n^{2(k-1)} (n^2 - 1)^2; the n = 0 mode survives only for k = 1.
double plus_pair_integral(const TrigSeries& f, int k) {
    double sum = 0.0;
    for (int n = 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        double w = 1.0;
        for (int j = 0; j < k - 1; ++j) w *= static_cast<double>(n) * n;
        const double r = static_cast<double>(n) * n - 1.0;
        sum += w * r * r * (a * a + b * b);
    }
    const double mean_part = (k == 1) ? kTwoPi * f.mean() * f.mean() : 0.0;
    return mean_part + kPi * sum;
}

} // namespace

void require_zero_mean(const TrigSeries& f) {
    const double scale = 1.0 + f.coeff_scale();
    if (std::abs(f.mean()) > 1e-12 * scale)
        throw GateError("zero-mean",
                        "wirtinger: input has nonzero mean; project it first or use the "
                        "mean-value form");
}

double functional_scale(const TrigSeries& f, int k_max) {
    double s = 1.0;
    for (int k = 0; k <= k_max; ++k) s += derivative_l2_integral(f, k);
    return s;
}

double form_a(const TrigSeries& f, int m) {
    check_order(m);
    require_zero_mean(f);
    return spectral_sum(f, m, [](const CoefficientTable& t, const BigInt& n2) {
        return weight_form_a(t, n2);
    });
}

double form_b(const TrigSeries& f, int m) {
    check_order(m);
    require_zero_mean(f);
    return spectral_sum(f, m, [](const CoefficientTable& t, const BigInt& n2) {
        return weight_form_b(t, n2);
    });
}

double form_c(const TrigSeries& f, int m) {
    check_order(m);
    require_zero_mean(f);
    return spectral_sum(f, m, [](const CoefficientTable& t, const BigInt& n2) {
        return weight_form_c(t, n2);
    });
}

double certificate(const TrigSeries& f, int m) {
    check_order(m);
    require_zero_mean(f);
    const CoefficientTable& table = cached_table(m);
    double acc = 0.0;
    for (int n = m + 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        acc += (a * a + b * b) * weight_certificate(table, BigInt(n) * n).convert_to<double>();
    }
    return kPi * acc;
}

SandwichBounds sandwich(const TrigSeries& f, int m, WirtingerForm form) {
    check_order(m);
    require_zero_mean(f);
    const double shift = 1.0 / (static_cast<double>(m + 1) * (m + 1));
    SandwichBounds out;
    switch (form) {
        case WirtingerForm::A:
            out.lower = form_a(f, m);
            out.upper = shift * spectral_sum(f, m, [](const CoefficientTable& t, const BigInt& n2) {
                            return weight_upper_a(t, n2);
                        });
            break;
        case WirtingerForm::B:
            out.lower = form_b(f, m);
            out.upper = shift * spectral_sum(f, m, [](const CoefficientTable& t, const BigInt& n2) {
                            return weight_upper_b(t, n2);
                        });
            break;
        case WirtingerForm::C:
            out.lower = form_c(f, m);
            out.upper = shift * spectral_sum(f, m, [](const CoefficientTable& t, const BigInt& n2) {
                            return weight_upper_c(t, n2);
                        });
            break;
    }
    return out;
}

double mean_form(const TrigSeries& h, int m) {
    check_order(m);
    // The literal three-term statement for nonzero-mean input; deliberately a
    // different route than form_c so the two can audit each other.
    const auto& S = cached_table(m).S;
    const double s0 = S[0].convert_to<double>();
    const double s1 = (m >= 2) ? S[1].convert_to<double>() : 0.0;
    const double w = s0 - s1;  // (-1)^{m-1} (m!)^2

    const double i0 = derivative_l2_integral(h, 0);
    const double i1 = derivative_l2_integral(h, 1);
    const double mean_sq = kTwoPi * h.mean() * h.mean();  // (int h)^2 / (2 pi)

    double acc = -s0 * (i0 - i1) + w * mean_sq;
    for (int k = 1; k < m; ++k)
        acc += S[static_cast<std::size_t>(k)].convert_to<double>() * plus_pair_integral(h, k);
    return acc;
}

bool equality_case(const TrigSeries& f, int m) {
    if (m < 1) throw std::invalid_argument("equality_case: order m must be >= 1");
    double energy = f.mean() * f.mean();
    for (int n = 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        energy += a * a + b * b;
    }
    double tail_max = 0.0;
    for (int n = m + 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        tail_max = std::max(tail_max, a * a + b * b);
    }
    return tail_max <= 1e-24 * (1.0 + energy);
}

WirtingerAudit audit(const TrigSeries& f, int m, WirtingerForm form) {
    WirtingerAudit out;
    out.m = m;
    out.form = form;
    out.form_a = form_a(f, m);
    out.form_b = form_b(f, m);
    out.form_c = form_c(f, m);
    out.certificate = certificate(f, m);
    out.sandwich = sandwich(f, m, form);
    out.equality = equality_case(f, m);
    out.rtol = 1e-9;
    out.atol = out.rtol * functional_scale(f, m + 1);
    return out;
}

} // namespace wirtlab
