#pragma once

#include "wirtlab/trig.hpp"

namespace wirtlab {

/// Which of the three equivalent functional forms to evaluate.
enum class WirtingerForm { A, B, C };

struct SandwichBounds {
    double lower = 0.0;  // the order-m functional
    double upper = 0.0;  // 1/(m+1)^2 times the shifted functional
};

/// One full evaluation of the order-m machinery on a zero-mean series:
/// the three equivalent forms, the nonnegative spectral certificate, the
/// sandwich bounds for the requested form, and the band-limit equality flag.
struct WirtingerAudit {
    int m = 1;
    WirtingerForm form = WirtingerForm::A;
    double form_a = 0.0;
    double form_b = 0.0;
    double form_c = 0.0;
    double certificate = 0.0;
    SandwichBounds sandwich;
    bool equality = false;
    double rtol = 0.0;
    double atol = 0.0;  // rtol * functional scale
};

/// Orders above this lose too much precision to coefficient cancellation in
/// 64-bit floating point; the exact integer tables have no such cap.
inline constexpr int kMaxFloatOrder = 8;

/// sum_{k=0}^{m} c_{m,k} int (f^{(k)})^2 dt. Requires zero mean.
double form_a(const TrigSeries& f, int m);

/// sum_{k=0}^{m-1} lambda_{m,k} int [(f^{(k+1)})^2 - (f^{(k)})^2] dt.
double form_b(const TrigSeries& f, int m);

/// S_{m,0} int [(f')^2 - f^2] + sum_{k=1}^{m-1} S_{m,k} int (f^{(k+1)} + f^{(k-1)})^2 dt;
/// for m = 1 this degenerates to the classical functional int [(f')^2 - f^2].
double form_c(const TrigSeries& f, int m);

/// Parseval certificate: pi sum_{n > m} (n^2-1)(n^2-4)...(n^2-m^2)(cos_n^2 + sin_n^2),
/// nonnegative by construction and equal to all three forms.
double certificate(const TrigSeries& f, int m);

/// Lower/upper pair of the order-m refinement for the chosen form. The upper
/// bound is attained exactly when degree(f) <= m+1.
SandwichBounds sandwich(const TrigSeries& f, int m, WirtingerForm form);

/// Mean-value version: nonzero mean is allowed. Equals
/// form_c(project_mean_zero(h), m) identically.
double mean_form(const TrigSeries& h, int m);

/// True iff all harmonics above m are negligible:
/// max_{n>m} (cos_n^2 + sin_n^2) <= 1e-24 * (1 + coefficient energy).
bool equality_case(const TrigSeries& f, int m);

/// 1 + sum_{k=0}^{k_max} int (f^{(k)})^2 dt; the scale used for absolute
/// tolerances (raw tolerances are meaningless next to (m!)^2-sized weights).
double functional_scale(const TrigSeries& f, int k_max);

/// Throws GateError("zero-mean") when |mean| > 1e-12 * (1 + coeff scale).
void require_zero_mean(const TrigSeries& f);

WirtingerAudit audit(const TrigSeries& f, int m, WirtingerForm form = WirtingerForm::A);

} // namespace wirtlab
