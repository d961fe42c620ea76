#pragma once

#include <functional>
#include <random>
#include <vector>

namespace wirtlab {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Finite real Fourier series on [0, 2pi):
///
///   f(t) = mean + sum_{n=1}^{N} cos_coeff(n) cos(nt) + sin_coeff(n) sin(nt).
///
/// Trailing all-zero harmonic pairs are trimmed on construction, so degree()
/// is the largest harmonic actually present (0 for constants). Values are
/// immutable after construction and the type is freely copyable.
class TrigSeries {
public:
    TrigSeries() = default;
    explicit TrigSeries(double mean) : mean_(mean) {}
    TrigSeries(double mean, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static TrigSeries harmonic_cos(int n, double amplitude);
    static TrigSeries harmonic_sin(int n, double amplitude);

    double mean() const { return mean_; }
    int degree() const { return static_cast<int>(cos_.size()); }

    /// 1-based harmonic accessors; out-of-range indices read as 0.
    double cos_coeff(int n) const;
    double sin_coeff(int n) const;

    double operator()(double t) const;

    /// Sum of |cos_coeff(n)| + |sin_coeff(n)|, a sup-norm bound for the
    /// oscillating part; used for scale-aware tolerances.
    double coeff_scale() const;

    TrigSeries& operator+=(const TrigSeries& other);
    TrigSeries& operator-=(const TrigSeries& other);
    TrigSeries& operator*=(double scalar);

    friend TrigSeries operator+(TrigSeries a, const TrigSeries& b) { return a += b; }
    friend TrigSeries operator-(TrigSeries a, const TrigSeries& b) { return a -= b; }
    friend TrigSeries operator*(double s, TrigSeries a) { return a *= s; }
    friend TrigSeries operator*(TrigSeries a, double s) { return a *= s; }

private:
    double mean_ = 0.0;
    std::vector<double> cos_, sin_;  // equal lengths; index i holds harmonic i+1

    void trim();
};

/// k-th spectral derivative, term by term; the mean vanishes for k >= 1 and
/// the degree never grows.
TrigSeries derivative(const TrigSeries& f, int order = 1);

/// Parseval value of the integral over one period:
/// int f^2 dt = 2 pi mean^2 + pi sum (cos_n^2 + sin_n^2).
double l2_integral(const TrigSeries& f);

/// Parseval value of int f g dt.
double inner_integral(const TrigSeries& f, const TrigSeries& g);

/// int (f^{(k)})^2 dt without forming the derivative series.
double derivative_l2_integral(const TrigSeries& f, int k);

/// f minus its mean value; the mean of the result is exactly zero.
TrigSeries project_mean_zero(const TrigSeries& f);

/// Exact product of two series (degree sums), via complex-coefficient
/// convolution.
TrigSeries multiply(const TrigSeries& f, const TrigSeries& g);

/// The series t -> f(t + phi).
TrigSeries phase_shift(const TrigSeries& f, double phi);

/// t -> f(-t); reverses the orientation of curves parametrized by f.
TrigSeries reflect_parameter(const TrigSeries& f);

/// Uniform samples v_j = f(2 pi j / n), j = 0..n-1.
struct SampleGrid {
    std::vector<double> values;

    int n_samples() const { return static_cast<int>(values.size()); }
};

SampleGrid sample(const TrigSeries& f, int n);
SampleGrid sample_function(const std::function<double(double)>& f, int n);

/// Discrete Fourier analysis of uniform samples, up to max_degree. Requires
/// 2 * max_degree < n (no aliasing); exact on band-limited input.
TrigSeries analyze(const SampleGrid& grid, int max_degree);

/// (2 pi / n) * sum of samples; exact for trig polynomials of degree < n.
double quad_trapezoid(const SampleGrid& grid);

struct QuadratureResult {
    double value = 0.0;
    int n = 0;               // final grid size
    double last_delta = 0.0; // |value at n - value at n/2|
    bool converged = false;
};

/// Trapezoid quadrature of a 2pi-periodic integrand with grid doubling until
/// two successive refinements differ by less than rtol relative (floor 1),
/// starting at n0 points and capped at nmax.
QuadratureResult integrate_periodic_info(const std::function<double(double)>& f,
                                         double rtol = 1e-11, int n0 = 256, int nmax = 65536);

double integrate_periodic(const std::function<double(double)>& f, double rtol = 1e-11,
                          int n0 = 256, int nmax = 65536);

/// Deterministic uniform draw on [-1, 1] taken directly from the raw engine
/// stream (std distribution objects are implementation-defined).
double uniform_pm1(std::mt19937_64& rng);

/// Random series of the given degree with coefficients uniform on [-1, 1].
TrigSeries random_series(std::mt19937_64& rng, int degree, bool zero_mean);

} // namespace wirtlab
