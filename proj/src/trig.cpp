#include "wirtlab/trig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace wirtlab {

TrigSeries::TrigSeries(double mean, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : mean_(mean), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    const std::size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    trim();
}

void TrigSeries::trim() {
    while (!cos_.empty() && cos_.back() == 0.0 && sin_.back() == 0.0) {
        cos_.pop_back();
        sin_.pop_back();
    }
}

TrigSeries TrigSeries::harmonic_cos(int n, double amplitude) {
    if (n < 0) throw std::invalid_argument("harmonic_cos: negative harmonic");
    if (n == 0) return TrigSeries(amplitude);
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c.back() = amplitude;
    return TrigSeries(0.0, std::move(c), std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

TrigSeries TrigSeries::harmonic_sin(int n, double amplitude) {
    if (n < 1) throw std::invalid_argument("harmonic_sin: harmonic must be >= 1");
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    s.back() = amplitude;
    return TrigSeries(0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0), std::move(s));
}

double TrigSeries::cos_coeff(int n) const {
    if (n < 1 || n > degree()) return 0.0;
    return cos_[static_cast<std::size_t>(n - 1)];
}

double TrigSeries::sin_coeff(int n) const {
    if (n < 1 || n > degree()) return 0.0;
    return sin_[static_cast<std::size_t>(n - 1)];
}

double TrigSeries::operator()(double t) const {
    double acc = mean_;
    for (int n = 1; n <= degree(); ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        acc += cos_[i] * std::cos(n * t) + sin_[i] * std::sin(n * t);
    }
    return acc;
}

double TrigSeries::coeff_scale() const {
    double s = 0.0;
    for (std::size_t i = 0; i < cos_.size(); ++i) s += std::abs(cos_[i]) + std::abs(sin_[i]);
    return s;
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& other) {
    const std::size_t n = std::max(cos_.size(), other.cos_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    mean_ += other.mean_;
    for (std::size_t i = 0; i < other.cos_.size(); ++i) {
        cos_[i] += other.cos_[i];
        sin_[i] += other.sin_[i];
    }
    trim();
    return *this;
}

TrigSeries& TrigSeries::operator-=(const TrigSeries& other) {
    TrigSeries neg = other;
    neg *= -1.0;
    return *this += neg;
}

TrigSeries& TrigSeries::operator*=(double scalar) {
    mean_ *= scalar;
    for (auto& v : cos_) v *= scalar;
    for (auto& v : sin_) v *= scalar;
    trim();
    return *this;
}

TrigSeries derivative(const TrigSeries& f, int order) {
    if (order < 0) throw std::invalid_argument("derivative: negative order");
    if (order == 0) return f;
    const int deg = f.degree();
    std::vector<double> c(static_cast<std::size_t>(deg)), s(static_cast<std::size_t>(deg));
    for (int n = 1; n <= deg; ++n) {
        double factor = 1.0;
        for (int k = 0; k < order; ++k) factor *= n;
        double a = f.cos_coeff(n), b = f.sin_coeff(n);
        switch (order % 4) {  // one derivative maps (a, b) -> (n b, -n a)
            case 0: break;
            case 1: std::swap(a, b); b = -b; break;
            case 2: a = -a; b = -b; break;
            case 3: std::swap(a, b); a = -a; break;
        }
        c[static_cast<std::size_t>(n - 1)] = factor * a;
        s[static_cast<std::size_t>(n - 1)] = factor * b;
    }
    return TrigSeries(0.0, std::move(c), std::move(s));
}

double l2_integral(const TrigSeries& f) {
    double sum = 0.0;
    for (int n = 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        sum += a * a + b * b;
    }
    return kTwoPi * f.mean() * f.mean() + kPi * sum;
}

double inner_integral(const TrigSeries& f, const TrigSeries& g) {
    double sum = 0.0;
    const int deg = std::min(f.degree(), g.degree());
    for (int n = 1; n <= deg; ++n)
        sum += f.cos_coeff(n) * g.cos_coeff(n) + f.sin_coeff(n) * g.sin_coeff(n);
    return kTwoPi * f.mean() * g.mean() + kPi * sum;
}

double derivative_l2_integral(const TrigSeries& f, int k) {
    if (k < 0) throw std::invalid_argument("derivative_l2_integral: negative order");
    double sum = 0.0;
    for (int n = 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        double w = 1.0;
        for (int j = 0; j < k; ++j) w *= static_cast<double>(n) * n;
        sum += w * (a * a + b * b);
    }
    const double mean_part = (k == 0) ? kTwoPi * f.mean() * f.mean() : 0.0;
    return mean_part + kPi * sum;
}

TrigSeries project_mean_zero(const TrigSeries& f) {
    TrigSeries g = f;
    return g - TrigSeries(f.mean());
}

TrigSeries multiply(const TrigSeries& f, const TrigSeries& g) {
    using cplx = std::complex<double>;
    const int na = f.degree(), nb = g.degree();
    const int nc = na + nb;
    // complex coefficients indexed by harmonic n in [-N, N], offset by N
    auto pack = [](const TrigSeries& h, int n_max) {
        std::vector<cplx> c(static_cast<std::size_t>(2 * n_max + 1));
        c[static_cast<std::size_t>(n_max)] = h.mean();
        for (int n = 1; n <= h.degree(); ++n) {
            const cplx pos(0.5 * h.cos_coeff(n), -0.5 * h.sin_coeff(n));
            c[static_cast<std::size_t>(n_max + n)] = pos;
            c[static_cast<std::size_t>(n_max - n)] = std::conj(pos);
        }
        return c;
    };
    const auto ca = pack(f, na), cb = pack(g, nb);
    std::vector<cplx> cc(static_cast<std::size_t>(2 * nc + 1));
    for (int p = -na; p <= na; ++p)
        for (int q = -nb; q <= nb; ++q)
            cc[static_cast<std::size_t>(nc + p + q)] +=
                ca[static_cast<std::size_t>(na + p)] * cb[static_cast<std::size_t>(nb + q)];

    std::vector<double> c(static_cast<std::size_t>(nc)), s(static_cast<std::size_t>(nc));
    for (int n = 1; n <= nc; ++n) {
        const cplx v = cc[static_cast<std::size_t>(nc + n)];
        c[static_cast<std::size_t>(n - 1)] = 2.0 * v.real();
        s[static_cast<std::size_t>(n - 1)] = -2.0 * v.imag();
    }
    return TrigSeries(cc[static_cast<std::size_t>(nc)].real(), std::move(c), std::move(s));
}

TrigSeries phase_shift(const TrigSeries& f, double phi) {
    const int deg = f.degree();
    std::vector<double> c(static_cast<std::size_t>(deg)), s(static_cast<std::size_t>(deg));
    for (int n = 1; n <= deg; ++n) {
        const double cn = std::cos(n * phi), sn = std::sin(n * phi);
        const double a = f.cos_coeff(n), b = f.sin_coeff(n);
        c[static_cast<std::size_t>(n - 1)] = a * cn + b * sn;
        s[static_cast<std::size_t>(n - 1)] = -a * sn + b * cn;
    }
    return TrigSeries(f.mean(), std::move(c), std::move(s));
}

TrigSeries reflect_parameter(const TrigSeries& f) {
    std::vector<double> c(static_cast<std::size_t>(f.degree())), s(static_cast<std::size_t>(f.degree()));
    for (int n = 1; n <= f.degree(); ++n) {
        c[static_cast<std::size_t>(n - 1)] = f.cos_coeff(n);
        s[static_cast<std::size_t>(n - 1)] = -f.sin_coeff(n);
    }
    return TrigSeries(f.mean(), std::move(c), std::move(s));
}

SampleGrid sample(const TrigSeries& f, int n) {
    return sample_function([&f](double t) { return f(t); }, n);
}

SampleGrid sample_function(const std::function<double(double)>& f, int n) {
    if (n < 1) throw std::invalid_argument("sample: need at least one sample");
    SampleGrid g;
    g.values.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) g.values[static_cast<std::size_t>(j)] = f(kTwoPi * j / n);
    return g;
}

TrigSeries analyze(const SampleGrid& grid, int max_degree) {
    const int n = grid.n_samples();
    if (n < 1) throw std::invalid_argument("analyze: empty grid");
    if (max_degree < 0) throw std::invalid_argument("analyze: negative degree");
    if (2 * max_degree >= n)
        throw std::invalid_argument("analyze: max_degree >= n/2 would alias");

    double mean = 0.0;
    for (double v : grid.values) mean += v;
    mean /= n;

    std::vector<double> c(static_cast<std::size_t>(max_degree)), s(static_cast<std::size_t>(max_degree));
    for (int k = 1; k <= max_degree; ++k) {
        double ak = 0.0, bk = 0.0;
        for (int j = 0; j < n; ++j) {
            const long long r = (static_cast<long long>(j) * k) % n;
            const double angle = kTwoPi * static_cast<double>(r) / n;
            ak += grid.values[static_cast<std::size_t>(j)] * std::cos(angle);
            bk += grid.values[static_cast<std::size_t>(j)] * std::sin(angle);
        }
        c[static_cast<std::size_t>(k - 1)] = 2.0 * ak / n;
        s[static_cast<std::size_t>(k - 1)] = 2.0 * bk / n;
    }
    return TrigSeries(mean, std::move(c), std::move(s));
}

double quad_trapezoid(const SampleGrid& grid) {
    if (grid.n_samples() < 1) throw std::invalid_argument("quad_trapezoid: empty grid");
    double sum = 0.0;
    for (double v : grid.values) sum += v;
    return kTwoPi * sum / grid.n_samples();
}

QuadratureResult integrate_periodic_info(const std::function<double(double)>& f, double rtol,
                                         int n0, int nmax) {
    if (n0 < 1 || nmax < n0) throw std::invalid_argument("integrate_periodic: bad grid sizes");
    double prev = 0.0;
    for (int j = 0; j < n0; ++j) prev += f(kTwoPi * j / n0);
    prev *= kTwoPi / n0;

    QuadratureResult res{prev, n0, 0.0, false};
    for (int n = 2 * n0; n <= nmax; n *= 2) {
        double odd_sum = 0.0;  // new points interleave the previous grid
        for (int j = 1; j < n; j += 2) odd_sum += f(kTwoPi * j / n);
        const double cur = 0.5 * prev + kTwoPi * odd_sum / n;
        res.value = cur;
        res.n = n;
        res.last_delta = std::abs(cur - prev);
        if (res.last_delta <= rtol * (1.0 + std::abs(cur))) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

double integrate_periodic(const std::function<double(double)>& f, double rtol, int n0, int nmax) {
    return integrate_periodic_info(f, rtol, n0, nmax).value;
}

double uniform_pm1(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return 2.0 * u - 1.0;
}

TrigSeries random_series(std::mt19937_64& rng, int degree, bool zero_mean) {
    if (degree < 0) throw std::invalid_argument("random_series: negative degree");
    const double mean = zero_mean ? 0.0 : uniform_pm1(rng);
    std::vector<double> c(static_cast<std::size_t>(degree)), s(static_cast<std::size_t>(degree));
    for (int n = 0; n < degree; ++n) {
        c[static_cast<std::size_t>(n)] = uniform_pm1(rng);
        s[static_cast<std::size_t>(n)] = uniform_pm1(rng);
    }
    return TrigSeries(mean, std::move(c), std::move(s));
}

} // namespace wirtlab
